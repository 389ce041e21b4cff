#include "voa/registry.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "voa/spec_json.hpp"

namespace voa {

int PointedData::inverse_of(int a) const {
    for (int b = 0; b < order(); ++b)
        if (table[a][b] == identity) return b;
    throw SpecError("group element without inverse: index " + std::to_string(a));
}

int PointedData::product(const std::vector<int>& elems) const {
    int acc = identity;
    for (int e : elems) acc = table[acc][e];
    return acc;
}

Rat PointedData::average_weight() const {
    Rat sum = 0;
    for (const auto& w : weights) sum += w;
    return sum / order();
}

Rat PointedData::max_weight() const {
    Rat best = weights.at(0);
    for (const auto& w : weights) best = std::max(best, w);
    return best;
}

namespace {

struct BpzLabel {
    int m, n;
};

// Representative of the orbit {(m,n), (p-m,q-n)} with the smaller m,
// tie-broken by the smaller n.
BpzLabel canonical_bpz(int p, int q, int m, int n) {
    const int fm = p - m, fn = q - n;
    if (fm < m || (fm == m && fn < n)) return {fm, fn};
    return {m, n};
}

// One coordinate of the truncated fusion window: c lies in the admissible
// range for (a,b) at cutoff k.
bool coordinate_admissible(int a, int b, int c, int k) {
    if ((a + b + c) % 2 == 0) return false;
    if (a + b + c > 2 * k - 1) return false;
    return c >= std::abs(a - b) + 1 && c <= a + b - 1;
}

bool bpz_admissible(int p, int q, const BpzLabel& a, const BpzLabel& b, const BpzLabel& c) {
    return coordinate_admissible(a.m, b.m, c.m, p) && coordinate_admissible(a.n, b.n, c.n, q);
}

}  // namespace

VoaSpec virasoro(int p, int q) {
    if (p < 2 || q < 2) throw SpecError("virasoro requires p,q >= 2");
    if (std::gcd(p, q) != 1) throw SpecError("virasoro requires coprime p,q");

    std::vector<BpzLabel> labels;
    for (int m = 1; m <= p - 1; ++m)
        for (int n = 1; n <= q - 1; ++n) {
            const BpzLabel rep = canonical_bpz(p, q, m, n);
            if (rep.m == m && rep.n == n) labels.push_back(rep);
        }

    const auto weight_of = [&](const BpzLabel& lbl) {
        const long long np_mq = static_cast<long long>(lbl.n) * p - static_cast<long long>(lbl.m) * q;
        const long long diff = p - q;
        return Rat(Int(np_mq * np_mq - diff * diff), Int(4LL * p * q));
    };

    std::sort(labels.begin(), labels.end(), [&](const BpzLabel& a, const BpzLabel& b) {
        const Rat wa = weight_of(a), wb = weight_of(b);
        if (wa != wb) return wa < wb;
        return std::pair(a.m, a.n) < std::pair(b.m, b.n);
    });

    const int l = static_cast<int>(labels.size());
    VoaSpec spec;
    spec.labels.resize(l);
    spec.dual.resize(l);
    spec.weights.resize(l);
    spec.central_charge = Rat(1) - Rat(Int(6LL * (p - q) * (p - q)), Int(static_cast<long long>(p) * q));
    for (int i = 0; i < l; ++i) {
        spec.dual[i] = i;  // discrete-series modules are self-dual
        spec.weights[i] = weight_of(labels[i]);
        if (labels[i].m == 1 && labels[i].n == 1) spec.vacuum = i;
    }
    for (int i = 0; i < l; ++i)
        spec.labels[i] = (i == spec.vacuum) ? "V" : "W" + std::to_string(i + 1);

    spec.init_tensor();
    for (int a = 0; a < l; ++a)
        for (int b = a; b < l; ++b)
            for (int c = b; c < l; ++c) {
                const BpzLabel flip{p - labels[c].m, q - labels[c].n};
                const bool hit = bpz_admissible(p, q, labels[a], labels[b], labels[c]) ||
                                 bpz_admissible(p, q, labels[a], labels[b], flip);
                if (hit) spec.set_s(a, b, c, 1);
            }
    return validate(spec), spec;
}

long long sl2_fusion_parity_form(int level, int p, int i, int j) {
    if ((p + i + j) % 2 != 0) return 0;
    if (p + i + j > 2 * level) return 0;
    if (p > i + j || i > p + j || j > p + i) return 0;
    return 1;
}

long long sl2_fusion_level_form(int level, int p, int i, int j) {
    if ((p + i + j) % 2 != 0) return 0;
    const int m = (p + i + j) / 2;
    if (m > level) return 0;
    return (p <= m && i <= m && j <= m) ? 1 : 0;
}

VoaSpec affine_sl2(int level) {
    if (level < 1) throw SpecError("sl2 level must be >= 1");
    const int l = level + 1;
    VoaSpec spec;
    spec.labels.resize(l);
    spec.dual.resize(l);
    spec.weights.resize(l);
    spec.vacuum = 0;
    spec.central_charge = Rat(Int(3 * level), Int(level + 2));
    for (int pIdx = 0; pIdx < l; ++pIdx) {
        spec.labels[pIdx] = (pIdx == 0) ? "V" : "W" + std::to_string(pIdx);
        spec.dual[pIdx] = pIdx;
        spec.weights[pIdx] = Rat(Int(pIdx * (pIdx + 2)), Int(4 * (level + 2)));
    }
    spec.init_tensor();
    for (int a = 0; a < l; ++a)
        for (int b = a; b < l; ++b)
            for (int c = b; c < l; ++c)
                if (sl2_fusion_parity_form(level, a, b, c)) spec.set_s(a, b, c, 1);
    return validate(spec), spec;
}

VoaSpec pointed(const PointedData& data) {
    const int m = data.order();
    if (m < 1) throw SpecError("pointed group must be nonempty");
    if (static_cast<int>(data.weights.size()) != m)
        throw SpecError("pointed weights list has wrong length");
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(data.table[a].size()) != m) throw SpecError("group table not square");
        if (data.table[data.identity][a] != a || data.table[a][data.identity] != a)
            throw SpecError("group table identity violated at index " + std::to_string(a));
        for (int b = 0; b < m; ++b) {
            if (data.table[a][b] < 0 || data.table[a][b] >= m)
                throw SpecError("group table entry out of range");
            if (data.table[a][b] != data.table[b][a])
                throw SpecError("pointed group must be abelian (fusion rings commute)");
            for (int c = 0; c < m; ++c)
                if (data.table[data.table[a][b]][c] != data.table[a][data.table[b][c]])
                    throw SpecError("group table not associative");
        }
    }

    VoaSpec spec;
    spec.labels = data.labels;
    if (spec.labels.empty()) {
        for (int i = 0; i < m; ++i)
            spec.labels.push_back(i == data.identity ? "e" : "g" + std::to_string(i));
    }
    spec.vacuum = data.identity;
    spec.weights = data.weights;
    spec.central_charge = data.central_charge;
    spec.strongly_generated_degree_one = data.strongly_generated_degree_one;
    spec.dual.resize(m);
    for (int a = 0; a < m; ++a) spec.dual[a] = data.inverse_of(a);
    spec.init_tensor();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) spec.set_s(a, b, data.inverse_of(data.table[a][b]), 1);
    return validate(spec), spec;
}

VoaSpec tensor_product(const VoaSpec& a, const VoaSpec& b) {
    const int la = a.size(), lb = b.size();
    VoaSpec spec;
    spec.labels.resize(la * lb);
    spec.dual.resize(la * lb);
    spec.weights.resize(la * lb);
    spec.vacuum = a.vacuum * lb + b.vacuum;
    spec.central_charge = a.central_charge + b.central_charge;
    if (a.strongly_generated_degree_one && b.strongly_generated_degree_one &&
        *a.strongly_generated_degree_one && *b.strongly_generated_degree_one)
        spec.strongly_generated_degree_one = true;
    for (int i = 0; i < la; ++i)
        for (int j = 0; j < lb; ++j) {
            const int idx = i * lb + j;
            spec.labels[idx] = a.labels[i] + "⊗" + b.labels[j];
            spec.dual[idx] = a.dual[i] * lb + b.dual[j];
            spec.weights[idx] = a.weights[i] + b.weights[j];
        }
    spec.init_tensor();
    for (int i1 = 0; i1 < la; ++i1)
        for (int i2 = 0; i2 < la; ++i2)
            for (int i3 = 0; i3 < la; ++i3) {
                const long long sa = a.s(i1, i2, i3);
                if (sa == 0) continue;
                for (int j1 = 0; j1 < lb; ++j1)
                    for (int j2 = 0; j2 < lb; ++j2)
                        for (int j3 = 0; j3 < lb; ++j3) {
                            const long long sb = b.s(j1, j2, j3);
                            if (sb == 0) continue;
                            spec.three_point[(static_cast<std::size_t>(i1 * lb + j1) * (la * lb) +
                                              (i2 * lb + j2)) *
                                                 (la * lb) +
                                             (i3 * lb + j3)] = sa * sb;
                        }
            }
    return validate(spec), spec;
}

VoaSpec holomorphic(const Rat& central_charge) {
    VoaSpec spec;
    spec.labels = {"V"};
    spec.vacuum = 0;
    spec.dual = {0};
    spec.weights = {Rat(0)};
    spec.central_charge = central_charge;
    spec.init_tensor();
    spec.set_s(0, 0, 0, 1);
    return validate(spec), spec;
}

std::vector<int> weight_order(const VoaSpec& spec) {
    std::vector<int> perm(spec.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return spec.weights[a] < spec.weights[b]; });
    return perm;
}

PointedData cyclic_group(int m) {
    if (m < 1) throw SpecError("cyclic group order must be positive");
    PointedData data;
    data.identity = 0;
    data.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) data.table[a][b] = (a + b) % m;
    data.weights.assign(m, Rat(0));
    data.central_charge = 0;
    for (int i = 0; i < m; ++i)
        data.labels.push_back(i == 0 ? "e" : (i == 1 ? "x" : "x" + std::to_string(i)));
    return data;
}

PointedData direct_product(const PointedData& a, const PointedData& b) {
    const int ma = a.order(), mb = b.order();
    PointedData data;
    data.identity = a.identity * mb + b.identity;
    data.table.assign(ma * mb, std::vector<int>(ma * mb));
    for (int x1 = 0; x1 < ma; ++x1)
        for (int x2 = 0; x2 < mb; ++x2)
            for (int y1 = 0; y1 < ma; ++y1)
                for (int y2 = 0; y2 < mb; ++y2)
                    data.table[x1 * mb + x2][y1 * mb + y2] = a.table[x1][y1] * mb + b.table[x2][y2];
    for (int x1 = 0; x1 < ma; ++x1)
        for (int x2 = 0; x2 < mb; ++x2) {
            data.labels.push_back(a.labels[x1] + "." + b.labels[x2]);
            data.weights.push_back(a.weights[x1] + b.weights[x2]);
        }
    data.central_charge = a.central_charge + b.central_charge;
    return data;
}

PointedData root_lattice_ar(int r) {
    if (r < 1) throw SpecError("A_r requires r >= 1");
    const int m = r + 1;
    PointedData data = cyclic_group(m);
    for (int j = 0; j < m; ++j) data.weights[j] = Rat(Int(j * (m - j)), Int(2 * m));
    data.central_charge = r;
    data.strongly_generated_degree_one = true;
    return data;
}

PointedData root_lattice_d4() {
    PointedData z2 = cyclic_group(2);
    PointedData data = direct_product(z2, z2);
    data.labels = {"e", "v", "s", "c"};
    data.weights = {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    data.central_charge = 4;
    data.strongly_generated_degree_one = true;
    return data;
}

namespace {

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace

VoaSpec from_selector(const std::string& selector) {
    const auto colon = selector.find(':');
    if (colon == std::string::npos)
        throw SpecError("malformed selector '" + selector + "' (expected family:args)");
    const std::string family = selector.substr(0, colon);
    const std::string args = selector.substr(colon + 1);

    if (family == "virasoro") {
        const auto parts = split_top_level(args);
        if (parts.size() != 2) throw SpecError("virasoro selector needs p,q");
        try {
            return virasoro(std::stoi(parts[0]), std::stoi(parts[1]));
        } catch (const std::invalid_argument&) {
            throw SpecError("virasoro selector needs integer p,q");
        }
    }
    if (family == "sl2") {
        try {
            return affine_sl2(std::stoi(args));
        } catch (const std::invalid_argument&) {
            throw SpecError("sl2 selector needs an integer level");
        }
    }
    if (family == "holomorphic") return holomorphic(parse_rational(args));
    if (family == "pointed") {
        std::ifstream in(args);
        if (!in) throw SpecError("cannot open spec file '" + args + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return load_spec(buf.str());
    }
    if (family == "tensor") {
        const auto factors = tensor_factors(selector);
        if (!factors) throw SpecError("cannot parse tensor factors in '" + selector + "'");
        return tensor_product(from_selector(factors->first), from_selector(factors->second));
    }
    throw SpecError("unknown VOA family '" + family + "'");
}

std::optional<std::pair<std::string, std::string>> tensor_factors(const std::string& selector) {
    if (selector.rfind("tensor:", 0) != 0) return std::nullopt;
    const std::string args = selector.substr(7);
    if (args.size() < 2 || args.front() != '(' || args.back() != ')') return std::nullopt;
    const std::string inner = args.substr(1, args.size() - 2);
    // Factor selectors may themselves contain commas; try every top-level
    // split until both sides parse.
    int depth = 0;
    for (std::size_t k = 0; k < inner.size(); ++k) {
        if (inner[k] == '(') ++depth;
        if (inner[k] == ')') --depth;
        if (inner[k] != ',' || depth != 0) continue;
        try {
            from_selector(inner.substr(0, k));
            from_selector(inner.substr(k + 1));
            return std::pair{inner.substr(0, k), inner.substr(k + 1)};
        } catch (const SpecError&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace voa
