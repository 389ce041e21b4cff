#include "voa/divisor.hpp"

#include <bit>

namespace voa {

namespace {

std::pair<long long, std::uint32_t> canonical_key(long long g, int n, long long h,
                                                  std::uint32_t subset) {
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    const long long h2 = g - h;
    const std::uint32_t comp = full & ~subset;
    if (h < h2) return {h, subset};
    if (h2 < h) return {h2, comp};
    return (subset & 1u) ? std::pair{h, subset} : std::pair{h2, comp};
}

Int int_pow(Int base, long long e) {
    Int out = 1;
    while (e-- > 0) out *= base;
    return out;
}

}  // namespace

bool boundary_key_valid(long long g, int n, long long h, std::uint32_t subset) {
    const int size = std::popcount(subset);
    if (h < 0 || h > g) return false;
    if (h == 0 && size < 2) return false;
    if (g - h == 0 && n - size < 2) return false;
    return true;
}

bool boundary_key_canonical(long long g, int n, long long h, std::uint32_t subset) {
    return canonical_key(g, n, h, subset) == std::pair{h, subset};
}

Rat boundary_coeff(const DivisorClass& d, long long h, std::uint32_t subset) {
    const auto key = canonical_key(d.g, d.n, h, subset);
    const auto it = d.boundary.find(key);
    return it == d.boundary.end() ? Rat(0) : it->second;
}

DivisorClass c1(const FaEngine& engine, const std::vector<int>& ins, long long genus) {
    const int n = static_cast<int>(ins.size());
    FaEngine::require_stable(genus, n);
    if (n > 20) throw DomainError("boundary enumeration limited to n <= 20 points");
    const VoaSpec& spec = engine.spec();
    const int l = spec.size();
    const Insertion all = Insertion::from_ordered(l, ins);

    DivisorClass d;
    d.g = genus;
    d.n = n;
    const Int rank = engine.rank(all, genus);
    d.lambda = Rat(rank) * spec.central_charge / 2;
    d.psi.reserve(n);
    for (int i = 0; i < n; ++i) d.psi.push_back(Rat(rank) * spec.weights[ins[i]]);

    if (genus >= 1) {
        Rat acc = 0;
        for (int w = 0; w < l; ++w) {
            Insertion plus = all;
            plus.add(w);
            plus.add(spec.dual[w]);
            acc += spec.weights[w] * Rat(engine.rank(plus, genus - 1));
        }
        d.b_irr = acc;
    }

    const std::uint32_t full = (1u << n) - 1u;
    for (long long h = 0; h <= genus; ++h)
        for (std::uint32_t subset = 0; subset <= full; ++subset) {
            if (!boundary_key_canonical(genus, n, h, subset)) continue;
            if (!boundary_key_valid(genus, n, h, subset)) continue;
            Insertion inside = Insertion::empty(l);
            Insertion outside = Insertion::empty(l);
            for (int i = 0; i < n; ++i)
                ((subset >> i) & 1u ? inside : outside).add(ins[i]);
            Rat acc = 0;
            for (int w = 0; w < l; ++w) {
                Insertion left = inside;
                left.add(w);
                const Int r1 = engine.rank(left, h);
                if (r1 == 0) continue;
                Insertion right = outside;
                right.add(spec.dual[w]);
                acc += spec.weights[w] * Rat(r1) * Rat(engine.rank(right, genus - h));
            }
            d.boundary.emplace(std::pair{h, subset}, acc);
        }
    return d;
}

DivisorClass c1_pointed_closed_form(const PointedData& data, const std::vector<int>& beta,
                                    long long genus) {
    const int n = static_cast<int>(beta.size());
    if (n > 20) throw DomainError("boundary enumeration limited to n <= 20 points");
    DivisorClass d;
    d.g = genus;
    d.n = n;
    d.psi.assign(n, Rat(0));
    if (genus >= 1) d.b_irr = Rat(0);

    if (data.product(beta) != data.identity) return d;  // zero bundle

    const Int mg = int_pow(Int(data.order()), genus);
    d.lambda = Rat(mg) * data.central_charge / 2;
    for (int i = 0; i < n; ++i) d.psi[i] = Rat(mg) * data.weights[beta[i]];
    if (genus >= 1) d.b_irr = Rat(mg) * data.average_weight();

    const std::uint32_t full = (1u << n) - 1u;
    for (long long h = 0; h <= genus; ++h)
        for (std::uint32_t subset = 0; subset <= full; ++subset) {
            if (!boundary_key_canonical(genus, n, h, subset)) continue;
            if (!boundary_key_valid(genus, n, h, subset)) continue;
            int prod = data.identity;
            for (int i = 0; i < n; ++i)
                if ((subset >> i) & 1u) prod = data.table[prod][beta[i]];
            d.boundary.emplace(std::pair{h, subset}, Rat(mg) * data.weights[prod]);
        }
    return d;
}

Rat degree_on_M04(const DivisorClass& d) {
    if (d.g != 0 || d.n != 4) throw DomainError("degree formula needs (g,n) = (0,4)");
    Rat acc = 0;
    for (const auto& p : d.psi) acc += p;
    acc -= boundary_coeff(d, 0, 0b0011u);
    acc -= boundary_coeff(d, 0, 0b0101u);
    acc -= boundary_coeff(d, 0, 0b1001u);
    return acc;
}

bool f_check_type1(const DivisorClass& d) {
    if (d.g < 1) throw DomainError("type-1 curves exist only in positive genus");
    return d.lambda - 12 * d.b_irr.value() + boundary_coeff(d, 1, 0u) >= 0;
}

bool f_check_type2(const DivisorClass& d) {
    if (d.g < 1) throw DomainError("type-2 curves exist only in positive genus");
    return d.b_irr.value() >= 0;
}

namespace {

Rat genus0_coeff(const DivisorClass& d, std::uint32_t subset) {
    if (std::popcount(subset) == 1) return d.psi[std::countr_zero(subset)];
    const std::uint32_t full = (1u << d.n) - 1u;
    if (std::popcount(full & ~subset) == 1) return d.psi[std::countr_zero(full & ~subset)];
    return boundary_coeff(d, 0, subset);
}

// Scans quadripartitions I|J|K|L of the marked points (point 1 fixed in I);
// reports the first violated partition.
std::optional<std::array<std::uint32_t, 4>> genus0_scan(const DivisorClass& d) {
    if (d.g != 0) throw DomainError("genus-zero F-curve test needs g = 0");
    const int n = d.n;
    if (n < 4) return std::nullopt;
    std::vector<int> assign(n, 0);
    while (true) {
        std::array<std::uint32_t, 4> part{0, 0, 0, 0};
        for (int i = 0; i < n; ++i) part[assign[i]] |= 1u << i;
        if (part[0] && part[1] && part[2] && part[3]) {
            Rat lhs = genus0_coeff(d, part[0]) + genus0_coeff(d, part[1]) +
                      genus0_coeff(d, part[2]) + genus0_coeff(d, part[3]);
            Rat rhs = genus0_coeff(d, part[0] | part[1]) + genus0_coeff(d, part[0] | part[2]) +
                      genus0_coeff(d, part[0] | part[3]);
            if (lhs < rhs) return part;
        }
        int i = 1;
        for (; i < n; ++i) {
            if (++assign[i] < 4) break;
            assign[i] = 0;
        }
        if (i == n) return std::nullopt;
    }
}

}  // namespace

bool f_check_genus0(const DivisorClass& d) { return !genus0_scan(d).has_value(); }

std::optional<std::array<std::uint32_t, 4>> f_check_genus0_witness(const DivisorClass& d) {
    return genus0_scan(d);
}

DivisorClass linear_combination(const Rat& ca, const DivisorClass& a, const Rat& cb,
                                const DivisorClass& b) {
    if (a.g != b.g || a.n != b.n)
        throw DomainError("divisor combination requires matching (g,n)");
    DivisorClass out;
    out.g = a.g;
    out.n = a.n;
    out.lambda = ca * a.lambda + cb * b.lambda;
    for (int i = 0; i < a.n; ++i) out.psi.push_back(ca * a.psi[i] + cb * b.psi[i]);
    if (a.b_irr || b.b_irr)
        out.b_irr = ca * a.b_irr.value_or(Rat(0)) + cb * b.b_irr.value_or(Rat(0));
    for (const auto& [key, value] : a.boundary) out.boundary[key] += ca * value;
    for (const auto& [key, value] : b.boundary) out.boundary[key] += cb * value;
    return out;
}

bool divisor_equal(const DivisorClass& a, const DivisorClass& b) {
    if (a.g != b.g || a.n != b.n) return false;
    if (a.lambda != b.lambda || a.psi != b.psi) return false;
    if (a.b_irr.value_or(Rat(0)) != b.b_irr.value_or(Rat(0))) return false;
    auto covered = [](const DivisorClass& x, const DivisorClass& y) {
        for (const auto& [key, value] : x.boundary)
            if (value != boundary_coeff(y, key.first, key.second)) return false;
        return true;
    };
    return covered(a, b) && covered(b, a);
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::EquivalentHolds: return "equivalent-holds";
        case CheckStatus::EquivalentFails: return "equivalent-fails";
        case CheckStatus::SufficientHolds: return "sufficient-holds";
        case CheckStatus::Unknown: return "unknown";
    }
    return "unknown";
}

NefReport pointed_nef_report(const PointedData& data, const Rat& holomorphic_charge) {
    if (holomorphic_charge <= 0) throw SpecError("holomorphic central charge must be positive");
    NefReport report;
    report.a_average = data.average_weight();
    report.a_max = data.max_weight();
    report.holomorphic_charge = holomorphic_charge;

    const Rat c = data.central_charge;
    report.type_status[0] = (c >= 24 * report.a_average) ? CheckStatus::EquivalentHolds
                                                         : CheckStatus::EquivalentFails;
    report.type_status[1] =
        (report.a_average >= 0) ? CheckStatus::EquivalentHolds : CheckStatus::EquivalentFails;

    bool all_nonneg = true;
    for (const auto& w : data.weights) all_nonneg = all_nonneg && w >= 0;
    report.type_status[2] = all_nonneg ? CheckStatus::SufficientHolds : CheckStatus::Unknown;

    report.type_status[3] = (2 * report.a_average >= report.a_max) ? CheckStatus::SufficientHolds
                                                                   : CheckStatus::Unknown;

    bool subadditive = true;
    for (int a = 0; a < data.order() && subadditive; ++a)
        for (int b = 0; b < data.order() && subadditive; ++b)
            if (data.weights[a] + data.weights[b] < data.weights[data.table[a][b]])
                subadditive = false;
    report.type_status[4] = subadditive ? CheckStatus::SufficientHolds : CheckStatus::Unknown;

    report.type_status[5] = (data.strongly_generated_degree_one && *data.strongly_generated_degree_one)
                                ? CheckStatus::SufficientHolds
                                : CheckStatus::Unknown;

    report.vacuum_divisor_fnef = (c >= 24 * report.a_average) && (report.a_average >= 0);
    report.padding_r0 = ceil_rat((24 * report.a_average - c) / holomorphic_charge);
    return report;
}

}  // namespace voa
