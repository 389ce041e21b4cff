#include "voa/spec.hpp"

#include <algorithm>
#include <set>

#include "voa/matrix.hpp"

namespace voa {

void VoaSpec::set_s(int a, int b, int c, long long value) {
    const auto l = static_cast<std::size_t>(size());
    const auto idx = [l](int x, int y, int z) {
        return (static_cast<std::size_t>(x) * l + y) * l + z;
    };
    three_point[idx(a, b, c)] = value;
    three_point[idx(a, c, b)] = value;
    three_point[idx(b, a, c)] = value;
    three_point[idx(b, c, a)] = value;
    three_point[idx(c, a, b)] = value;
    three_point[idx(c, b, a)] = value;
}

namespace {

IntMat raw_fusion_matrix(const VoaSpec& spec, int w) {
    const int l = spec.size();
    IntMat m(l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m.at(i, j) = spec.s(w, i, spec.dual[j]);
    return m;
}

}  // namespace

const VoaSpec& validate(const VoaSpec& spec) {
    const int l = spec.size();
    if (l < 1) throw SpecError("spec must have at least one module");
    if (spec.vacuum < 0 || spec.vacuum >= l) throw SpecError("vacuum index out of range");
    if (static_cast<int>(spec.dual.size()) != l) throw SpecError("dual map has wrong length");
    if (static_cast<int>(spec.weights.size()) != l) throw SpecError("weights list has wrong length");
    if (spec.three_point.size() != static_cast<std::size_t>(l) * l * l)
        throw SpecError("three-point tensor has wrong size");

    std::set<std::string> seen;
    for (const auto& label : spec.labels) {
        if (label.empty()) throw SpecError("empty module label");
        if (!seen.insert(label).second) throw SpecError("duplicate module label '" + label + "'");
    }

    for (int a = 0; a < l; ++a) {
        if (spec.dual[a] < 0 || spec.dual[a] >= l)
            throw SpecError("dual index out of range at module " + spec.labels[a]);
        if (spec.dual[spec.dual[a]] != a)
            throw SpecError("dual is not an involution: witness module " + spec.labels[a]);
        if (spec.weights[spec.dual[a]] != spec.weights[a])
            throw SpecError("dual does not preserve conformal weight: witness module " +
                            spec.labels[a]);
    }

    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
            for (int c = 0; c < l; ++c) {
                const long long v = spec.s(a, b, c);
                if (v < 0)
                    throw SpecError("negative three-point rank at (" + spec.labels[a] + "," +
                                    spec.labels[b] + "," + spec.labels[c] + ")");
                if (v != spec.s(b, a, c) || v != spec.s(a, c, b))
                    throw SpecError("three-point tensor not symmetric: witness (" + spec.labels[a] +
                                    "," + spec.labels[b] + "," + spec.labels[c] + ")");
            }

    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b) {
            const long long expect = (b == spec.dual[a]) ? 1 : 0;
            if (spec.s(spec.vacuum, a, b) != expect)
                throw SpecError("vacuum pairing violated: witness (" + spec.labels[a] + "," +
                                spec.labels[b] + ")");
        }

    // Fusion matrices must pairwise commute for the rank formulas to be
    // order-independent.
    std::vector<IntMat> fusion;
    fusion.reserve(l);
    for (int w = 0; w < l; ++w) fusion.push_back(raw_fusion_matrix(spec, w));
    for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b)
            if (!(fusion[a] * fusion[b] == fusion[b] * fusion[a]))
                throw SpecError("fusion matrices do not commute: witness pair (" + spec.labels[a] +
                                "," + spec.labels[b] + ")");

    return spec;
}

Insertion Insertion::from_ordered(int l, const std::vector<int>& modules) {
    Insertion ins = empty(l);
    for (int m : modules) ins.add(m);
    return ins;
}

long long Insertion::total() const {
    long long n = 0;
    for (long long c : counts) n += c;
    return n;
}

Insertion& Insertion::add(int module, long long k) {
    if (module < 0 || module >= size())
        throw SpecError("insertion index out of range: " + std::to_string(module));
    if (k < 0) throw SpecError("negative insertion count");
    counts[module] += k;
    return *this;
}

Insertion Insertion::operator+(const Insertion& rhs) const {
    Insertion out = *this;
    for (int i = 0; i < size(); ++i) out.counts[i] += rhs.counts[i];
    return out;
}

Insertion Insertion::scaled(long long factor) const {
    Insertion out = *this;
    for (auto& c : out.counts) c *= factor;
    return out;
}

std::vector<int> Insertion::to_list() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        for (long long k = 0; k < counts[i]; ++k) out.push_back(i);
    return out;
}

int resolve_label(const VoaSpec& spec, const std::string& name) {
    for (int i = 0; i < spec.size(); ++i)
        if (spec.labels[i] == name) return i;
    if (name == "V") return spec.vacuum;
    if (name == "Wmin" || name == "Wmax") {
        int best = 0;
        for (int i = 1; i < spec.size(); ++i) {
            const bool better = (name == "Wmin") ? spec.weights[i] < spec.weights[best]
                                                 : spec.weights[i] > spec.weights[best];
            if (better) best = i;
        }
        return best;
    }
    throw SpecError("unknown module label '" + name + "'");
}

}  // namespace voa
