#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Fusion data of a strongly rational vertex operator algebra, reduced to
/// what rank and divisor computations consume: the list of irreducible
/// modules, the contragredient involution, the symmetric three-point rank
/// tensor, conformal weights and the central charge.
struct VoaSpec {
    std::vector<std::string> labels;
    int vacuum = 0;
    std::vector<int> dual;
    std::vector<Rat> weights;
    Rat central_charge;
    std::optional<bool> strongly_generated_degree_one;

    /// Flat l^3 tensor; entry (a,b,c) is the rank of the three-point space
    /// with modules a, b, c inserted. Fully symmetric.
    std::vector<long long> three_point;

    int size() const { return static_cast<int>(labels.size()); }

    long long s(int a, int b, int c) const {
        const auto l = static_cast<std::size_t>(size());
        return three_point[(static_cast<std::size_t>(a) * l + b) * l + c];
    }

    /// Writes one symmetric orbit (all six permutations).
    void set_s(int a, int b, int c, long long value);

    /// Allocates the tensor with zeros; call before set_s.
    void init_tensor() { three_point.assign(static_cast<std::size_t>(size()) * size() * size(), 0); }
};

/// Checks all structural invariants; throws SpecError naming the violated
/// invariant together with a witness. Returns the spec for chaining.
const VoaSpec& validate(const VoaSpec& spec);

/// Multiset of module insertions, stored as per-module counts.
struct Insertion {
    std::vector<long long> counts;

    static Insertion empty(int l) { return Insertion{std::vector<long long>(l, 0)}; }
    static Insertion from_ordered(int l, const std::vector<int>& modules);

    long long total() const;
    int size() const { return static_cast<int>(counts.size()); }

    Insertion& add(int module, long long k = 1);
    Insertion operator+(const Insertion& rhs) const;
    Insertion scaled(long long factor) const;
    bool operator==(const Insertion& rhs) const = default;

    /// Expands to a list of module indices, smallest index first.
    std::vector<int> to_list() const;
};

/// Resolves a module name against a spec: exact label match first, then the
/// aliases "V" (vacuum), "Wmin"/"Wmax" (extremal conformal weight).
int resolve_label(const VoaSpec& spec, const std::string& name);

}  // namespace voa
