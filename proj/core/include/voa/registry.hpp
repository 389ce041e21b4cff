#pragma once

#include <string>
#include <vector>

#include "voa/spec.hpp"

namespace voa {

/// Finite abelian group with conformal weights attached to its elements;
/// the input data of a pointed VOA.
struct PointedData {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int identity = 0;
    std::vector<Rat> weights;
    Rat central_charge;
    std::optional<bool> strongly_generated_degree_one;

    int order() const { return static_cast<int>(table.size()); }
    int inverse_of(int a) const;
    int product(const std::vector<int>& elems) const;

    Rat average_weight() const;
    Rat max_weight() const;
};

/// Discrete-series Virasoro VOA of central charge 1 - 6(p-q)^2/(pq).
/// Modules are ordered by increasing conformal weight; the vacuum is
/// labeled "V", the rest "W1", "W2", ... in that order.
VoaSpec virasoro(int p, int q);

/// Affine sl2 VOA at a positive integer level; modules V, W1, .., Wlevel by
/// increasing spin. Weights p(p+2)/(4(level+2)) and central charge
/// 3*level/(level+2) are the standard affine values (not derivable from the
/// fusion data alone).
VoaSpec affine_sl2(int level);

/// VOA whose fusion ring is the group ring of the given abelian group.
VoaSpec pointed(const PointedData& data);

/// Tensor product; modules are pairs in lexicographic order, fusion data
/// multiplies, weights and central charges add.
VoaSpec tensor_product(const VoaSpec& a, const VoaSpec& b);

/// Single-module VOA of the given central charge.
VoaSpec holomorphic(const Rat& central_charge);

/// Permutation taking internal module order to weight-increasing order
/// (the order used by published fusion-matrix tables). Identity for every
/// spec this registry constructs.
std::vector<int> weight_order(const VoaSpec& spec);

/// Cyclic group of order m with all-zero weights; callers fill weights and
/// central charge.
PointedData cyclic_group(int m);

/// Direct product of two groups; weights add, labels pair up.
PointedData direct_product(const PointedData& a, const PointedData& b);

/// Discriminant form of the A_r root lattice: cyclic of order r+1 with
/// coset weights j(r+1-j)/(2(r+1)) and central charge r.
PointedData root_lattice_ar(int r);

/// Discriminant form of the D4 root lattice: Klein four-group, the three
/// nontrivial cosets all of weight 1/2, central charge 4.
PointedData root_lattice_d4();

/// Both closed forms of the sl2 fusion rule; they define the same tensor.
long long sl2_fusion_parity_form(int level, int p, int i, int j);
long long sl2_fusion_level_form(int level, int p, int i, int j);

/// Builds a spec from a selector string:
///   virasoro:p,q | sl2:l | pointed:<file.json> | tensor:(sel,sel) | holomorphic:c
VoaSpec from_selector(const std::string& selector);

/// Factor selectors of a tensor selector, when both sides parse.
std::optional<std::pair<std::string, std::string>> tensor_factors(const std::string& selector);

}  // namespace voa
