#pragma once

#include <optional>
#include <vector>

#include "voa/matrix.hpp"
#include "voa/spec.hpp"

namespace voa {

/// Square big-integer matrix tagged with the insertion multiset and genus
/// it represents. Entry (i,j) is the rank of the coinvariant space with the
/// tagged insertions plus modules W_i and W_j' framing the two extra points.
struct FaMatrix {
    IntMat entries;
    long long genus = 0;
    Insertion insertions;
};

/// Multiplication table of a finite abelian group recovered from fusion
/// data; indices are module indices, identity is the vacuum.
struct GroupTable {
    int identity = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(mul.size()); }
    int product(int a, int b) const { return mul[a][b]; }
    int product(const std::vector<int>& elems) const;
};

/// Rank computations over one immutable VoaSpec. Fusion and averaging
/// matrices are built once at construction; every member is const and the
/// object can be shared freely across threads.
class FaEngine {
  public:
    /// Validates the spec unless told otherwise (tests exercise corrupt data).
    explicit FaEngine(VoaSpec spec, bool run_validation = true);

    /// Adopts matrices restored from the persistent cache instead of
    /// recomputing them; the caller guarantees they belong to this spec.
    FaEngine(VoaSpec spec, std::vector<IntMat> fusion, IntMat averaging,
             bool run_validation = true);

    const VoaSpec& spec() const { return spec_; }
    int size() const { return spec_.size(); }

    /// Genus-zero FA-matrix of a single module: the fusion matrix.
    FaMatrix fusion_matrix(int w) const;

    /// The genus-increment operator: sum of Tr(R_{w',0}) R_{w,0} over all
    /// modules w.
    FaMatrix averaging_matrix() const;

    /// Product of fusion-matrix powers for the multiset times the averaging
    /// matrix to the genus. Matrix powers go by repeated squaring.
    FaMatrix fa_matrix(const Insertion& ins, long long genus) const;

    /// Rank of the coinvariant space: trace of the genus-(g-1) FA-matrix for
    /// g >= 1, and the (vacuum, dual(vacuum)) entry of the genus-0 FA-matrix
    /// for g = 0 (two vacuum insertions absorbed by propagation).
    Int rank(const Insertion& ins, long long genus) const;

    /// Entry (i,j) of the FA-matrix: the rank with modules W_i, W_j' at two
    /// framing points.
    Int rank_with_frame(const Insertion& ins, long long genus, int i, int j) const;

    /// Group table when every fusion matrix is a permutation matrix (the
    /// fusion ring is a group ring); empty otherwise.
    std::optional<GroupTable> pointed_group() const;

    /// True iff w is not the vacuum and its fusion matrix squares to the
    /// identity.
    bool is_order_two(int w) const;

    const IntMat& fusion_entries(int w) const { return fusion_[w]; }
    const IntMat& averaging_entries() const { return averaging_; }

    /// Throws DomainError when 2g - 2 + n <= 0; used by strict-stability mode.
    static void require_stable(long long genus, long long n);

  private:
    VoaSpec spec_;
    std::vector<IntMat> fusion_;
    IntMat averaging_;
};

}  // namespace voa
