#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "voa/engine.hpp"
#include "voa/registry.hpp"

namespace voa {

/// First Chern class of a coinvariant bundle written in the standard divisor
/// basis: lambda, the psi classes, delta_irr and the boundary classes
/// delta_{h:I}. Boundary keys are canonical: (h,I) ~ (g-h, I^c), the stored
/// representative has h < g-h, or h = g-h and point 1 in I; strata whose
/// genus-zero side would carry fewer than three special points are omitted.
/// Subsets are bitmasks over marked points, bit k = point k+1.
struct DivisorClass {
    long long g = 0;
    int n = 0;
    Rat lambda;
    std::vector<Rat> psi;
    std::optional<Rat> b_irr;  // absent when g = 0
    std::map<std::pair<long long, std::uint32_t>, Rat> boundary;
};

/// True when (h,I) is the stored representative of its class.
bool boundary_key_canonical(long long g, int n, long long h, std::uint32_t subset);

/// True when both sides of the corresponding node are stable.
bool boundary_key_valid(long long g, int n, long long h, std::uint32_t subset);

/// Coefficient of delta_{h:I}, looked up through canonicalization;
/// 0 when the stratum is absent or not stable.
Rat boundary_coeff(const DivisorClass& d, long long h, std::uint32_t subset);

/// First Chern class from rank data: lambda and psi coefficients scale the
/// rank by central charge and conformal weights, delta coefficients are
/// weight-averaged products of ranks over the two sides of each node.
DivisorClass c1(const FaEngine& engine, const std::vector<int>& ins, long long genus);

/// Closed form for pointed data: every rank factor is a group-order power,
/// so coefficients reduce to weights of products of the inserted elements.
/// Returns the zero class when the insertions do not multiply to identity.
DivisorClass c1_pointed_closed_form(const PointedData& data, const std::vector<int>& beta,
                                    long long genus);

/// Degree on the four-pointed genus-zero moduli space: sum of psi
/// coefficients minus the three pair-boundary coefficients.
Rat degree_on_M04(const DivisorClass& d);

/// lambda - 12 b_irr + b_{1:empty} >= 0 (intersection with type-1 curves).
bool f_check_type1(const DivisorClass& d);

/// b_irr >= 0 (intersection with type-2 curves).
bool f_check_type2(const DivisorClass& d);

/// Genus-zero F-curve test over all quadripartitions of the marked points,
/// with singleton boundary coefficients read from the psi classes.
bool f_check_genus0(const DivisorClass& d);

/// First failing quadripartition (masks of the four parts), if any.
std::optional<std::array<std::uint32_t, 4>> f_check_genus0_witness(const DivisorClass& d);

/// Same (g,n) linear combination, coefficientwise.
DivisorClass linear_combination(const Rat& ca, const DivisorClass& a, const Rat& cb,
                                const DivisorClass& b);

/// Coefficientwise equality with absent boundary keys read as zero.
bool divisor_equal(const DivisorClass& a, const DivisorClass& b);

enum class CheckStatus { EquivalentHolds, EquivalentFails, SufficientHolds, Unknown };

const char* to_string(CheckStatus s);

/// Positivity report for a pointed VOA: equivalences for curve types 1-2,
/// sufficient conditions for types 3-6, the F-nefness verdict for the
/// one-pointed vacuum divisor, and the minimal holomorphic padding exponent
/// for a given holomorphic central charge.
struct NefReport {
    std::array<CheckStatus, 6> type_status{};
    bool vacuum_divisor_fnef = false;  // c >= 24 a_average >= 0
    Rat a_average;
    Rat a_max;
    Rat holomorphic_charge;
    Int padding_r0;  // ceil((24 a_average - c) / c_H)
};

NefReport pointed_nef_report(const PointedData& data, const Rat& holomorphic_charge);

}  // namespace voa
