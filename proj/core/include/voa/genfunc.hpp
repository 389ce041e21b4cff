#pragma once

#include "voa/engine.hpp"
#include "voa/ratfunc.hpp"

namespace voa {

/// Entry (i,j) of prefix * step^3 * (Id - step*z)^{-1} as a canonical
/// rational function: numerator from the adjugate column, denominator
/// det(Id - step*z). Exact integer-polynomial arithmetic throughout.
RationalFunction resolvent_entry(const IntMat& prefix, const IntMat& step, int i, int j);

/// Generating function whose z^n coefficient is the framed rank of
/// deviation + (n+3)*step at the given genus.
RationalFunction indexing_function(const FaEngine& engine, const Insertion& deviation,
                                   const Insertion& step, int i, int j, long long genus);

/// det(Id - m*z) for an integer matrix m; constant term is always 1.
Poly char_denominator(const IntMat& m);

/// The l-layer continued fraction 1/(-z - 1/(-z - ... )) whose innermost
/// layer is -z+1 for odd l and -z-1 for even l; equals the generating
/// function of minimal-module ranks for the boundary Virasoro series.
RationalFunction virasoro_boundary_cf(int layers);

}  // namespace voa
