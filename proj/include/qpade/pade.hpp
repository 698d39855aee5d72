#pragma once

#include <vector>

#include "qpade/params.hpp"
#include "qpade/poly.hpp"
#include "qpade/scalar.hpp"

namespace qpade {

// Numerator/denominator pair; deg P <= m, deg Q <= n. Solver routes
// normalize Q(0) = 1; determinant routes return the pair up to one common
// scalar and never normalize.
struct PadePair {
  Poly P;
  Poly Q;
};

// P/Q matching the power series through order m+n.
PadePair pade_approx_series(const std::vector<Scalar>& series, int m, int n);

// P/Q matching values at m+n+1 distinct nodes: P(x_i) - y_i Q(x_i) = 0.
PadePair pade_interpolate(const std::vector<Scalar>& nodes,
                          const std::vector<Scalar>& values, int m, int n);

// Dimension of the homogeneous solution space of the interpolation problem
// (1 for admissible data; used as the uniqueness witness).
int pade_interpolation_nullity(const std::vector<Scalar>& nodes,
                               const std::vector<Scalar>& values, int m, int n);

// Determinant formulas for the interpolation problem. P = F(x) det(R entries),
// divided down to polynomial form; Q = det of the companion matrix. Output is
// proportional to pade_interpolate as a pair, not normalized.
PadePair pade_det_interpolation(const std::vector<Scalar>& nodes,
                                const std::vector<Scalar>& values, int m, int n);

// Specialized determinant formulas at nodes q^i with weights built from the
// parameter set. Entries carry the exact prefactor 1/(q)_N so the pair equals
// pade_det_interpolation exactly (not merely up to scale); see README notes.
PadePair pade_det_specialized(const ParamSet& p);

// Convenience: the two problems at a parameter point.
PadePair solve_d5(const ParamSet& p);
PadePair solve_e6(const ParamSet& p);

}  // namespace qpade
