#pragma once

#include <string>
#include <vector>

#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/poly.hpp"

namespace qpade {

// Parameter-shift directions. D5_T acts on the series problem; the E6_*
// directions act on the interpolation problem (E6_T and E6_T3 lower m,
// E6_T2 lowers n).
enum class Dir { D5_T, E6_T, E6_T1, E6_T2, E6_T3, E6_T4 };

std::string dir_name(Dir d);
ParamSet apply_dir(const ParamSet& p, Dir d);
ParamSet invert_dir(const ParamSet& p, Dir d);

// Constants extracted from the cleared three-term contiguity combinations.
// f comes from the A-type polynomial at p (direction independent), fbar from
// the same polynomial at the shifted point, g from the leftover linear factor
// of the direction's B- or C-type polynomial; c is the shared x = 0
// normalization of those two polynomials and cprime its companion (for the
// interpolation directions cprime = c is asserted during extraction).
// c1, c2 are the derived coefficients appearing in the displayed linear pair.
struct LaxData {
  Scalar f, fbar, g;
  Scalar c0, c0bar;
  Scalar c, cprime;
  Scalar c1, c2;
};

// Extraction needs the solutions at p and at the shifted point.
LaxData extract_d5(const ParamSet& p, const PadePair& at_p,
                   const PadePair& at_shift);
LaxData extract_e6(const ParamSet& p, Dir d, const PadePair& at_p,
                   const PadePair& at_shift);

// Coefficients of the first linear equation: C_y y(x) + C_up y(qx) + C_bar ybar(x).
struct LinearEq2 {
  Poly y, y_up, y_bar;
};
// Coefficients of the second: D_y y(x) + D_bar ybar(x) + D_down ybar(x/q).
struct LinearEq3 {
  Poly y, y_bar, y_bar_down;
};

LinearEq2 l2_coeffs(const ParamSet& p, Dir d, const LaxData& L);
LinearEq3 l3_coeffs(const ParamSet& p, Dir d, const LaxData& L);

// Residual of the pair on the polynomial solution y = P; exactly zero when
// the extraction and the displayed coefficient patterns are consistent.
Poly l2_residual_poly(const ParamSet& p, const LinearEq2& eq, const Poly& P,
                      const Poly& Pbar);
Poly l3_residual_poly(const ParamSet& p, const LinearEq3& eq, const Poly& P,
                      const Poly& Pbar);

// Residuals on the second solution y = Y*Q. Interpolation flavor: values at
// the nodes x = q^i (i+1 <= N for the first equation; the second uses the
// i = -1 extension of the shifted node values).
std::vector<Scalar> l2_residual_nodes(const ParamSet& p, Dir d,
                                      const LinearEq2& eq, const Poly& Q,
                                      const Poly& Qbar);
std::vector<Scalar> l3_residual_nodes(const ParamSet& p, Dir d,
                                      const LinearEq3& eq, const Poly& Q,
                                      const Poly& Qbar);

// Series flavor (D5): residual Taylor coefficients through the given order.
std::vector<Scalar> l2_residual_series(const ParamSet& p, const LinearEq2& eq,
                                       const Poly& Q, const Poly& Qbar,
                                       int order);
std::vector<Scalar> l3_residual_series(const ParamSet& p, const LinearEq3& eq,
                                       const Poly& Q, const Poly& Qbar,
                                       int order);

}  // namespace qpade
