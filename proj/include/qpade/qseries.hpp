#pragma once

#include <vector>

#include "qpade/params.hpp"
#include "qpade/poly.hpp"
#include "qpade/scalar.hpp"

namespace qpade {

// q-Pochhammer (z)_j = prod_{k=0}^{j-1} (1 - q^k z).
Scalar qpoch(const Scalar& z, int j, const Scalar& q);

// prod over the list of qpoch(z_t, j, q).
Scalar qpoch_list(const std::vector<Scalar>& zs, int j, const Scalar& q);

// Node values y_i = (a3,a4)_i / (a1,a2)_i at x_i = q^i, for 0 <= i <= N.
std::vector<Scalar> y_nodes(const ParamSet& p);

// Same value as a function of i, extended to i = -1 via the one-step ratio
// y_{-1} = (a1/q)_1 (a2/q)_1 / ((a3/q)_1 (a4/q)_1).
Scalar y_node_ext(const ParamSet& p, int i);

// Taylor coefficients c_0..c_order of Y = (a1 x, a2 x)_inf / (a3 x, a4 x)_inf,
// computed from the functional equation Y(qx)(a1x,a2x)_1 = Y(x)(a3x,a4x)_1.
std::vector<Scalar> taylor_Y_d5(const ParamSet& p, int order);

// Terminating 3phi2 partial sum through s = terms.
Scalar phi32(const Scalar& t1, const Scalar& t2, const Scalar& t3,
             const Scalar& b1, const Scalar& b2, const Scalar& q,
             const Scalar& x, int terms);

// prod_{i != s, 0 <= i <= N} (q^s - q^i) in closed form.
Scalar f_prime_node(int s, int N, const Scalar& q);

// prod_{i=0}^{count-1} (1 - x / q^i) as a polynomial.
Poly node_vanishing_poly(int count, const Scalar& q);

}  // namespace qpade
