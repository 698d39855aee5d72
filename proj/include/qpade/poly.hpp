#pragma once

#include <utility>
#include <vector>

#include "qpade/scalar.hpp"

namespace qpade {

// Dense univariate polynomial, coefficients low degree first.
// The zero polynomial is the empty vector; its degree is -1.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p);
bool poly_is_zero(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& c);
Poly poly_neg(const Poly& a);
Scalar poly_eval(const Poly& a, const Scalar& x);

// a(s*x)
Poly poly_scale_arg(const Poly& a, const Scalar& s);

// Quotient and remainder of num by den (den nonzero).
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

// Exact quotient; throws divisibility_error when the remainder is nonzero.
Poly poly_divide_exact(const Poly& num, const Poly& den);

// 1 - r*x
Poly poly_lin(const Scalar& r);

// x^k
Poly poly_monomial(int k);

// prod over r of (1 - r*x)
Poly poly_lin_product(const std::vector<Scalar>& rs);

std::string poly_str(const Poly& p);

}  // namespace qpade
