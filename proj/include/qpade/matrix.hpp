#pragma once

#include <vector>

#include "qpade/poly.hpp"
#include "qpade/scalar.hpp"

namespace qpade {

using Mat = std::vector<std::vector<Scalar>>;

// Determinant by fraction-free (Bareiss) elimination. det of the 0x0 matrix is 1.
Scalar det_exact(Mat a);

// Unique solution of A x = b; A may have more rows than columns but the system
// must be consistent with full column rank. Throws singular_error otherwise.
std::vector<Scalar> solve_linear(Mat a, std::vector<Scalar> b);

int rank_exact(Mat a);

// Basis of the right nullspace (reduced row echelon form route).
std::vector<std::vector<Scalar>> nullspace(Mat a);

// Determinant of a small polynomial-entry matrix by cofactor expansion.
Poly det_poly(const std::vector<std::vector<Poly>>& a);

}  // namespace qpade
