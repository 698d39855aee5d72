#pragma once

#include <array>
#include <vector>

#include "qpade/params.hpp"
#include "qpade/report.hpp"
#include "qpade/scalar.hpp"

namespace qpade {

// Nullspace of the point conditions is 1-dimensional: the eight base points
// admit no pencil (the product condition on a1..a8 fails or the points
// degenerate).
class condition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The chosen start lies on the base locus; lambda is undefined there.
class base_point_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The fiber quadratic lost its leading coefficient: the second intersection
// escaped to infinity.
class fiber_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PencilKind { QP6, E6 };

struct QrtConfig {
  PencilKind kind;
  std::array<Scalar, 8> a;
};

// a1 a2 a7 a8 / (a3 a4 a5 a6) for QP6, a3 a4 a5 a6 a7 a8 / (a1 a2) for E6;
// the pencil exists exactly when this equals 1.
Scalar condition_value(const QrtConfig& cfg);

// Bidegree-(2,2) coefficient grid, index 3*i+j for x^i y^j.
using Grid22 = std::array<Scalar, 9>;

Scalar grid_eval(const Grid22& c, const Scalar& x, const Scalar& y);

struct Pencil {
  Grid22 F;     // member with zero coefficient on the base's xy slot, F20 = 1
  Grid22 base;  // xy for QP6, xy(1 - xy) for E6
};

// Exact nullspace dimension of the eight point conditions.
int point_condition_nullity(const QrtConfig& cfg);

// Throws condition_error unless the nullity is exactly 2.
Pencil build_pencil(const QrtConfig& cfg);

// Pencil parameter of the member through (x0, y0).
Scalar lambda_of(const QrtConfig& cfg, const Pencil& pen, const Scalar& x0,
                 const Scalar& y0);

// Second root of the member curve's fiber quadratic, from the root-product
// relation on the curve coefficients.
Scalar vertical_switch(const QrtConfig& cfg, const Pencil& pen,
                       const Scalar& lambda, const Scalar& x0, const Scalar& y0);
Scalar horizontal_switch(const QrtConfig& cfg, const Pencil& pen,
                         const Scalar& lambda, const Scalar& x0,
                         const Scalar& y0);

struct OrbitPoint {
  int step;
  Scalar x, y;
  Scalar lambda;
};

// Iterates vertical then horizontal switch; one composite application per step.
std::vector<OrbitPoint> orbit(const QrtConfig& cfg, const Pencil& pen,
                              const Scalar& x0, const Scalar& y0, int steps);

std::string orbit_csv(const std::vector<OrbitPoint>& orb);

// Samples a1..a7 and solves a8 from the condition; retries until the pencil
// and a start point off the base locus exist.
QrtConfig sample_qrt_config(Rng& rng, PencilKind kind);

// Full per-config check set: nullity 2 / broken-condition nullity 1, base
// point re-evaluation, coefficient content of the normalized member, orbit
// conservation, closed-form switch identities, x0 = 0 anchor.
std::vector<CheckReport> qrt_reports(Rng& rng, PencilKind kind, int samples,
                                     int steps);

}  // namespace qpade
