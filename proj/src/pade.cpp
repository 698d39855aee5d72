#include "qpade/pade.hpp"

#include "qpade/matrix.hpp"
#include "qpade/qseries.hpp"

namespace qpade {

namespace {

// Homogeneous interpolation matrix: unknowns (p_0..p_m, q_0..q_n), one row
// per node with P(x_i) - y_i Q(x_i) = 0.
Mat interpolation_matrix(const std::vector<Scalar>& nodes,
                         const std::vector<Scalar>& values, int m, int n) {
  Mat rows;
  rows.reserve(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Scalar> row;
    row.reserve(m + n + 2);
    Scalar pw(1);
    for (int j = 0; j <= m; ++j) {
      row.push_back(pw);
      pw *= nodes[i];
    }
    pw = Scalar(1);
    for (int j = 0; j <= n; ++j) {
      row.push_back(-values[i] * pw);
      pw *= nodes[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PadePair det_pair_from_weights(const std::vector<Scalar>& nodes,
                               const std::vector<Scalar>& us, int n) {
  size_t count = nodes.size();
  Poly F{Scalar(1)};
  for (const auto& x : nodes) F = poly_mul(F, Poly{-x, Scalar(1)});
  std::vector<Poly> cofactors(count);  // F / (x - x_s)
  for (size_t s = 0; s < count; ++s)
    cofactors[s] = poly_divide_exact(F, Poly{-nodes[s], Scalar(1)});

  std::vector<std::vector<Poly>> pm(n + 1, std::vector<Poly>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Poly e;
      for (size_t s = 0; s < count; ++s)
        e = poly_add(e, poly_scale(cofactors[s], spow(nodes[s], i + j) * us[s]));
      pm[i][j] = std::move(e);
    }
  Poly P = det_poly(pm);
  for (int k = 0; k < n; ++k) P = poly_divide_exact(P, F);

  std::vector<std::vector<Poly>> qm(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e;
      for (size_t s = 0; s < count; ++s)
        e = poly_add(e, poly_scale(Poly{-nodes[s], Scalar(1)},
                                   spow(nodes[s], i + j) * us[s]));
      qm[i][j] = std::move(e);
    }
  Poly Q = det_poly(qm);
  if (poly_is_zero(P) && poly_is_zero(Q))
    throw singular_error("determinant solution collapsed to zero");
  return {std::move(P), std::move(Q)};
}

}  // namespace

PadePair pade_approx_series(const std::vector<Scalar>& series, int m, int n) {
  int N = m + n;
  if (static_cast<int>(series.size()) < N + 1)
    throw inadmissible_error("series too short for requested degrees");
  // Unknowns p_0..p_m, q_1..q_n with q_0 = 1; row k is the coefficient of x^k
  // in P - series * Q.
  Mat rows(N + 1, std::vector<Scalar>(m + 1 + n, Scalar(0)));
  std::vector<Scalar> rhs(N + 1);
  for (int k = 0; k <= N; ++k) {
    if (k <= m) rows[k][k] = Scalar(-1);
    for (int j = 1; j <= n; ++j)
      if (k - j >= 0) rows[k][m + j] = series[k - j];
    rhs[k] = -series[k];
  }
  std::vector<Scalar> sol = solve_linear(std::move(rows), std::move(rhs));
  PadePair r;
  r.P = poly_trim(Poly(sol.begin(), sol.begin() + m + 1));
  r.Q = Poly{Scalar(1)};
  r.Q.insert(r.Q.end(), sol.begin() + m + 1, sol.end());
  r.Q = poly_trim(std::move(r.Q));
  return r;
}

PadePair pade_interpolate(const std::vector<Scalar>& nodes,
                          const std::vector<Scalar>& values, int m, int n) {
  if (nodes.size() != values.size() ||
      static_cast<int>(nodes.size()) != m + n + 1)
    throw inadmissible_error("interpolation needs exactly m+n+1 node/value pairs");
  auto basis = nullspace(interpolation_matrix(nodes, values, m, n));
  if (basis.size() != 1)
    throw singular_error("degenerate interpolation data (solution space dimension " +
                         std::to_string(basis.size()) + ")");
  const auto& v = basis[0];
  Scalar q0 = v[m + 1];
  if (q0.is_zero())
    throw normalization_error("every solution has Q(0) = 0");
  PadePair r;
  r.P.assign(v.begin(), v.begin() + m + 1);
  r.Q.assign(v.begin() + m + 1, v.end());
  r.P = poly_trim(poly_scale(r.P, Scalar(1) / q0));
  r.Q = poly_trim(poly_scale(r.Q, Scalar(1) / q0));
  return r;
}

int pade_interpolation_nullity(const std::vector<Scalar>& nodes,
                               const std::vector<Scalar>& values, int m, int n) {
  Mat a = interpolation_matrix(nodes, values, m, n);
  return m + n + 2 - rank_exact(std::move(a));
}

PadePair pade_det_interpolation(const std::vector<Scalar>& nodes,
                                const std::vector<Scalar>& values, int m, int n) {
  if (nodes.size() != values.size())
    throw inadmissible_error("node/value length mismatch");
  (void)m;
  size_t count = nodes.size();
  std::vector<Scalar> us(count);
  for (size_t s = 0; s < count; ++s) {
    Scalar fp(1);
    for (size_t i = 0; i < count; ++i)
      if (i != s) fp *= nodes[s] - nodes[i];
    us[s] = values[s] / fp;
  }
  return det_pair_from_weights(nodes, us, n);
}

PadePair pade_det_specialized(const ParamSet& p) {
  check_admissible(p);
  int N = p.N();
  std::vector<Scalar> nodes, us;
  nodes.reserve(N + 1);
  us.reserve(N + 1);
  Scalar pref = Scalar(1) / qpoch(p.q, N, p.q);
  Scalar qmN = spow(p.q, -N);
  for (int s = 0; s <= N; ++s) {
    nodes.push_back(spow(p.q, s));
    Scalar w = qpoch_list({p.a[2], p.a[3], qmN}, s, p.q) /
               qpoch_list({p.a[0], p.a[1], p.q}, s, p.q);
    us.push_back(pref * w * spow(p.q, s));
  }
  return det_pair_from_weights(nodes, us, p.n);
}

PadePair solve_d5(const ParamSet& p) {
  check_admissible(p);
  return pade_approx_series(taylor_Y_d5(p, p.N()), p.m, p.n);
}

PadePair solve_e6(const ParamSet& p) {
  check_admissible(p);
  std::vector<Scalar> nodes;
  nodes.reserve(p.N() + 1);
  for (int i = 0; i <= p.N(); ++i) nodes.push_back(spow(p.q, i));
  return pade_interpolate(nodes, y_nodes(p), p.m, p.n);
}

}  // namespace qpade
