#include "qpade/qseries.hpp"

namespace qpade {

Scalar qpoch(const Scalar& z, int j, const Scalar& q) {
  Scalar r(1), zq = z;
  for (int k = 0; k < j; ++k) {
    r *= Scalar(1) - zq;
    zq *= q;
  }
  return r;
}

Scalar qpoch_list(const std::vector<Scalar>& zs, int j, const Scalar& q) {
  Scalar r(1);
  for (const auto& z : zs) r *= qpoch(z, j, q);
  return r;
}

std::vector<Scalar> y_nodes(const ParamSet& p) {
  std::vector<Scalar> ys;
  ys.reserve(p.N() + 1);
  for (int i = 0; i <= p.N(); ++i) ys.push_back(y_node_ext(p, i));
  return ys;
}

Scalar y_node_ext(const ParamSet& p, int i) {
  if (i == -1) {
    Scalar num = (Scalar(1) - p.a[0] / p.q) * (Scalar(1) - p.a[1] / p.q);
    Scalar den = (Scalar(1) - p.a[2] / p.q) * (Scalar(1) - p.a[3] / p.q);
    return num / den;
  }
  if (i < 0) throw inadmissible_error("node index below the supported range");
  Scalar num = qpoch(p.a[2], i, p.q) * qpoch(p.a[3], i, p.q);
  Scalar den = qpoch(p.a[0], i, p.q) * qpoch(p.a[1], i, p.q);
  return num / den;
}

std::vector<Scalar> taylor_Y_d5(const ParamSet& p, int order) {
  const Scalar &q = p.q, &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  std::vector<Scalar> c{Scalar(1)};
  c.reserve(order + 1);
  Scalar qk(1);
  for (int k = 1; k <= order; ++k) {
    qk *= q;
    Scalar cm1 = c[k - 1];
    Scalar cm2 = k >= 2 ? c[k - 2] : Scalar(0);
    Scalar val = (a1 + a2) * spow(q, k - 1) * cm1 - a1 * a2 * spow(q, k - 2) * cm2 -
                 (a3 + a4) * cm1 + a3 * a4 * cm2;
    Scalar den = qk - Scalar(1);
    if (den.is_zero()) throw inadmissible_error("q is a root of unity");
    c.push_back(val / den);
  }
  return c;
}

Scalar phi32(const Scalar& t1, const Scalar& t2, const Scalar& t3,
             const Scalar& b1, const Scalar& b2, const Scalar& q,
             const Scalar& x, int terms) {
  Scalar total(0), term(1), qs(1);
  for (int s = 0;; ++s) {
    total += term;
    if (s == terms) break;
    Scalar num = (Scalar(1) - qs * t1) * (Scalar(1) - qs * t2) * (Scalar(1) - qs * t3);
    Scalar den = (Scalar(1) - qs * b1) * (Scalar(1) - qs * b2) * (Scalar(1) - qs * q);
    term = term * num / den * x;
    qs *= q;
  }
  return total;
}

Scalar f_prime_node(int s, int N, const Scalar& q) {
  // q^{-s} (q)_s (q)_N / (q^{-N})_s
  Scalar qs = qpoch(q, s, q);
  Scalar qN = qpoch(q, N, q);
  Scalar qmN = qpoch(spow(q, -N), s, q);
  return spow(q, -s) * qs * qN / qmN;
}

Poly node_vanishing_poly(int count, const Scalar& q) {
  std::vector<Scalar> roots;
  roots.reserve(count);
  for (int i = 0; i < count; ++i) roots.push_back(spow(q, -i));
  return poly_lin_product(roots);
}

}  // namespace qpade
