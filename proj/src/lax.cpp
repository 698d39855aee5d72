#include "qpade/lax.hpp"

#include "qpade/qseries.hpp"

namespace qpade {

namespace {

Poly lin(const Scalar& r) { return poly_lin(r); }

// (a_i x, a_j x)_1 as a polynomial
Poly lin2(const Scalar& r1, const Scalar& r2) {
  return poly_mul(poly_lin(r1), poly_lin(r2));
}

// (a3 x, a4 x)_1 P(x) Q(qx) - (a1 x, a2 x)_1 P(qx) Q(x)
Poly cleared_A(const ParamSet& p, const PadePair& pq) {
  Poly lhs = poly_mul(lin2(p.a[2], p.a[3]),
                      poly_mul(pq.P, poly_scale_arg(pq.Q, p.q)));
  Poly rhs = poly_mul(lin2(p.a[0], p.a[1]),
                      poly_mul(poly_scale_arg(pq.P, p.q), pq.Q));
  return poly_sub(lhs, rhs);
}

// Removes the structural zero set of the A-polynomial and reads c0, f from
// the leftover linear factor c0 (1 - f x).
void extract_A(const ParamSet& p, const PadePair& pq, bool series_problem,
               Scalar& c0, Scalar& f) {
  Poly ka = cleared_A(p, pq);
  Poly structural =
      series_problem
          ? poly_monomial(p.N() + 1)
          : poly_mul(poly_monomial(1), node_vanishing_poly(p.N(), p.q));
  Poly rest = poly_divide_exact(ka, structural);
  if (poly_deg(rest) != 1)
    throw divisibility_error("A-polynomial leftover is not linear (degenerate f)");
  c0 = rest[0];
  if (c0.is_zero())
    throw divisibility_error("A-polynomial leftover has zero constant term");
  f = -rest[1] / rest[0];
}

// Leftover of a cleared polynomial after dividing out the known structural
// part; expected either a constant or a constant times (1 - x/g).
struct Leftover {
  Scalar constant;
  Scalar root;  // g; only meaningful when has_root
  bool has_root = false;
};

Leftover read_leftover(const Poly& rest, bool expect_root) {
  Leftover out;
  if (expect_root) {
    if (poly_deg(rest) != 1)
      throw divisibility_error("expected a linear leftover factor");
    out.constant = rest[0];
    if (rest[0].is_zero() || rest[1].is_zero())
      throw divisibility_error("leftover factor is degenerate");
    out.root = -rest[0] / rest[1];
    out.has_root = true;
  } else {
    if (poly_deg(rest) != 0)
      throw divisibility_error("expected a constant leftover");
    out.constant = rest[0];
  }
  return out;
}

// Per-direction structure of the cleared B- and C-type polynomials: the
// direction's ybar/y ratio nB/dB, the forced factors of each polynomial, and
// which of the two carries the leftover (1 - x/g).
struct DirSpec {
  Poly nB, dB;
  Poly kb_known;
  bool kb_root;
  Poly kc_strip;  // manifest common factor of the raw C combination
  Poly kc_known;
  bool kc_root;
};

DirSpec dir_spec(const ParamSet& p, Dir d) {
  const Scalar &q = p.q, &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  int N = p.N();
  Poly one{Scalar(1)};
  DirSpec s;
  switch (d) {
    case Dir::E6_T:
      s.nB = poly_scale(one, Scalar(1) - a2);
      s.dB = lin(a2);
      s.kb_known = node_vanishing_poly(N, q);
      s.kb_root = false;
      s.kc_strip = lin(a2);
      s.kc_known = node_vanishing_poly(N, q);
      s.kc_root = true;
      break;
    case Dir::E6_T1:
      s.nB = poly_scale(lin2(a3, a4), (Scalar(1) - a1) * (Scalar(1) - a2));
      s.dB = poly_scale(lin2(a1, a2), (Scalar(1) - a3) * (Scalar(1) - a4));
      s.kb_known = node_vanishing_poly(N + 1, q);
      s.kb_root = true;
      s.kc_strip = poly_mul(lin2(a1, a2), lin2(a3, a4));
      s.kc_known = node_vanishing_poly(N, q);
      s.kc_root = false;
      break;
    case Dir::E6_T2:
      s.nB = lin(a4);
      s.dB = poly_scale(one, Scalar(1) - a4);
      s.kb_known = node_vanishing_poly(N, q);
      s.kb_root = false;
      s.kc_strip = lin(a4);
      s.kc_known = node_vanishing_poly(N, q);
      s.kc_root = true;
      break;
    case Dir::E6_T3:
      s.nB = poly_scale(lin(a3), (Scalar(1) - a1) * (Scalar(1) - a2));
      s.dB = poly_scale(lin2(a1, a2), Scalar(1) - a3);
      s.kb_known = node_vanishing_poly(N, q);
      s.kb_root = true;
      s.kc_strip = lin2(a1, a2);
      s.kc_known = poly_mul(node_vanishing_poly(N, q), lin(a3));
      s.kc_root = false;
      break;
    case Dir::E6_T4:
      s.nB = poly_scale(lin(a4), Scalar(1) - a1);
      s.dB = poly_scale(lin(a1), Scalar(1) - a4);
      s.kb_known = node_vanishing_poly(N + 1, q);
      s.kb_root = false;
      s.kc_strip = lin2(a1, a4);
      s.kc_known = node_vanishing_poly(N, q);
      s.kc_root = true;
      break;
    default:
      throw inadmissible_error("direction has no interpolation-side structure");
  }
  return s;
}

}  // namespace

std::string dir_name(Dir d) {
  switch (d) {
    case Dir::D5_T: return "D5_T";
    case Dir::E6_T: return "E6_T";
    case Dir::E6_T1: return "E6_T1";
    case Dir::E6_T2: return "E6_T2";
    case Dir::E6_T3: return "E6_T3";
    case Dir::E6_T4: return "E6_T4";
  }
  return "?";
}

ParamSet apply_dir(const ParamSet& p, Dir d) {
  ParamSet r = p;
  switch (d) {
    case Dir::D5_T:
      r.a[1] *= p.q;
      r.a[3] *= p.q;
      break;
    case Dir::E6_T:
      r.m -= 1;
      r.a[1] *= p.q;
      break;
    case Dir::E6_T1:
      for (auto& ai : r.a) ai *= p.q;
      break;
    case Dir::E6_T2:
      r.n -= 1;
      r.a[3] *= p.q;
      break;
    case Dir::E6_T3:
      r.m -= 1;
      r.a[0] *= p.q;
      r.a[1] *= p.q;
      r.a[2] *= p.q;
      break;
    case Dir::E6_T4:
      r.a[0] *= p.q;
      r.a[3] *= p.q;
      break;
  }
  if (r.m < 0 || r.n < 0)
    throw inadmissible_error("direction lowers a degree below zero");
  return r;
}

ParamSet invert_dir(const ParamSet& p, Dir d) {
  ParamSet r = p;
  switch (d) {
    case Dir::D5_T:
      r.a[1] /= p.q;
      r.a[3] /= p.q;
      break;
    case Dir::E6_T:
      r.m += 1;
      r.a[1] /= p.q;
      break;
    case Dir::E6_T1:
      for (auto& ai : r.a) ai /= p.q;
      break;
    case Dir::E6_T2:
      r.n += 1;
      r.a[3] /= p.q;
      break;
    case Dir::E6_T3:
      r.m += 1;
      r.a[0] /= p.q;
      r.a[1] /= p.q;
      r.a[2] /= p.q;
      break;
    case Dir::E6_T4:
      r.a[0] /= p.q;
      r.a[3] /= p.q;
      break;
  }
  return r;
}

LaxData extract_d5(const ParamSet& p, const PadePair& at_p,
                   const PadePair& at_shift) {
  const Scalar &q = p.q, &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  int N = p.N();
  LaxData L;
  extract_A(p, at_p, /*series_problem=*/true, L.c0, L.f);
  ParamSet pb = apply_dir(p, Dir::D5_T);
  extract_A(pb, at_shift, /*series_problem=*/true, L.c0bar, L.fbar);

  // (a4 x)_1 P Qbar - (a2 x)_1 Pbar Q = c x^{N+1}
  Poly kb = poly_sub(poly_mul(lin(a4), poly_mul(at_p.P, at_shift.Q)),
                     poly_mul(lin(a2), poly_mul(at_shift.P, at_p.Q)));
  Leftover lb = read_leftover(poly_divide_exact(kb, poly_monomial(N + 1)), false);
  L.c = lb.constant;

  // (a4 x)_1 (a1 x, a2 x)_1 P(qx) Qbar - (a2 x)_1 (a3 x, a4 x)_1 Pbar Q(qx)
  //   = cprime (a2 x)_1 (a4 x)_1 x^{N+1}
  Poly kc = poly_sub(
      poly_mul(poly_mul(lin(a4), lin2(a1, a2)),
               poly_mul(poly_scale_arg(at_p.P, q), at_shift.Q)),
      poly_mul(poly_mul(lin(a2), lin2(a3, a4)),
               poly_mul(at_shift.P, poly_scale_arg(at_p.Q, q))));
  Poly rest = poly_divide_exact(kc, lin(a2));
  rest = poly_divide_exact(rest, poly_mul(poly_monomial(N + 1), lin(a4)));
  Leftover lc = read_leftover(rest, false);
  L.cprime = lc.constant;

  if (L.c.is_zero()) throw divisibility_error("vanishing normalization constant");
  L.g = L.cprime / L.c;
  L.c1 = L.c0 / L.c;
  L.c2 = L.c0bar / L.c;
  return L;
}

LaxData extract_e6(const ParamSet& p, Dir d, const PadePair& at_p,
                   const PadePair& at_shift) {
  const Scalar &q = p.q, &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  LaxData L;
  extract_A(p, at_p, /*series_problem=*/false, L.c0, L.f);
  ParamSet pb = apply_dir(p, d);
  extract_A(pb, at_shift, /*series_problem=*/false, L.c0bar, L.fbar);

  DirSpec s = dir_spec(p, d);
  Poly kb = poly_sub(poly_mul(s.nB, poly_mul(at_p.P, at_shift.Q)),
                     poly_mul(s.dB, poly_mul(at_shift.P, at_p.Q)));
  Leftover lb = read_leftover(poly_divide_exact(kb, s.kb_known), s.kb_root);

  Poly kc = poly_sub(
      poly_mul(poly_mul(s.nB, lin2(a1, a2)),
               poly_mul(poly_scale_arg(at_p.P, q), at_shift.Q)),
      poly_mul(poly_mul(s.dB, lin2(a3, a4)),
               poly_mul(at_shift.P, poly_scale_arg(at_p.Q, q))));
  Poly rest = poly_divide_exact(kc, s.kc_strip);
  Leftover lc = read_leftover(poly_divide_exact(rest, s.kc_known), s.kc_root);

  // Setting x = 0 in both cleared polynomials forces equal constants.
  if (lb.constant != lc.constant)
    throw divisibility_error("B/C normalization constants disagree");
  L.c = lb.constant;
  L.cprime = lc.constant;
  if (L.c.is_zero()) throw divisibility_error("vanishing normalization constant");
  L.g = lb.has_root ? lb.root : lc.root;

  switch (d) {
    case Dir::E6_T:
      L.c1 = L.c0 / L.c;
      L.c2 = L.c0bar * (Scalar(1) - a2) / (q * L.c);
      break;
    case Dir::E6_T1:
      L.c1 = L.c0 * (Scalar(1) - a3) * (Scalar(1) - a4) / L.c;
      L.c2 = L.c0bar * (Scalar(1) - a1) * (Scalar(1) - a2) / (q * L.c);
      break;
    case Dir::E6_T2:
      L.c1 = L.c0 * (Scalar(1) - a4) / L.c;
      L.c2 = L.c0bar / (q * L.c);
      break;
    case Dir::E6_T3:
      L.c1 = L.c0 * (Scalar(1) - a3) / L.c;
      L.c2 = L.c0bar * (Scalar(1) - a1) * (Scalar(1) - a2) / (q * L.c);
      break;
    case Dir::E6_T4:
      L.c1 = L.c0 * (Scalar(1) - a4) / L.c;
      L.c2 = L.c0bar * (Scalar(1) - a1) / (q * L.c);
      break;
    default:
      throw inadmissible_error("series-side direction passed to interpolation extractor");
  }
  return L;
}

LinearEq2 l2_coeffs(const ParamSet& p, Dir d, const LaxData& L) {
  const Scalar &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  Scalar qN = spow(p.q, p.N());
  Poly x1 = poly_monomial(1);
  LinearEq2 eq;
  switch (d) {
    case Dir::D5_T:
      eq.y = poly_scale(lin(a4), L.g);
      eq.y_up = poly_neg(lin(a1));
      eq.y_bar = poly_scale(lin(L.f), L.c1);
      break;
    case Dir::E6_T:
      eq.y = lin(Scalar(1) / L.g);
      eq.y_up = poly_neg(lin(a1));
      eq.y_bar = poly_scale(poly_mul(x1, lin(L.f)), L.c1);
      break;
    case Dir::E6_T1:
      eq.y = lin2(a3, a4);
      eq.y_up = poly_neg(lin2(Scalar(1) / qN, Scalar(1) / L.g));
      eq.y_bar = poly_scale(poly_mul(x1, lin(L.f)), L.c1);
      break;
    case Dir::E6_T2:
      eq.y = lin2(a4, Scalar(1) / L.g);
      eq.y_up = poly_neg(lin2(a1, a2));
      eq.y_bar = poly_scale(poly_mul(x1, lin(L.f)), L.c1);
      break;
    case Dir::E6_T3:
      eq.y = lin(a3);
      eq.y_up = poly_neg(lin(Scalar(1) / L.g));
      eq.y_bar = poly_scale(poly_mul(x1, lin(L.f)), L.c1);
      break;
    case Dir::E6_T4:
      eq.y = lin2(a4, Scalar(1) / L.g);
      eq.y_up = poly_neg(lin2(a2, Scalar(1) / qN));
      eq.y_bar = poly_scale(poly_mul(x1, lin(L.f)), L.c1);
      break;
  }
  return eq;
}

LinearEq3 l3_coeffs(const ParamSet& p, Dir d, const LaxData& L) {
  const Scalar &q = p.q, &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2], &a4 = p.a[3];
  Scalar qN = spow(p.q, p.N());
  Poly x1 = poly_monomial(1);
  Poly down = poly_scale(poly_mul(x1, lin(L.fbar / q)), L.c2);
  LinearEq3 eq;
  switch (d) {
    case Dir::D5_T:
      eq.y = poly_scale(lin(L.fbar / q), L.c2);
      eq.y_bar = poly_scale(lin(a2), L.g);
      eq.y_bar_down = poly_scale(lin(a3 / q), -qN * q);
      break;
    case Dir::E6_T:
      eq.y = down;
      eq.y_bar = poly_mul(lin2(a2, Scalar(1) / qN), lin(Scalar(1) / (q * L.g)));
      eq.y_bar_down = poly_neg(poly_mul(lin2(a3 / q, a4 / q), lin(Scalar(1))));
      break;
    case Dir::E6_T1:
      eq.y = down;
      eq.y_bar = lin2(a1, a2);
      eq.y_bar_down = poly_neg(lin2(Scalar(1), Scalar(1) / L.g));
      break;
    case Dir::E6_T2:
      eq.y = down;
      eq.y_bar = lin2(Scalar(1) / qN, Scalar(1) / (q * L.g));
      eq.y_bar_down = poly_neg(lin2(a3 / q, Scalar(1)));
      break;
    case Dir::E6_T3:
      eq.y = down;
      eq.y_bar = poly_mul(lin2(a1, a2), lin(Scalar(1) / qN));
      eq.y_bar_down = poly_neg(poly_mul(lin2(Scalar(1), Scalar(1) / L.g), lin(a4 / q)));
      break;
    case Dir::E6_T4:
      eq.y = down;
      eq.y_bar = lin2(a1, Scalar(1) / (q * L.g));
      eq.y_bar_down = poly_neg(lin2(a3 / q, Scalar(1)));
      break;
  }
  return eq;
}

Poly l2_residual_poly(const ParamSet& p, const LinearEq2& eq, const Poly& P,
                      const Poly& Pbar) {
  Poly r = poly_mul(eq.y, P);
  r = poly_add(r, poly_mul(eq.y_up, poly_scale_arg(P, p.q)));
  return poly_add(r, poly_mul(eq.y_bar, Pbar));
}

Poly l3_residual_poly(const ParamSet& p, const LinearEq3& eq, const Poly& P,
                      const Poly& Pbar) {
  Poly r = poly_mul(eq.y, P);
  r = poly_add(r, poly_mul(eq.y_bar, Pbar));
  return poly_add(r, poly_mul(eq.y_bar_down, poly_scale_arg(Pbar, Scalar(1) / p.q)));
}

std::vector<Scalar> l2_residual_nodes(const ParamSet& p, Dir d,
                                      const LinearEq2& eq, const Poly& Q,
                                      const Poly& Qbar) {
  ParamSet pb = apply_dir(p, d);
  std::vector<Scalar> res;
  res.reserve(p.N());
  for (int i = 0; i < p.N(); ++i) {
    Scalar x = spow(p.q, i);
    Scalar v = poly_eval(eq.y, x) * y_node_ext(p, i) * poly_eval(Q, x) +
               poly_eval(eq.y_up, x) * y_node_ext(p, i + 1) *
                   poly_eval(Q, p.q * x) +
               poly_eval(eq.y_bar, x) * y_node_ext(pb, i) * poly_eval(Qbar, x);
    res.push_back(v);
  }
  return res;
}

std::vector<Scalar> l3_residual_nodes(const ParamSet& p, Dir d,
                                      const LinearEq3& eq, const Poly& Q,
                                      const Poly& Qbar) {
  ParamSet pb = apply_dir(p, d);
  std::vector<Scalar> res;
  res.reserve(p.N() + 1);
  for (int i = 0; i <= p.N(); ++i) {
    Scalar x = spow(p.q, i);
    Scalar v = poly_eval(eq.y, x) * y_node_ext(p, i) * poly_eval(Q, x) +
               poly_eval(eq.y_bar, x) * y_node_ext(pb, i) * poly_eval(Qbar, x) +
               poly_eval(eq.y_bar_down, x) * y_node_ext(pb, i - 1) *
                   poly_eval(Qbar, x / p.q);
    res.push_back(v);
  }
  return res;
}

namespace {

Poly truncated(Poly p, int order) {
  if (static_cast<int>(p.size()) > order + 1) p.resize(order + 1);
  return poly_trim(std::move(p));
}

// Series of Y(x) Q(x) through the given order, coefficient k multiplied by s^k.
Poly series_yq(const ParamSet& p, const Poly& Q, int order, const Scalar& s) {
  Poly y = taylor_Y_d5(p, order);
  Poly prod = truncated(poly_mul(y, Q), order);
  return poly_scale_arg(prod, s);
}

}  // namespace

std::vector<Scalar> l2_residual_series(const ParamSet& p, const LinearEq2& eq,
                                       const Poly& Q, const Poly& Qbar,
                                       int order) {
  int work = order + 3;
  ParamSet pb = apply_dir(p, Dir::D5_T);
  Poly yq = series_yq(p, Q, work, Scalar(1));
  Poly yq_up = series_yq(p, Q, work, p.q);
  Poly ybq = series_yq(pb, Qbar, work, Scalar(1));
  Poly r = poly_add(poly_add(poly_mul(eq.y, yq), poly_mul(eq.y_up, yq_up)),
                    poly_mul(eq.y_bar, ybq));
  std::vector<Scalar> out;
  for (int k = 0; k <= order; ++k)
    out.push_back(k < static_cast<int>(r.size()) ? r[k] : Scalar(0));
  return out;
}

std::vector<Scalar> l3_residual_series(const ParamSet& p, const LinearEq3& eq,
                                       const Poly& Q, const Poly& Qbar,
                                       int order) {
  int work = order + 3;
  ParamSet pb = apply_dir(p, Dir::D5_T);
  Poly yq = series_yq(p, Q, work, Scalar(1));
  Poly ybq = series_yq(pb, Qbar, work, Scalar(1));
  Poly ybq_down = series_yq(pb, Qbar, work, Scalar(1) / p.q);
  Poly r = poly_add(poly_add(poly_mul(eq.y, yq), poly_mul(eq.y_bar, ybq)),
                    poly_mul(eq.y_bar_down, ybq_down));
  std::vector<Scalar> out;
  for (int k = 0; k <= order; ++k)
    out.push_back(k < static_cast<int>(r.size()) ? r[k] : Scalar(0));
  return out;
}

}  // namespace qpade
