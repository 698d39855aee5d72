#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpade/lax.hpp"
#include "qpade/matrix.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/poly.hpp"
#include "qpade/qrt.hpp"
#include "qpade/qseries.hpp"
#include "qpade/report.hpp"
#include "qpade/scalar.hpp"
#include "qpade/verify.hpp"
#include "qpade/weyl.hpp"

using namespace qpade;

namespace {

ParamSet fixed_params() {
  ParamSet p;
  p.q = Scalar(2);
  p.a = {Scalar(2), Scalar(3), Scalar(5), Scalar(7)};
  p.m = 1;
  p.n = 1;
  return p;
}

}  // namespace

TEST_CASE("scalar arithmetic and canonical strings") {
  Scalar a(3, 6);
  CHECK(a.str() == "1/2");
  CHECK(Scalar(-4, 2).str() == "-2");
  CHECK((Scalar(1, 3) + Scalar(1, 6)).str() == "1/2");
  CHECK(spow(Scalar(2), -3) == Scalar(1, 8));
  CHECK(spow(Scalar(-2, 3), 2) == Scalar(4, 9));
  CHECK(spow(Scalar(5), 0) == Scalar(1));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), singular_error);
  CHECK_THROWS_AS(spow(Scalar(0), -1), singular_error);
}

TEST_CASE("polynomial division") {
  Poly a{Scalar(1), Scalar(2), Scalar(1)};  // 1 + 2x + x^2
  Poly b{Scalar(1), Scalar(1)};             // 1 + x
  CHECK(poly_divide_exact(a, b) == b);
  auto [quo, rem] = poly_divmod(Poly{Scalar(2), Scalar(3), Scalar(1)}, b);
  CHECK(poly_add(poly_mul(quo, b), rem) == Poly{Scalar(2), Scalar(3), Scalar(1)});
  CHECK_THROWS_AS(poly_divide_exact(Poly{Scalar(1), Scalar(1)},
                                    Poly{Scalar(0), Scalar(1)}),
                  divisibility_error);
  CHECK(poly_deg(Poly{}) == -1);
  CHECK(poly_eval(a, Scalar(3)) == Scalar(16));
  CHECK(poly_scale_arg(b, Scalar(2)) == Poly{Scalar(1), Scalar(2)});
  CHECK(poly_lin(Scalar(5)) == Poly{Scalar(1), Scalar(-5)});
}

TEST_CASE("exact linear algebra") {
  Mat M{{Scalar(1), Scalar(2), Scalar(3)},
        {Scalar(4), Scalar(5), Scalar(6)},
        {Scalar(7), Scalar(8), Scalar(10)}};
  CHECK(det_exact(M) == Scalar(-3));
  CHECK(det_exact(Mat{}) == Scalar(1));
  CHECK(rank_exact(Mat{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
  auto ns = nullspace(Mat{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] * Scalar(1) + ns[0][1] * Scalar(2) == Scalar(0));
  auto x = solve_linear(Mat{{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(4)}},
                        {Scalar(6), Scalar(8)});
  CHECK(x == std::vector<Scalar>{Scalar(3), Scalar(2)});
  std::vector<std::vector<Poly>> PM{
      {Poly{Scalar(1), Scalar(1)}, Poly{Scalar(1)}},
      {Poly{Scalar(0), Scalar(1)}, Poly{Scalar(2)}}};
  CHECK(det_poly(PM) == Poly{Scalar(2), Scalar(1)});
}

TEST_CASE("q-Pochhammer values") {
  Scalar q(2);
  CHECK(qpoch(Scalar(3), 0, q) == Scalar(1));
  CHECK(qpoch(Scalar(3), 1, q) == Scalar(-2));
  // (2)_3 at q=2: (1-2)(1-4)(1-8)
  CHECK(qpoch(Scalar(2), 3, q) == Scalar(-21));
  CHECK(qpoch_list({Scalar(2), Scalar(3)}, 1, q) == Scalar(2));
}

TEST_CASE("interpolation node values") {
  ParamSet p = fixed_params();
  auto ys = y_nodes(p);
  REQUIRE(ys.size() == 3);
  CHECK(ys[0] == Scalar(1));
  CHECK(ys[1] == Scalar(12));
  CHECK(ys[2] == Scalar(468, 5));
  CHECK(y_node_ext(p, 1) == Scalar(12));
  ParamSet p2 = p;
  p2.a = {Scalar(3), Scalar(5), Scalar(7), Scalar(11)};
  CHECK(y_node_ext(p2, -1) == Scalar(1, 15));
}

TEST_CASE("series coefficients from the functional equation") {
  ParamSet p = fixed_params();
  auto c = taylor_Y_d5(p, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Scalar(1));
  // c1 = (a1 + a2 - a3 - a4)/(q - 1)
  CHECK(c[1] == Scalar(-7));
}

TEST_CASE("terminating series partial sum") {
  Scalar v = phi32(Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6),
                   Scalar(7), Scalar(8), 1);
  CHECK(v == Scalar(7, 5));
}

TEST_CASE("node derivative closed form") {
  Scalar q(3);
  CHECK(f_prime_node(1, 2, q) == Scalar(-12));
  for (int N = 0; N <= 6; ++N) {
    for (int s = 0; s <= N; ++s) {
      Scalar direct(1);
      for (int i = 0; i <= N; ++i)
        if (i != s) direct *= spow(q, s) - spow(q, i);
      CHECK(f_prime_node(s, N, q) == direct);
    }
  }
}

TEST_CASE("node vanishing polynomial") {
  Poly lam = node_vanishing_poly(2, Scalar(2));
  CHECK(lam == Poly{Scalar(1), Scalar(-3, 2), Scalar(1, 2)});
  CHECK(poly_eval(lam, Scalar(1)) == Scalar(0));
  CHECK(poly_eval(lam, Scalar(2)) == Scalar(0));
}

TEST_CASE("finite kernel identities") {
  Rng rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    Scalar q = rng.rational(9);
    if (q == Scalar(1) || q == Scalar(-1)) q = Scalar(5, 3);
    for (int N = 0; N <= 4; ++N) {
      Scalar qmN = Scalar(1) / spow(q, N);
      for (int s = 0; s <= N; ++s) {
        Scalar sign = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
        Scalar pw = sign * spow(q, s * (s - 1) / 2 - N * s);
        CHECK(qpoch(qmN, s, q) == pw * qpoch(spow(q, N - s + 1), s, q));
        CHECK(qpoch(q, N - s, q) * qpoch(qmN, s, q) == pw * qpoch(q, N, q));
      }
    }
  }
}

TEST_CASE("series approximation at a fixed point") {
  ParamSet p = fixed_params();
  PadePair S = solve_d5(p);
  CHECK(poly_deg(S.P) <= p.m);
  CHECK(poly_deg(S.Q) <= p.n);
  CHECK(S.Q[0] == Scalar(1));
  Poly Y = taylor_Y_d5(p, p.N());
  Poly R = poly_sub(poly_mul(Y, S.Q), S.P);
  for (int k = 0; k <= p.N(); ++k)
    CHECK((k < static_cast<int>(R.size()) ? R[k] : Scalar(0)) == Scalar(0));
}

TEST_CASE("interpolation at a fixed point") {
  ParamSet p = fixed_params();
  PadePair S = solve_e6(p);
  auto ys = y_nodes(p);
  for (int i = 0; i <= p.N(); ++i) {
    Scalar x = spow(p.q, i);
    CHECK(poly_eval(S.P, x) == ys[i] * poly_eval(S.Q, x));
  }
  std::vector<Scalar> xs;
  for (int i = 0; i <= p.N(); ++i) xs.push_back(spow(p.q, i));
  CHECK(pade_interpolation_nullity(xs, ys, p.m, p.n) == 1);
}

TEST_CASE("plain polynomial interpolation as the n = 0 case") {
  std::vector<Scalar> xs{Scalar(1), Scalar(2), Scalar(3)};
  std::vector<Scalar> ys{Scalar(1), Scalar(4), Scalar(9)};
  PadePair S = pade_interpolate(xs, ys, 2, 0);
  CHECK(poly_deg(S.Q) == 0);
  for (int i = 0; i < 3; ++i)
    CHECK(poly_eval(S.P, xs[i]) == ys[i] * poly_eval(S.Q, xs[i]));
}

TEST_CASE("determinant route matches the solver") {
  ParamSet p = fixed_params();
  PadePair S = solve_e6(p);
  std::vector<Scalar> xs;
  for (int i = 0; i <= p.N(); ++i) xs.push_back(spow(p.q, i));
  PadePair D = pade_det_interpolation(xs, y_nodes(p), p.m, p.n);
  CHECK(poly_is_zero(poly_sub(poly_mul(D.P, S.Q), poly_mul(S.P, D.Q))));
  PadePair Sp = pade_det_specialized(p);
  CHECK(Sp.P == D.P);
  CHECK(Sp.Q == D.Q);
}

TEST_CASE("degenerate degrees") {
  ParamSet p = fixed_params();
  p.m = 0;
  p.n = 0;
  PadePair S = solve_d5(p);
  CHECK(S.P == Poly{Scalar(1)});
  CHECK(S.Q == Poly{Scalar(1)});
  PadePair E = solve_e6(p);
  CHECK(poly_eval(E.P, Scalar(1)) == poly_eval(E.Q, Scalar(1)));
}

TEST_CASE("extraction constants at degree zero") {
  // with m = n = 0 every constant has a hand-computable closed form
  ParamSet p = fixed_params();
  p.m = 0;
  p.n = 0;
  PadePair one{Poly{Scalar(1)}, Poly{Scalar(1)}};
  LaxData L = extract_d5(p, one, one);
  CHECK(L.c0 == Scalar(-7));
  CHECK(L.f == Scalar(29, 7));
  CHECK(L.c0bar == Scalar(-11));
  CHECK(L.fbar == Scalar(58, 11));
  CHECK(L.c == Scalar(-4));
  CHECK(L.cprime == Scalar(3));
  CHECK(L.g == Scalar(-3, 4));
  CHECK(L.cprime - L.c + L.c0 == Scalar(0));
  CHECK(L.c1 == Scalar(7, 4));
  CHECK(L.c2 == Scalar(11, 4));
}

TEST_CASE("shift directions and preconditions") {
  ParamSet p = fixed_params();
  ParamSet pT = apply_dir(p, Dir::D5_T);
  CHECK(pT.a[1] == Scalar(6));
  CHECK(pT.a[3] == Scalar(14));
  CHECK(pT.m == 1);
  CHECK(pT.n == 1);
  CHECK(invert_dir(pT, Dir::D5_T).a[1] == Scalar(3));
  ParamSet pE = apply_dir(p, Dir::E6_T);
  CHECK(pE.m == 0);
  CHECK(pE.a[1] == Scalar(6));
  CHECK_THROWS_AS(apply_dir(pE, Dir::E6_T), inadmissible_error);
  ParamSet p2 = apply_dir(p, Dir::E6_T2);
  CHECK(p2.n == 0);
  CHECK(p2.a[3] == Scalar(14));
  ParamSet p4 = apply_dir(p, Dir::E6_T4);
  CHECK(p4.m == 1);
  CHECK(p4.n == 1);
  CHECK(p4.a[0] == Scalar(4));
  CHECK(p4.a[3] == Scalar(14));
}

TEST_CASE("pencil conditions") {
  QrtConfig cfg;
  cfg.kind = PencilKind::QP6;
  cfg.a = {Scalar(1), Scalar(1), Scalar(1), Scalar(1),
           Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
  CHECK(condition_value(cfg) == Scalar(1));
  cfg.a = {Scalar(2), Scalar(3), Scalar(5), Scalar(7),
           Scalar(11), Scalar(13), Scalar(17), Scalar(0)};
  cfg.a[7] = cfg.a[2] * cfg.a[3] * cfg.a[4] * cfg.a[5] / (cfg.a[0] * cfg.a[1] * cfg.a[6]);
  CHECK(condition_value(cfg) == Scalar(1));
  CHECK(point_condition_nullity(cfg) == 2);
  Pencil pen = build_pencil(cfg);
  CHECK(pen.F[4] == Scalar(0));
  CHECK(pen.F[6] == Scalar(1));
  CHECK(grid_eval(pen.F, cfg.a[0], Scalar(0)) == Scalar(0));
  CHECK(grid_eval(pen.F, cfg.a[1], Scalar(0)) == Scalar(0));
  CHECK(grid_eval(pen.F, Scalar(0), cfg.a[2]) == Scalar(0));
  CHECK(grid_eval(pen.F, Scalar(0), cfg.a[3]) == Scalar(0));
  cfg.a[7] = cfg.a[7] * Scalar(2);
  CHECK(condition_value(cfg) == Scalar(2));
  CHECK(point_condition_nullity(cfg) == 1);
  CHECK_THROWS_AS(build_pencil(cfg), condition_error);
}

TEST_CASE("full pencil check set") {
  Rng rng(11);
  auto r1 = qrt_reports(rng, PencilKind::QP6, 1, 5);
  CHECK(all_passed(r1));
  auto r2 = qrt_reports(rng, PencilKind::E6, 1, 5);
  CHECK(all_passed(r2));
}

TEST_CASE("generator actions at a fixed state") {
  WeylState st;
  st.b = {Scalar(2), Scalar(3), Scalar(5), Scalar(7),
          Scalar(11), Scalar(13), Scalar(17), Scalar(19)};
  st.f = Scalar(1, 2);
  st.g = Scalar(1, 3);
  WeylState s1 = apply_gen("s1", st);
  CHECK(s1.b[0] == Scalar(3));
  CHECK(s1.b[1] == Scalar(2));
  CHECK(s1.f == st.f);
  CHECK(s1.g == st.g);
  WeylState p1 = apply_gen("p1", st);
  CHECK(p1.b[0] == Scalar(1, 7));
  CHECK(p1.b[3] == Scalar(1, 2));
  CHECK(p1.b[4] == Scalar(1, 11));
  CHECK(p1.f == Scalar(1, 3));
  CHECK(p1.g == Scalar(1, 2));
  WeylState s2 = apply_gen("s2", st);
  CHECK(s2.b[1] == Scalar(1, 19));
  CHECK(s2.b[2] == Scalar(285));
  CHECK(s2.b[3] == Scalar(399));
  CHECK(s2.b[7] == Scalar(1, 3));
  CHECK(s2.f == st.f);
  CHECK(s2.g == Scalar(111, 53));
  CHECK(apply_gen("s2", s2) == st);
  CHECK(state_q(st) == state_q(s2));
}

TEST_CASE("word plumbing") {
  WeylState st;
  st.b = {Scalar(2), Scalar(3), Scalar(5), Scalar(7),
          Scalar(11), Scalar(13), Scalar(17), Scalar(19)};
  st.f = Scalar(1, 2);
  st.g = Scalar(1, 3);
  CHECK(apply_word({}, st) == st);
  Word w{"s1", "s3"};
  CHECK(invert_word(w) == Word{"s3", "s1"});
  CHECK(apply_word(invert_word(w), apply_word(w, st)) == st);
  CHECK(T_WORD.size() == RP_WORD.size() + R_WORD.size());
}

TEST_CASE("Cartan data") {
  auto C = cartan();
  for (int i = 0; i < 7; ++i) CHECK(C[i][i] == 2);
  CHECK(C[0][6] == -1);
  CHECK(C[1][2] == -1);
  CHECK(C[2][3] == -1);
  CHECK(C[3][4] == -1);
  CHECK(C[3][6] == -1);
  CHECK(C[4][5] == -1);
  CHECK(C[0][1] == 0);
  CHECK(C[2][6] == 0);
  int minus = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j) {
        CHECK(C[i][j] == C[j][i]);
        if (C[i][j] == -1) ++minus;
      }
  CHECK(minus == 12);
}

TEST_CASE("report plumbing") {
  std::vector<CheckReport> rs;
  rs.push_back(make_check("b.check", true, Scalar(1), Scalar(1)));
  rs.push_back(make_check("a.check", false, Scalar(1), Scalar(2)));
  rs[0].sample = 1;
  sort_reports(rs);
  CHECK(rs[0].check == "a.check");
  CHECK(!all_passed(rs));
  CHECK(count_failed(rs) == 1);
  std::string js = reports_to_json(rs);
  CHECK(js.find("\"check\": \"a.check\"") != std::string::npos);
  CHECK(js.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(js.back() == '\n');
}

TEST_CASE("sampling determinism") {
  Rng r1(42), r2(42);
  for (int k = 0; k < 20; ++k) CHECK(r1.next() == r2.next());
  Rng r3(42);
  Scalar v = r3.rational();
  CHECK(!v.is_zero());
  ParamSet p = sample_params(r3, 2, 1);
  CHECK(p.m == 2);
  CHECK(is_admissible(p));
}

TEST_CASE("floating point cross-check") {
  CheckReport r = float_sanity_check();
  CHECK(r.status == "pass");
  CHECK(r.witness.at("kind") == "floating-point");
}
