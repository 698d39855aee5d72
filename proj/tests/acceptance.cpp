// Acceptance gates. Each gate prints one line; the binary exits nonzero if
// any gate fails or overruns its time budget. argv[1] is the CLI binary,
// used by the determinism gate.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qpade/lax.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/poly.hpp"
#include "qpade/qrt.hpp"
#include "qpade/qseries.hpp"
#include "qpade/report.hpp"
#include "qpade/verify.hpp"
#include "qpade/weyl.hpp"

using namespace qpade;

namespace {

int g_failures = 0;

void gate(int num, const std::string& label, double budget_s,
          const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
              std::to_string(budget_s) + "s";
  }
  std::printf("criterion %d: %s - %s (%.2fs)\n", num, ok ? "PASS" : "FAIL",
              label.c_str(), secs);
  if (!ok) {
    if (!detail.empty()) std::printf("  detail: %s\n", detail.c_str());
    ++g_failures;
  }
}

bool all_pass_or_skip(const std::vector<CheckReport>& rs, std::string& detail) {
  for (const auto& r : rs)
    if (r.status == "fail") {
      detail = "failed: " + report_to_text(r);
      return false;
    }
  return true;
}

bool require_pass(const std::vector<CheckReport>& rs, const std::string& prefix,
                  std::string& detail) {
  int seen = 0;
  for (const auto& r : rs) {
    if (r.check.rfind(prefix, 0) != 0) continue;
    ++seen;
    if (r.status != "pass") {
      detail = "not pass: " + report_to_text(r);
      return false;
    }
  }
  if (seen == 0) {
    detail = "no records with prefix " + prefix;
    return false;
  }
  return true;
}

const std::vector<std::pair<int, int>> kFullGrid = {
    {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};

bool kernel_identities(std::string& detail) {
  Rng rng(101);
  for (int trial = 0; trial < 3; ++trial) {
    Scalar q = rng.rational(9);
    while (q == Scalar(1) || q == Scalar(-1)) q = rng.rational(9);
    for (int N = 0; N <= 6; ++N) {
      Scalar qmN = Scalar(1) / spow(q, N);
      for (int s = 0; s <= N; ++s) {
        Scalar sign = (s % 2 == 0) ? Scalar(1) : Scalar(-1);
        Scalar pw = sign * spow(q, s * (s - 1) / 2 - N * s);
        if (qpoch(qmN, s, q) != pw * qpoch(spow(q, N - s + 1), s, q)) {
          detail = "inversion identity fails at N=" + std::to_string(N) +
                   " s=" + std::to_string(s);
          return false;
        }
        if (qpoch(q, N - s, q) * qpoch(qmN, s, q) != pw * qpoch(q, N, q)) {
          detail = "tail product identity fails at N=" + std::to_string(N) +
                   " s=" + std::to_string(s);
          return false;
        }
        Scalar direct(1);
        for (int i = 0; i <= N; ++i)
          if (i != s) direct *= spow(q, s) - spow(q, i);
        if (f_prime_node(s, N, q) != direct) {
          detail = "node derivative mismatch at N=" + std::to_string(N) +
                   " s=" + std::to_string(s);
          return false;
        }
      }
    }
  }
  return true;
}

bool pade_correctness(std::string& detail) {
  Rng rng(202);
  for (auto [m, n] : kFullGrid) {
    for (int k = 0; k < 5; ++k) {
      bool ok = with_admissible_sample(rng, m, n, 50, [&](const ParamSet& p) {
        PadePair S = solve_d5(p);
        Poly Y = taylor_Y_d5(p, p.N());
        Poly R = poly_sub(poly_mul(Y, S.Q), S.P);
        for (int j = 0; j <= p.N(); ++j)
          if (!(j >= static_cast<int>(R.size()) || R[j].is_zero())) return false;
        PadePair E = solve_e6(p);
        auto ys = y_nodes(p);
        std::vector<Scalar> xs;
        for (int i = 0; i <= p.N(); ++i) xs.push_back(spow(p.q, i));
        for (int i = 0; i <= p.N(); ++i)
          if (poly_eval(E.P, xs[i]) != ys[i] * poly_eval(E.Q, xs[i]))
            return false;
        PadePair D = pade_det_interpolation(xs, ys, m, n);
        return poly_is_zero(poly_sub(poly_mul(D.P, E.Q), poly_mul(E.P, D.Q)));
      });
      if (!ok) {
        detail = "residual at (m,n)=(" + std::to_string(m) + "," +
                 std::to_string(n) + ")";
        return false;
      }
    }
  }
  return true;
}

bool lax_exactness(std::string& detail) {
  Rng rng(303);
  for (auto [m, n] : kFullGrid) {
    for (int k = 0; k < 5; ++k) {
      bool ok = with_admissible_sample(rng, m, n, 50, [&](const ParamSet& p) {
        PadePair S = solve_d5(p);
        ParamSet pT = apply_dir(p, Dir::D5_T);
        PadePair ST = solve_d5(pT);
        LaxData L = extract_d5(p, S, ST);
        LinearEq2 eq2 = l2_coeffs(p, Dir::D5_T, L);
        LinearEq3 eq3 = l3_coeffs(p, Dir::D5_T, L);
        if (!poly_is_zero(l2_residual_poly(p, eq2, S.P, ST.P))) return false;
        if (!poly_is_zero(l3_residual_poly(p, eq3, S.P, ST.P))) return false;
        for (const auto& v : l2_residual_series(p, eq2, S.Q, ST.Q, p.N() + 3))
          if (!v.is_zero()) return false;
        for (const auto& v : l3_residual_series(p, eq3, S.Q, ST.Q, p.N() + 3))
          if (!v.is_zero()) return false;

        PadePair Se = solve_e6(p);
        std::vector<Dir> dirs = {Dir::E6_T1, Dir::E6_T4};
        if (p.m >= 1) {
          dirs.push_back(Dir::E6_T);
          dirs.push_back(Dir::E6_T3);
        }
        if (p.n >= 1) dirs.push_back(Dir::E6_T2);
        for (Dir d : dirs) {
          PadePair Sb = solve_e6(apply_dir(p, d));
          LaxData Le = extract_e6(p, d, Se, Sb);
          LinearEq2 f2 = l2_coeffs(p, d, Le);
          LinearEq3 f3 = l3_coeffs(p, d, Le);
          if (!poly_is_zero(l2_residual_poly(p, f2, Se.P, Sb.P))) return false;
          if (!poly_is_zero(l3_residual_poly(p, f3, Se.P, Sb.P))) return false;
          for (const auto& v : l2_residual_nodes(p, d, f2, Se.Q, Sb.Q))
            if (!v.is_zero()) return false;
          for (const auto& v : l3_residual_nodes(p, d, f3, Se.Q, Sb.Q))
            if (!v.is_zero()) return false;
        }
        return true;
      });
      if (!ok) {
        detail = "residual at (m,n)=(" + std::to_string(m) + "," +
                 std::to_string(n) + ")";
        return false;
      }
    }
  }
  return true;
}

bool compatibility(std::string& detail) {
  Rng rng(404);
  for (auto [m, n] : kFullGrid) {
    for (int k = 0; k < 5; ++k) {
      auto rs = with_admissible_sample(
          rng, m, n, 50, [&](const ParamSet& p) { return verify_d5_sample(p); });
      if (!require_pass(rs, "d5.evolution.g", detail)) return false;
      if (!require_pass(rs, "d5.evolution.f", detail)) return false;
      if (!require_pass(rs, "d5.evolution.c1c2", detail)) return false;
    }
  }
  for (auto [m, n] : kFullGrid) {
    if (m < 1) continue;
    for (int k = 0; k < 5; ++k) {
      auto rs = with_admissible_sample(
          rng, m, n, 50, [&](const ParamSet& p) { return verify_e6_sample(p); });
      if (!require_pass(rs, "e6.evolution.g", detail)) return false;
      if (!require_pass(rs, "e6.evolution.f", detail)) return false;
      if (!require_pass(rs, "e6.evolution.c1c2", detail)) return false;
    }
  }
  return true;
}

bool hypergeometric_solutions(std::string& detail) {
  Rng rng(505);
  bool saw_constant_pass = false, saw_g_constant = false;
  for (auto [m, n] : kFullGrid) {
    for (int k = 0; k < 5; ++k) {
      auto rs = with_admissible_sample(rng, m, n, 50, [&](const ParamSet& p) {
        return verify_solutions_sample(p);
      });
      if (!require_pass(rs, "solutions.value.", detail)) return false;
      if (!require_pass(rs, "solutions.det.", detail)) return false;
      if (!require_pass(rs, "solutions.closed_form.f_ratio", detail))
        return false;
      if (m >= 1 &&
          !require_pass(rs, "solutions.closed_form.g_ratio", detail))
        return false;
      for (const auto& r : rs) {
        if (r.check == "solutions.closed_form.f_constant" &&
            r.status == "pass")
          saw_constant_pass = true;
        if (r.check == "solutions.closed_form.g_constant")
          saw_g_constant = true;
        if (r.check == "solutions.closed_form.f_constant" &&
            r.status == "fail") {
          detail = "stated f-side constant fails: " + report_to_text(r);
          return false;
        }
      }
    }
  }
  if (!saw_constant_pass) {
    detail = "stated f-side constant never verified";
    return false;
  }
  if (!saw_g_constant) {
    detail = "g-side constant comparison never reported";
    return false;
  }
  return true;
}

bool direction_contiguity(std::string& detail) {
  Rng rng(606);
  const std::vector<std::pair<int, int>> degs = {{1, 1}, {2, 1}, {1, 2}};
  for (auto [m, n] : degs) {
    auto rs = with_admissible_sample(rng, m, n, 50, [&](const ParamSet& p) {
      return verify_directions_sample(p);
    });
    for (const char* name :
         {"directions.contiguity_g2", "directions.contiguity_g3",
          "directions.contiguity_g4", "directions.contiguity_g2_main",
          "directions.T1.evolution_g", "directions.T1.evolution_f",
          "directions.T2.evolution_g", "directions.T3.evolution_g",
          "directions.T4.evolution_g", "directions.engine_gauge_g",
          "directions.engine_gauge_f"}) {
      if (!require_pass(rs, name, detail)) return false;
    }
    if (!all_pass_or_skip(rs, detail)) return false;
  }
  return true;
}

bool pencil_dynamics(std::string& detail) {
  Rng rng(707);
  auto r1 = qrt_reports(rng, PencilKind::QP6, 5, 25);
  if (!require_pass(r1, "qrt.qp6.nullity_two", detail)) return false;
  if (!require_pass(r1, "qrt.qp6.nullity_one_broken", detail)) return false;
  if (!require_pass(r1, "qrt.qp6.orbit_lambda_conserved", detail)) return false;
  if (!require_pass(r1, "qrt.qp6.switch_closed_forms", detail)) return false;
  if (!require_pass(r1, "qrt.qp6.x0_zero_product", detail)) return false;
  if (!all_pass_or_skip(r1, detail)) return false;
  auto r2 = qrt_reports(rng, PencilKind::E6, 5, 25);
  if (!require_pass(r2, "qrt.e6.nullity_two", detail)) return false;
  if (!require_pass(r2, "qrt.e6.nullity_one_broken", detail)) return false;
  if (!require_pass(r2, "qrt.e6.orbit_lambda_conserved", detail)) return false;
  if (!require_pass(r2, "qrt.e6.switch_closed_forms", detail)) return false;
  return all_pass_or_skip(r2, detail);
}

bool weyl_engine(std::string& detail) {
  Rng rng(808);
  auto r1 = weyl_relation_reports(rng, 5);
  if (!require_pass(r1, "weyl.involution.", detail)) return false;
  if (!require_pass(r1, "weyl.braid.", detail)) return false;
  if (!require_pass(r1, "weyl.conjugation.", detail)) return false;
  if (!require_pass(r1, "weyl.scaling.commute.", detail)) return false;
  if (!all_pass_or_skip(r1, detail)) return false;
  auto r2 = weyl_translation_reports(rng, 5);
  if (!require_pass(r2, "weyl.translation.parameter_shift", detail))
    return false;
  if (!require_pass(r2, "weyl.identity.g_side", detail)) return false;
  if (!require_pass(r2, "weyl.identity.f_side", detail)) return false;
  return all_pass_or_skip(r2, detail);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool determinism(const std::string& cli, std::string& detail) {
  const std::string ja = "acceptance_suite_a.json";
  const std::string jb = "acceptance_suite_b.json";
  for (const auto& [path, tag] : {std::pair{ja, "a"}, std::pair{jb, "b"}}) {
    std::string cmd = "\"" + cli + "\" suite --seed 42 --json " + path +
                      " > suite_stdout_" + tag + ".txt 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) {
      detail = "suite run " + std::string(tag) + " exited " + std::to_string(rc);
      return false;
    }
  }
  std::string a = slurp(ja), b = slurp(jb);
  if (a.empty()) {
    detail = "empty suite report";
    return false;
  }
  if (a != b) {
    detail = "reports differ between identically seeded runs";
    return false;
  }
  return true;
}

bool float_sanity(std::string& detail) {
  CheckReport r = float_sanity_check();
  if (r.status != "pass") {
    detail = report_to_text(r);
    return false;
  }
  std::printf("  float margin: %s (tolerance %s)\n", r.lhs.c_str(),
              r.rhs.c_str());
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "./qpade_cli";
  gate(1, "finite kernel identities", 5.0, kernel_identities);
  gate(2, "rational approximation residuals", 20.0, pade_correctness);
  gate(3, "linear pair exactness", 30.0, lax_exactness);
  gate(4, "evolution equation residuals", 60.0, compatibility);
  gate(5, "hypergeometric value formulas", 30.0, hypergeometric_solutions);
  gate(6, "direction contiguity", 60.0, direction_contiguity);
  gate(7, "pencil dynamics", 30.0, pencil_dynamics);
  gate(8, "reflection group engine", 60.0, weyl_engine);
  gate(9, "deterministic suite output", 300.0,
       [&](std::string& d) { return determinism(cli, d); });
  gate(10, "floating point product sanity", 10.0, float_sanity);
  if (g_failures > 0) {
    std::printf("%d criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
