#include "qpade/qrt.hpp"

#include <set>

#include "qpade/matrix.hpp"

namespace qpade {

namespace {

std::vector<Scalar> point_row(const Scalar& x, const Scalar& y) {
  std::vector<Scalar> row;
  row.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) row.push_back(spow(x, i) * spow(y, j));
  return row;
}

Mat condition_rows(const QrtConfig& cfg) {
  const auto& a = cfg.a;
  Mat rows;
  rows.push_back(point_row(a[0], Scalar(0)));
  rows.push_back(point_row(a[1], Scalar(0)));
  rows.push_back(point_row(Scalar(0), a[2]));
  rows.push_back(point_row(Scalar(0), a[3]));
  if (cfg.kind == PencilKind::QP6) {
    // (a, infinity): the y^2 coefficient polynomial vanishes at x = a
    for (int k : {4, 5}) {
      std::vector<Scalar> row(9, Scalar(0));
      for (int i = 0; i < 3; ++i) row[3 * i + 2] = spow(a[k], i);
      rows.push_back(row);
    }
    // (infinity, a): the x^2 coefficient polynomial vanishes at y = a
    for (int k : {6, 7}) {
      std::vector<Scalar> row(9, Scalar(0));
      for (int j = 0; j < 3; ++j) row[3 * 2 + j] = spow(a[k], j);
      rows.push_back(row);
    }
  } else {
    for (int k : {4, 5, 6, 7})
      rows.push_back(point_row(a[k], Scalar(1) / a[k]));
  }
  return rows;
}

Scalar coeff_poly_A(const Grid22& c, const Scalar& x) {
  return c[2] + c[5] * x + c[8] * x * x;
}
Scalar coeff_poly_C(const Grid22& c, const Scalar& x) {
  return c[0] + c[3] * x + c[6] * x * x;
}
Scalar coeff_poly_Atil(const Grid22& c, const Scalar& y) {
  return c[6] + c[7] * y + c[8] * y * y;
}
Scalar coeff_poly_Ctil(const Grid22& c, const Scalar& y) {
  return c[0] + c[1] * y + c[2] * y * y;
}

}  // namespace

Scalar condition_value(const QrtConfig& cfg) {
  const auto& a = cfg.a;
  if (cfg.kind == PencilKind::QP6)
    return a[0] * a[1] * a[6] * a[7] / (a[2] * a[3] * a[4] * a[5]);
  return a[2] * a[3] * a[4] * a[5] * a[6] * a[7] / (a[0] * a[1]);
}

Scalar grid_eval(const Grid22& c, const Scalar& x, const Scalar& y) {
  Scalar acc(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += c[3 * i + j] * spow(x, i) * spow(y, j);
  return acc;
}

int point_condition_nullity(const QrtConfig& cfg) {
  Mat rows = condition_rows(cfg);
  return 9 - rank_exact(rows);
}

Pencil build_pencil(const QrtConfig& cfg) {
  Mat rows = condition_rows(cfg);
  std::vector<std::vector<Scalar>> basis = nullspace(rows);
  if (basis.size() != 2)
    throw condition_error("point conditions have nullity " +
                          std::to_string(basis.size()) + ", need 2");
  std::vector<Scalar> v1 = basis[0], v2 = basis[1];
  std::vector<Scalar> fv;
  if (v1[4].is_zero())
    fv = v1;
  else if (v2[4].is_zero())
    fv = v2;
  else {
    Scalar t = v1[4] / v2[4];
    fv.resize(9);
    for (int k = 0; k < 9; ++k) fv[k] = v1[k] - t * v2[k];
  }
  if (fv[6].is_zero())
    throw condition_error("normalized member lost its x^2 coefficient");
  Pencil pen;
  for (int k = 0; k < 9; ++k) pen.F[k] = fv[k] / fv[6];
  pen.base.fill(Scalar(0));
  pen.base[4] = Scalar(1);
  if (cfg.kind == PencilKind::E6) pen.base[8] = Scalar(-1);
  return pen;
}

Scalar lambda_of(const QrtConfig& cfg, const Pencil& pen, const Scalar& x0,
                 const Scalar& y0) {
  Scalar b = grid_eval(pen.base, x0, y0);
  if (b.is_zero()) throw base_point_error("start lies on the base locus");
  return -grid_eval(pen.F, x0, y0) / b;
}

Scalar vertical_switch(const QrtConfig& cfg, const Pencil& pen,
                       const Scalar& lambda, const Scalar& x0,
                       const Scalar& y0) {
  Scalar lead = coeff_poly_A(pen.F, x0);
  if (cfg.kind == PencilKind::E6) lead -= lambda * x0 * x0;
  if (lead.is_zero() || y0.is_zero())
    throw fiber_error("vertical fiber quadratic degenerates");
  return coeff_poly_C(pen.F, x0) / (lead * y0);
}

Scalar horizontal_switch(const QrtConfig& cfg, const Pencil& pen,
                         const Scalar& lambda, const Scalar& x0,
                         const Scalar& y0) {
  Scalar lead = coeff_poly_Atil(pen.F, y0);
  if (cfg.kind == PencilKind::E6) lead -= lambda * y0 * y0;
  if (lead.is_zero() || x0.is_zero())
    throw fiber_error("horizontal fiber quadratic degenerates");
  return coeff_poly_Ctil(pen.F, y0) / (lead * x0);
}

std::vector<OrbitPoint> orbit(const QrtConfig& cfg, const Pencil& pen,
                              const Scalar& x0, const Scalar& y0, int steps) {
  std::vector<OrbitPoint> out;
  Scalar lam = lambda_of(cfg, pen, x0, y0);
  out.push_back({0, x0, y0, lam});
  Scalar x = x0, y = y0;
  for (int k = 1; k <= steps; ++k) {
    y = vertical_switch(cfg, pen, lam, x, y);
    x = horizontal_switch(cfg, pen, lam, x, y);
    out.push_back({k, x, y, lambda_of(cfg, pen, x, y)});
  }
  return out;
}

std::string orbit_csv(const std::vector<OrbitPoint>& orb) {
  std::string s = "step,x,y,lambda\n";
  for (const auto& pt : orb)
    s += std::to_string(pt.step) + "," + pt.x.str() + "," + pt.y.str() + "," +
         pt.lambda.str() + "\n";
  return s;
}

QrtConfig sample_qrt_config(Rng& rng, PencilKind kind) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    QrtConfig cfg;
    cfg.kind = kind;
    bool zero = false;
    for (int k = 0; k < 7; ++k) {
      cfg.a[k] = rng.rational();
      if (cfg.a[k].is_zero()) zero = true;
    }
    if (zero) continue;
    const auto& a = cfg.a;
    if (kind == PencilKind::QP6)
      cfg.a[7] = a[2] * a[3] * a[4] * a[5] / (a[0] * a[1] * a[6]);
    else
      cfg.a[7] = a[0] * a[1] / (a[2] * a[3] * a[4] * a[5] * a[6]);
    if (cfg.a[7].is_zero()) continue;
    std::set<std::string> seen;
    for (const auto& v : cfg.a) seen.insert(v.str());
    if (seen.size() != 8) continue;
    try {
      build_pencil(cfg);
    } catch (const condition_error&) {
      continue;
    }
    return cfg;
  }
  throw sampling_error("no admissible qrt configuration found");
}

namespace {

std::map<std::string, std::string> config_params(const QrtConfig& cfg) {
  std::map<std::string, std::string> m;
  for (int k = 0; k < 8; ++k)
    m["a" + std::to_string(k + 1)] = cfg.a[k].str();
  m["variant"] = cfg.kind == PencilKind::QP6 ? "qp6" : "e6";
  return m;
}

// Coefficient grid of the normalized member, written out from the base-point
// data (elementary symmetric content on each boundary line).
Grid22 expected_grid(const QrtConfig& cfg) {
  const auto& a = cfg.a;
  const Scalar &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4],
               &a6 = a[5], &a7 = a[6], &a8 = a[7];
  Grid22 c;
  c.fill(Scalar(0));
  c[0] = a1 * a2;
  c[3] = -(a1 + a2);
  c[6] = Scalar(1);
  c[1] = -a1 * a2 / (a3 * a4) * (a3 + a4);
  c[2] = a1 * a2 / (a3 * a4);
  if (cfg.kind == PencilKind::QP6) {
    Scalar K = a1 * a2 / (a3 * a4 * a5 * a6);
    c[5] = -K * (a5 + a6);
    c[8] = K;
    c[7] = -K * (a7 + a8);
  } else {
    Scalar e1 = a5 + a6 + a7 + a8;
    Scalar e2 = a5 * a6 + a5 * a7 + a5 * a8 + a6 * a7 + a6 * a8 + a7 * a8;
    Scalar e3 = a5 * a6 * a7 + a5 * a6 * a8 + a5 * a7 * a8 + a6 * a7 * a8;
    c[8] = e2 - a1 * a2;
    c[7] = a1 + a2 - e1;
    c[5] = a1 * a2 / (a3 * a4) * (a3 + a4) - e3;
  }
  return c;
}

}  // namespace

std::vector<CheckReport> qrt_reports(Rng& rng, PencilKind kind, int samples,
                                     int steps) {
  std::string tag = kind == PencilKind::QP6 ? "qrt.qp6." : "qrt.e6.";
  std::vector<CheckReport> out;
  for (int si = 0; si < samples; ++si) {
    QrtConfig cfg = sample_qrt_config(rng, kind);
    auto params = config_params(cfg);
    auto add = [&](CheckReport r) {
      r.sample = si;
      r.params = params;
      out.push_back(std::move(r));
    };
    add(make_check(tag + "condition", condition_value(cfg) == Scalar(1),
                   condition_value(cfg), Scalar(1)));
    int dim = point_condition_nullity(cfg);
    add(make_check(tag + "nullity_two", dim == 2, std::to_string(dim), "2"));
    QrtConfig broken = cfg;
    broken.a[7] *= Scalar(2);
    int dimb = point_condition_nullity(broken);
    add(make_check(tag + "nullity_one_broken", dimb == 1, std::to_string(dimb),
                   "1"));
    Pencil pen = build_pencil(cfg);

    // base points re-evaluate to zero on F
    bool base_ok = grid_eval(pen.F, cfg.a[0], Scalar(0)).is_zero() &&
                   grid_eval(pen.F, cfg.a[1], Scalar(0)).is_zero() &&
                   grid_eval(pen.F, Scalar(0), cfg.a[2]).is_zero() &&
                   grid_eval(pen.F, Scalar(0), cfg.a[3]).is_zero();
    if (kind == PencilKind::QP6) {
      for (int k : {4, 5}) base_ok = base_ok && coeff_poly_A(pen.F, cfg.a[k]).is_zero();
      for (int k : {6, 7})
        base_ok = base_ok && coeff_poly_Atil(pen.F, cfg.a[k]).is_zero();
    } else {
      for (int k : {4, 5, 6, 7})
        base_ok = base_ok &&
                  grid_eval(pen.F, cfg.a[k], Scalar(1) / cfg.a[k]).is_zero();
    }
    add(make_check(tag + "base_points", base_ok, base_ok ? "0" : "nonzero", "0"));

    Grid22 want = expected_grid(cfg);
    bool grid_ok = true;
    for (int k = 0; k < 9; ++k) grid_ok = grid_ok && pen.F[k] == want[k];
    add(make_check(tag + "member_coefficients", grid_ok,
                   grid_ok ? "match" : "mismatch", "match"));

    // x0 = 0 vertical anchor: product of the two roots above x = 0 (the
    // lambda correction carries an x^2 factor, so it drops out here)
    Scalar anchor =
        coeff_poly_C(pen.F, Scalar(0)) / coeff_poly_A(pen.F, Scalar(0));
    add(make_check(tag + "x0_zero_product", anchor == cfg.a[2] * cfg.a[3],
                   anchor, cfg.a[2] * cfg.a[3]));

    // orbit with closed-form assertions at every step
    const auto& a = cfg.a;
    bool done = false;
    for (int attempt = 0; attempt < 100 && !done; ++attempt) {
      Scalar x0 = rng.rational(), y0 = rng.rational();
      if (x0.is_zero() || y0.is_zero()) continue;
      try {
        Scalar lam = lambda_of(cfg, pen, x0, y0);
        Scalar x = x0, y = y0;
        bool conserve = true, closed = true, involution = true;
        for (int k = 0; k < steps; ++k) {
          Scalar y1 = vertical_switch(cfg, pen, lam, x, y);
          if (vertical_switch(cfg, pen, lam, x, y1) != y) involution = false;
          if (kind == PencilKind::QP6) {
            Scalar cf = a[6] * a[7] * (x - a[0]) * (x - a[1]) /
                        ((x - a[4]) * (x - a[5]));
            if (y * y1 != cf) closed = false;
          } else {
            Scalar lhs = (x * y1 - Scalar(1)) * (x * y - Scalar(1)) / (y * y1);
            Scalar cf = (x - a[4]) * (x - a[5]) * (x - a[6]) * (x - a[7]) /
                        ((x - a[0]) * (x - a[1]));
            if (lhs != cf) closed = false;
          }
          y = y1;
          Scalar x1 = horizontal_switch(cfg, pen, lam, x, y);
          if (horizontal_switch(cfg, pen, lam, x1, y) != x) involution = false;
          if (kind == PencilKind::QP6) {
            Scalar cf = a[4] * a[5] * (y - a[2]) * (y - a[3]) /
                        ((y - a[6]) * (y - a[7]));
            if (x * x1 != cf) closed = false;
          } else {
            Scalar lhs = (x1 * y - Scalar(1)) * (x * y - Scalar(1)) / (x * x1);
            Scalar cf = a[2] * a[3] / (a[0] * a[1]) * (y * a[4] - Scalar(1)) *
                        (y * a[5] - Scalar(1)) * (y * a[6] - Scalar(1)) *
                        (y * a[7] - Scalar(1)) / ((y - a[2]) * (y - a[3]));
            if (lhs != cf) closed = false;
          }
          x = x1;
          if (lambda_of(cfg, pen, x, y) != lam) conserve = false;
          if (grid_eval(pen.F, x, y) + lam * grid_eval(pen.base, x, y) !=
              Scalar(0))
            conserve = false;
        }
        add(make_check(tag + "orbit_lambda_conserved", conserve,
                       conserve ? "constant" : "varies", "constant"));
        add(make_check(tag + "switch_closed_forms", closed,
                       closed ? "0" : "nonzero", "0"));
        add(make_check(tag + "switch_involution", involution,
                       involution ? "0" : "nonzero", "0"));
        done = true;
      } catch (const base_point_error&) {
        continue;
      } catch (const fiber_error&) {
        continue;
      } catch (const singular_error&) {
        continue;
      }
    }
    if (!done) throw sampling_error("no nondegenerate orbit start found");
  }
  sort_reports(out);
  return out;
}

}  // namespace qpade
