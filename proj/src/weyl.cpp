#include "qpade/weyl.hpp"

namespace qpade {

bool operator==(const WeylState& a, const WeylState& b) {
  return a.b == b.b && a.f == b.f && a.g == b.g;
}

Scalar state_q(const WeylState& st) {
  Scalar p(1);
  for (const auto& v : st.b) p *= v;
  return p;
}

WeylState scale_state(const WeylState& st, const Scalar& lam) {
  WeylState r = st;
  for (int k = 0; k < 4; ++k) r.b[k] /= lam;
  for (int k = 4; k < 8; ++k) r.b[k] *= lam;
  r.f *= lam;
  r.g /= lam;
  return r;
}

namespace {

WeylState swap_b(const WeylState& st, int i, int j) {
  WeylState r = st;
  std::swap(r.b[i], r.b[j]);
  return r;
}

Scalar inv(const Scalar& v) { return Scalar(1) / v; }

}  // namespace

WeylState apply_gen(const std::string& name, const WeylState& st) {
  const Scalar &b1 = st.b[0], &b2 = st.b[1], &b3 = st.b[2], &b4 = st.b[3],
               &b5 = st.b[4], &b6 = st.b[5], &b7 = st.b[6], &b8 = st.b[7];
  const Scalar &f = st.f, &g = st.g;
  if (name == "s0") return swap_b(st, 2, 3);
  if (name == "s1") return swap_b(st, 0, 1);
  if (name == "s2") {
    Scalar den = Scalar(1) - b2 * f - f * g + b2 * b8 * f * g;
    if (den.is_zero()) throw singular_error("s2 denominator vanishes");
    WeylState r = st;
    r.b = {b1, inv(b8), b2 * b3 * b8, b2 * b4 * b8, b5, b6, b7, inv(b2)};
    r.g = b2 * (b8 - f) * g / den;
    return r;
  }
  if (name == "s3") return swap_b(st, 4, 7);
  if (name == "s4") return swap_b(st, 4, 5);
  if (name == "s5") return swap_b(st, 5, 6);
  if (name == "s6") {
    Scalar den = -b3 * b8 + b8 * g - f * g + b3 * b8 * f * g;
    if (den.is_zero()) throw singular_error("s6 denominator vanishes");
    WeylState r = st;
    r.b = {b1 * b3 * b8, b2 * b3 * b8, inv(b8), b4, b5, b6, b7, inv(b3)};
    r.f = f * (b8 * g - Scalar(1)) / den;
    return r;
  }
  if (name == "p1") {
    WeylState r;
    r.b = {inv(b4), inv(b3), inv(b2), inv(b1),
           inv(b5), inv(b6), inv(b7), inv(b8)};
    r.f = g;
    r.g = f;
    return r;
  }
  if (name == "p2") {
    Scalar den = f + b5 * b8 * g - b5 * f * g - b8 * f * g;
    if (den.is_zero()) throw singular_error("p2 denominator vanishes");
    WeylState r;
    r.b = {inv(b7),           inv(b6), inv(b3 * b5 * b8), inv(b4 * b5 * b8),
           b8,                inv(b2), inv(b1),           b5};
    r.f = f;
    r.g = (Scalar(1) - f * g) / den;
    return r;
  }
  throw inadmissible_error("unknown generator " + name);
}

WeylState apply_word(const Word& word, const WeylState& st) {
  WeylState cur = st;
  for (const auto& name : word) cur = apply_gen(name, cur);
  return cur;
}

Word invert_word(Word word) {
  std::reverse(word.begin(), word.end());
  return word;
}

std::array<std::array<int, 7>, 7> cartan() {
  std::array<std::array<int, 7>, 7> a{};
  for (int i = 0; i < 7; ++i) a[i][i] = 2;
  const int edges[6][2] = {{0, 6}, {1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}};
  for (const auto& e : edges) {
    a[e[0]][e[1]] = -1;
    a[e[1]][e[0]] = -1;
  }
  return a;
}

const Word R_WORD = {"p2", "s0", "s5", "s4", "s5", "s3", "s4", "s5", "s2",
                     "s3", "s4", "s5", "s1", "s2", "s3", "s4", "s5"};

namespace {
Word build_rp() {
  Word w{"p1"};
  w.insert(w.end(), R_WORD.begin(), R_WORD.end());
  w.push_back("p1");
  return w;
}
Word build_t() {
  Word w = build_rp();
  w.insert(w.end(), R_WORD.begin(), R_WORD.end());
  return w;
}
}  // namespace

const Word RP_WORD = build_rp();
const Word T_WORD = build_t();
const Word TI_WORD = invert_word(build_t());

WeylState translation_T(const WeylState& st) { return apply_word(T_WORD, st); }

WeylState random_state(Rng& rng) {
  auto pick = [&]() {
    for (;;) {
      Scalar v = rng.rational(9);
      if (!v.is_zero() && v != Scalar(1) && v != Scalar(-1)) return v;
    }
  };
  WeylState st;
  for (auto& v : st.b) v = pick();
  st.f = pick();
  st.g = pick();
  return st;
}

namespace {

Scalar p1(const Scalar& z) { return Scalar(1) - z; }

// Runs `body` at `samples` random states, resampling on singular points.
template <typename F>
void at_states(Rng& rng, int samples, F body) {
  int done = 0, attempts = 0;
  while (done < samples) {
    if (++attempts > 100 * samples + 200)
      throw sampling_error("random Weyl states kept hitting indeterminacy");
    WeylState st = random_state(rng);
    try {
      body(st, done);
    } catch (const singular_error&) {
      continue;
    }
    ++done;
  }
}

std::map<std::string, std::string> state_params(const WeylState& st) {
  std::map<std::string, std::string> m;
  for (int k = 0; k < 8; ++k) m["b" + std::to_string(k + 1)] = st.b[k].str();
  m["f"] = st.f.str();
  m["g"] = st.g.str();
  return m;
}

}  // namespace

std::vector<CheckReport> weyl_relation_reports(Rng& rng, int samples) {
  std::vector<CheckReport> out;
  const std::array<std::string, 7> s = {"s0", "s1", "s2", "s3",
                                        "s4", "s5", "s6"};
  auto record = [&](const std::string& name, const WeylState& st, int sample,
                    bool ok, const Scalar& gauge) {
    CheckReport r = make_check(name, ok, ok ? "identity" : "differs", "identity");
    r.sample = sample;
    r.params = state_params(st);
    r.witness["gauge_lambda"] = gauge.str();
    out.push_back(std::move(r));
  };

  for (const auto& g : {std::string("s0"), std::string("s1"), std::string("s2"),
                        std::string("s3"), std::string("s4"), std::string("s5"),
                        std::string("s6"), std::string("p1"), std::string("p2")}) {
    at_states(rng, samples, [&](const WeylState& st, int k) {
      bool ok = apply_gen(g, apply_gen(g, st)) == st;
      record("weyl.involution." + g, st, k, ok, Scalar(1));
    });
  }

  auto A = cartan();
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      int power = A[i][j] == -1 ? 3 : 2;
      Word w;
      for (int k = 0; k < power; ++k) {
        w.push_back(s[i]);
        w.push_back(s[j]);
      }
      at_states(rng, samples, [&](const WeylState& st, int k) {
        bool ok = apply_word(w, st) == st;
        CheckReport r = make_check("weyl.braid." + s[i] + s[j], ok,
                                   ok ? "identity" : "differs", "identity");
        r.sample = k;
        r.params = state_params(st);
        r.witness["exponent"] = std::to_string(power);
        out.push_back(std::move(r));
      });
    }
  }

  const std::pair<int, int> conj1[] = {{1, 0}, {2, 6}, {3, 3}, {4, 4}, {5, 5}};
  for (const auto& [i, j] : conj1) {
    at_states(rng, samples, [&](const WeylState& st, int k) {
      bool ok = apply_word({"p1", s[i], "p1"}, st) == apply_gen(s[j], st);
      record("weyl.conjugation.p1." + s[i] + "_" + s[j], st, k, ok, Scalar(1));
    });
  }
  const std::pair<int, int> conj2[] = {{0, 0}, {1, 5}, {2, 4}, {3, 3}, {6, 6}};
  for (const auto& [i, j] : conj2) {
    at_states(rng, samples, [&](const WeylState& st, int k) {
      WeylState lhs = apply_word({"p2", s[i], "p2"}, st);
      WeylState rhs = apply_gen(s[j], st);
      Scalar gauge(1);
      bool ok = lhs == rhs;
      if (!ok && i == 6) {
        // the printed actions realize this relation only inside the scaling
        // equivalence class declared for the whole family
        gauge = st.b[2] * st.b[7];
        ok = lhs == scale_state(rhs, gauge);
      }
      record("weyl.conjugation.p2." + s[i] + "_" + s[j], st, k, ok, gauge);
    });
  }

  at_states(rng, samples, [&](const WeylState& st, int k) {
    WeylState lhs = apply_word({"p1", "p2", "p1", "p2", "p1", "p2"}, st);
    Scalar gauge(1);
    bool ok = lhs == st;
    if (!ok) {
      gauge = Scalar(1) / (st.b[4] * st.b[7]);
      ok = lhs == scale_state(st, gauge);
    }
    record("weyl.pi_product.cubed", st, k, ok, gauge);
  });
  at_states(rng, samples, [&](const WeylState& st, int k) {
    Word w;
    for (int t = 0; t < 6; ++t) {
      w.push_back("p1");
      w.push_back("p2");
    }
    bool ok = apply_word(w, st) == st;
    record("weyl.pi_product.order_six", st, k, ok, Scalar(1));
  });

  // scaling commutation for every generator; the swap of f and g flips the
  // scale parameter
  for (const auto& g : {std::string("s0"), std::string("s1"), std::string("s2"),
                        std::string("s3"), std::string("s4"), std::string("s5"),
                        std::string("s6"), std::string("p1"), std::string("p2")}) {
    at_states(rng, samples, [&](const WeylState& st, int k) {
      Scalar lam = rng.rational(9);
      if (lam.is_zero()) lam = Scalar(2);
      Scalar lam_out = g == "p1" ? Scalar(1) / lam : lam;
      WeylState lhs = apply_gen(g, scale_state(st, lam));
      WeylState rhs = scale_state(apply_gen(g, st), lam_out);
      bool ok = lhs == rhs;
      CheckReport r = make_check("weyl.scaling.commute." + g, ok,
                                 ok ? "identity" : "differs", "identity");
      r.sample = k;
      r.params = state_params(st);
      r.witness["lambda"] = lam.str();
      r.witness["lambda_image"] = lam_out.str();
      out.push_back(std::move(r));
    });
  }

  sort_reports(out);
  return out;
}

std::vector<CheckReport> weyl_translation_reports(Rng& rng, int samples) {
  std::vector<CheckReport> out;
  at_states(rng, samples, [&](const WeylState& st, int k) {
    // everything that can hit an indeterminate point is computed before any
    // record is emitted, so a resample never leaves partial output
    Scalar q = state_q(st);
    WeylState img = translation_T(st);
    bool rt = apply_word(TI_WORD, img) == st;
    const Scalar &b1 = st.b[0], &b2 = st.b[1], &b3 = st.b[2], &b4 = st.b[3],
                 &b5 = st.b[4], &b6 = st.b[5], &b7 = st.b[6], &b8 = st.b[7];
    const Scalar &f = st.f, &g = st.g;
    Scalar g_under = apply_word(invert_word(R_WORD), st).g;
    Scalar f_over = apply_word(RP_WORD, st).f;
    Scalar lam = rng.rational(9);
    if (lam.is_zero()) lam = Scalar(3);
    WeylState sc = scale_state(st, lam);
    Scalar gu_sc = apply_word(invert_word(R_WORD), sc).g;

    std::array<Scalar, 8> want = {st.b[0] / q, st.b[1] / q, q * st.b[2],
                                  q * st.b[3], st.b[4],     st.b[5],
                                  st.b[6],     st.b[7]};
    bool ok = img.b == want;
    CheckReport r = make_check("weyl.translation.parameter_shift", ok,
                               ok ? "match" : "mismatch", "match");
    r.sample = k;
    r.params = state_params(st);
    r.witness["q"] = q.str();
    out.push_back(std::move(r));

    CheckReport r2 = make_check("weyl.translation.q_preserved",
                                state_q(img) == q, state_q(img), q);
    r2.sample = k;
    r2.params = state_params(st);
    out.push_back(std::move(r2));

    CheckReport r3 = make_check("weyl.translation.roundtrip", rt,
                                rt ? "identity" : "differs", "identity");
    r3.sample = k;
    r3.params = state_params(st);
    out.push_back(std::move(r3));

    Scalar lhs1 = p1(Scalar(1) / (f * g_under)) * p1(Scalar(1) / (f * g));
    Scalar rhs1 = p1(b5 / f) * p1(b6 / f) * p1(b7 / f) * p1(b8 / f) /
                  (p1(Scalar(1) / (b1 * f)) * p1(Scalar(1) / (b2 * f)));
    CheckReport r4 = make_check("weyl.identity.g_side", lhs1 == rhs1, lhs1, rhs1);
    r4.sample = k;
    r4.params = state_params(st);
    r4.witness["g_under"] = g_under.str();
    out.push_back(std::move(r4));

    Scalar lhs2 = p1(f_over * g) * p1(f * g) / (f * f_over);
    Scalar rhs2 = b1 * b2 * p1(b5 * g) * p1(b6 * g) * p1(b7 * g) * p1(b8 * g) /
                  (q * p1(g / b3) * p1(g / b4));
    CheckReport r5 = make_check("weyl.identity.f_side", lhs2 == rhs2, lhs2, rhs2);
    r5.sample = k;
    r5.params = state_params(st);
    r5.witness["f_over"] = f_over.str();
    out.push_back(std::move(r5));

    // both identities are scaling-invariant statements
    Scalar l1 = p1(Scalar(1) / (sc.f * gu_sc)) * p1(Scalar(1) / (sc.f * sc.g));
    Scalar rh1 = p1(sc.b[4] / sc.f) * p1(sc.b[5] / sc.f) * p1(sc.b[6] / sc.f) *
                 p1(sc.b[7] / sc.f) /
                 (p1(Scalar(1) / (sc.b[0] * sc.f)) *
                  p1(Scalar(1) / (sc.b[1] * sc.f)));
    bool inv_ok = (lhs1 - rhs1) == (l1 - rh1);
    CheckReport r6 = make_check("weyl.identity.scaling_invariance", inv_ok,
                                (l1 - rh1).str(), (lhs1 - rhs1).str());
    r6.sample = k;
    r6.params = state_params(st);
    r6.witness["lambda"] = lam.str();
    out.push_back(std::move(r6));
  });
  sort_reports(out);
  return out;
}

std::vector<CheckReport> weyl_direction_reports(Rng& rng, int samples) {
  std::vector<CheckReport> out;
  Word w2{"s2"};
  w2.insert(w2.end(), TI_WORD.begin(), TI_WORD.end());
  Word w3{"s1", "s2"};
  Word w4{"s2", "s1", "s3", "s2"};
  w4.insert(w4.end(), TI_WORD.begin(), TI_WORD.end());
  at_states(rng, samples, [&](const WeylState& st, int k) {
    const Scalar &b1 = st.b[0], &b2 = st.b[1], &b5 = st.b[4], &b6 = st.b[5],
                 &b7 = st.b[6], &b8 = st.b[7];
    const Scalar &f = st.f, &g = st.g;
    Scalar g2 = apply_word(w2, st).g;
    Scalar g3 = apply_word(w3, st).g;
    Scalar g4 = apply_word(w4, st).g;
    auto add = [&](const std::string& name, const Scalar& lhs,
                   const Scalar& rhs, const Scalar& gval) {
      CheckReport r = make_check(name, lhs == rhs, lhs, rhs);
      r.sample = k;
      r.params = state_params(st);
      r.witness["g_word"] = gval.str();
      out.push_back(std::move(r));
    };
    add("weyl.direction.contiguity_g2",
        p1(Scalar(1) / (f * g)) * p1(Scalar(1) / (f * g2)),
        p1(b5 / f) * p1(b6 / f) * p1(b7 / f) / p1(Scalar(1) / (b1 * f)), g2);
    add("weyl.direction.contiguity_g3", p1(Scalar(1) / (f * g3)),
        p1(Scalar(1) / (b1 * f)) / p1(b8 / f) * p1(Scalar(1) / (f * g)), g3);
    add("weyl.direction.contiguity_g4",
        p1(Scalar(1) / (f * g4)) * p1(Scalar(1) / (f * g)),
        p1(b6 / f) * p1(b7 / f), g4);
    (void)b2;
  });
  sort_reports(out);
  return out;
}

}  // namespace qpade
