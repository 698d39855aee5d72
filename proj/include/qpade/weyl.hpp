#pragma once

#include <array>
#include <string>
#include <vector>

#include "qpade/params.hpp"
#include "qpade/report.hpp"
#include "qpade/scalar.hpp"

namespace qpade {

// Parameter tuple b1..b8 with the two dynamical variables. The derived
// constant q = b1 b2 ... b8 shifts consistently under every generator.
struct WeylState {
  std::array<Scalar, 8> b;
  Scalar f, g;
};

bool operator==(const WeylState& a, const WeylState& b);

Scalar state_q(const WeylState& st);

// (b1..b4)/lam, lam*(b5..b8), lam*f, g/lam
WeylState scale_state(const WeylState& st, const Scalar& lam);

// Generators: "s0".."s6", "p1", "p2". Throws singular_error when a rational
// action's denominator vanishes at the state.
WeylState apply_gen(const std::string& name, const WeylState& st);

using Word = std::vector<std::string>;

// Left-to-right application: the first listed generator acts first.
WeylState apply_word(const Word& word, const WeylState& st);

// Every generator is an involution, so the inverse word is the reversal.
Word invert_word(Word word);

std::array<std::array<int, 7>, 7> cartan();

// r as displayed, r' = p1 r p1, the translation word (r' first, then r), and
// its inverse.
extern const Word R_WORD;
extern const Word RP_WORD;
extern const Word T_WORD;
extern const Word TI_WORD;

WeylState translation_T(const WeylState& st);

WeylState random_state(Rng& rng);

std::vector<CheckReport> weyl_relation_reports(Rng& rng, int samples);
std::vector<CheckReport> weyl_translation_reports(Rng& rng, int samples);
std::vector<CheckReport> weyl_direction_reports(Rng& rng, int samples);

}  // namespace qpade
