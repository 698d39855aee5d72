#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qpade/scalar.hpp"

namespace qpade {

// Parameter point (q; a1..a4; degrees m, n) of both rational-approximation
// problems. N = m + n is the total degree / node count minus one.
struct ParamSet {
  Scalar q;
  std::array<Scalar, 4> a;
  int m = 0;
  int n = 0;

  int N() const { return m + n; }
  std::string str() const;

  ParamSet with(int new_m, int new_n) const {
    ParamSet p = *this;
    p.m = new_m;
    p.n = new_n;
    return p;
  }
};

// Throws inadmissible_error unless q is not 0 or a root of unity up to the
// bound (over the rationals q != 0, +-1 already suffices; the power check is
// kept in bound form), all a_i are nonzero, and m, n are non-negative.
void check_admissible(const ParamSet& p, int bound = -1);

bool is_admissible(const ParamSet& p, int bound = -1);

// Deterministic splitmix64 generator; the only randomness source in the
// artifact, so seeded runs are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // uniform in [lo, hi] inclusive
  long uniform(long lo, long hi);
  // random p/r with 1 <= p, r <= bound, random sign
  Scalar rational(long bound = 20);
  // random positive p/r
  Scalar rational_positive(long bound = 20);

 private:
  std::uint64_t state_;
};

// Draws admissible parameters with the given degrees; rejects zero a_i and
// degenerate q. Downstream singular/degenerate failures are handled by the
// caller's retry loop.
ParamSet sample_params(Rng& rng, int m, int n);

// Retry wrapper: run body on sampled parameters, resampling on singular/
// divisibility/normalization failures, up to `retries` attempts.
template <typename Body>
auto with_admissible_sample(Rng& rng, int m, int n, int retries, Body body) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    ParamSet p = sample_params(rng, m, n);
    try {
      return body(p);
    } catch (const singular_error&) {
    } catch (const divisibility_error&) {
    } catch (const normalization_error&) {
    } catch (const inadmissible_error&) {
    }
  }
  throw sampling_error("no admissible sample found within retry budget");
}

}  // namespace qpade
