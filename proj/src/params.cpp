#include "qpade/params.hpp"

#include <sstream>

namespace qpade {

std::string ParamSet::str() const {
  std::ostringstream os;
  os << "q=" << q.str() << " a=(" << a[0].str() << "," << a[1].str() << ","
     << a[2].str() << "," << a[3].str() << ") m=" << m << " n=" << n;
  return os.str();
}

void check_admissible(const ParamSet& p, int bound) {
  if (p.m < 0 || p.n < 0) throw inadmissible_error("negative degree");
  if (bound < 0) bound = p.N() + 3;
  if (p.q.is_zero()) throw inadmissible_error("q = 0");
  Scalar pw(1);
  for (int k = 1; k <= bound; ++k) {
    pw *= p.q;
    if (pw == Scalar(1)) throw inadmissible_error("q is a root of unity");
  }
  for (const auto& ai : p.a)
    if (ai.is_zero()) throw inadmissible_error("a_i = 0");
}

bool is_admissible(const ParamSet& p, int bound) {
  try {
    check_admissible(p, bound);
    return true;
  } catch (const inadmissible_error&) {
    return false;
  }
}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar Rng::rational(long bound) {
  Scalar v = rational_positive(bound);
  return uniform(0, 1) ? v : -v;
}

Scalar Rng::rational_positive(long bound) {
  return Scalar(uniform(1, bound), uniform(1, bound));
}

ParamSet sample_params(Rng& rng, int m, int n) {
  for (;;) {
    ParamSet p;
    p.m = m;
    p.n = n;
    p.q = Scalar(rng.uniform(2, 9), rng.uniform(2, 9));
    p.a = {rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    if (is_admissible(p)) return p;
  }
}

}  // namespace qpade
