#include "qpade/scalar.hpp"

namespace qpade {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw singular_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::parse(const std::string& s) {
  if (s.empty()) throw inadmissible_error("empty rational literal");
  auto slash = s.find('/');
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw inadmissible_error("bad rational literal: " + s);
  if (slash != std::string::npos && sgn(v.get_den()) == 0)
    throw singular_error("rational literal with zero denominator: " + s);
  v.canonicalize();
  return Scalar(v);
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw singular_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar spow(const Scalar& x, long e) {
  if (e == 0) return Scalar(1);
  if (x.is_zero()) {
    if (e < 0) throw singular_error("zero to a negative power");
    return Scalar(0);
  }
  Scalar base = e > 0 ? x : Scalar(1) / x;
  long k = e > 0 ? e : -e;
  Scalar r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

}  // namespace qpade
