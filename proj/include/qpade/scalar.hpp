#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpade {

// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps values
// canonical and turns division by zero into an exception instead of a SIGFPE.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p", "-p", "p/q".
  static Scalar parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  // Canonical "p" or "p/q" form.
  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }

 private:
  mpq_class v_;
};

// x^e for any integer e; throws on 0^negative.
Scalar spow(const Scalar& x, long e);

// Raised when an exact linear system has no unique solution.
struct singular_error : std::runtime_error {
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structurally forced polynomial factor fails to divide exactly.
struct divisibility_error : std::runtime_error {
  explicit divisibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when parameters violate the admissibility preconditions.
struct inadmissible_error : std::runtime_error {
  explicit inadmissible_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when every solution of an interpolation problem has Q(0) = 0.
struct normalization_error : std::runtime_error {
  explicit normalization_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the admissible-parameter sampler exhausts its retry budget.
struct sampling_error : std::runtime_error {
  explicit sampling_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpade
