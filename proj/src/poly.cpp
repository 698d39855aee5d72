#include "qpade/poly.hpp"

#include <sstream>

namespace qpade {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Scalar& c) {
  if (c.is_zero()) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Poly poly_neg(const Poly& a) { return poly_scale(a, Scalar(-1)); }

Scalar poly_eval(const Poly& a, const Scalar& x) {
  Scalar r(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

Poly poly_scale_arg(const Poly& a, const Scalar& s) {
  Poly r = a;
  Scalar pw(1);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] *= pw;
    pw *= s;
  }
  return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
  if (den.empty()) throw singular_error("polynomial division by zero");
  Poly rem = num;
  if (num.size() < den.size()) return {Poly{}, poly_trim(std::move(rem))};
  Poly quot(num.size() - den.size() + 1, Scalar(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Scalar c = rem[k + den.size() - 1] / den.back();
    quot[k] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_divide_exact(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.empty())
    throw divisibility_error("forced polynomial factor does not divide exactly");
  return q;
}

Poly poly_lin(const Scalar& r) { return poly_trim(Poly{Scalar(1), -r}); }

Poly poly_monomial(int k) {
  Poly p(k + 1, Scalar(0));
  p[k] = Scalar(1);
  return p;
}

Poly poly_lin_product(const std::vector<Scalar>& rs) {
  Poly p{Scalar(1)};
  for (const auto& r : rs) p = poly_mul(p, poly_lin(r));
  return p;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i].str();
  }
  os << "]";
  return os.str();
}

}  // namespace qpade
