#include "cohft/algebra/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cohft::algebra {

namespace {
long add_sat(long a, long b) {
  if (a == LaurentSeries::kExactPrecision || b == LaurentSeries::kExactPrecision) return LaurentSeries::kExactPrecision;
  return a + b;
}
}  // namespace

LaurentSeries LaurentSeries::monomial(const BigRational& c, long exponent, long precision) {
  LaurentSeries r;
  r.precision_ = precision;
  if (c != 0 && exponent < precision) r.terms_[exponent] = c;
  return r;
}

BigRational LaurentSeries::coefficient(long e) const {
  if (e >= precision_) throw AlgebraError("coefficient beyond precision");
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

LaurentSeries LaurentSeries::with_precision(long precision) const {
  LaurentSeries r = *this;
  r.precision_ = std::min(precision_, precision);
  r.prune();
  return r;
}

void LaurentSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first >= precision_) it = terms_.erase(it);
    else ++it;
  }
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  precision_ = std::min(precision_, o.precision_);
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  // absolute precision of a product: min(v_a + p_b, v_b + p_a)
  long va = a.terms_.empty() ? a.precision_ : a.terms_.begin()->first;
  long vb = b.terms_.empty() ? b.precision_ : b.terms_.begin()->first;
  r.precision_ = std::min(add_sat(va, b.precision_), add_sat(vb, a.precision_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea + eb >= r.precision_) break;
      r.terms_[ea + eb] += ca * cb;
    }
  r.prune();
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries d = a - b;
  return d.terms_.empty();
}

LaurentSeries LaurentSeries::inverse(long relative_order) const {
  if (terms_.empty()) throw AlgebraError("division by zero");
  long v = terms_.begin()->first;
  BigRational lead = terms_.begin()->second;
  if (terms_.size() == 1 && precision_ == kExactPrecision) return monomial(1 / lead, -v);
  long rel = precision_ == kExactPrecision ? relative_order : precision_ - v;
  if (rel < 0) throw AlgebraError("inverse of an exact series needs a relative order");
  // u = t^{-v} * this = lead (1 + ...); invert u term by term
  std::vector<BigRational> u(static_cast<std::size_t>(rel), 0);
  for (const auto& [e, c] : terms_)
    if (e - v < rel) u[static_cast<std::size_t>(e - v)] = c;
  std::vector<BigRational> w(static_cast<std::size_t>(rel), 0);
  BigRational inv0 = 1 / lead;
  for (long n = 0; n < rel; ++n) {
    BigRational acc = n == 0 ? BigRational(1) : BigRational(0);
    for (long k = 1; k <= n; ++k) acc -= u[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - k)];
    w[static_cast<std::size_t>(n)] = acc * inv0;
  }
  LaurentSeries r;
  r.precision_ = rel - v;
  for (long n = 0; n < rel; ++n)
    if (w[static_cast<std::size_t>(n)] != 0) r.terms_[n - v] = w[static_cast<std::size_t>(n)];
  return r;
}

LaurentSeries LaurentSeries::euler_derivative() const {
  LaurentSeries r = *this;
  for (auto& [e, c] : r.terms_) c *= e;
  r.prune();
  return r;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (e != 0) out << "*" << var << "^" << e;
  }
  if (first) out << "0";
  if (precision_ != kExactPrecision) out << " + O(" << var << "^" << precision_ << ")";
  return out.str();
}

}  // namespace cohft::algebra
