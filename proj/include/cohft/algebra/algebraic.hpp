#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cohft/algebra/rational.hpp"

namespace cohft::algebra {

/// Dense univariate polynomial over a field K, coefficients low to high.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<K>& coefficients() const { return c_; }
  [[nodiscard]] K operator[](std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  [[nodiscard]] const K& lead() const { return c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  [[nodiscard]] UPoly scaled(const K& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  /// Quotient and remainder by a nonzero divisor.
  static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.is_zero()) throw AlgebraError("division by zero");
    std::vector<K> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, K(0));
    K inv = K(1) / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
      K f = a.lead() * inv;
      q[shift] = f;
      for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i + shift] -= f * b.c_[i];
      a.c_.pop_back();
      a.trim();
    }
    return {UPoly(std::move(q)), a};
  }

  template <class V>
  [[nodiscard]] V evaluate(const V& x) const {
    V r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + V(c_[i]);
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
};

/// Power sums p_0..p_{count-1} of the roots of a monic polynomial given by
/// its coefficients (low to high, leading 1), via Newton's identities.
template <class K>
std::vector<K> newton_power_sums(const std::vector<K>& monic, std::size_t count) {
  std::size_t d = monic.size() - 1;
  // elementary symmetric e_i = (-1)^i a_{d-i}
  std::vector<K> e(d + 1, K(0));
  for (std::size_t i = 0; i <= d; ++i) e[i] = (i % 2 == 0) ? monic[d - i] : -monic[d - i];
  std::vector<K> p(count, K(0));
  if (count > 0) p[0] = K(static_cast<long>(d));
  for (std::size_t k = 1; k < count; ++k) {
    K acc(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) {
      K term = e[i] * p[k - i];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    if (k <= d) {
      K term = e[k] * K(static_cast<long>(k));
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    p[k] = acc;
  }
  return p;
}

/// Element of K[s]/(mu(s)) for a monic mu, stored as its coordinate
/// vector in 1, s, ..., s^(deg-1).
template <class K>
class AlgebraicElement {
 public:
  struct Extension {
    std::string generator;
    UPoly<K> minimal;
    std::vector<K> power_sums;  // of the conjugates, up to 2 deg
  };

  AlgebraicElement() = default;
  AlgebraicElement(long c) : coords_{K(c)} {}  // NOLINT(google-explicit-constructor)
  AlgebraicElement(const K& c) : coords_{c} {}  // NOLINT(google-explicit-constructor)
  AlgebraicElement(std::shared_ptr<const Extension> ext, UPoly<K> rep) : ext_(std::move(ext)) {
    set_rep(std::move(rep));
  }

  static std::shared_ptr<const Extension> make_extension(std::string name, const std::vector<K>& monic) {
    if (monic.empty() || !(monic.back() == K(1))) throw AlgebraError("minimal polynomial must be monic");
    auto ext = std::make_shared<Extension>();
    ext->generator = std::move(name);
    ext->minimal = UPoly<K>(monic);
    ext->power_sums = newton_power_sums(monic, 2 * monic.size());
    return ext;
  }
  static AlgebraicElement generator(std::shared_ptr<const Extension> ext) {
    return AlgebraicElement(std::move(ext), UPoly<K>(std::vector<K>{K(0), K(1)}));
  }

  [[nodiscard]] const std::shared_ptr<const Extension>& extension() const { return ext_; }
  [[nodiscard]] std::vector<K> coordinates() const {
    std::vector<K> r = coords_;
    if (ext_) r.resize(static_cast<std::size_t>(ext_->minimal.degree()), K(0));
    return r;
  }
  [[nodiscard]] bool is_zero() const { return coords_.empty() || (coords_.size() == 1 && coords_[0] == K(0)); }

  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
    auto ext = common(a, b);
    return AlgebraicElement(ext, a.rep() + b.rep());
  }
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
    auto ext = common(a, b);
    return AlgebraicElement(ext, a.rep() - b.rep());
  }
  AlgebraicElement operator-() const { return AlgebraicElement(ext_, -rep()); }
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
    auto ext = common(a, b);
    return AlgebraicElement(ext, a.rep() * b.rep());
  }
  AlgebraicElement& operator+=(const AlgebraicElement& o) { return *this = *this + o; }
  AlgebraicElement& operator-=(const AlgebraicElement& o) { return *this = *this - o; }
  AlgebraicElement& operator*=(const AlgebraicElement& o) { return *this = *this * o; }
  friend AlgebraicElement operator/(const AlgebraicElement& a, const AlgebraicElement& b) { return a * b.inverse(); }

  /// Inverse by the extended Euclidean algorithm against the modulus.
  [[nodiscard]] AlgebraicElement inverse() const {
    if (is_zero()) throw AlgebraError("division by zero");
    if (!ext_) return AlgebraicElement(K(1) / coords_[0]);
    UPoly<K> r0 = ext_->minimal, r1 = rep();
    UPoly<K> s0, s1 = UPoly<K>::constant(K(1));
    while (r1.degree() > 0) {
      auto [q, r] = UPoly<K>::divmod(r0, r1);
      UPoly<K> s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.is_zero()) throw AlgebraError("element is a zero divisor");
    return AlgebraicElement(ext_, s1.scaled(K(1) / r1[0]));
  }

  /// Sum over the conjugates (trace of multiplication).
  [[nodiscard]] K trace() const {
    if (!ext_) return coords_.empty() ? K(0) : coords_[0];
    K acc(0);
    for (std::size_t i = 0; i < coords_.size(); ++i) acc += coords_[i] * ext_->power_sums[i];
    return acc;
  }

  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
    return (a - b).is_zero();
  }

 private:
  std::shared_ptr<const Extension> ext_;
  std::vector<K> coords_;

  [[nodiscard]] UPoly<K> rep() const { return UPoly<K>(coords_); }
  void set_rep(UPoly<K> p) {
    if (ext_ && p.degree() >= ext_->minimal.degree()) p = UPoly<K>::divmod(std::move(p), ext_->minimal).second;
    coords_ = p.coefficients();
  }
  static std::shared_ptr<const Extension> common(const AlgebraicElement& a, const AlgebraicElement& b) {
    if (a.ext_ && b.ext_ && a.ext_ != b.ext_) throw AlgebraError("elements of different extensions");
    return a.ext_ ? a.ext_ : b.ext_;
  }
};

}  // namespace cohft::algebra
