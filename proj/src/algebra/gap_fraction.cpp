#include "cohft/algebra/gap_fraction.hpp"

namespace cohft::algebra {

namespace {

Polynomial product_power(const GapBasis& b, const std::vector<int>& e) {
  Polynomial r(1);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > 0) r *= b.factors[k].pow(static_cast<unsigned>(e[k]));
  return r;
}

}  // namespace

GapFraction::GapFraction(std::shared_ptr<const GapBasis> basis, Polynomial num)
    : basis_(std::move(basis)), num_(std::move(num)) {}

GapFraction::GapFraction(std::shared_ptr<const GapBasis> basis, const RationalFunction& f)
    : basis_(std::move(basis)), num_(f.numerator()) {
  Polynomial den = f.denominator();
  exps_.assign(basis_->factors.size(), 0);
  for (std::size_t k = 0; k < exps_.size(); ++k)
    while (!den.is_constant()) {
      auto q = den.divide_exact(basis_->factors[k]);
      if (!q) break;
      den = std::move(*q);
      ++exps_[k];
    }
  if (!den.is_constant()) throw AlgebraError("denominator outside the gap basis");
  num_ *= BigRational(1) / den.constant_value();
}

GapFraction GapFraction::make(std::shared_ptr<const GapBasis> basis, Polynomial num, std::vector<int> exps) {
  GapFraction r(std::move(basis), std::move(num));
  exps.resize(r.basis_->factors.size(), 0);
  for (int e : exps)
    if (e < 0) throw AlgebraError("negative gap exponent");
  r.exps_ = std::move(exps);
  r.reduce();
  return r;
}

void GapFraction::adopt(const std::shared_ptr<const GapBasis>& b) {
  if (!b) return;
  if (!basis_) {
    basis_ = b;
    return;
  }
  if (basis_ != b) throw AlgebraError("mixing different gap bases");
}

void GapFraction::reduce() {
  if (num_.is_zero()) {
    exps_.clear();
    return;
  }
  for (std::size_t k = 0; k < exps_.size(); ++k)
    while (exps_[k] > 0) {
      auto q = num_.divide_exact(basis_->factors[k]);
      if (!q) break;
      num_ = std::move(*q);
      --exps_[k];
    }
  bool trivial = true;
  for (int e : exps_) trivial = trivial && e == 0;
  if (trivial) exps_.clear();
}

Polynomial GapFraction::denominator() const { return basis_ ? product_power(*basis_, exps_) : Polynomial(1); }

RationalFunction GapFraction::to_rational_function() const {
  return RationalFunction::from_coprime(num_, denominator());
}

GapFraction& GapFraction::operator+=(const GapFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  adopt(o.basis_);
  if (exps_ == o.exps_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  std::size_t n = basis_ ? basis_->factors.size() : 0;
  std::vector<int> a = exps_, b = o.exps_;
  a.resize(n, 0);
  b.resize(n, 0);
  std::vector<int> e(n), da(n), db(n);
  for (std::size_t k = 0; k < n; ++k) {
    e[k] = std::max(a[k], b[k]);
    da[k] = e[k] - a[k];
    db[k] = e[k] - b[k];
  }
  num_ = num_ * product_power(*basis_, da) + o.num_ * product_power(*basis_, db);
  exps_ = std::move(e);
  reduce();
  return *this;
}

GapFraction& GapFraction::operator*=(const GapFraction& o) {
  if (is_zero() || o.is_zero()) return *this = GapFraction();
  adopt(o.basis_);
  num_ *= o.num_;
  if (!o.exps_.empty()) {
    exps_.resize(basis_->factors.size(), 0);
    for (std::size_t k = 0; k < o.exps_.size(); ++k) exps_[k] += o.exps_[k];
  }
  // only the new numerator part can cancel
  reduce();
  return *this;
}

GapFraction GapFraction::operator-() const {
  GapFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const GapFraction& a, const GapFraction& b) {
  if (a.num_ != b.num_) return false;
  std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t k = 0; k < n; ++k) {
    int x = k < a.exps_.size() ? a.exps_[k] : 0, y = k < b.exps_.size() ? b.exps_[k] : 0;
    if (x != y) return false;
  }
  return true;
}

GapFraction GapFraction::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  if (!basis_) {
    if (!num_.is_constant()) throw AlgebraError("numerator outside the gap basis");
    return GapFraction(BigRational(1) / num_.constant_value());
  }
  GapFraction r;
  r.basis_ = basis_;
  std::size_t n = basis_ ? basis_->factors.size() : 0;
  std::vector<int> up(n, 0);
  Polynomial rest = num_;
  for (std::size_t k = 0; k < n; ++k)
    while (!rest.is_constant()) {
      auto q = rest.divide_exact(basis_->factors[k]);
      if (!q) break;
      rest = std::move(*q);
      ++up[k];
    }
  if (!rest.is_constant()) throw AlgebraError("numerator outside the gap basis");
  std::vector<int> e = exps_;
  e.resize(n, 0);
  r.num_ = product_power(*basis_, e) * (BigRational(1) / rest.constant_value());
  r.exps_ = up;
  r.reduce();
  return r;
}

GapFraction GapFraction::derivative(std::size_t var) const {
  if (exps_.empty()) {
    GapFraction r;
    r.basis_ = basis_;
    r.num_ = num_.derivative(var);
    return r;
  }
  const auto& f = basis_->factors;
  std::size_t n = f.size();
  Polynomial base(1);
  for (std::size_t k = 0; k < n; ++k)
    if (exps_[k] > 0) base *= f[k];
  Polynomial acc = num_.derivative(var) * base;
  for (std::size_t k = 0; k < n; ++k) {
    if (exps_[k] <= 0) continue;
    Polynomial dk = f[k].derivative(var);
    if (dk.is_zero()) continue;
    Polynomial others(1);
    for (std::size_t h = 0; h < n; ++h)
      if (h != k && exps_[h] > 0) others *= f[h];
    acc -= num_ * dk * others * BigRational(exps_[k]);
  }
  GapFraction r;
  r.basis_ = basis_;
  r.num_ = std::move(acc);
  r.exps_ = exps_;
  for (auto& e : r.exps_)
    if (e > 0) ++e;
  r.reduce();
  return r;
}

std::shared_ptr<const GapBasis> root_gap_basis(const std::vector<RationalFunction>& roots) {
  auto b = std::make_shared<GapBasis>();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      RationalFunction g = roots[i] - roots[j];
      if (g.is_zero()) throw AlgebraError("non-semisimple");
      if (!g.is_polynomial()) throw AlgebraError("critical points must be polynomial");
      b->factors.push_back(g.numerator());
    }
  return b;
}

}  // namespace cohft::algebra
