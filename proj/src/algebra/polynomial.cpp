#include "cohft/algebra/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cohft::algebra {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 0xFFFFu) throw AlgebraError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents subtract_exponents(const Exponents& b, const Exponents& a) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return r;
}

}  // namespace

BigInteger factorial(unsigned n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInteger double_factorial(long n) {
  if (n <= 0) return 1;
  BigInteger r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInteger binomial(unsigned n, unsigned k) {
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw AlgebraError("division by zero");
    return pow(BigRational(1) / base, -exponent);
  }
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.push_back({Exponents{}, BigRational(constant)});
}

Polynomial::Polynomial(const BigRational& constant) {
  if (constant != 0) terms_.push_back({Exponents{}, constant});
}

Polynomial Polynomial::variable(std::size_t index) {
  if (index >= kMaxVars) throw AlgebraError("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& exponents, const BigRational& coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.push_back({exponents, coefficient});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && algebra::total_degree(terms_[0].exponents) == 0);
}

BigRational Polynomial::constant_value() const {
  if (!is_constant()) throw AlgebraError("polynomial is not constant");
  return terms_.empty() ? BigRational(0) : terms_[0].coefficient;
}

BigRational Polynomial::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  return algebra::total_degree(last.exponents) == 0 ? last.coefficient : BigRational(0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw AlgebraError("zero polynomial has no leading term");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : algebra::total_degree(terms_.front().exponents);
}

unsigned Polynomial::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exponents[var]);
  return d;
}

unsigned Polynomial::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = 0xFFFFu;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.exponents[var]);
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponents[var] != 0; });
}

unsigned Polynomial::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exponents[i]) mask |= 1u << i;
  return mask;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = algebra::total_degree(terms_.front().exponents);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return algebra::total_degree(t.exponents) == d; });
}

BigRational Polynomial::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& x) {
    return grlex_greater(t.exponents, x);
  });
  if (it != terms_.end() && it->exponents == e) return it->coefficient;
  return 0;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && grlex_greater(i->exponents, j->exponents))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_greater(j->exponents, i->exponents)) {
      merged.push_back(*j++);
    } else {
      BigRational c = i->coefficient + j->coefficient;
      if (c != 0) merged.push_back({i->exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && algebra::total_degree(b.terms_[0].exponents) == 0) return a * b.terms_[0].coefficient;
  if (a.terms_.size() == 1 && algebra::total_degree(a.terms_[0].exponents) == 0) return b * a.terms_[0].coefficient;
  std::unordered_map<Exponents, std::size_t, ExponentsHash> index;
  index.reserve(a.terms_.size() * b.terms_.size() / 2 + 8);
  std::vector<Term> acc;
  BigRational prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponents e = add_exponents(ta.exponents, tb.exponents);
      mpq_mul(prod.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
      auto [it, inserted] = index.try_emplace(e, acc.size());
      if (inserted) {
        acc.push_back({e, prod});
      } else {
        acc[it->second].coefficient += prod;
      }
    }
  }
  Polynomial r;
  r.terms_.reserve(acc.size());
  for (auto& t : acc)
    if (t.coefficient != 0) r.terms_.push_back(std::move(t));
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exponents, y.exponents); });
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  auto coeffs = coefficients_in(var);
  Polynomial result;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

BigRational Polynomial::evaluate(std::span<const BigRational> point) const {
  BigRational sum = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coefficient;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.exponents[i]) continue;
      if (i >= point.size()) throw AlgebraError("evaluation point too short");
      v *= algebra::pow(point[i], t.exponents[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::shift(std::size_t var, int amount) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    int e = int(t.exponents[var]) + amount;
    if (e < 0) throw AlgebraError("negative exponent in shift");
    t.exponents[var] = static_cast<std::uint16_t>(e);
  }
  // A uniform shift preserves grlex order.
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw AlgebraError("division by zero");
  if (is_zero()) return Polynomial{};
  if (divisor.is_constant()) return *this * (BigRational(1) / divisor.constant_value());
  const Term& lead = divisor.leading_term();
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  std::map<Exponents, BigRational, GrlexDescending> rem;
  for (const auto& t : terms_) rem.emplace(t.exponents, t.coefficient);
  std::vector<Term> quotient;
  BigRational inv_lead = BigRational(1) / lead.coefficient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lead.exponents, top->first)) return std::nullopt;
    Exponents qe = subtract_exponents(top->first, lead.exponents);
    BigRational qc = top->second * inv_lead;
    for (const auto& t : divisor.terms_) {
      Exponents e = add_exponents(qe, t.exponents);
      auto [it, inserted] = rem.try_emplace(e, 0);
      it->second -= qc * t.coefficient;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qe, std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

Polynomial Polynomial::operator/(const Polynomial& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw AlgebraError("inexact polynomial division");
  return *q;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    unsigned k = s.exponents[var];
    s.exponents[var] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  if (terms_.empty()) out.assign(1, Polynomial{});
  return out;
}

Polynomial Polynomial::from_coefficients(std::size_t var, const std::vector<Polynomial>& coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms_) {
      Term s = t;
      s.exponents[var] = static_cast<std::uint16_t>(s.exponents[var] + k);
      all.push_back(std::move(s));
    }
  }
  return from_terms(std::move(all));
}

BigRational Polynomial::content() const {
  if (terms_.empty()) return 1;
  BigInteger g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  BigRational c(g, l);
  c.canonicalize();
  if (terms_.front().coefficient < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return {};
  return *this * (BigRational(1) / content());
}

Exponents Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.front().exponents;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exponents[i]);
  return m;
}

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw AlgebraError("too many variables");
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string to_string(const Polynomial& p, const VariableSet& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRational c = t.coefficient;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = algebra::total_degree(t.exponents) > 0 && c == 1;
    if (!unit) out << c.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.exponents[i]) continue;
      if (need_star) out << "*";
      out << (i < vars.size() ? vars.name(i) : "x" + std::to_string(i));
      if (t.exponents[i] > 1) out << "^" << t.exponents[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace cohft::algebra
