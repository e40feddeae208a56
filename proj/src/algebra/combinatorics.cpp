#include "cohft/algebra/combinatorics.hpp"

#include <mutex>

#include "cohft/algebra/algebraic.hpp"

namespace cohft::algebra {

BigRational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<BigRational> cache{BigRational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  // sum_{k=0}^{j} C(j+1, k) B_k = 0
  while (cache.size() <= n) {
    unsigned j = static_cast<unsigned>(cache.size());
    BigRational acc = 0;
    for (unsigned k = 0; k < j; ++k) acc += BigRational(binomial(j + 1, k)) * cache[k];
    cache.push_back(-acc / BigRational(j + 1));
  }
  return cache[n];
}

BigRational gaussian_moment(unsigned k) {
  if (k % 2 == 1) return 0;
  if (k == 0) return 1;
  return BigRational(double_factorial(k - 1));
}

RationalFunction power_sum_over_roots(const std::vector<RationalFunction>& monic, long k) {
  if (monic.size() < 2 || !(monic.back() == RationalFunction(1))) throw AlgebraError("polynomial must be monic of positive degree");
  if (k >= 0) return newton_power_sums(monic, static_cast<std::size_t>(k) + 1).back();
  if (monic.front().is_zero()) throw AlgebraError("pole at zero root");
  std::vector<RationalFunction> rev(monic.rbegin(), monic.rend());
  RationalFunction inv = rev.back().inverse();
  for (auto& c : rev) c *= inv;
  return newton_power_sums(rev, static_cast<std::size_t>(-k) + 1).back();
}

RationalFunction power_sum_over_roots(const Polynomial& p, std::size_t var, long k) {
  std::vector<RationalFunction> c;
  for (const auto& x : p.coefficients_in(var)) c.emplace_back(x);
  return power_sum_over_roots(c, k);
}

namespace {

using RSeries = TruncatedSeries<RationalFunction>;

RSeries eval_poly(const std::vector<RationalFunction>& coeffs, const RSeries& x) {
  RSeries r = RSeries::constant(RationalFunction(0), x.order());
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + RSeries::constant(coeffs[i]);
  return r;
}

}  // namespace

TruncatedSeries<RationalFunction> newton_root_series(const std::vector<RationalFunction>& coeffs,
                                                     const RationalFunction& seed, std::size_t order) {
  std::vector<RationalFunction> deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) deriv.push_back(coeffs[i] * RationalFunction(static_cast<long>(i)));
  UPoly<RationalFunction> f(coeffs), fd(deriv);
  if (!f.evaluate(seed).is_zero()) throw AlgebraError("seed is not a root at q = 0");
  if (fd.evaluate(seed).is_zero()) throw AlgebraError("non-simple root");
  RSeries p = RSeries::constant(seed, order);
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(2 * prec, order);
    RSeries x(p.coefficients(), prec);
    RSeries q = RSeries::variable(prec);
    RSeries residual = eval_poly(coeffs, x) - q;
    RSeries slope = eval_poly(deriv, x);
    p = x - residual * slope.inverse();
  }
  return p.truncate(order);
}

}  // namespace cohft::algebra
