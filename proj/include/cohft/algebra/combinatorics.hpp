#pragma once

#include <map>
#include <vector>

#include "cohft/algebra/matrix.hpp"
#include "cohft/algebra/rational.hpp"
#include "cohft/algebra/rational_function.hpp"
#include "cohft/algebra/series.hpp"

namespace cohft::algebra {

/// Bernoulli numbers from x/(e^x - 1), so B_1 = -1/2. Thread-safe cache.
BigRational bernoulli(unsigned n);

/// E[x^k] for a standard Gaussian.
BigRational gaussian_moment(unsigned k);

/// Moments of a centred Gaussian with a fixed covariance, memoized across
/// calls. Uses E[T_a T^b] = sum_c s_ac b_c E[T^(b - e_c)].
template <class K>
class WickMoments {
 public:
  explicit WickMoments(Matrix<K> covariance) : cov_(std::move(covariance)) {
    if (cov_.rows() != cov_.cols()) throw AlgebraError("covariance must be square");
    for (std::size_t i = 0; i < cov_.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(cov_(i, j) == cov_(j, i))) throw AlgebraError("covariance must be symmetric");
  }

  [[nodiscard]] const Matrix<K>& covariance() const { return cov_; }

  K operator()(std::vector<unsigned> exponents) {
    if (exponents.size() != cov_.rows()) throw AlgebraError("exponent vector has wrong length");
    unsigned total = 0;
    for (unsigned e : exponents) total += e;
    if (total % 2 == 1) return K(0);
    if (total == 0) return K(1);
    auto it = memo_.find(exponents);
    if (it != memo_.end()) return it->second;
    std::size_t a = 0;
    while (exponents[a] == 0) ++a;
    std::vector<unsigned> rest = exponents;
    --rest[a];
    K acc(0);
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (rest[c] == 0 || cov_(a, c) == K(0)) continue;
      std::vector<unsigned> next = rest;
      --next[c];
      acc += cov_(a, c) * K(static_cast<long>(rest[c])) * (*this)(next);
    }
    memo_.emplace(std::move(exponents), acc);
    return acc;
  }

 private:
  Matrix<K> cov_;
  std::map<std::vector<unsigned>, K> memo_;
};

/// Isserlis moment: sum over perfect pairings of the multiset of variables.
template <class K>
K wick_moment(const std::vector<unsigned>& exponents, const Matrix<K>& covariance) {
  WickMoments<K> w(covariance);
  return w(exponents);
}

/// Sum of Q^k over the roots of the monic polynomial with the given
/// coefficients (low to high). Negative k uses the reversed polynomial and
/// throws "pole at zero root" when the constant term vanishes.
RationalFunction power_sum_over_roots(const std::vector<RationalFunction>& monic, long k);
/// Same, for a polynomial in x_var whose coefficients involve the other variables.
RationalFunction power_sum_over_roots(const Polynomial& p, std::size_t var, long k);

/// Root P(q) of F(X) = q as a power series in q with P(0) = seed, where F
/// has the given coefficients (low to high). Newton iteration with
/// precision doubling. Throws "non-simple root" if F'(seed) = 0.
TruncatedSeries<RationalFunction> newton_root_series(const std::vector<RationalFunction>& coeffs,
                                                     const RationalFunction& seed, std::size_t order);

}  // namespace cohft::algebra
