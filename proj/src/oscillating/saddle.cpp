#include "cohft/oscillating/saddle.hpp"

#include <map>

#include "cohft/algebra/combinatorics.hpp"
#include "cohft/algebra/gap_fraction.hpp"

namespace cohft::oscillating {

using algebra::AlgebraError;
using algebra::GapFraction;
using algebra::Polynomial;
using GF = GapFraction;
using GQ = TruncatedSeries<GF>;

namespace {

RF scale(const RF& x, const BigRational& c) { return x * RF(c); }
GF scale(const GF& x, const BigRational& c) { return x * GF(c); }
GQ scale(const GQ& x, const BigRational& c) { return x.scaled(GF(c)); }

RF inv(const RF& x) { return x.inverse(); }
GF inv(const GF& x) { return x.inverse(); }

// Polynomial in (s, y) stored as b[e][n] for s^e y^n, truncated at e <= emax.
template <class K>
using Bivar = std::vector<std::vector<K>>;

template <class K>
Bivar<K> bv_mul(const Bivar<K>& a, const Bivar<K>& b, std::size_t emax, const K& zero) {
  Bivar<K> r(emax + 1);
  for (std::size_t ea = 0; ea < a.size(); ++ea)
    for (std::size_t eb = 0; eb < b.size() && ea + eb <= emax; ++eb)
      for (std::size_t na = 0; na < a[ea].size(); ++na) {
        if (a[ea][na].is_zero()) continue;
        for (std::size_t nb = 0; nb < b[eb].size(); ++nb) {
          if (b[eb][nb].is_zero()) continue;
          auto& row = r[ea + eb];
          if (row.size() <= na + nb) row.resize(na + nb + 1, zero);
          row[na + nb] += a[ea][na] * b[eb][nb];
        }
      }
  return r;
}

// exp(V) where every term of V has positive s-degree.
template <class K>
Bivar<K> bv_exp(const Bivar<K>& v, std::size_t emax, const K& zero, const K& one) {
  Bivar<K> result(emax + 1), term(1, std::vector<K>{one});
  result[0] = {one};
  for (std::size_t r = 1; r <= emax; ++r) {
    term = bv_mul(term, v, emax, zero);
    for (auto& row : term)
      for (auto& x : row) x = scale(x, BigRational(1) / BigRational(static_cast<long>(r)));
    for (std::size_t e = 0; e < term.size(); ++e) {
      if (result[e].size() < term[e].size()) result[e].resize(term[e].size(), zero);
      for (std::size_t n = 0; n < term[e].size(); ++n) result[e][n] += term[e][n];
    }
  }
  return result;
}

// -sum_{l>=3} c_l y^l s^{l-2} / l!, with c_l = coeffs[l-3].
template <class K>
Bivar<K> vertex(const std::vector<K>& coeffs, std::size_t emax, const K& zero) {
  Bivar<K> v(emax + 1);
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    std::size_t l = idx + 3, e = l - 2;
    if (e > emax) break;
    v[e].assign(l + 1, zero);
    v[e][l] = scale(-coeffs[idx], BigRational(1) / BigRational(algebra::factorial(static_cast<unsigned>(l))));
  }
  return v;
}

template <class K>
std::vector<std::vector<K>> expand_1d(const K& root, const K& inv_delta, const std::vector<K>& higher,
                                      std::size_t mu_max, std::size_t z_order, bool& cancel) {
  const K zero(0), one(1);
  if (z_order == 0) return std::vector<std::vector<K>>(mu_max + 1);
  std::size_t emax = 2 * (z_order - 1);
  Bivar<K> weight = bv_exp(vertex(higher, emax, zero), emax, zero, one);
  // prefactor (y s + Q), y ~ N(0, 1/Delta)
  Bivar<K> lin(2);
  lin[0] = {root};
  lin[1] = {zero, one};
  std::vector<K> inv_delta_pow{one};
  std::vector<std::vector<K>> out;
  for (std::size_t mu = 0; mu <= mu_max; ++mu) {
    if (mu > 0) weight = bv_mul(weight, lin, emax, zero);
    std::vector<K> series(z_order, zero);
    for (std::size_t e = 0; e < weight.size(); ++e)
      for (std::size_t n = 0; n < weight[e].size(); ++n) {
        if (weight[e][n].is_zero() || n % 2 == 1) continue;
        if (e % 2 == 1) {
          cancel = false;
          continue;
        }
        while (inv_delta_pow.size() <= n / 2) inv_delta_pow.push_back(inv_delta_pow.back() * inv_delta);
        K term = scale(weight[e][n] * inv_delta_pow[n / 2], algebra::gaussian_moment(static_cast<unsigned>(n)));
        // s^e = (-z)^{e/2}
        series[e / 2] += (e / 2) % 2 == 0 ? term : -term;
      }
    out.push_back(std::move(series));
  }
  return out;
}

RF to_rf(const RF& x) { return x; }
RF to_rf(const GF& x) { return x.to_rational_function(); }

// f^{(l)}(Q) for l = 3..m+2 from f' given low to high.
template <class K>
std::vector<K> higher_derivatives(const std::vector<K>& fprime, const K& root) {
  std::vector<K> out;
  std::vector<K> d = fprime;  // current derivative of f', starting at f^{(1)}
  for (std::size_t l = 2; l < fprime.size() + 1; ++l) {
    std::vector<K> next;
    for (std::size_t c = 1; c < d.size(); ++c) next.push_back(d[c] * K(static_cast<long>(c)));
    d = std::move(next);
    if (l < 3) continue;
    K acc(0);
    for (std::size_t c = d.size(); c-- > 0;) acc = acc * root + d[c];
    out.push_back(acc);
  }
  return out;
}

template <class K>
std::vector<std::vector<std::vector<K>>> expansions_for(const std::vector<K>& roots, const std::vector<K>& deltas,
                                                        const std::vector<K>& fprime, std::size_t mu_max,
                                                        std::size_t z_order, bool& cancel) {
  std::vector<std::vector<std::vector<K>>> out;
  for (std::size_t k = 0; k < roots.size(); ++k)
    out.push_back(expand_1d(roots[k], inv(deltas[k]), higher_derivatives(fprime, roots[k]), mu_max, z_order, cancel));
  return out;
}

template <class K>
SaddleExpansion package(std::size_t k, const std::vector<std::vector<K>>& s, std::size_t z_order, bool cancel) {
  SaddleExpansion r;
  r.critical_index = k;
  r.half_powers_cancel = cancel;
  for (const auto& series : s) {
    std::vector<RF> c;
    for (const auto& x : series) c.push_back(to_rf(x));
    r.normalized.emplace_back(std::move(c), z_order);
  }
  return r;
}

void check_semisimple(const std::vector<RF>& deltas) {
  for (const auto& d : deltas)
    if (d.is_zero()) throw AlgebraError("non-semisimple point");
}

template <class K>
std::vector<K> lift(const std::vector<RF>& xs, const std::shared_ptr<const algebra::GapBasis>& basis) {
  std::vector<K> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<K, GF>)
      out.emplace_back(basis, x);
    else
      out.push_back(x);
  }
  return out;
}

template <class K>
qde::SeriesMatrix<RF> hat_from_saddles(const frobenius::AmModel& model, std::size_t z_order,
                                       const std::shared_ptr<const algebra::GapBasis>& basis) {
  std::size_t dim = model.roots.size();
  auto roots = lift<K>(model.roots, basis);
  auto deltas = lift<K>(model.deltas, basis);
  auto fprime = lift<K>(model.fprime, basis);
  bool cancel = true;
  auto s = expansions_for(roots, deltas, fprime, dim - 1, z_order, cancel);
  if (!cancel) throw AlgebraError("half-integer powers survived");
  qde::SeriesMatrix<RF> hat(dim, z_order);
  for (std::size_t i = 0; i < dim; ++i) {
    auto c = lift<K>(frobenius::cofactor_polynomial(model.roots, i), basis);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t n = 0; n < z_order; ++n) {
        K acc(0);
        for (std::size_t a = 0; a < c.size(); ++a) acc += c[a] * s[k][a][n];
        hat[n](i, k) = to_rf(acc);
      }
  }
  return hat;
}

// Centred Gaussian moments from a covariance grid, with explicit zero and one.
template <class K>
class Wick {
 public:
  Wick(qde::Grid<K> cov, K zero, K one) : cov_(std::move(cov)), zero_(std::move(zero)), one_(std::move(one)) {}
  K operator()(std::vector<unsigned> e) {
    unsigned total = 0;
    for (unsigned x : e) total += x;
    if (total % 2 == 1) return zero_;
    if (total == 0) return one_;
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    std::size_t a = 0;
    while (e[a] == 0) ++a;
    std::vector<unsigned> rest = e;
    --rest[a];
    K acc = zero_;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (rest[c] == 0 || cov_[a][c].is_zero()) continue;
      std::vector<unsigned> next = rest;
      --next[c];
      acc += scale(cov_[a][c] * (*this)(next), BigRational(static_cast<long>(rest[c])));
    }
    memo_.emplace(std::move(e), acc);
    return acc;
  }

 private:
  qde::Grid<K> cov_;
  K zero_, one_;
  std::map<std::vector<unsigned>, K> memo_;
};

struct PmSetup {
  std::shared_ptr<const algebra::GapBasis> basis;
  std::size_t q_order;
  GQ zero, one;
  std::vector<GQ> P;
  std::vector<GQ> lambdas;

  explicit PmSetup(const frobenius::PmModel& model)
      : basis(algebra::root_gap_basis(model.lambdas)), q_order(model.q_order), zero(model.q_order),
        one(GQ::constant(GF(1), model.q_order)) {
    for (const auto& p : model.P) {
      std::vector<GF> c;
      for (std::size_t n = 0; n < q_order; ++n) c.emplace_back(basis, p[n]);
      P.emplace_back(std::move(c), q_order);
    }
    for (const auto& l : model.lambdas) lambdas.push_back(GQ::constant(GF(basis, l), q_order));
  }

  [[nodiscard]] std::vector<GQ> weights(std::size_t i) const {
    std::vector<GQ> w;
    for (const auto& l : lambdas) w.push_back(P[i] - l);
    return w;
  }

  // sigma_kl = delta_kl / w_k - 1 / (w_k w_l sum 1/w), written without 1/w_i,
  // which has no q^0 term.
  [[nodiscard]] qde::Grid<GQ> covariance(std::size_t i) const {
    auto w = weights(i);
    std::size_t n = w.size();
    std::vector<GQ> inv_w(n, zero);
    GQ others = zero;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) {
        inv_w[j] = w[j].inverse();
        others += inv_w[j];
      }
    GQ inv_d = (one + w[i] * others).inverse();
    qde::Grid<GQ> s(n, std::vector<GQ>(n, zero));
    s[i][i] = others * inv_d;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      s[i][k] = s[k][i] = -(inv_w[k] * inv_d);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i) continue;
        GQ x = -(w[i] * inv_w[k] * inv_w[l] * inv_d);
        if (k == l) x += inv_w[k];
        s[k][l] = x;
      }
    }
    return s;
  }
};

QSeries lower(const GQ& x) {
  std::vector<RF> c;
  for (std::size_t n = 0; n < x.order(); ++n) c.push_back(x[n].to_rational_function());
  return QSeries(std::move(c), x.order());
}

std::vector<GQ> expand_pm(const PmSetup& setup, std::size_t i, std::size_t z_order) {
  if (z_order == 0) return {};
  std::size_t emax = 2 * (z_order - 1);
  auto w = setup.weights(i);
  std::size_t dim = w.size();
  Wick<GQ> wick(setup.covariance(i), setup.zero, setup.one);
  // (s-degree, T exponents) -> coefficient
  std::map<std::pair<std::size_t, std::vector<unsigned>>, GQ> acc;
  acc.emplace(std::make_pair(std::size_t{0}, std::vector<unsigned>(dim, 0)), setup.one);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<GQ> coeffs(emax, w[j]);
    Bivar<GQ> f = bv_exp(vertex(coeffs, emax, setup.zero), emax, setup.zero, setup.one);
    std::map<std::pair<std::size_t, std::vector<unsigned>>, GQ> next;
    for (const auto& [key, val] : acc)
      for (std::size_t e = 0; e + key.first <= emax && e < f.size(); ++e)
        for (std::size_t n = 0; n < f[e].size(); ++n) {
          if (f[e][n].is_zero()) continue;
          auto k2 = key;
          k2.first += e;
          k2.second[j] += static_cast<unsigned>(n);
          auto it = next.find(k2);
          GQ prod = val * f[e][n];
          if (it == next.end())
            next.emplace(std::move(k2), std::move(prod));
          else
            it->second += prod;
        }
    acc = std::move(next);
  }
  std::vector<GQ> out(z_order, setup.zero);
  for (const auto& [key, val] : acc) {
    GQ m = wick(key.second);
    if (m.is_zero()) continue;
    if (key.first % 2 == 1) throw AlgebraError("half-integer powers survived");
    GQ term = val * m;
    std::size_t n = key.first / 2;
    out[n] += n % 2 == 0 ? term : -term;
  }
  return out;
}

}  // namespace

SaddleExpansion saddle_expand_values(const RF& root, const RF& delta, const std::vector<RF>& higher_derivatives,
                                     std::size_t mu_max, std::size_t z_order) {
  if (delta.is_zero()) throw AlgebraError("non-semisimple point");
  bool cancel = true;
  auto s = expand_1d(root, delta.inverse(), higher_derivatives, mu_max, z_order, cancel);
  return package(0, s, z_order, cancel);
}

SaddleExpansion saddle_expand_1d(const frobenius::AmModel& model, std::size_t k, std::size_t mu_max,
                                 std::size_t z_order) {
  check_semisimple(model.deltas);
  if (k >= model.roots.size()) throw AlgebraError("critical index out of range");
  bool cancel = true;
  if (model.symbolic) {
    auto basis = algebra::root_gap_basis(model.roots);
    auto roots = lift<GF>(model.roots, basis);
    auto fprime = lift<GF>(model.fprime, basis);
    GF delta(basis, model.deltas[k]);
    auto s = expand_1d(roots[k], delta.inverse(), higher_derivatives(fprime, roots[k]), mu_max, z_order, cancel);
    return package(k, s, z_order, cancel);
  }
  auto s = expand_1d(model.roots[k], model.deltas[k].inverse(), higher_derivatives(model.fprime, model.roots[k]),
                     mu_max, z_order, cancel);
  return package(k, s, z_order, cancel);
}

qde::RMatrixA rmatrix_from_saddles_a(const frobenius::AmModel& model, std::size_t z_order) {
  check_semisimple(model.deltas);
  qde::RMatrixA r;
  r.vars = model.vars;
  r.m = static_cast<std::size_t>(model.m);
  r.roots = model.roots;
  r.deltas = model.deltas;
  r.weights.assign(r.m, 1);
  r.z_weight = model.m + 2;
  if (model.symbolic)
    r.hat = hat_from_saddles<GF>(model, z_order, algebra::root_gap_basis(model.roots));
  else
    r.hat = hat_from_saddles<RF>(model, z_order, nullptr);
  return r;
}

FzSeries fz_series(std::size_t order) {
  FzSeries s;
  for (std::size_t i = 0; i < order; ++i) {
    auto u = static_cast<unsigned>(i);
    BigRational a = BigRational(algebra::factorial(6 * u)) /
                    BigRational(algebra::factorial(3 * u) * algebra::factorial(2 * u));
    long j = static_cast<long>(i);
    s.a.push_back(a);
    s.b.push_back(a * BigRational(1 + 6 * j) / BigRational(1 - 6 * j));
  }
  return s;
}

std::vector<BigRational> airy_recursion(int m, std::size_t z_order) {
  if (m < 1) throw AlgebraError("m must be positive");
  // (x + z d)^{m+1} applied to z^n x^{alpha_n}, alpha_n = -m/2 - n(m+2),
  // d = -1/((m+1) x^m) d/dx; A[j] is the coefficient of z^{n+j}.
  long mm = m;
  auto apply = [mm](long n) {
    std::vector<BigRational> a(static_cast<std::size_t>(mm) + 2, BigRational(0));
    a[0] = 1;
    BigRational alpha = algebra::make_rational(-mm, 2) - BigRational(n * (mm + 2));
    for (long step = 0; step <= mm; ++step) {
      std::vector<BigRational> next(a.size(), BigRational(0));
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        next[j] += a[j];
        BigRational beta = alpha + BigRational(step) - BigRational(static_cast<long>(j) * (mm + 2));
        if (j + 1 < a.size()) next[j + 1] += a[j] * (-beta / BigRational(mm + 1));
      }
      a = std::move(next);
    }
    return a;
  };
  std::vector<BigRational> c;
  std::vector<std::vector<BigRational>> ops;
  for (std::size_t n = 0; n < z_order; ++n) {
    if (n == 0) {
      c.push_back(1);
    } else {
      // z^{n+1} balance: sum_{j=1}^{m+1} c_{n+1-j} A_j(n+1-j) = 0
      BigRational rhs = 0;
      for (std::size_t j = 2; j <= static_cast<std::size_t>(m) + 1 && j <= n + 1; ++j)
        rhs -= c[n + 1 - j] * ops[n + 1 - j][j];
      c.push_back(rhs / apply(static_cast<long>(n))[1]);
    }
    ops.push_back(apply(static_cast<long>(n)));
  }
  return c;
}

std::vector<std::vector<QSeries>> pm_covariance(const frobenius::PmModel& model, std::size_t i) {
  PmSetup setup(model);
  auto g = setup.covariance(i);
  std::vector<std::vector<QSeries>> out;
  for (const auto& row : g) {
    std::vector<QSeries> r;
    for (const auto& x : row) r.push_back(lower(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<QSeries> saddle_expand_pm(const frobenius::PmModel& model, std::size_t i, std::size_t z_order) {
  if (i >= model.lambdas.size()) throw AlgebraError("critical index out of range");
  PmSetup setup(model);
  std::vector<QSeries> out;
  for (const auto& x : expand_pm(setup, i, z_order)) out.push_back(lower(x));
  return out;
}

std::vector<qde::Grid<QSeries>> rmatrix_from_saddles_pm(const frobenius::PmModel& model, std::size_t z_order) {
  PmSetup setup(model);
  std::size_t dim = model.lambdas.size();
  std::vector<GQ> Q, deltas;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<GF> c, d;
    for (std::size_t n = 0; n < model.q_order; ++n) {
      c.emplace_back(setup.basis, model.Q[j][n]);
      d.emplace_back(setup.basis, model.deltas[j][n]);
    }
    Q.emplace_back(std::move(c), model.q_order);
    deltas.emplace_back(std::move(d), model.q_order);
  }
  std::vector<qde::Grid<QSeries>> hat(z_order, qde::Grid<QSeries>(dim, std::vector<QSeries>(dim, QSeries(model.q_order))));
  for (std::size_t i = 0; i < dim; ++i) {
    GQ h = (deltas[i].euler_derivative() * deltas[i].inverse()).scaled(GF(algebra::make_rational(1, 2)));
    // powers L^a S_hat_{0i}, each a z-series of q-series
    std::vector<std::vector<GQ>> pw{expand_pm(setup, i, z_order)};
    for (std::size_t a = 1; a < dim; ++a) {
      const auto& f = pw.back();
      std::vector<GQ> g(z_order, setup.zero);
      for (std::size_t n = 0; n < z_order; ++n) {
        g[n] = Q[i] * f[n];
        if (n > 0) g[n] += f[n - 1].euler_derivative() - h * f[n - 1];
      }
      pw.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < dim; ++k) {
      // coefficients of prod_{j != k}(X - Q_j)
      std::vector<GQ> c{setup.one};
      for (std::size_t j = 0; j < dim; ++j) {
        if (j == k) continue;
        std::vector<GQ> next(c.size() + 1, setup.zero);
        for (std::size_t a = 0; a < c.size(); ++a) {
          next[a + 1] += c[a];
          next[a] -= Q[j] * c[a];
        }
        c = std::move(next);
      }
      for (std::size_t n = 0; n < z_order; ++n) {
        GQ acc = setup.zero;
        for (std::size_t a = 0; a < c.size(); ++a) acc += c[a] * pw[a][n];
        hat[n][k][i] = lower(acc);
      }
    }
  }
  return hat;
}

std::vector<TruncatedSeries<RF>> bernoulli_diagonal(const std::vector<RF>& lambdas, std::size_t z_order) {
  std::vector<TruncatedSeries<RF>> out;
  for (const auto& b : qde::bernoulli_exponents(lambdas, z_order)) out.push_back(algebra::series_exp(b));
  return out;
}

TruncatedSeries<RF> mumford_r_entry(const RF& t, std::size_t z_order) {
  TruncatedSeries<RF> b(z_order);
  for (std::size_t i = 1; 2 * i - 1 < z_order; ++i) {
    BigRational c = algebra::bernoulli(static_cast<unsigned>(2 * i)) / BigRational(static_cast<long>(2 * i * (2 * i - 1)));
    b.set(2 * i - 1, RF(c) * t.pow(static_cast<long>(2 * i - 1)));
  }
  return algebra::series_exp(b);
}

}  // namespace cohft::oscillating
