#include "cohft/qde/solver.hpp"

#include <map>

#include "cohft/algebra/combinatorics.hpp"
#include "cohft/algebra/gap_fraction.hpp"
#include "cohft/algebra/linear.hpp"

namespace cohft::qde {

using algebra::AlgebraError;
using algebra::Exponents;
using algebra::GapBasis;
using algebra::GapFraction;
using algebra::Polynomial;
using GF = GapFraction;

namespace {

RF inv(const RF& x) { return x.inverse(); }
GF inv(const GF& x) { return x.inverse(); }
QSeries inv(const QSeries& x) { return x.inverse(); }

template <class K>
Connection<K> make_connection(const std::vector<K>& roots, const std::vector<K>& deltas, const K& s, const K& zero) {
  std::size_t n = roots.size();
  Connection<K> c{Grid<K>(n, std::vector<K>(n, zero)), std::vector<K>(n, zero)};
  std::vector<K> inv_delta;
  for (const auto& d : deltas) inv_delta.push_back(inv(d));
  for (std::size_t i = 0; i < n; ++i) {
    K acc = zero;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      K gap = inv(roots[i] - roots[k]);
      c.M[i][k] = zero - s * inv_delta[k] * gap;
      acc = acc + gap;
    }
    c.M[i][i] = zero - s * inv_delta[i] * acc;
    c.h[i] = zero - c.M[i][i];
  }
  return c;
}

// Shared order-by-order recursion in hat form:
//   [hat_{n+1}, xi] + zf * (d hat_n - hat_n h + M hat_n) = 0,
// off-diagonals algebraically, diagonals via `integrate`.
template <class K>
struct Recursion {
  std::vector<K> xi;
  std::vector<K> deltas;
  Connection<K> conn;
  K z_factor;
  K zero;
  std::function<K(const K&)> derive;
  // returns R_n(i, i) from G = d R_n(i, i)
  std::function<K(const K&, std::size_t, std::size_t)> integrate;
};

template <class K>
Grid<K> e_term(const Recursion<K>& r, const Grid<K>& hat) {
  std::size_t n = hat.size();
  Grid<K> e(n, std::vector<K>(n, r.zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      K acc = r.derive(hat[i][k]) - hat[i][k] * r.conn.h[k];
      for (std::size_t l = 0; l < n; ++l) acc = acc + r.conn.M[i][l] * hat[l][k];
      e[i][k] = acc;
    }
  return e;
}

template <class K>
std::vector<Grid<K>> run_recursion(const Recursion<K>& r, std::size_t z_order) {
  std::size_t n = r.xi.size();
  std::vector<Grid<K>> hat;
  if (z_order == 0) return hat;
  Grid<K> first(n, std::vector<K>(n, r.zero));
  for (std::size_t i = 0; i < n; ++i) first[i][i] = r.deltas[i];
  hat.push_back(first);
  Grid<K> gap(n, std::vector<K>(n, r.zero));
  std::vector<K> inv_delta;
  for (std::size_t i = 0; i < n; ++i) {
    inv_delta.push_back(inv(r.deltas[i]));
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) gap[i][k] = inv(r.xi[k] - r.xi[i]);
  }
  for (std::size_t order = 1; order < z_order; ++order) {
    Grid<K> e = e_term(r, hat.back());
    Grid<K> next(n, std::vector<K>(n, r.zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (i != k) next[i][k] = r.zero - r.z_factor * e[i][k] * gap[i][k];
    for (std::size_t i = 0; i < n; ++i) {
      K acc = r.zero;
      for (std::size_t l = 0; l < n; ++l)
        if (l != i) acc = acc + r.conn.M[i][l] * next[l][i];
      K g = r.zero - acc * inv_delta[i];
      next[i][i] = r.deltas[i] * r.integrate(g, i, order);
    }
    hat.push_back(std::move(next));
  }
  return hat;
}

template <class K>
std::vector<Grid<K>> residual_of(const Recursion<K>& r, const std::vector<Grid<K>>& hat) {
  std::size_t n = r.xi.size();
  std::vector<Grid<K>> out;
  for (std::size_t order = 0; order + 1 < hat.size(); ++order) {
    Grid<K> e = e_term(r, hat[order]);
    Grid<K> res(n, std::vector<K>(n, r.zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        res[i][k] = hat[order + 1][i][k] * (r.xi[k] - r.xi[i]) + r.z_factor * e[i][k];
    out.push_back(std::move(res));
  }
  return out;
}

template <class K>
std::vector<Grid<K>> symplectic_of(const std::vector<Grid<K>>& hat, const std::vector<K>& deltas, const K& zero) {
  std::size_t n = deltas.size();
  std::vector<K> inv_delta;
  for (const auto& d : deltas) inv_delta.push_back(inv(d));
  std::vector<Grid<K>> out;
  for (std::size_t order = 0; order < hat.size(); ++order) {
    Grid<K> res(n, std::vector<K>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        K acc = zero;
        for (std::size_t a = 0; a <= order; ++a) {
          std::size_t b = order - a;
          for (std::size_t k = 0; k < n; ++k) {
            K term = hat[a][i][k] * hat[b][j][k] * inv_delta[k];
            acc = b % 2 ? acc - term : acc + term;
          }
        }
        if (order == 0 && i == j) acc = acc - deltas[i];
        res[i][j] = acc;
      }
    out.push_back(std::move(res));
  }
  return out;
}

long weighted_degree(const Exponents& e, const std::vector<long>& weights) {
  long d = 0;
  for (std::size_t v = 0; v < weights.size(); ++v) d += weights[v] * e[v];
  for (std::size_t v = weights.size(); v < algebra::kMaxVars; ++v)
    if (e[v]) throw AlgebraError("variable without a weight");
  return d;
}

long homogeneous_weight(const Polynomial& p, const std::vector<long>& weights) {
  if (p.is_zero()) throw AlgebraError("zero has no weight");
  long d = weighted_degree(p.terms().front().exponents, weights);
  for (const auto& t : p.terms())
    if (weighted_degree(t.exponents, weights) != d) throw AlgebraError("expression is not weighted-homogeneous");
  return d;
}

void monomials_of_weight(long target, const std::vector<long>& weights, std::size_t var, Exponents& e,
                         std::vector<Exponents>& out) {
  if (var == weights.size()) {
    if (target == 0) out.push_back(e);
    return;
  }
  if (weights[var] <= 0) throw AlgebraError("weights must be positive");
  for (long k = 0; k * weights[var] <= target; ++k) {
    e[var] = static_cast<std::uint16_t>(k);
    monomials_of_weight(target - k * weights[var], weights, var + 1, e, out);
  }
  e[var] = 0;
}

// Solves d_t1(P / den) = num / den_g for a weighted-homogeneous P.
std::optional<Polynomial> integrate_with_denominator(const Polynomial& num, const Polynomial& den_g,
                                                     const Polynomial& den, const std::vector<Polynomial>& deltas,
                                                     std::size_t m, const std::vector<long>& weights, long target) {
  long d = homogeneous_weight(den, weights) + target;
  if (d < 0) return std::nullopt;
  Polynomial L(1);
  for (std::size_t j = 0; j < m; ++j) L *= deltas[j];
  std::vector<Polynomial> l_over(m), dden(m);
  for (std::size_t j = 0; j < m; ++j) {
    l_over[j] = L / deltas[j];
    dden[j] = den.derivative(j);
  }
  auto cofactor = (den * den * L).divide_exact(den_g);
  if (!cofactor) return std::nullopt;
  Polynomial rhs = num * *cofactor;

  std::vector<Exponents> basis;
  Exponents e{};
  monomials_of_weight(d, weights, 0, e, basis);
  std::map<Exponents, std::size_t> row_of;
  std::vector<algebra::SparseRow> rows;
  std::vector<BigRational> values;
  auto row = [&](const Exponents& x) {
    auto [it, inserted] = row_of.emplace(x, rows.size());
    if (inserted) {
      rows.emplace_back();
      values.emplace_back(0);
    }
    return it->second;
  };
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Polynomial mono = Polynomial::monomial(basis[b], 1);
    Polynomial lhs;
    for (std::size_t j = 0; j < m; ++j) lhs -= l_over[j] * (mono.derivative(j) * den - mono * dden[j]);
    for (const auto& t : lhs.terms()) rows[row(t.exponents)][b] += t.coefficient;
  }
  for (const auto& t : rhs.terms()) values[row(t.exponents)] += t.coefficient;
  auto sol = algebra::solve_linear(rows, values, basis.size());
  if (!sol) return std::nullopt;
  if (sol->kernel_dimension > 0) throw AlgebraError("homogeneity failed to fix constant");
  std::vector<algebra::Term> terms;
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (sol->values[b] != 0) terms.push_back({basis[b], sol->values[b]});
  return Polynomial::from_terms(std::move(terms));
}

std::vector<Polynomial> delta_polynomials(const std::vector<RF>& deltas) {
  std::vector<Polynomial> r;
  for (const auto& d : deltas) {
    if (!d.is_polynomial()) throw AlgebraError("Delta must be polynomial in the critical points");
    r.push_back(d.numerator() * (BigRational(1) / d.denominator().constant_value()));
  }
  return r;
}

// A-side data in the gap representation.
struct GapSetup {
  std::shared_ptr<const GapBasis> basis;
  std::size_t m;
  std::vector<GF> roots, deltas, inv_deltas;
  std::vector<Polynomial> delta_polys;
  GF z_factor;

  GapSetup(const std::vector<RF>& r, const std::vector<RF>& d, std::size_t m_, const RF& zf)
      : basis(algebra::root_gap_basis(r)), m(m_), delta_polys(delta_polynomials(d)) {
    for (const auto& x : r) roots.emplace_back(basis, x);
    for (const auto& x : d) {
      deltas.emplace_back(basis, x);
      inv_deltas.push_back(deltas.back().inverse());
    }
    z_factor = GF(basis, zf);
  }

  [[nodiscard]] GF d_t1(const GF& f) const {
    GF acc(0);
    for (std::size_t j = 0; j < m; ++j) {
      GF dj = f.derivative(j);
      if (!dj.is_zero()) acc -= dj * inv_deltas[j];
    }
    return acc;
  }

  [[nodiscard]] GF integrate(const GF& g, const std::vector<long>& weights, long target) const {
    if (g.is_zero()) return GF(0);
    std::vector<int> ge = g.exponents();
    ge.resize(basis->factors.size(), 0);
    Polynomial den_g = g.denominator();
    // d_t1 raises each gap exponent by up to three; try the tightest guess first
    std::vector<std::vector<int>> candidates;
    for (int shift : {-3, -2, -1, 0, 2}) {
      std::vector<int> c = ge;
      for (auto& x : c) x = std::max(0, x + shift);
      if (candidates.empty() || candidates.back() != c) candidates.push_back(c);
    }
    for (const auto& exps : candidates) {
      Polynomial den = GF::make(basis, Polynomial(1), exps).inverse().numerator();
      if (auto p = integrate_with_denominator(g.numerator(), den_g, den, delta_polys, m, weights, target))
        return GF::make(basis, *p, exps);
    }
    throw AlgebraError("diagonal integration failed");
  }

  [[nodiscard]] Recursion<GF> recursion() const {
    Recursion<GF> r;
    r.xi = roots;
    r.deltas = deltas;
    r.conn = make_connection<GF>(roots, deltas, GF(-1), GF(0));
    r.z_factor = z_factor;
    r.zero = GF(0);
    r.derive = [this](const GF& f) { return d_t1(f); };
    return r;
  }

  [[nodiscard]] std::vector<Grid<GF>> lift(const SeriesMatrix<RF>& s) const {
    std::vector<Grid<GF>> out;
    for (std::size_t n = 0; n < s.order(); ++n) {
      Grid<GF> g(s.dim(), std::vector<GF>(s.dim()));
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t k = 0; k < s.dim(); ++k) g[i][k] = GF(basis, s[n](i, k));
      out.push_back(std::move(g));
    }
    return out;
  }
};

SeriesMatrix<RF> lower(const std::vector<Grid<GF>>& g, std::size_t dim) {
  SeriesMatrix<RF> s(dim, g.size());
  for (std::size_t n = 0; n < g.size(); ++n)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) s[n](i, k) = g[n][i][k].to_rational_function();
  return s;
}

void check_symbolic(const frobenius::AmModel& model) {
  if (!model.symbolic) throw AlgebraError("QDE solve needs symbolic critical points");
  for (std::size_t i = 0; i < model.roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (model.roots[i] == model.roots[j]) throw AlgebraError("non-semisimple");
}

RMatrixA solve_graded(const frobenius::AmModel& model, std::size_t z_order, const RF& z_factor,
                      std::vector<long> weights, long z_weight) {
  check_symbolic(model);
  std::size_t m = static_cast<std::size_t>(model.m);
  GapSetup setup(model.roots, model.deltas, m, z_factor);
  Recursion<GF> r = setup.recursion();
  r.integrate = [&setup, &weights, z_weight](const GF& g, std::size_t, std::size_t n) {
    return setup.integrate(g, weights, -static_cast<long>(n) * z_weight);
  };
  auto hat = run_recursion(r, z_order);
  RMatrixA out;
  out.vars = model.vars;
  out.m = m;
  out.roots = model.roots;
  out.deltas = model.deltas;
  out.hat = lower(hat, model.roots.size());
  out.weights = std::move(weights);
  out.z_weight = z_weight;
  out.z_factor = z_factor;
  return out;
}

QSeries zero_series(std::size_t order) { return QSeries(order); }

Recursion<QSeries> recursion_for(const RMatrixP& r) {
  Recursion<QSeries> rec;
  rec.xi = r.roots;
  rec.deltas = r.deltas;
  rec.conn = connection_pm(r.roots, r.deltas);
  rec.z_factor = QSeries::constant(RF(1), r.q_order);
  rec.zero = zero_series(r.q_order);
  rec.derive = [](const QSeries& f) { return f.euler_derivative(); };
  return rec;
}

template <class K>
K weighted_euler(const K& f, const std::vector<K>& vars, const std::vector<long>& weights) {
  K acc(0);
  for (std::size_t v = 0; v < weights.size(); ++v)
    if (weights[v] != 0) acc += K(weights[v]) * vars[v] * f.derivative(v);
  return acc;
}

}  // namespace

Connection<RF> connection_a(const std::vector<RF>& roots, const std::vector<RF>& deltas) {
  return make_connection<RF>(roots, deltas, RF(-1), RF(0));
}

Connection<QSeries> connection_pm(const std::vector<QSeries>& roots, const std::vector<QSeries>& deltas) {
  std::size_t order = roots.at(0).order();
  return make_connection<QSeries>(roots, deltas, QSeries::variable(order), zero_series(order));
}

RF d_t1(const RF& f, const std::vector<RF>& deltas, std::size_t m) {
  RF acc(0);
  for (std::size_t j = 0; j < m; ++j) {
    RF dj = f.derivative(j);
    if (!dj.is_zero()) acc -= dj / deltas[j];
  }
  return acc;
}

RF integrate_t1(const RF& G, const std::vector<RF>& deltas, std::size_t m, const std::vector<long>& weights,
                long target) {
  if (G.is_zero()) return RF(0);
  auto dp = delta_polynomials(deltas);
  const Polynomial& den_g = G.denominator();
  Polynomial all(1);
  for (const auto& d : dp) all *= d;
  for (const Polynomial& den : {den_g, den_g * all}) {
    if (auto p = integrate_with_denominator(G.numerator(), den_g, den, dp, m, weights, target))
      return algebra::rf_normalize(*p, den);
  }
  throw AlgebraError("diagonal integration failed");
}

RMatrixA solve_r_a(const frobenius::AmModel& model, std::size_t z_order) {
  std::vector<long> weights(static_cast<std::size_t>(model.m), 1);
  return solve_graded(model, z_order, RF(1), weights, model.m + 2);
}

RMatrixA solve_r_pm_in_a(const frobenius::AmModel& model, std::size_t z_order) {
  auto lam = model.vars.index_of("lam");
  if (!lam || *lam != static_cast<std::size_t>(model.m)) throw AlgebraError("model needs the variable lam after Q");
  std::vector<long> weights(static_cast<std::size_t>(model.m), 1);
  weights.push_back(model.m + 1);
  return solve_graded(model, z_order, model.t[0] + RF::variable(*lam), weights, 1);
}

std::vector<algebra::TruncatedSeries<RF>> bernoulli_exponents(const std::vector<RF>& lambdas, std::size_t z_order) {
  std::vector<algebra::TruncatedSeries<RF>> out;
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    algebra::TruncatedSeries<RF> b(z_order);
    for (std::size_t i = 1; 2 * i - 1 < z_order; ++i) {
      RF sum(0);
      for (std::size_t l = 0; l < lambdas.size(); ++l)
        if (l != j) sum += (lambdas[l] - lambdas[j]).pow(-static_cast<long>(2 * i - 1));
      BigRational c = algebra::bernoulli(static_cast<unsigned>(2 * i)) / BigRational(static_cast<long>(2 * i * (2 * i - 1)));
      b.set(2 * i - 1, RF(c) * sum);
    }
    out.push_back(b);
  }
  return out;
}

RMatrixP solve_r_pm(const frobenius::PmModel& model, std::size_t z_order) {
  RMatrixP out;
  out.vars = model.vars;
  out.m = static_cast<std::size_t>(model.m);
  out.q_order = model.q_order;
  out.roots = model.Q;
  out.deltas = model.deltas;
  for (std::size_t v = 0; v <= out.m; ++v)
    if (model.lambdas[v] == RF::variable(v)) out.lambda_vars.push_back(v);
  std::vector<algebra::TruncatedSeries<RF>> limit;
  for (const auto& b : bernoulli_exponents(model.lambdas, z_order)) limit.push_back(algebra::series_exp(b));
  Recursion<QSeries> rec = recursion_for(out);
  rec.integrate = [&limit, &out](const QSeries& g, std::size_t i, std::size_t n) {
    if (!g[0].is_zero()) throw AlgebraError("q-recursion inconsistent at q^0");
    QSeries f(out.q_order);
    f.set(0, limit[i][n]);
    for (std::size_t p = 1; p < out.q_order; ++p) f.set(p, g[p] * RF(algebra::make_rational(1, static_cast<long>(p))));
    return f;
  };
  out.hat = run_recursion(rec, z_order);
  return out;
}

SeriesMatrix<RF> qde_residual(const RMatrixA& r) {
  GapSetup setup(r.roots, r.deltas, r.m, r.z_factor);
  return lower(residual_of(setup.recursion(), setup.lift(r.hat)), r.dim());
}

std::vector<Grid<QSeries>> qde_residual(const RMatrixP& r) { return residual_of(recursion_for(r), r.hat); }

SeriesMatrix<RF> verify_symplectic(const RMatrixA& r) {
  GapSetup setup(r.roots, r.deltas, r.m, r.z_factor);
  return lower(symplectic_of(setup.lift(r.hat), setup.deltas, GF(0)), r.dim());
}

std::vector<Grid<QSeries>> verify_symplectic(const RMatrixP& r) {
  return symplectic_of(r.hat, r.deltas, zero_series(r.q_order));
}

SeriesMatrix<RF> verify_homogeneity(const RMatrixA& r) {
  GapSetup setup(r.roots, r.deltas, r.m, r.z_factor);
  auto hat = setup.lift(r.hat);
  std::vector<GF> vars;
  for (std::size_t v = 0; v < r.weights.size(); ++v) vars.push_back(GF(setup.basis, Polynomial::variable(v)));
  std::vector<Grid<GF>> out;
  GF base(static_cast<long>(r.m));
  for (std::size_t n = 0; n < hat.size(); ++n) {
    Grid<GF> g(r.dim(), std::vector<GF>(r.dim()));
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t k = 0; k < r.dim(); ++k) {
        const GF& x = hat[n][i][k];
        g[i][k] = GF(static_cast<long>(n) * r.z_weight) * x + weighted_euler(x, vars, r.weights) - base * x;
      }
    out.push_back(std::move(g));
  }
  return lower(out, r.dim());
}

std::vector<Grid<QSeries>> verify_homogeneity(const RMatrixP& r) {
  std::vector<long> weights;
  std::vector<RF> vars;
  for (auto v : r.lambda_vars) {
    if (weights.size() <= v) weights.resize(v + 1, 0);
    weights[v] = 1;
  }
  for (std::size_t v = 0; v < weights.size(); ++v) vars.push_back(RF::variable(v));
  std::vector<Grid<QSeries>> out;
  long m = static_cast<long>(r.m);
  for (std::size_t n = 0; n < r.order(); ++n) {
    Grid<QSeries> g(r.dim(), std::vector<QSeries>(r.dim(), zero_series(r.q_order)));
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t k = 0; k < r.dim(); ++k) {
        const QSeries& x = r.hat[n][i][k];
        QSeries res(r.q_order);
        for (std::size_t p = 0; p < r.q_order; ++p) {
          RF c = x[p];
          long scale = static_cast<long>(n) + (m + 1) * static_cast<long>(p) - m;
          res.set(p, RF(scale) * c + weighted_euler(c, vars, weights));
        }
        g[i][k] = res;
      }
    out.push_back(std::move(g));
  }
  return out;
}

bool is_zero(const std::vector<Grid<QSeries>>& residual) {
  for (const auto& g : residual)
    for (const auto& row : g)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
  return true;
}

}  // namespace cohft::qde
