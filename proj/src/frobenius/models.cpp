#include "cohft/frobenius/models.hpp"

#include "cohft/algebra/combinatorics.hpp"
#include "cohft/algebra/gcd.hpp"

namespace cohft::frobenius {

using algebra::AlgebraError;
using algebra::UPoly;

namespace {

std::vector<RF> expand_roots(const std::vector<RF>& roots) {
  // prod (X - r) low to high
  std::vector<RF> c{RF(1)};
  for (const auto& r : roots) {
    std::vector<RF> next(c.size() + 1, RF(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

RF eval_upoly(const std::vector<RF>& c, const RF& x) {
  RF r(0);
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::vector<RF> derivative(const std::vector<RF>& c) {
  std::vector<RF> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * RF(static_cast<long>(i)));
  return d;
}

void fill_from_roots(AmModel& model) {
  int m = model.m;
  model.fprime = expand_roots(model.roots);
  if (!model.fprime[static_cast<std::size_t>(m)].is_zero()) throw AlgebraError("critical points must sum to zero");
  model.t.clear();
  for (int mu = 0; mu < m; ++mu) model.t.push_back(model.fprime[static_cast<std::size_t>(mu)] * RF(algebra::make_rational(1, mu + 1)));
  model.deltas = build_deltas(model.roots, model.fprime);
  model.disc = RF(1);
  for (const auto& d : model.deltas) model.disc *= d;
  model.euler_weights.clear();
  for (int mu = 1; mu <= m; ++mu) model.euler_weights.push_back(algebra::make_rational(m + 2 - mu, m + 2));
}

}  // namespace

VariableSet t_variables(int m) {
  std::vector<std::string> names;
  for (int mu = 1; mu <= m; ++mu) names.push_back("t" + std::to_string(mu));
  names.push_back("X");
  return VariableSet(names);
}

AmModel make_am_model(int m, const std::vector<std::string>& extra_vars) {
  if (m < 1) throw AlgebraError("m must be positive");
  if (static_cast<std::size_t>(m) + extra_vars.size() > algebra::kMaxVars) throw AlgebraError("too many variables");
  AmModel model;
  model.m = m;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("Q" + std::to_string(i));
  for (const auto& e : extra_vars) names.push_back(e);
  model.vars = VariableSet(names);
  RF last(0);
  for (int i = 0; i < m; ++i) {
    model.roots.push_back(RF::variable(static_cast<std::size_t>(i)));
    last -= model.roots.back();
  }
  model.roots.push_back(last);
  fill_from_roots(model);
  return model;
}

AmModel make_am_model_at(const std::vector<BigRational>& roots) {
  if (roots.size() < 2) throw AlgebraError("need at least two critical points");
  AmModel model;
  model.m = static_cast<int>(roots.size()) - 1;
  model.symbolic = false;
  for (const auto& r : roots) model.roots.emplace_back(r);
  fill_from_roots(model);
  return model;
}

std::vector<RF> fprime_in_t(int m) {
  std::vector<RF> c(static_cast<std::size_t>(m) + 2, RF(0));
  for (int mu = 0; mu < m; ++mu) c[static_cast<std::size_t>(mu)] = RF(static_cast<long>(mu + 1)) * RF::variable(static_cast<std::size_t>(mu));
  c.back() = RF(1);
  return c;
}

std::vector<RF> quantum_product(const std::vector<RF>& a, const std::vector<RF>& b, const std::vector<RF>& relation) {
  auto prod = UPoly<RF>(a) * UPoly<RF>(b);
  auto rem = UPoly<RF>::divmod(prod, UPoly<RF>(relation)).second;
  std::vector<RF> r = rem.coefficients();
  r.resize(relation.size() - 1, RF(0));
  return r;
}

RF residue_pairing(const std::vector<RF>& a, const std::vector<RF>& b, const std::vector<RF>& relation) {
  return quantum_product(a, b, relation).back();
}

Matrix<RF> flat_metric(const std::vector<RF>& relation) {
  std::size_t n = relation.size() - 1;
  Matrix<RF> eta(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<RF> xa(a + 1, RF(0)), xb(b + 1, RF(0));
      xa[a] = RF(1);
      xb[b] = RF(1);
      eta(a, b) = residue_pairing(xa, xb, relation);
    }
  return eta;
}

std::vector<RF> build_deltas(const std::vector<RF>& roots, const std::vector<RF>& fprime) {
  std::vector<RF> fpp = derivative(fprime);
  std::vector<RF> deltas;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    RF d(1);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) d *= roots[i] - roots[j];
    if (d.is_zero()) throw AlgebraError("non-semisimple point");
    if (!(d == eval_upoly(fpp, roots[i]))) throw AlgebraError("Delta formulas disagree");
    deltas.push_back(d);
  }
  return deltas;
}

Polynomial discriminant_in_t(int m) {
  auto c = fprime_in_t(m);
  std::size_t x = static_cast<std::size_t>(m);
  Polynomial f;
  for (std::size_t i = 0; i < c.size(); ++i) {
    algebra::Exponents e{};
    e[x] = static_cast<std::uint16_t>(i);
    f += c[i].numerator() * Polynomial::monomial(e, 1);
  }
  Polynomial res = algebra::resultant(f, f.derivative(x), x);
  // sign: compare with prod Delta at the split point with roots 1..m, -(sum)
  std::vector<BigRational> roots;
  BigRational s = 0;
  for (int i = 1; i <= m; ++i) {
    roots.push_back(i);
    s += i;
  }
  roots.push_back(-s);
  AmModel at = make_am_model_at(roots);
  std::vector<BigRational> point;
  for (const auto& t : at.t) point.push_back(t.constant_value());
  point.push_back(0);
  BigRational value = res.evaluate(point);
  if (value == -at.disc.constant_value()) return -res;
  if (value != at.disc.constant_value()) throw AlgebraError("discriminant normalization failed");
  return res;
}

std::vector<RF> cofactor_polynomial(const std::vector<RF>& roots, std::size_t i) {
  std::vector<RF> others;
  for (std::size_t j = 0; j < roots.size(); ++j)
    if (j != i) others.push_back(roots[j]);
  return expand_roots(others);
}

PsiMatrix build_psi(const std::vector<RF>& roots, const std::vector<RF>& deltas, const std::vector<int>& branch) {
  std::size_t n = roots.size();
  if (branch.size() != n) throw AlgebraError("missing square-root branch choice");
  for (int b : branch)
    if (b != 1 && b != -1) throw AlgebraError("branch choice must be +1 or -1");
  PsiMatrix psi{Matrix<RF>(n, n), deltas, branch};
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cofactor_polynomial(roots, i);
    RF inv = deltas[i].inverse();
    for (std::size_t a = 0; a < n; ++a) psi.hat(a, i) = c[a] * inv;
  }
  return psi;
}

Matrix<RF> psi_hat_inverse(const std::vector<RF>& roots) {
  std::size_t n = roots.size();
  Matrix<RF> v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RF p(1);
    for (std::size_t a = 0; a < n; ++a) {
      v(i, a) = p;
      p *= roots[i];
    }
  }
  return v;
}

bool psi_is_orthonormal(const PsiMatrix& psi, const Matrix<RF>& eta) {
  Matrix<RF> g = psi.hat.transpose() * eta * psi.hat;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      RF expected = i == j ? psi.deltas[i].inverse() : RF(0);
      if (!(g(i, j) == expected)) return false;
    }
  return true;
}

std::vector<RF> pm_relation(const std::vector<RF>& lambdas, const RF& q) {
  RF bar(0);
  for (const auto& l : lambdas) bar += l;
  bar *= RF(algebra::make_rational(1, static_cast<long>(lambdas.size())));
  std::vector<RF> shifted;
  for (const auto& l : lambdas) shifted.push_back(l - bar);
  auto c = expand_roots(shifted);
  c[0] -= q;
  return c;
}

PmModel make_pm_model(int m, std::size_t q_order) {
  std::vector<std::string> names;
  std::vector<RF> lambdas;
  for (int i = 0; i <= m; ++i) {
    names.push_back("lam" + std::to_string(i));
    lambdas.push_back(RF::variable(static_cast<std::size_t>(i)));
  }
  names.push_back("q");
  return make_pm_model(m, lambdas, VariableSet(names), q_order);
}

PmModel make_pm_model(int m, std::vector<RF> lambdas, VariableSet vars, std::size_t q_order) {
  if (lambdas.size() != static_cast<std::size_t>(m) + 1) throw AlgebraError("need m+1 lambdas");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lambdas[i] == lambdas[j]) throw AlgebraError("non-semisimple classical limit");
  PmModel model;
  model.m = m;
  model.vars = std::move(vars);
  model.lambdas = lambdas;
  model.q_order = q_order;
  model.lambda_bar = RF(0);
  for (const auto& l : lambdas) model.lambda_bar += l;
  model.lambda_bar *= RF(algebra::make_rational(1, m + 1));
  auto poly = expand_roots(lambdas);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) {
    model.P.push_back(algebra::newton_root_series(poly, lambdas[i], q_order));
    model.Q.push_back(model.P.back() - QSeries::constant(model.lambda_bar));
  }
  for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) {
    QSeries d = QSeries::constant(RF(1), q_order);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(m); ++j)
      if (j != i) d = d * (model.P[i] - model.P[j]);
    model.deltas.push_back(d);
  }
  model.eta = flat_metric(pm_relation(lambdas, RF(0)));
  return model;
}

Matchup matchup_phi(int m, const std::vector<RF>& lambdas, const RF& q) {
  if (lambdas.size() != static_cast<std::size_t>(m) + 1) throw AlgebraError("need m+1 lambdas");
  auto c = pm_relation(lambdas, q);
  Matchup r;
  for (int mu = 0; mu < m; ++mu) r.t.push_back(c[static_cast<std::size_t>(mu)] * RF(algebra::make_rational(1, mu + 1)));
  // lambda = -prod(lambda_bar - lambda_i) = -(constant term at q = 0)
  r.lambda = -(c[0] + q);
  return r;
}

SqrtExt tqft_value(int g, const std::vector<std::size_t>& indices, const std::vector<RF>& deltas) {
  if (indices.empty()) {
    RF acc(0);
    for (const auto& d : deltas) acc += d.pow(g - 1);
    return SqrtExt(acc);
  }
  for (auto i : indices)
    if (i != indices[0]) return SqrtExt(RF(0));
  long twice = 2L * g - 2 + static_cast<long>(indices.size());
  if (twice < 0) throw AlgebraError("unstable TQFT value");
  const RF& d = deltas.at(indices[0]);
  RF integral = d.pow(twice / 2);
  if (twice % 2 == 0) return SqrtExt(integral);
  auto ext = SqrtExt::make_extension("sqrtDelta" + std::to_string(indices[0]), {-d, RF(0), RF(1)});
  return SqrtExt::generator(ext) * SqrtExt(integral);
}

namespace {

std::vector<BigRational> rational_list(const algebra::Json& j) {
  std::vector<BigRational> r;
  for (const auto& x : j) r.push_back(algebra::rational_from_json(x));
  return r;
}

// Rational roots of a monic polynomial with rational coefficients, or
// nullopt when it does not split over Q.
std::optional<std::vector<BigRational>> rational_roots(std::vector<BigRational> c) {
  algebra::BigInteger den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<algebra::BigInteger> z;
  for (const auto& x : c) z.push_back(algebra::BigInteger(x * BigRational(den)));
  std::vector<BigRational> roots;
  auto eval = [&](const BigRational& x) {
    BigRational r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  };
  std::size_t degree = c.size() - 1;
  while (roots.size() < degree) {
    // deflate zero roots first
    if (c[0] == 0) {
      roots.push_back(0);
      c.erase(c.begin());
      continue;
    }
    algebra::BigInteger a0 = abs(algebra::BigInteger(c[0] * BigRational(den)));
    bool found = false;
    if (a0 > 1000000) return std::nullopt;
    for (long p = 1; p <= a0.get_si() && !found; ++p) {
      if (a0.get_si() % p) continue;
      for (long q = 1; q <= den.get_si() && !found; ++q) {
        if (den.get_si() % q) continue;
        for (int sgn : {1, -1}) {
          BigRational x = algebra::make_rational(sgn * p, q);
          if (eval(x) == 0) {
            roots.push_back(x);
            // synthetic division
            std::vector<BigRational> next(c.size() - 1);
            BigRational carry = 0;
            for (std::size_t i = c.size(); i-- > 1;) {
              carry = c[i] + carry * x;
              next[i - 1] = carry;
            }
            c = std::move(next);
            found = true;
            break;
          }
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

}  // namespace

ModelSpec model_spec_from_json(const algebra::Json& j) {
  ModelSpec s;
  std::string side = j.value("side", std::string("A"));
  if (side != "A" && side != "P") throw AlgebraError("side must be A or P");
  s.side = side[0];
  s.m = j.value("m", 1);
  if (s.m < 1) throw AlgebraError("m must be positive");
  s.q_order = j.value("qOrder", 1);
  if (j.contains("roots") && !j["roots"].is_null()) s.roots = rational_list(j["roots"]);
  if (j.contains("t") && !j["t"].is_null()) {
    auto t = rational_list(j["t"]);
    if (t.size() != static_cast<std::size_t>(s.m)) throw AlgebraError("need m t-values");
    std::vector<BigRational> c(static_cast<std::size_t>(s.m) + 2, 0);
    for (int mu = 0; mu < s.m; ++mu) c[static_cast<std::size_t>(mu)] = BigRational(mu + 1) * t[static_cast<std::size_t>(mu)];
    c.back() = 1;
    auto roots = rational_roots(c);
    if (!roots) throw AlgebraError("f' does not split over Q at the given t");
    s.roots = roots;
  }
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    s.lambdas = rational_list(j["lambda"]);
    if (s.lambdas->size() != static_cast<std::size_t>(s.m) + 1) throw AlgebraError("need m+1 lambda values");
  }
  if (s.roots && s.roots->size() != static_cast<std::size_t>(s.m) + 1) throw AlgebraError("need m+1 roots");
  return s;
}

}  // namespace cohft::frobenius
