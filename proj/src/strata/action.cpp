#include <functional>
#include <set>
#include <tuple>

#include "cohft/frobenius/models.hpp"
#include "cohft/strata/strata.hpp"

namespace cohft::strata {

using algebra::AlgebraError;
using algebra::make_rational;

RSeries identity_r(std::size_t dim, std::size_t order) {
  RSeries r;
  for (std::size_t n = 0; n < order; ++n) r.coeffs.push_back(n == 0 ? Matrix<RF>::identity(dim) : Matrix<RF>(dim, dim));
  return r;
}

RSeries idempotent_r(const qde::RMatrixA& r) {
  RSeries out;
  std::size_t d = r.dim();
  for (std::size_t n = 0; n < r.order(); ++n) {
    Matrix<RF> x(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (!r.hat[n](i, k).is_zero()) x(i, k) = r.hat[n](i, k) / r.deltas[k];
    out.coeffs.push_back(std::move(x));
  }
  return out;
}

RSeries series_inverse(const RSeries& r) {
  std::size_t d = r.dim();
  if (r.order() == 0) return r;
  if (!(r.coeffs[0] == Matrix<RF>::identity(d))) throw AlgebraError("R_0 must be the identity");
  RSeries out{{Matrix<RF>::identity(d)}};
  for (std::size_t n = 1; n < r.order(); ++n) {
    Matrix<RF> acc(d, d);
    for (std::size_t k = 1; k <= n; ++k) acc -= r.coeffs[k] * out.coeffs[n - k];
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

namespace {

std::vector<RF> apply(const Matrix<RF>& m, const std::vector<RF>& v) {
  std::vector<RF> r(m.rows(), RF(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

bool all_zero(const std::vector<RF>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// T from R^{-1}: T_a = -(R^{-1}_{a-1} 1) for a >= 2
std::vector<std::vector<RF>> t_from_inverse(const RSeries& inv, const std::vector<RF>& unit) {
  std::vector<std::vector<RF>> t(inv.order() + 1, std::vector<RF>(unit.size(), RF(0)));
  if (inv.order() == 0) return t;
  auto first = apply(inv.coeffs[0], unit);
  for (std::size_t i = 0; i < unit.size(); ++i) t[1][i] = unit[i] - first[i];
  if (!all_zero(t[1])) throw AlgebraError("T has a z^1 term");
  for (std::size_t a = 2; a <= inv.order(); ++a) {
    auto v = apply(inv.coeffs[a - 1], unit);
    for (std::size_t i = 0; i < v.size(); ++i) t[a][i] = -v[i];
  }
  return t;
}

}  // namespace

std::vector<std::vector<RF>> t_vector(const RSeries& r, const std::vector<RF>& unit) {
  return t_from_inverse(series_inverse(r), unit);
}

std::vector<std::vector<Matrix<RF>>> edge_bivector(const RSeries& r, const Matrix<RF>& eta_inverse) {
  RSeries inv = series_inverse(r);
  std::size_t ord = inv.order(), d = r.dim();
  // numerator N[a][b], a, b < ord
  std::vector<std::vector<Matrix<RF>>> num(ord, std::vector<Matrix<RF>>(ord, Matrix<RF>(d, d)));
  for (std::size_t a = 0; a < ord; ++a) {
    Matrix<RF> left = inv.coeffs[a] * eta_inverse;
    for (std::size_t b = 0; b < ord; ++b) num[a][b] = -(left * inv.coeffs[b].transpose());
  }
  num[0][0] += eta_inverse;
  if (!num[0][0].is_zero()) throw AlgebraError("symplectic condition violated");
  // divide by psi1 + psi2 along each total degree
  std::vector<std::vector<Matrix<RF>>> b(ord, std::vector<Matrix<RF>>(ord, Matrix<RF>(d, d)));
  for (std::size_t deg = 0; deg + 2 <= ord; ++deg) {
    Matrix<RF> prev(d, d);
    for (std::size_t a = 0; a <= deg; ++a) {
      b[a][deg - a] = num[a][deg + 1 - a] - prev;
      prev = b[a][deg - a];
    }
    if (!(num[deg + 1][0] == prev)) throw AlgebraError("symplectic condition violated");
  }
  return b;
}

Tqft::Tqft(std::vector<RF> deltas) : deltas_(std::move(deltas)), eta_inv_(Matrix<RF>::diagonal(deltas_)), unit_(deltas_.size(), RF(1)) {}

StrataElement Tqft::value(int g, const std::vector<std::size_t>& idx, int) {
  int n = static_cast<int>(idx.size());
  StrataElement r{g, n, {}};
  if (idx.empty()) {
    RF sum(0);
    for (const auto& d : deltas_) sum += d.pow(g - 1);
    r.add(Stratum::smooth(g, 0), sum);
    return r;
  }
  for (std::size_t i : idx)
    if (i != idx[0]) return r;
  r.add(Stratum::smooth(g, n), deltas_[idx[0]].pow(g - 1));
  return r;
}

struct ActedCohft::Impl {
  RSeries inverse;
  std::vector<std::vector<RF>> t;
  std::vector<std::vector<Matrix<RF>>> bivector;
  bool drop_above_dimension;
  std::map<std::tuple<int, std::vector<std::size_t>, int>, StrataElement> values;
  std::map<std::tuple<int, std::vector<std::size_t>, int>, StrataElement> vertices;
  std::map<std::pair<int, int>, std::vector<StableGraph>> graphs;
  std::map<std::pair<Stratum, int>, StrataElement> pushforwards;
};

ActedCohft::ActedCohft(RSeries r, std::shared_ptr<Cohft> base, bool drop_above_dimension)
    : impl_(std::make_shared<Impl>()), base_(std::move(base)) {
  impl_->inverse = series_inverse(r);
  impl_->t = t_from_inverse(impl_->inverse, base_->unit());
  impl_->bivector = edge_bivector(r, base_->eta_inverse());
  impl_->drop_above_dimension = drop_above_dimension;
}

namespace {

const RF& coefficient_or_zero(const std::vector<std::vector<Matrix<RF>>>& b, std::size_t x, std::size_t y, std::size_t i,
                              std::size_t j) {
  static const RF zero(0);
  if (x >= b.size() || y >= b[x].size()) throw AlgebraError("R-matrix truncated below the requested codimension");
  const RF& v = b[x][y](i, j);
  return v.is_zero() ? zero : v;
}

}  // namespace

StrataElement ActedCohft::value(int g, const std::vector<std::size_t>& idx, int codim_max) {
  auto key = std::make_tuple(g, idx, codim_max);
  if (auto it = impl_->values.find(key); it != impl_->values.end()) return it->second;
  Impl& im = *impl_;
  int n = static_cast<int>(idx.size());
  std::size_t dim = base_->dim();
  auto& graphs = im.graphs[{g, n}];
  if (graphs.empty()) graphs = enumerate_stable_graphs(g, n);

  // pi_* of the base value with k extra legs carrying T(psi)
  std::function<const StrataElement&(int, const std::vector<std::size_t>&, int)> vertex_class =
      [&](int gv, const std::vector<std::size_t>& local, int budget) -> const StrataElement& {
    auto vkey = std::make_tuple(gv, local, budget);
    if (auto it = im.vertices.find(vkey); it != im.vertices.end()) return it->second;
    int nv = static_cast<int>(local.size());
    StrataElement acc{gv, nv, {}};
    // ordered extra legs (a_e >= 2, j_e), sum (a_e - 1) <= budget, weight 1/k!
    std::vector<std::pair<int, std::size_t>> extra;
    std::function<void(int, const RF&, long)> rec = [&](int left, const RF& coef, long kfact) {
      std::vector<std::size_t> all = local;
      for (auto [a, j] : extra) all.push_back(j);
      StrataElement inner = base_->value(gv, all, left);
      for (const auto& [s, x] : inner.terms) {
        Stratum t = s;
        for (std::size_t e = 0; e < extra.size(); ++e) t.legs[static_cast<std::size_t>(nv) + e].second += extra[e].first;
        const StrataElement* pf;
        auto pkey = std::make_pair(t, nv);
        if (auto it = im.pushforwards.find(pkey); it != im.pushforwards.end()) pf = &it->second;
        else pf = &im.pushforwards.emplace(pkey, pushforward_forgotten(t, nv)).first->second;
        RF c = coef * x / RF(BigRational(kfact));
        for (const auto& [u, y] : pf->terms) acc.add(u, c * y);
      }
      for (int a = 2; a - 1 <= left && static_cast<std::size_t>(a) < im.t.size(); ++a)
        for (std::size_t j = 0; j < dim; ++j) {
          const RF& tv = im.t[static_cast<std::size_t>(a)][j];
          if (tv.is_zero()) continue;
          extra.emplace_back(a, j);
          rec(left - (a - 1), coef * tv, kfact * static_cast<long>(extra.size()));
          extra.pop_back();
        }
    };
    rec(budget, RF(1), 1);
    return im.vertices.emplace(vkey, std::move(acc)).first->second;
  };

  StrataElement result{g, n, {}};
  for (const auto& graph : graphs) {
    int edges = static_cast<int>(graph.edges.size());
    if (edges > codim_max) continue;
    std::size_t nvert = graph.genus.size();
    // half-edges: legs 0..n-1, then 2e, 2e+1 for edge e
    std::size_t halves = static_cast<std::size_t>(n) + 2 * graph.edges.size();
    std::vector<int> half_vertex(halves);
    std::vector<std::vector<std::size_t>> local(nvert);  // vertex -> half-edges in slot order
    for (int i = 0; i < n; ++i) half_vertex[static_cast<std::size_t>(i)] = graph.leg_vertex[static_cast<std::size_t>(i)];
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      half_vertex[static_cast<std::size_t>(n) + 2 * e] = graph.edges[e].first;
      half_vertex[static_cast<std::size_t>(n) + 2 * e + 1] = graph.edges[e].second;
    }
    for (std::size_t h = 0; h < halves; ++h) local[static_cast<std::size_t>(half_vertex[h])].push_back(h);
    std::vector<std::size_t> slot(halves);
    for (const auto& hs : local)
      for (std::size_t p = 0; p < hs.size(); ++p) slot[hs[p]] = p;
    RF inv_aut = RF(make_rational(1, static_cast<long>(graph.automorphisms)));

    std::vector<int> expo(halves, 0);
    std::vector<std::size_t> index(halves, 0);
    std::function<void(std::size_t, int)> choose_exponents = [&](std::size_t h, int left) {
      if (h < halves) {
        for (int a = 0; a <= left; ++a) {
          expo[h] = a;
          choose_exponents(h + 1, left - a);
        }
        expo[h] = 0;
        return;
      }
      int budget = left;
      std::function<void(std::size_t, const RF&)> choose_index = [&](std::size_t hh, const RF& coef) {
        if (hh < halves) {
          for (std::size_t i = 0; i < dim; ++i) {
            index[hh] = i;
            RF c = coef;
            if (hh < static_cast<std::size_t>(n)) {
              std::size_t a = static_cast<std::size_t>(expo[hh]);
              if (a >= im.inverse.order()) throw AlgebraError("R-matrix truncated below the requested codimension");
              const RF& x = im.inverse.coeffs[a](i, idx[hh]);
              if (x.is_zero()) continue;
              c = c * x;
            } else if ((hh - static_cast<std::size_t>(n)) % 2 == 1) {
              const RF& x = coefficient_or_zero(im.bivector, static_cast<std::size_t>(expo[hh - 1]),
                                                static_cast<std::size_t>(expo[hh]), index[hh - 1], i);
              if (x.is_zero()) continue;
              c = c * x;
            }
            choose_index(hh + 1, c);
          }
          return;
        }
        // glue vertex classes
        std::vector<const StrataElement*> vc(nvert);
        for (std::size_t v = 0; v < nvert; ++v) {
          std::vector<std::size_t> li;
          for (std::size_t h2 : local[v]) li.push_back(index[h2]);
          vc[v] = &vertex_class(graph.genus[v], li, budget);
          if (vc[v]->is_zero()) return;
        }
        std::vector<std::map<Stratum, RF>::const_iterator> pick(nvert);
        std::function<void(std::size_t, const RF&)> glue = [&](std::size_t v, const RF& c) {
          if (v < nvert) {
            for (auto it = vc[v]->terms.begin(); it != vc[v]->terms.end(); ++it) {
              pick[v] = it;
              glue(v + 1, c * it->second);
            }
            return;
          }
          Stratum s;
          std::vector<int> offset(nvert);
          for (std::size_t w = 0; w < nvert; ++w) {
            const Stratum& t = pick[w]->first;
            offset[w] = static_cast<int>(s.genus.size());
            s.genus.insert(s.genus.end(), t.genus.begin(), t.genus.end());
            s.kappa.insert(s.kappa.end(), t.kappa.begin(), t.kappa.end());
            for (const auto& e : t.edges) s.edges.push_back({e.v0 + offset[w], e.psi0, e.v1 + offset[w], e.psi1});
          }
          auto attach = [&](std::size_t h) {
            std::size_t w = static_cast<std::size_t>(half_vertex[h]);
            auto [u, psi] = pick[w]->first.legs[slot[h]];
            return std::pair(u + offset[w], psi + expo[h]);
          };
          for (int i = 0; i < n; ++i) s.legs.push_back(attach(static_cast<std::size_t>(i)));
          for (std::size_t e = 0; e < graph.edges.size(); ++e) {
            auto [u0, p0] = attach(static_cast<std::size_t>(n) + 2 * e);
            auto [u1, p1] = attach(static_cast<std::size_t>(n) + 2 * e + 1);
            s.edges.push_back({u0, p0, u1, p1});
          }
          if (s.codimension() > codim_max) return;
          if (im.drop_above_dimension && s.exceeds_dimension()) return;
          result.add(s, c);
        };
        glue(0, coef * inv_aut);
      };
      choose_index(0, RF(1));
    };
    choose_exponents(0, codim_max - edges);
  }
  return im.values.emplace(key, std::move(result)).first->second;
}

StrataElement evaluate(Cohft& cohft, int g, const std::vector<std::vector<RF>>& insertions, int codim_max) {
  std::size_t n = insertions.size(), dim = cohft.dim();
  StrataElement out{g, static_cast<int>(n), {}};
  std::vector<std::size_t> idx(n, 0);
  std::function<void(std::size_t, const RF&)> rec = [&](std::size_t h, const RF& c) {
    if (h == n) {
      out += cohft.value(g, idx, codim_max).scaled(c);
      return;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (insertions[h][i].is_zero()) continue;
      idx[h] = i;
      rec(h + 1, c * insertions[h][i]);
    }
  };
  rec(0, RF(1));
  return out;
}

StrataElement rmatrix_action(std::shared_ptr<Cohft> base, const RSeries& r, int g,
                             const std::vector<std::vector<RF>>& insertions, int codim_max) {
  ActedCohft acted(r, std::move(base));
  return evaluate(acted, g, insertions, codim_max);
}

namespace {

// p = q d + rem with deg_var rem < deg_var d; d has a constant leading coefficient in var
std::pair<Polynomial, Polynomial> divide_in(const Polynomial& p, const Polynomial& d, std::size_t var) {
  auto dc = d.coefficients_in(var);
  if (dc.empty() || !dc.back().is_constant()) throw AlgebraError("disc needs a constant leading coefficient");
  BigRational lead = dc.back().constant_value();
  std::size_t dd = dc.size() - 1;
  Polynomial rem = p, quot(0);
  Polynomial x = Polynomial::variable(var);
  while (!rem.is_zero() && rem.degree(var) >= dd) {
    auto rc = rem.coefficients_in(var);
    std::size_t shift = rc.size() - 1 - dd;
    Polynomial f = rc.back() * Polynomial(1 / lead) * x.pow(static_cast<unsigned>(shift));
    quot += f;
    rem -= f * d;
  }
  return {quot, rem};
}

}  // namespace

std::map<Stratum, Polynomial> RelationVector::at_order(int order) const {
  std::map<Stratum, Polynomial> out;
  for (const auto& [s, parts] : polar)
    if (auto it = parts.find(order); it != parts.end()) out.emplace(s, it->second);
  return out;
}

Json RelationVector::to_json(const algebra::VariableSet& vars) const {
  Json j = Json::object();
  j["disc"] = algebra::to_json(disc, vars);
  Json orders = Json::object();
  std::set<int> all;
  for (const auto& [s, parts] : polar)
    for (const auto& [k, p] : parts) all.insert(k);
  for (int k : all) {
    Json vec = Json::array();
    for (const auto& [s, p] : at_order(k)) {
      Json e = s.to_json();
      e["codim"] = s.codimension();
      e["coefficient"] = algebra::to_json(p, vars);
      vec.push_back(std::move(e));
    }
    orders[std::to_string(k)] = std::move(vec);
  }
  j["poleOrders"] = std::move(orders);
  return j;
}

RelationVector extract_relations(const StrataElement& el, const Polynomial& disc, std::size_t var) {
  RelationVector rv{disc, var, {}};
  for (const auto& [s, f] : el.terms) {
    Polynomial den = f.denominator();
    int k = 0;
    while (!den.is_constant()) {
      auto q = den.divide_exact(disc);
      if (!q) throw AlgebraError("unexpected denominator");
      den = *q;
      ++k;
    }
    Polynomial p = f.numerator() * Polynomial(1 / den.constant_value());
    std::map<int, Polynomial> parts;
    for (int j = 0; j < k; ++j) {
      auto [q, r] = divide_in(p, disc, var);
      if (!r.is_zero()) parts.emplace(k - j, r);
      p = q;
    }
    if (!parts.empty()) rv.polar.emplace(s, std::move(parts));
  }
  return rv;
}

BigRational spin_degree(int r, int g, const std::vector<int>& a) {
  long s = static_cast<long>(r - 2) * (g - 1);
  for (int x : a) s += x;
  return make_rational(s, r);
}

StrataElement degree_vanishing_part(const StrataElement& el, const BigRational& degree) {
  if (degree.get_den() != 1) return el;
  StrataElement out{el.g, el.n, {}};
  for (const auto& [s, c] : el.terms)
    if (BigRational(s.codimension()) > degree) out.terms.emplace(s, c);
  return out;
}

namespace {

// even rational function of Q -> function of t1 = -Q^2
RF even_to_t(const RF& f) {
  Polynomial num = f.numerator(), den = f.denominator();
  if (den.min_degree(0) % 2 == 1) {
    num = num * Polynomial::variable(0);
    den = den * Polynomial::variable(0);
  }
  auto convert = [](const Polynomial& p) {
    Polynomial r(0);
    for (const auto& term : p.terms()) {
      unsigned e = term.exponents[0];
      if (e % 2 != 0) throw AlgebraError("coefficient is not symmetric in the critical points");
      BigRational c = (e / 2) % 2 == 0 ? term.coefficient : -term.coefficient;
      r += Polynomial::variable(0).pow(e / 2) * Polynomial(c);
    }
    return r;
  };
  return RF(convert(num)) / RF(convert(den));
}

}  // namespace

SpinResult three_spin_relations(int g, const std::vector<int>& a, int codim_max, bool identity) {
  auto model = frobenius::make_am_model(1);
  std::size_t order = static_cast<std::size_t>(codim_max) + 1;
  RSeries r = identity ? identity_r(2, order) : idempotent_r(qde::solve_r_a(model, order));
  auto tqft = std::make_shared<Tqft>(model.deltas);
  std::vector<std::vector<RF>> ins;
  for (int x : a) {
    if (x < 0 || x > 1) throw AlgebraError("3-spin insertions are 0 or 1");
    ins.push_back({model.roots[0].pow(x), model.roots[1].pow(x)});
  }
  StrataElement raw = rmatrix_action(tqft, r, g, ins, codim_max);
  SpinResult out;
  out.element = StrataElement{g, static_cast<int>(a.size()), {}};
  for (const auto& [s, c] : raw.terms) out.element.terms.emplace(s, even_to_t(c));
  out.disc = frobenius::discriminant_in_t(1);
  out.relations = extract_relations(out.element, out.disc, 0);
  return out;
}

}  // namespace cohft::strata
