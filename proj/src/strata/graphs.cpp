#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <set>

#include "cohft/strata/strata.hpp"

namespace cohft::strata {

using algebra::AlgebraError;

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

Stratum bare(const StableGraph& graph) {
  Stratum s;
  s.genus = graph.genus;
  s.kappa.assign(graph.genus.size(), {});
  for (int v : graph.leg_vertex) s.legs.emplace_back(v, 0);
  for (auto [a, b] : graph.edges) s.edges.push_back({a, 0, b, 0});
  return s;
}

StableGraph from_bare(const Stratum& s) {
  StableGraph graph;
  graph.genus = s.genus;
  for (auto [v, psi] : s.legs) graph.leg_vertex.push_back(v);
  for (const auto& e : s.edges) graph.edges.emplace_back(e.v0, e.v1);
  return graph;
}

Stratum relabel_vertices(const Stratum& s, const std::vector<int>& p) {
  Stratum r;
  std::size_t nv = s.genus.size();
  r.genus.resize(nv);
  r.kappa.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    r.genus[static_cast<std::size_t>(p[v])] = s.genus[v];
    r.kappa[static_cast<std::size_t>(p[v])] = s.kappa[v];
  }
  for (auto [v, psi] : s.legs) r.legs.emplace_back(p[static_cast<std::size_t>(v)], psi);
  for (const auto& e : s.edges) {
    Stratum::Edge x{p[static_cast<std::size_t>(e.v0)], e.psi0, p[static_cast<std::size_t>(e.v1)], e.psi1};
    if (std::pair(x.v1, x.psi1) < std::pair(x.v0, x.psi0)) x = {x.v1, x.psi1, x.v0, x.psi0};
    r.edges.push_back(x);
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

bool connected(const Stratum& s) {
  std::size_t nv = s.genus.size();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : s.edges) parent[static_cast<std::size_t>(find(e.v0))] = find(e.v1);
  for (std::size_t v = 1; v < nv; ++v)
    if (find(static_cast<int>(v)) != find(0)) return false;
  return true;
}

}  // namespace

int StableGraph::total_genus() const {
  int g = std::accumulate(genus.begin(), genus.end(), 0);
  return g + static_cast<int>(edges.size()) - static_cast<int>(genus.size()) + 1;
}

std::vector<int> StableGraph::valences() const { return bare(*this).valences(); }

Stratum Stratum::smooth(int g, int n) {
  Stratum s;
  s.genus = {g};
  s.kappa = {{}};
  for (int i = 0; i < n; ++i) s.legs.emplace_back(0, 0);
  return s;
}

int Stratum::codimension() const {
  int c = static_cast<int>(edges.size());
  for (auto [v, psi] : legs) c += psi;
  for (const auto& e : edges) c += e.psi0 + e.psi1;
  for (const auto& k : kappa) c += std::accumulate(k.begin(), k.end(), 0);
  return c;
}

std::vector<int> Stratum::valences() const {
  std::vector<int> val(genus.size(), 0);
  for (auto [v, psi] : legs) ++val[static_cast<std::size_t>(v)];
  for (const auto& e : edges) {
    ++val[static_cast<std::size_t>(e.v0)];
    ++val[static_cast<std::size_t>(e.v1)];
  }
  return val;
}

bool Stratum::exceeds_dimension() const {
  std::vector<int> deg(genus.size(), 0);
  for (auto [v, psi] : legs) deg[static_cast<std::size_t>(v)] += psi;
  for (const auto& e : edges) {
    deg[static_cast<std::size_t>(e.v0)] += e.psi0;
    deg[static_cast<std::size_t>(e.v1)] += e.psi1;
  }
  auto val = valences();
  for (std::size_t v = 0; v < genus.size(); ++v) {
    int d = deg[v] + std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
    if (d > 3 * genus[v] - 3 + val[v]) return true;
  }
  return false;
}

Stratum Stratum::canonical() const {
  std::size_t nv = genus.size();
  auto val = valences();
  // cheap invariant; only orders sorting it are tried
  using Inv = std::tuple<int, std::vector<int>, int>;
  std::vector<Inv> inv;
  for (std::size_t v = 0; v < nv; ++v) inv.emplace_back(genus[v], kappa[v], val[v]);
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)]; });
  // blocks of equal invariants in sorted order
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 1; i < nv; ++i)
    if (inv[static_cast<std::size_t>(order[i])] != inv[static_cast<std::size_t>(order[i - 1])]) starts.push_back(i);
  starts.push_back(nv);
  std::optional<Stratum> best;
  std::vector<int> pos = order;
  for (std::size_t b = 0; b + 1 < starts.size(); ++b)
    std::sort(pos.begin() + static_cast<long>(starts[b]), pos.begin() + static_cast<long>(starts[b + 1]));
  while (true) {
    std::vector<int> p(nv);
    for (std::size_t i = 0; i < nv; ++i) p[static_cast<std::size_t>(pos[i])] = static_cast<int>(i);
    Stratum r = relabel_vertices(*this, p);
    if (!best || r < *best) best = std::move(r);
    // next permutation within blocks, odometer style
    std::size_t b = starts.size() - 1;
    bool advanced = false;
    while (b-- > 0) {
      auto first = pos.begin() + static_cast<long>(starts[b]);
      auto last = pos.begin() + static_cast<long>(starts[b + 1]);
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return *best;
}

Stratum Stratum::relabel_markings(const std::vector<int>& perm) const {
  Stratum r = *this;
  for (std::size_t i = 0; i < legs.size(); ++i) r.legs[static_cast<std::size_t>(perm[i])] = legs[i];
  return r;
}

Json Stratum::to_json() const {
  Json j = Json::object();
  j["genus"] = genus;
  j["kappa"] = kappa;
  Json legs_j = Json::array();
  for (auto [v, psi] : legs) legs_j.push_back({v, psi});
  j["legs"] = legs_j;
  Json edges_j = Json::array();
  for (const auto& e : edges) edges_j.push_back({e.v0, e.psi0, e.v1, e.psi1});
  j["edges"] = edges_j;
  return j;
}

std::size_t graph_automorphisms(const StableGraph& graph) {
  Stratum s = bare(graph);
  std::sort(s.edges.begin(), s.edges.end());
  std::size_t nv = s.genus.size();
  std::vector<int> p(nv);
  std::iota(p.begin(), p.end(), 0);
  Stratum self = relabel_vertices(s, p);
  std::size_t vertex_syms = 0;
  do {
    if (relabel_vertices(s, p) == self) ++vertex_syms;
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::pair<int, int>, std::size_t> mult;
  for (const auto& e : s.edges) ++mult[{e.v0, e.v1}];
  std::size_t edge_syms = 1;
  for (auto [key, k] : mult) {
    edge_syms *= factorial(k);
    if (key.first == key.second) edge_syms <<= k;
  }
  return vertex_syms * edge_syms;
}

std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw AlgebraError("unstable (g, n)");
  std::set<Stratum> seen;
  std::vector<Stratum> layer{Stratum::smooth(g, n)};
  seen.insert(layer[0]);
  while (!layer.empty()) {
    std::vector<Stratum> next;
    auto push = [&](Stratum s) {
      std::sort(s.edges.begin(), s.edges.end());
      Stratum c = s.canonical();
      if (seen.insert(c).second) next.push_back(c);
    };
    for (const auto& s : layer) {
      std::size_t nv = s.genus.size();
      for (std::size_t v = 0; v < nv; ++v) {
        int gv = s.genus[v];
        if (gv >= 1) {
          Stratum t = s;
          --t.genus[v];
          t.edges.push_back({static_cast<int>(v), 0, static_cast<int>(v), 0});
          push(t);
        }
        // split v into v and a new vertex w joined by an edge
        std::vector<std::pair<int, int>> slots;  // (kind, index): 0 leg, 1 edge end 0, 2 edge end 1
        for (std::size_t i = 0; i < s.legs.size(); ++i)
          if (s.legs[i].first == static_cast<int>(v)) slots.emplace_back(0, static_cast<int>(i));
        for (std::size_t e = 0; e < s.edges.size(); ++e) {
          if (s.edges[e].v0 == static_cast<int>(v)) slots.emplace_back(1, static_cast<int>(e));
          if (s.edges[e].v1 == static_cast<int>(v)) slots.emplace_back(2, static_cast<int>(e));
        }
        std::size_t h = slots.size();
        int w = static_cast<int>(nv);
        for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
          int moved = std::popcount(mask);
          for (int g1 = 0; g1 <= gv; ++g1) {
            int g2 = gv - g1;
            int n1 = static_cast<int>(h) - moved + 1, n2 = moved + 1;
            if (2 * g1 - 2 + n1 <= 0 || 2 * g2 - 2 + n2 <= 0) continue;
            Stratum t = s;
            t.genus[v] = g1;
            t.genus.push_back(g2);
            t.kappa.emplace_back();
            for (std::size_t i = 0; i < h; ++i) {
              if (!(mask >> i & 1)) continue;
              auto [kind, idx] = slots[i];
              if (kind == 0) t.legs[static_cast<std::size_t>(idx)].first = w;
              else if (kind == 1) t.edges[static_cast<std::size_t>(idx)].v0 = w;
              else t.edges[static_cast<std::size_t>(idx)].v1 = w;
            }
            for (auto& e : t.edges)
              if (e.v1 < e.v0) std::swap(e.v0, e.v1);
            t.edges.push_back({static_cast<int>(v), 0, w, 0});
            push(t);
          }
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<StableGraph> out;
  for (const auto& s : seen) {
    if (!connected(s)) throw AlgebraError("degeneration produced a disconnected graph");
    StableGraph graph = from_bare(s);
    graph.automorphisms = graph_automorphisms(graph);
    out.push_back(std::move(graph));
  }
  std::stable_sort(out.begin(), out.end(), [](const StableGraph& a, const StableGraph& b) { return a.edges.size() < b.edges.size(); });
  return out;
}

void StrataElement::add(const Stratum& s, const RF& c) {
  if (c.is_zero()) return;
  Stratum key = s.canonical();
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

StrataElement& StrataElement::operator+=(const StrataElement& o) {
  for (const auto& [s, c] : o.terms) {
    auto it = terms.find(s);
    if (it == terms.end()) {
      terms.emplace(s, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

StrataElement StrataElement::scaled(const RF& c) const {
  StrataElement r{g, n, {}};
  if (c.is_zero()) return r;
  for (const auto& [s, x] : terms) r.terms.emplace(s, x * c);
  return r;
}

StrataElement StrataElement::codimension_part(int codim) const {
  StrataElement r{g, n, {}};
  for (const auto& [s, x] : terms)
    if (s.codimension() == codim) r.terms.emplace(s, x);
  return r;
}

StrataElement StrataElement::relabel_markings(const std::vector<int>& perm) const {
  StrataElement r{g, n, {}};
  for (const auto& [s, x] : terms) r.add(s.relabel_markings(perm), x);
  return r;
}

Json StrataElement::to_json(const algebra::VariableSet& vars) const {
  Json j = Json::object();
  j["g"] = g;
  j["n"] = n;
  Json t = Json::array();
  for (const auto& [s, x] : terms) {
    Json e = s.to_json();
    e["codim"] = s.codimension();
    e["coefficient"] = algebra::to_json(x, vars);
    t.push_back(std::move(e));
  }
  j["terms"] = std::move(t);
  return j;
}

StrataElement pushforward_forgotten(const Stratum& s, int keep) {
  std::map<Stratum, RF> current{{s, RF(1)}};
  for (int p = s.markings() - 1; p >= keep; --p) {
    std::map<Stratum, RF> next;
    for (const auto& [t, c] : current) {
      auto [u, e] = t.legs[static_cast<std::size_t>(p)];
      if (e < 2) throw AlgebraError("forgotten marking needs psi-exponent >= 2");
      auto val = t.valences();
      std::size_t uu = static_cast<std::size_t>(u);
      if (2 * t.genus[uu] - 2 + val[uu] - 1 <= 0) continue;  // psi on M_{0,3} vanishes
      Stratum base = t;
      base.legs.pop_back();
      const auto& kap = t.kappa[uu];
      std::size_t k = kap.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> rest;
        int merged = e - 1;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask >> i & 1) merged += kap[i];
          else rest.push_back(kap[i]);
        }
        rest.push_back(merged);
        std::sort(rest.begin(), rest.end());
        Stratum r = base;
        r.kappa[uu] = std::move(rest);
        next[r] += c;
      }
    }
    current = std::move(next);
  }
  StrataElement out{from_bare(s).total_genus(), keep, {}};
  for (const auto& [t, c] : current) out.add(t, c);
  return out;
}

}  // namespace cohft::strata
