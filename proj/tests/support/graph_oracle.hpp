#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "cohft/strata/strata.hpp"

// Brute-force stable graph oracle: labeled multigraphs grouped by explicit isomorphism.
namespace graph_oracle {

using cohft::strata::StableGraph;

// Labeled multigraph: genus per vertex, leg -> vertex, symmetric multiplicity matrix.
struct Labeled {
  std::vector<int> genus;
  std::vector<int> legs;
  std::vector<std::vector<int>> mult;
  bool operator==(const Labeled&) const = default;
};

inline Labeled permuted(const Labeled& x, const std::vector<int>& p) {
  std::size_t v = x.genus.size();
  Labeled r{std::vector<int>(v), {}, std::vector<std::vector<int>>(v, std::vector<int>(v))};
  for (std::size_t i = 0; i < v; ++i) r.genus[static_cast<std::size_t>(p[i])] = x.genus[i];
  for (int l : x.legs) r.legs.push_back(p[static_cast<std::size_t>(l)]);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) r.mult[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(p[j])] = x.mult[i][j];
  return r;
}

inline std::vector<std::vector<int>> signature(const Labeled& x) {
  std::vector<std::vector<int>> sig;
  for (std::size_t i = 0; i < x.genus.size(); ++i) {
    std::vector<int> row = x.mult[i];
    std::sort(row.begin(), row.end());
    row.push_back(x.genus[i]);
    row.push_back(static_cast<int>(std::count(x.legs.begin(), x.legs.end(), static_cast<int>(i))));
    row.push_back(x.mult[i][i]);
    sig.push_back(row);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

inline bool isomorphic(const Labeled& a, const Labeled& b) {
  if (a.genus.size() != b.genus.size() || signature(a) != signature(b)) return false;
  std::vector<int> p(a.genus.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (permuted(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool ok(const Labeled& x) {
  std::size_t v = x.genus.size();
  std::vector<int> val(v, 0);
  for (int l : x.legs) ++val[static_cast<std::size_t>(l)];
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) val[i] += x.mult[i][j] * (i == j ? 2 : 1);
  for (std::size_t i = 0; i < v; ++i)
    if (2 * x.genus[i] - 2 + val[i] <= 0) return false;
  std::vector<bool> seen(v, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < v; ++j)
      if (x.mult[i][j] > 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

struct OracleClass {
  Labeled rep;
  std::size_t labeled_count = 0;
  std::size_t automorphisms = 0;
};

inline std::vector<OracleClass> brute_force(int g, int n) {
  std::vector<OracleClass> classes;
  for (int v = 1; v <= 2 * g - 2 + n; ++v) {
    std::size_t sv = static_cast<std::size_t>(v);
    // upper-triangular multiplicity slots
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < sv; ++i)
      for (std::size_t j = i; j < sv; ++j) slots.emplace_back(i, j);
    std::vector<int> genus(sv, 0);
    while (true) {
      int edges = g - std::accumulate(genus.begin(), genus.end(), 0) + v - 1;
      if (edges >= 0) {
        std::vector<int> legs(static_cast<std::size_t>(n), 0);
        while (true) {
          std::vector<int> m(slots.size(), 0);
          std::vector<int> minval(sv), leg_count(sv, 0);
          for (int l : legs) ++leg_count[static_cast<std::size_t>(l)];
          int total_min = 0;
          for (std::size_t i = 0; i < sv; ++i) total_min += minval[i] = std::max(0, 3 - 2 * genus[i]);
          // valence of vertex i is final once its row is assigned
          auto row_ok = [&](std::size_t i) {
            int val = leg_count[i];
            for (std::size_t s2 = 0; s2 < slots.size(); ++s2) {
              auto [a, b] = slots[s2];
              if (a == i && b == i) val += 2 * m[s2];
              else if (a == i || b == i) val += m[s2];
            }
            return val >= minval[i] && val <= 2 * edges + n - (total_min - minval[i]);
          };
          std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
            if (k > 0 && (k == slots.size() || slots[k].first != slots[k - 1].first) && !row_ok(slots[k - 1].first))
              return;
            if (k == slots.size()) {
              if (left != 0) return;
              Labeled x{genus, legs, std::vector<std::vector<int>>(sv, std::vector<int>(sv, 0))};
              for (std::size_t s = 0; s < slots.size(); ++s) {
                x.mult[slots[s].first][slots[s].second] = m[s];
                x.mult[slots[s].second][slots[s].first] = m[s];
              }
              if (!ok(x)) return;
              for (auto& c : classes)
                if (isomorphic(c.rep, x)) {
                  ++c.labeled_count;
                  return;
                }
              classes.push_back({x, 1, 0});
              return;
            }
            for (int a = 0; a <= left; ++a) {
              m[k] = a;
              rec(k + 1, left - a);
            }
            m[k] = 0;
          };
          rec(0, edges);
          std::size_t i = 0;
          while (i < legs.size() && ++legs[i] == v) legs[i++] = 0;
          if (i == legs.size()) break;
        }
      }
      std::size_t i = 0;
      while (i < sv && ++genus[i] > g) genus[i++] = 0;
      if (i == sv) break;
    }
  }
  for (auto& c : classes) {
    std::size_t v = c.rep.genus.size();
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= v; ++i) fact *= i;
    std::size_t a = fact / c.labeled_count;
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i; j < v; ++j) {
        int k = c.rep.mult[i][j];
        for (int t = 2; t <= k; ++t) a *= static_cast<std::size_t>(t);
        if (i == j) a <<= k;
      }
    c.automorphisms = a;
  }
  return classes;
}

inline Labeled to_labeled(const StableGraph& gr) {
  std::size_t v = gr.genus.size();
  Labeled x{gr.genus, gr.leg_vertex, std::vector<std::vector<int>>(v, std::vector<int>(v, 0))};
  for (auto [a, b] : gr.edges) {
    ++x.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    if (a != b) ++x.mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  return x;
}

}  // namespace graph_oracle
