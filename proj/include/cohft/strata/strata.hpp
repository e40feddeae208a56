#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cohft/algebra/serialize.hpp"
#include "cohft/qde/solver.hpp"

namespace cohft::strata {

using algebra::BigRational;
using algebra::Json;
using algebra::Matrix;
using algebra::Polynomial;
using frobenius::RF;

/// Undecorated stable graph of M_{g,n}; edges are vertex pairs (self-loops allowed).
struct StableGraph {
  std::vector<int> genus;
  std::vector<int> leg_vertex;  // marking -> vertex
  std::vector<std::pair<int, int>> edges;
  std::size_t automorphisms = 1;

  [[nodiscard]] int total_genus() const;
  [[nodiscard]] int markings() const { return static_cast<int>(leg_vertex.size()); }
  [[nodiscard]] std::vector<int> valences() const;
};

/// One representative per isomorphism class, automorphisms filled in.
/// Throws AlgebraError for unstable (g, n).
std::vector<StableGraph> enumerate_stable_graphs(int g, int n);

/// Half-edge automorphism count: vertex symmetries times edge permutations and loop flips.
std::size_t graph_automorphisms(const StableGraph& graph);

/// Decorated stratum xi_{Gamma*}(prod psi^a prod kappa): psi on legs and half-edges, kappa per vertex.
struct Stratum {
  struct Edge {
    int v0 = 0, psi0 = 0, v1 = 0, psi1 = 0;
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<int> genus;
  std::vector<std::vector<int>> kappa;   // sorted indices >= 1 per vertex
  std::vector<std::pair<int, int>> legs;  // (vertex, psi) per marking
  std::vector<Edge> edges;

  static Stratum smooth(int g, int n);
  [[nodiscard]] int markings() const { return static_cast<int>(legs.size()); }
  [[nodiscard]] int codimension() const;
  [[nodiscard]] std::vector<int> valences() const;
  /// Some vertex carries more psi/kappa degree than dim M_{g_v,n_v}.
  [[nodiscard]] bool exceeds_dimension() const;
  /// Lexicographically minimal relabeling of the vertices.
  [[nodiscard]] Stratum canonical() const;
  [[nodiscard]] Stratum relabel_markings(const std::vector<int>& perm) const;  // marking i -> perm[i]
  [[nodiscard]] Json to_json() const;

  auto operator<=>(const Stratum&) const = default;
};

/// Finite sum of strata with coefficients, kept in canonical form.
struct StrataElement {
  int g = 0;
  int n = 0;
  std::map<Stratum, RF> terms;

  void add(const Stratum& s, const RF& c);  // canonicalizes
  StrataElement& operator+=(const StrataElement& o);
  [[nodiscard]] StrataElement scaled(const RF& c) const;
  [[nodiscard]] StrataElement codimension_part(int codim) const;
  [[nodiscard]] StrataElement relabel_markings(const std::vector<int>& perm) const;
  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  [[nodiscard]] Json to_json(const algebra::VariableSet& vars) const;
  friend bool operator==(const StrataElement& a, const StrataElement& b) { return a.terms == b.terms; }
};

/// Forget the markings >= keep, last first, using
/// pi_*(psi_p^{b+1} prod kappa_{c_j}) = sum_{S} prod_{j not in S} kappa_{c_j} kappa_{b + sum_S c_j}.
/// Every forgotten marking must carry psi-exponent >= 2.
StrataElement pushforward_forgotten(const Stratum& s, int keep);

/// z-power series of matrices in the basis of (unnormalized) idempotents, R_0 = 1.
struct RSeries {
  std::vector<Matrix<RF>> coeffs;
  [[nodiscard]] std::size_t dim() const { return coeffs.empty() ? 0 : coeffs[0].rows(); }
  [[nodiscard]] std::size_t order() const { return coeffs.size(); }
};
/// R_eps(i, k) = hat(i, k) / Delta_k.
RSeries idempotent_r(const qde::RMatrixA& r);
RSeries series_inverse(const RSeries& r);
RSeries identity_r(std::size_t dim, std::size_t order);

/// T(z) = z (1 - R^{-1}(z)) 1, indexed by z-power; throws if the z^1 term is nonzero.
std::vector<std::vector<RF>> t_vector(const RSeries& r, const std::vector<RF>& unit);

/// B[a][b] with sum B[a][b] psi1^a psi2^b = (eta^{-1} - R^{-1}(psi1) eta^{-1} R^{-1}(psi2)^t) / (psi1 + psi2).
/// Throws "symplectic condition violated" if the numerator is not divisible.
std::vector<std::vector<Matrix<RF>>> edge_bivector(const RSeries& r, const Matrix<RF>& eta_inverse);

/// CohFT with values in the strata algebra, given on basis vectors.
class Cohft {
 public:
  virtual ~Cohft() = default;
  [[nodiscard]] virtual std::size_t dim() const = 0;
  [[nodiscard]] virtual const Matrix<RF>& eta_inverse() const = 0;
  [[nodiscard]] virtual const std::vector<RF>& unit() const = 0;
  /// Omega_{g,n}(e_{idx_1}, ..., e_{idx_n}) truncated to codimension <= codim_max.
  virtual StrataElement value(int g, const std::vector<std::size_t>& idx, int codim_max) = 0;
};

/// Semisimple TQFT in the idempotent basis: omega(eps_i, ..., eps_i) = Delta_i^{g-1}, eta = diag(1/Delta).
class Tqft : public Cohft {
 public:
  explicit Tqft(std::vector<RF> deltas);
  [[nodiscard]] std::size_t dim() const override { return deltas_.size(); }
  [[nodiscard]] const Matrix<RF>& eta_inverse() const override { return eta_inv_; }
  [[nodiscard]] const std::vector<RF>& unit() const override { return unit_; }
  StrataElement value(int g, const std::vector<std::size_t>& idx, int codim_max) override;

 private:
  std::vector<RF> deltas_;
  Matrix<RF> eta_inv_;
  std::vector<RF> unit_;
};

/// R.Omega via the stable-graph sum; values are memoized.
class ActedCohft : public Cohft {
 public:
  ActedCohft(RSeries r, std::shared_ptr<Cohft> base, bool drop_above_dimension = true);
  [[nodiscard]] std::size_t dim() const override { return base_->dim(); }
  [[nodiscard]] const Matrix<RF>& eta_inverse() const override { return base_->eta_inverse(); }
  [[nodiscard]] const std::vector<RF>& unit() const override { return base_->unit(); }
  StrataElement value(int g, const std::vector<std::size_t>& idx, int codim_max) override;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::shared_ptr<Cohft> base_;
};

/// Multilinear extension of Cohft::value to arbitrary insertion vectors.
StrataElement evaluate(Cohft& cohft, int g, const std::vector<std::vector<RF>>& insertions, int codim_max);

/// R acting on a CohFT, evaluated on the given insertions.
StrataElement rmatrix_action(std::shared_ptr<Cohft> base, const RSeries& r, int g,
                             const std::vector<std::vector<RF>>& insertions, int codim_max);

/// Polar parts in disc of every coefficient: p / (u disc^k) = sum_j r_j disc^{j-k} with
/// deg_{var} r_j < deg_{var} disc; pole orders k - j >= 1 are kept.
struct RelationVector {
  Polynomial disc;
  std::size_t var = 0;
  std::map<Stratum, std::map<int, Polynomial>> polar;  // stratum -> pole order -> numerator

  [[nodiscard]] bool is_zero() const { return polar.empty(); }
  /// Coefficients of disc^{-order} as a vector over the strata (numerators).
  [[nodiscard]] std::map<Stratum, Polynomial> at_order(int order) const;
  [[nodiscard]] Json to_json(const algebra::VariableSet& vars) const;
};
/// Throws "unexpected denominator" unless every denominator is a unit times a power of disc.
RelationVector extract_relations(const StrataElement& el, const Polynomial& disc, std::size_t var = 0);

/// D_{g,n}(a) = ((r-2)(g-1) + sum a_i) / r.
BigRational spin_degree(int r, int g, const std::vector<int>& a);
/// Components of codimension > D (all components when D is not an integer).
StrataElement degree_vanishing_part(const StrataElement& el, const BigRational& degree);

/// A_2 (3-spin) reconstruction at a semisimple point: Omega_{g,n}(X^{a_1}, ..., X^{a_n})
/// with coefficients in Q(t1), disc = 4 t1.
struct SpinResult {
  StrataElement element;  // coefficients in t1 (variable 0)
  Polynomial disc;
  RelationVector relations;
};
SpinResult three_spin_relations(int g, const std::vector<int>& a, int codim_max, bool identity_r = false);

}  // namespace cohft::strata
