#include "cohft/algebra/linear.hpp"

#include <cstdint>

namespace cohft::algebra {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce(const BigRational& x) {
  BigInteger p(std::to_string(kPrime));
  BigInteger n = x.get_num() % p, d = x.get_den() % p;
  if (n < 0) n += p;
  if (d == 0) return std::nullopt;
  std::uint64_t nn = std::stoull(n.get_str()), dd = std::stoull(d.get_str());
  return mul_mod(nn, pow_mod(dd, kPrime - 2));
}

// Indices of rows forming a basis of the row space modulo the prime,
// or nullopt if some coefficient has a denominator divisible by it.
std::optional<std::vector<std::size_t>> independent_rows(const std::vector<SparseRow>& rows, std::size_t unknowns) {
  std::map<std::size_t, std::map<std::size_t, std::uint64_t>> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < rows.size() && pivots.size() < unknowns; ++r) {
    std::map<std::size_t, std::uint64_t> row;
    for (const auto& [c, v] : rows[r]) {
      auto x = reduce(v);
      if (!x) return std::nullopt;
      if (*x) row[c] = *x;
    }
    while (!row.empty()) {
      auto [col, coef] = *row.begin();
      auto p = pivots.find(col);
      if (p == pivots.end()) break;
      for (const auto& [c, v] : p->second) {
        std::uint64_t& x = row[c];
        x = (x + kPrime - mul_mod(coef, v)) % kPrime;
        if (x == 0) row.erase(c);
      }
    }
    if (row.empty()) continue;
    std::uint64_t inv = pow_mod(row.begin()->second, kPrime - 2);
    for (auto& [c, v] : row) v = mul_mod(v, inv);
    pivots.emplace(row.begin()->first, std::move(row));
    chosen.push_back(r);
  }
  return chosen;
}

std::optional<LinearSolution> eliminate(const std::vector<SparseRow>& rows, const std::vector<BigRational>& rhs,
                                        const std::vector<std::size_t>& order, std::size_t unknowns) {
  // pivot column -> (row normalized to 1 at the pivot, rhs); pivot is the smallest column
  std::map<std::size_t, std::pair<SparseRow, BigRational>> pivots;
  for (std::size_t r : order) {
    SparseRow row = rows[r];
    BigRational b = rhs[r];
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == 0) it = row.erase(it);
      else ++it;
    }
    while (!row.empty()) {
      auto [col, coef] = *row.begin();
      auto p = pivots.find(col);
      if (p == pivots.end()) break;
      BigRational factor = coef;
      for (const auto& [c, v] : p->second.first) {
        BigRational& x = row[c];
        x -= factor * v;
        if (x == 0) row.erase(c);
      }
      b -= factor * p->second.second;
    }
    if (row.empty()) {
      if (b != 0) return std::nullopt;
      continue;
    }
    if (row.begin()->first >= unknowns) throw AlgebraError("unknown index out of range");
    BigRational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    b *= inv;
    std::size_t col = row.begin()->first;
    pivots.emplace(col, std::make_pair(std::move(row), b));
  }
  LinearSolution sol;
  sol.values.assign(unknowns, 0);
  sol.kernel_dimension = unknowns - pivots.size();
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    BigRational v = it->second.second;
    for (const auto& [c, coef] : it->second.first)
      if (c != it->first) v -= coef * sol.values[c];
    sol.values[it->first] = v;
  }
  return sol;
}

}  // namespace

std::optional<LinearSolution> solve_linear(const std::vector<SparseRow>& rows, const std::vector<BigRational>& rhs,
                                           std::size_t unknowns) {
  if (rows.size() != rhs.size()) throw AlgebraError("row/rhs count mismatch");
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) all[i] = i;
  auto basis = independent_rows(rows, unknowns);
  if (!basis || basis->size() < unknowns) return eliminate(rows, rhs, all, unknowns);
  // full rank modulo p implies full rank over Q; solve the square part and check the rest
  auto sol = eliminate(rows, rhs, *basis, unknowns);
  if (!sol || sol->kernel_dimension != 0) return eliminate(rows, rhs, all, unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BigRational acc = 0;
    for (const auto& [c, v] : rows[r]) acc += v * sol->values[c];
    if (acc != rhs[r]) return std::nullopt;
  }
  return sol;
}

}  // namespace cohft::algebra
