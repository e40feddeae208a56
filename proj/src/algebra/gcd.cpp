#include "cohft/algebra/gcd.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace cohft::algebra {

namespace {

// Integer-coefficient primitive polynomial (content 1, positive leading coefficient).
Polynomial integral_primitive(const Polynomial& p) { return p.primitive_part(); }

BigInteger max_norm(const Polynomial& p) {
  BigInteger m = 0;
  for (const auto& t : p.terms()) {
    BigInteger a = abs(t.coefficient.get_num());
    if (a > m) m = a;
  }
  return m;
}

int highest_variable(unsigned mask) { return mask == 0 ? -1 : 31 - std::countl_zero(mask); }

Polynomial monomial_gcd_part(const Polynomial& a, const Polynomial& b) {
  Exponents ma = a.monomial_content();
  Exponents mb = b.monomial_content();
  Exponents m{};
  for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(ma[i], mb[i]);
  return Polynomial::monomial(m, 1);
}

// Symmetric remainder of an integer modulo xi.
BigInteger symmetric_mod(const BigInteger& value, const BigInteger& xi) {
  BigInteger r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), xi.get_mpz_t());
  if (2 * r > xi) r -= xi;
  return r;
}

// Recovers G with G(var = xi) = image, coefficients reduced symmetrically.
Polynomial xi_adic_interpolate(Polynomial image, const BigInteger& xi, std::size_t var) {
  std::vector<Polynomial> coeffs;
  while (!image.is_zero()) {
    std::vector<Term> digit;
    for (const auto& t : image.terms()) {
      BigInteger c = symmetric_mod(t.coefficient.get_num(), xi);
      if (c != 0) digit.push_back({t.exponents, BigRational(c)});
    }
    Polynomial d = Polynomial::from_terms(std::move(digit));
    coeffs.push_back(d);
    image -= d;
    image *= BigRational(1, 1) / BigRational(xi);
    if (coeffs.size() > 4096) throw AlgebraError("gcd interpolation diverged");
  }
  return Polynomial::from_coefficients(var, coeffs);
}

// Full gcd (with integer content) of integer-coefficient polynomials.
std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, int depth);

std::optional<Polynomial> heuristic_gcd_primitive(const Polynomial& a, const Polynomial& b, int depth) {
  unsigned mask = a.variable_mask() | b.variable_mask();
  if (mask == 0) return Polynomial(1);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  std::size_t var = static_cast<std::size_t>(highest_variable(mask));
  if (!a.uses_variable(var) || !b.uses_variable(var)) {
    // gcd lies in the coefficient ring of var
    Polynomial g = a.uses_variable(var) ? b : a;
    const Polynomial& other = a.uses_variable(var) ? a : b;
    for (const auto& c : other.coefficients_in(var)) {
      if (c.is_zero()) continue;
      auto next = heuristic_gcd(g, c, depth + 1);
      if (!next) return std::nullopt;
      g = integral_primitive(*next);
      if (g.is_constant()) return Polynomial(1);
    }
    return integral_primitive(g);
  }
  BigInteger bound = std::min(max_norm(a), max_norm(b));
  BigInteger xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(a.degree(var), b.degree(var)) > 200000) return std::nullopt;
    Polynomial av = a.substitute(var, Polynomial(BigRational(xi)));
    Polynomial bv = b.substitute(var, Polynomial(BigRational(xi)));
    if (!av.is_zero() && !bv.is_zero()) {
      auto gv = heuristic_gcd(av, bv, depth + 1);
      if (gv) {
        Polynomial candidate = integral_primitive(xi_adic_interpolate(*gv, xi, var));
        if (!candidate.is_zero() && a.divide_exact(candidate) && b.divide_exact(candidate)) return candidate;
      }
    }
    xi = (xi * 73794) / 27011 + 1;
  }
  return std::nullopt;
}

std::optional<Polynomial> heuristic_gcd(const Polynomial& a, const Polynomial& b, int depth) {
  if (depth > 16) return std::nullopt;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  BigRational ca = a.content(), cb = b.content();
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
  auto prim = heuristic_gcd_primitive(a.primitive_part(), b.primitive_part(), depth);
  if (!prim) return std::nullopt;
  return *prim * BigRational(g);
}

// Pseudo-remainder of a by b viewed as univariate in var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  unsigned db = b.degree(var);
  auto bc = b.coefficients_in(var);
  Polynomial lb = bc.back();
  while (!a.is_zero() && a.degree(var) >= db) {
    unsigned da = a.degree(var);
    Polynomial la = a.coefficients_in(var).back();
    Exponents shift{};
    shift[var] = static_cast<std::uint16_t>(da - db);
    a = a * lb - la * Polynomial::monomial(shift, 1) * b;
  }
  return a;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : gcd_prs(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

}  // namespace

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  unsigned mask = a.variable_mask() | b.variable_mask();
  if (mask == 0 || a.is_constant() || b.is_constant()) return Polynomial(1);
  std::size_t var = static_cast<std::size_t>(highest_variable(mask));
  Polynomial ca = a.uses_variable(var) ? content_in(a, var) : a.primitive_part();
  Polynomial cb = b.uses_variable(var) ? content_in(b, var) : b.primitive_part();
  Polynomial cg = gcd_prs(ca, cb);
  if (!a.uses_variable(var) || !b.uses_variable(var)) return cg;
  Polynomial p = (a / ca).primitive_part();
  Polynomial q = (b / cb).primitive_part();
  if (p.degree(var) < q.degree(var)) std::swap(p, q);
  while (!q.is_zero() && q.uses_variable(var)) {
    Polynomial r = pseudo_remainder(p, q, var);
    p = std::move(q);
    if (r.is_zero()) {
      q = Polynomial{};
      break;
    }
    q = (r / content_in(r, var)).primitive_part();
  }
  Polynomial g = q.is_zero() ? p : Polynomial(1);
  return (cg * g).primitive_part();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Polynomial mono = monomial_gcd_part(a, b);
  Polynomial pa = a.primitive_part();
  Polynomial pb = b.primitive_part();
  if (pa.size() == 1 || pb.size() == 1) return mono;
  if (auto q = pa.divide_exact(pb)) return pb;
  if (auto q = pb.divide_exact(pa)) return pa;
  if (auto h = heuristic_gcd(pa, pb, 0)) return h->primitive_part();
  return gcd_prs(pa, pb);
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var) {
  // Sylvester determinant by fraction-free (Bareiss) elimination.
  auto ac = a.coefficients_in(var);
  auto bc = b.coefficients_in(var);
  std::size_t m = ac.size() - 1, n = bc.size() - 1;
  std::size_t size = m + n;
  if (size == 0) return Polynomial(1);
  std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = ac[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = bc[n - k];
  Polynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < size && mat[piv][k].is_zero()) ++piv;
      if (piv == size) return Polynomial{};
      std::swap(mat[k], mat[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
      mat[i][k] = Polynomial{};
    }
    prev = mat[k][k];
  }
  Polynomial det = mat[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

}  // namespace cohft::algebra
