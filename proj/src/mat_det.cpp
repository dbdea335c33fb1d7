#include "msc/mat_det.hpp"

#include <map>
#include <stdexcept>

namespace msc::exactalg {

namespace {

// Bareiss: every division below is exact over the integers.
Integer bareiss_int_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a[piv][k]) == 0) ++piv;
      if (piv == n) return Integer(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

}  // namespace

Rational mat_det(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("mat_det: matrix is not square");
  if (n == 0) return Rational(1);
  // scale each row to integers, divide the scales back out at the end
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer den(1);
    for (const auto& v : m[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Integer(m[i][j].get_num() * (den / m[i][j].get_den()));
    scale *= Rational(den);
  }
  Rational det(bareiss_int_det(std::move(a)));
  det /= scale;
  return det;
}

MPoly mat_det(const MPolyMatrix& m) {
  const std::size_t n = m.size();
  std::size_t nvars = 0;
  bool numeric = true;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("mat_det: matrix is not square");
    for (const auto& e : row) {
      nvars = std::max(nvars, e.nvars());
      if (!e.is_constant()) numeric = false;
    }
  }
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.nvars() != nvars)
        throw std::invalid_argument("mat_det: mixed variable counts");
  if (n == 0) return MPoly::constant(nvars, Rational(1));

  if (numeric) {
    RationalMatrix q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[i][j] = m[i][j].constant_value();
    return MPoly::constant(nvars, mat_det(q));
  }

  if (n > 20) throw std::invalid_argument("mat_det: symbolic matrix too large");
  // expansion along rows, memoized on the set of still-available columns
  std::vector<std::map<std::uint32_t, MPoly>> memo(n + 1);
  const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);

  auto minor = [&](auto&& self, std::size_t r, std::uint32_t cols) -> MPoly {
    if (r == n) return MPoly::constant(nvars, Rational(1));
    auto it = memo[r].find(cols);
    if (it != memo[r].end()) return it->second;
    MPoly acc(nvars);
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!m[r][j].is_zero()) {
        MPoly sub = self(self, r + 1, cols & ~(1u << j));
        MPoly contrib = m[r][j] * sub;
        acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++parity;
    }
    memo[r].emplace(cols, acc);
    return acc;
  };
  return minor(minor, 0, full);
}

}  // namespace msc::exactalg
