#pragma once

// Slow reference implementations used as independent checks.

#include <cstdint>
#include <vector>

#include "gchar/linalg.hpp"

namespace oracle {

// Determinant by cofactor expansion along the first row.
inline gchar::Scalar det(const std::vector<std::vector<gchar::Scalar>>& a, const gchar::PrimeField& f) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  gchar::Scalar total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<gchar::Scalar>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<gchar::Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    gchar::Scalar term = f.mul(a[0][j], det(minor, f));
    total = j % 2 ? f.sub(total, term) : f.add(total, term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest r with a nonzero r x r minor.
inline std::size_t rank_by_minors(const gchar::Matrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t r = top; r > 0; --r) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), r, 0, cur, rs);
    subsets(m.cols(), r, 0, cur, cs);
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        std::vector<std::vector<gchar::Scalar>> a(r, std::vector<gchar::Scalar>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) a[i][j] = m(ri[i], ci[j]);
        if (det(a, m.field()) != 0) return r;
      }
  }
  return 0;
}

inline long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Number of monomials of degree d in variables of the given weights.
inline long long count_monomials(const std::vector<int>& w, int d) {
  if (d < 0) return 0;
  std::vector<long long> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (int wi : w)
    for (int s = wi; s <= d; ++s) c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - wi)];
  return c[static_cast<std::size_t>(d)];
}

}  // namespace oracle
