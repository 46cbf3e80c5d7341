#pragma once

// Exact integer linear algebra at desk scale: Smith normal form diagonals,
// ranks over Q and over Z/2.
//
// Elimination runs on int64 with overflow checks; if an entry would overflow
// the computation restarts on arbitrary-precision integers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gemkit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major, rows x cols

namespace detail {

struct Overflow {};

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

using BigInt = boost::multiprecision::cpp_int;
inline BigInt mul_checked(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub_checked(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt abs_value(const BigInt& a) { return boost::multiprecision::abs(a); }

// Diagonalizes `a` in place by unimodular row/column operations and returns
// the nonzero diagonal entries (absolute values, unordered).
template <class Int>
std::vector<Int> diagonalize(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pr = rows, pc = cols;
    Int best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || abs_value(a[r][c]) < best)) {
          best = abs_value(a[r][c]);
          pr = r;
          pc = c;
          if (best == 1) goto found;
        }
  found:
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    if (pc != t)
      for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        Int q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c)
          if (a[t][c] != 0) a[r][c] = sub_checked(a[r][c], mul_checked(q, a[t][c]));
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        Int q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r)
          if (a[r][t] != 0) a[r][c] = sub_checked(a[r][c], mul_checked(q, a[r][t]));
        if (a[t][c] != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][c]);
          clean = false;
        }
      }
    }
    diag.push_back(abs_value(a[t][t]));
    ++t;
  }
  return diag;
}

template <class Int>
Int gcd_of(const Int& a, const Int& b) {
  Int x = a, y = b;
  while (y != 0) {
    Int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

// Turns any diagonal form into invariant factors d_1 | d_2 | ... .
template <class Int>
std::vector<Int> invariant_factors(std::vector<Int> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Int g = gcd_of(d[i], d[j]);
      Int l = mul_checked(d[i] / g, d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace detail

// Nonzero invariant factors of the integer matrix, ascending and dividing
// each other. Entries that do not fit in int64 are saturated.
inline std::vector<std::int64_t> smith_invariants(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  try {
    auto d = detail::invariant_factors(detail::diagonalize(m));
    out.assign(d.begin(), d.end());
  } catch (const detail::Overflow&) {
    std::vector<std::vector<detail::BigInt>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) big[r].assign(m[r].begin(), m[r].end());
    auto d = detail::invariant_factors(detail::diagonalize(big));
    for (const auto& x : d)
      out.push_back(x > std::numeric_limits<std::int64_t>::max()
                        ? std::numeric_limits<std::int64_t>::max()
                        : static_cast<std::int64_t>(x));
  }
  return out;
}

inline int rank_rational(const IntMatrix& m) { return static_cast<int>(smith_invariants(m).size()); }

inline int rank_mod2(const IntMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] % 2 != 0) bits[c / 64] |= std::uint64_t{1} << (c % 64);
    rows.push_back(std::move(bits));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][c / 64] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r][c / 64] & bit))
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

// A finitely generated abelian group Z^free_rank + sum Z/torsion_i, with
// torsion coefficients > 1 forming a divisibility chain.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  // Minimal number of generators.
  int rank() const { return free_rank + static_cast<int>(torsion.size()); }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const {
    if (trivial()) return "0";
    std::string s;
    auto add = [&](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (auto t : torsion) add("Z/" + std::to_string(t));
    return s;
  }
};

// Cokernel of the map Z^cols -> Z^rows given by `relations` (rows = generators).
inline AbelianGroup cokernel(int generators, const IntMatrix& relations_by_generator) {
  AbelianGroup g;
  auto inv = smith_invariants(relations_by_generator);
  g.free_rank = generators - static_cast<int>(inv.size());
  for (auto d : inv)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace gemkit
