#pragma once

// Independent brute-force computations used as test oracles.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "grasstropic/diagrams.hpp"
#include "grasstropic/polynomial.hpp"
#include "grasstropic/weyl.hpp"

namespace oracle {

using grasstropic::Rational;
using grasstropic::Subset;

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

// Leibniz expansion over all permutations.
template <class T>
T leibniz(const std::vector<std::vector<T>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  T sum(0);
  do {
    T term(inversions(p) % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * m[i][p[i]];
    sum = sum + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

template <class T>
T minor(const grasstropic::Matrix<T>& a, const Subset& cols) {
  std::vector<std::vector<T>> m(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int c : cols) m[i].push_back(a(i, c - 1));
  return leibniz(m);
}

// Rank of an integer matrix modulo a prime.
inline int rank_mod(std::vector<std::vector<int>> m, int q) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % q) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    int inv = 1;
    while (m[rank][c] * inv % q != 1) ++inv;
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c] % q) {
        int f = m[r][c] * inv % q;
        for (int j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % q + q) % q;
      }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<int>> block(const std::vector<std::vector<int>>& g, int r0, int r1, int c0, int c1) {
  std::vector<std::vector<int>> out;
  for (int r = r0; r < r1; ++r) out.emplace_back(g[r].begin() + c0, g[r].begin() + c1);
  return out;
}

// Points of the open Richardson variety (B- v B cap B w B)/B over F_q, by
// enumerating GL_n(F_q) and testing Bruhat cells with rank conditions.
inline long richardson_points(const grasstropic::weyl::Permutation& v, const grasstropic::weyl::Permutation& w, int q) {
  const int n = v.size();
  long total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  long hits = 0;
  std::vector<std::vector<int>> g(n, std::vector<int>(n));
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] = static_cast<int>(x % q), x /= q;
    if (rank_mod(g, q) != n) continue;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j) {
        int low = 0, high = 0;
        for (int l = 1; l <= j; ++l) {
          low += w(l) >= i;
          high += v(l) <= i;
        }
        ok = rank_mod(block(g, i - 1, n, 0, j), q) == low && rank_mod(block(g, 0, i, 0, j), q) == high;
      }
    hits += ok;
  }
  long borel = 1;
  for (int i = 0; i < n; ++i) borel *= q - 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) borel *= q;
  return hits / borel;
}

// Subexpression test straight from the definition: a letter must be kept
// whenever multiplying by it lowers the length of the running product.
inline bool distinguished(const grasstropic::weyl::Word& w, const std::vector<bool>& mask) {
  std::vector<int> cur(w.n);
  std::iota(cur.begin(), cur.end(), 1);
  for (int j = 0; j < w.size(); ++j) {
    auto next = cur;
    std::swap(next[w.letters[j] - 1], next[w.letters[j]]);
    bool lowers = inversions(next) < inversions(cur);
    if (lowers && !mask[j]) return false;
    if (mask[j]) cur = next;
  }
  return true;
}

// All Grassmann necklaces of type (k, n) by depth-first search on the shift axiom.
inline std::vector<std::vector<Subset>> necklaces(int k, int n) {
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> seq;
  auto next_ok = [&](const Subset& cur, int i, const Subset& nxt) {
    // i is 1-based position of cur
    if (std::find(cur.begin(), cur.end(), i) == cur.end()) return nxt == cur;
    Subset rest;
    for (int x : cur)
      if (x != i) rest.push_back(x);
    return std::includes(nxt.begin(), nxt.end(), rest.begin(), rest.end());
  };
  std::vector<Subset> all;
  std::vector<int> idx(n);
  for (int mask = 0; mask < (1 << n); ++mask)
    if (__builtin_popcount(mask) == k) {
      Subset s;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(i + 1);
      all.push_back(s);
    }
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (next_ok(seq.back(), n, seq.front())) out.push_back(seq);
      return;
    }
    for (const auto& s : all)
      if (next_ok(seq.back(), i, s)) {
        seq.push_back(s);
        rec(i + 1);
        seq.pop_back();
      }
  };
  for (const auto& s : all) {
    seq = {s};
    rec(1);
  }
  return out;
}

// Decorated permutations of [n] with exactly k weak excedances.
inline long decorated_count(int k, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  long count = 0;
  do {
    int strict = 0, fixed = 0;
    for (int i = 0; i < n; ++i) {
      strict += p[i] > i + 1;
      fixed += p[i] == i + 1;
    }
    // each fixed point contributes 0 or 1
    if (k >= strict && k - strict <= fixed) count += binomial(fixed, k - strict);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Phase sum of J at (x, y, t): sum of kappa_i x + kappa_i^2 y + kappa_i^3 t.
inline Rational phase(const Subset& J, const std::vector<Rational>& kappa, const Rational& x, const Rational& y,
                      const Rational& t) {
  Rational s = 0;
  for (int i : J) {
    const Rational& k = kappa[i - 1];
    s += k * x + k * k * y + k * k * k * t;
  }
  return s;
}

// Index sets attaining the maximal phase among the given bases.
inline std::vector<Subset> maximizers(const std::vector<Subset>& bases, const std::vector<Rational>& kappa,
                                      const Rational& x, const Rational& y, const Rational& t) {
  std::vector<Subset> best;
  Rational top;
  for (const auto& J : bases) {
    Rational v = phase(J, kappa, x, y, t);
    if (best.empty() || v > top) {
      best = {J};
      top = v;
    } else if (v == top) {
      best.push_back(J);
    }
  }
  return best;
}

}  // namespace oracle
