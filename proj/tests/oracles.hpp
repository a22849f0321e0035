// Brute-force reference implementations used only by the test suite.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "siegel/partition.hpp"
#include "siegel/symfunc.hpp"

namespace oracles {

using siegel::Int;
using siegel::Partition;
using siegel::Rational;
using siegel::SymmetricPolynomial;
using siegel::WeightVector;

// Dense symmetric-polynomial arithmetic on exponent vectors.
using Dense = std::map<std::vector<int>, Rational>;

inline void dense_add(Dense& p, const std::vector<int>& e, const Rational& c) {
  auto it = p.find(e);
  if (it == p.end()) {
    if (!c.is_zero()) p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

inline Dense dense_mul(const Dense& a, const Dense& b, int r) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i)
        e[static_cast<std::size_t>(i)] =
            ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
      dense_add(out, e, ca * cb);
    }
  return out;
}

// Complete homogeneous h_d in r variables; h_d = 0 for d < 0.
inline Dense complete_h(int d, int r) {
  Dense out;
  if (d < 0) return out;
  if (r == 0) {
    if (d == 0) out.emplace(std::vector<int>{}, Rational(1));
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      dense_add(out, e, Rational(1));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Jacobi-Trudi determinant det(h_{b_i - i + j}), Leibniz expansion.
inline Dense jacobi_trudi(const Partition& b, int r) {
  int l = static_cast<int>(b.length());
  if (l == 0) {
    Dense one;
    one.emplace(std::vector<int>(static_cast<std::size_t>(r), 0), Rational(1));
    return one;
  }
  std::vector<int> perm(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) perm[static_cast<std::size_t>(i)] = i;
  Dense out;
  do {
    int inv = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    Dense term;
    term.emplace(std::vector<int>(static_cast<std::size_t>(r), 0),
                 Rational(inv % 2 == 0 ? 1 : -1));
    for (int i = 0; i < l; ++i) {
      int d = static_cast<int>(b.parts()[static_cast<std::size_t>(i)]) - i +
              perm[static_cast<std::size_t>(i)];
      term = dense_mul(term, complete_h(d, r), r);
      if (term.empty()) break;
    }
    for (const auto& [e, c] : term) dense_add(out, e, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Dense to_dense(const SymmetricPolynomial& p) {
  int r = p.num_vars();
  Dense out;
  for (const auto& [mu, c] : p.coeffs()) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (std::size_t i = 0; i < mu.length(); ++i)
      e[i] = static_cast<int>(mu.parts()[i]);
    std::sort(e.begin(), e.end());
    do {
      dense_add(out, e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

// Semistandard tableaux of the given shape with entries in 1..n.
inline long ssyt_count(const Partition& shape, int n) {
  std::vector<std::vector<int>> rows(shape.length());
  std::function<long(std::size_t, std::size_t)> fill = [&](std::size_t r,
                                                           std::size_t c) -> long {
    if (r == shape.length()) return 1;
    if (c == static_cast<std::size_t>(shape.part(r))) return fill(r + 1, 0);
    long total = 0;
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r].resize(std::max(rows[r].size(), c + 1));
      rows[r][c] = v;
      total += fill(r, c + 1);
    }
    return total;
  };
  return fill(0, 0);
}

// Counts full Gelfand-Tsetlin chains by depth-first enumeration of
// interlacing rows, instead of the map-folding used by the library.
inline Int gt_oracle(const WeightVector& k, const Partition& b, int r) {
  int n = static_cast<int>(k.degree());
  Int count = 0;
  std::function<void(const std::vector<long>&, int)> walk =
      [&](const std::vector<long>& row, int level) {
        if (level == r) {
          if (Partition(row) == b) count += 1;
          return;
        }
        int m = level - 1;
        std::vector<long> next(static_cast<std::size_t>(m));
        std::function<void(int)> choose = [&](int i) {
          if (i == m) {
            walk(next, m);
            return;
          }
          for (long v = row[static_cast<std::size_t>(i) + 1];
               v <= row[static_cast<std::size_t>(i)]; ++v) {
            next[static_cast<std::size_t>(i)] = v;
            choose(i + 1);
          }
        };
        choose(0);
      };
  walk(k.weights(), n);
  return count;
}

}  // namespace oracles
