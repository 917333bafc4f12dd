#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "loopforge/code.hpp"
#include "loopforge/gl_matrix.hpp"
#include "loopforge/subset.hpp"

namespace lftest {

using namespace loopforge;

/// Random doubly even code of rank n, built from random class sizes chosen
/// so that every |v_i| is a multiple of 4 and every |v_i ∩ v_j| is even.
/// Positions are shuffled, so blocks are not contiguous.
inline BinaryCodeBasis random_doubly_even(std::mt19937& rng, int n, int max_class = 5) {
  for (;;) {
    std::vector<int> x(std::size_t{1} << n, 0);
    std::uniform_int_distribution<int> pick(0, max_class);
    for (Subset s : labeling_order(n)) {
      int fixed = 0;
      for (Subset t = 1; t < x.size(); ++t)
        if (t != s && (t & s) == s) fixed += x[t];
      const int k = subset_size(s);
      const int mod = k == 1 ? 4 : k == 2 ? 2 : 1;
      int v = pick(rng);
      while ((v + fixed) % mod != 0) ++v;
      x[s] = v;
    }
    int m = std::accumulate(x.begin(), x.end(), 0);
    if (m == 0) continue;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PositionSet> gens(static_cast<std::size_t>(n));
    int next = 0;
    for (Subset s = 1; s < x.size(); ++s)
      for (int c = 0; c < x[s]; ++c, ++next)
        for (int i = 1; i <= n; ++i)
          if (s & singleton(i)) gens[static_cast<std::size_t>(i - 1)].insert(perm[static_cast<std::size_t>(next)]);
    if (f2_rank(gens) != n) continue;
    return BinaryCodeBasis(m, gens);
  }
}

inline GLMatrix random_gl(std::mt19937& rng, int n) {
  std::uniform_int_distribution<Subset> row(1, full_subset(n));
  for (;;) {
    std::vector<Subset> rows;
    for (int i = 0; i < n; ++i) rows.push_back(row(rng));
    if (mask_rank(rows) == n) return GLMatrix(n, rows);
  }
}

/// Codewords of the span, computed without any library helper.
inline std::vector<PositionSet> brute_span(const BinaryCodeBasis& b) {
  std::vector<PositionSet> out;
  for (Subset c = 0; c < (Subset{1} << b.rank()); ++c) {
    PositionSet w;
    for (int i = 1; i <= b.rank(); ++i)
      if (c & singleton(i))
        for (int p : b.generator(i).positions()) {
          if (w.contains(p)) {
            w.erase(p);
          } else {
            w.insert(p);
          }
        }
    out.push_back(w);
  }
  return out;
}

inline BinaryCodeBasis permute_positions(const BinaryCodeBasis& b, const std::vector<int>& perm) {
  std::vector<PositionSet> gens;
  for (const auto& g : b.generators()) {
    PositionSet h;
    for (int p : g.positions()) h.insert(perm[static_cast<std::size_t>(p - 1)]);
    gens.push_back(h);
  }
  return BinaryCodeBasis(b.length(), gens);
}

/// Position permutation equivalence by trying all m! bijections.
inline bool brute_equivalent(const BinaryCodeBasis& a, const BinaryCodeBasis& b) {
  if (a.length() != b.length() || a.rank() != b.rank()) return false;
  auto sb = brute_span(b);
  std::sort(sb.begin(), sb.end());
  std::vector<int> perm(static_cast<std::size_t>(a.length()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    auto sa = brute_span(permute_positions(a, perm));
    std::sort(sa.begin(), sa.end());
    if (sa == sb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace lftest
