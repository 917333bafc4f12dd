#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/error.hpp"

namespace loopforge {

/// A subset σ of the generator indices I_n; bit i-1 stands for generator i.
using Subset = std::uint32_t;

constexpr Subset singleton(int i) { return Subset{1} << (i - 1); }
constexpr Subset full_subset(int n) { return (Subset{1} << n) - 1; }
constexpr int subset_size(Subset s) { return std::popcount(s); }
constexpr int lowest_index(Subset s) { return std::countr_zero(s) + 1; }

/// "123" for {1,2,3}; indices above 9 are dot-separated ("1.2.10").
inline std::string subset_label(Subset s) {
  std::string out;
  bool dotted = s >= (Subset{1} << 9);
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if ((s & 1u) == 0) continue;
    if (dotted && !out.empty()) out += '.';
    out += std::to_string(i);
  }
  return out;
}

inline Subset parse_subset(std::string_view label) {
  Subset s = 0;
  auto add = [&](int i) {
    if (i < 1 || i > 31) throw Error(ErrorKind::Parse, "generator index out of range in '" + std::string(label) + "'");
    s |= singleton(i);
  };
  if (label.find('.') != std::string_view::npos) {
    int cur = 0;
    for (char c : label) {
      if (c == '.') { add(cur); cur = 0; continue; }
      if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "bad subset label '" + std::string(label) + "'");
      cur = cur * 10 + (c - '0');
    }
    add(cur);
  } else {
    for (char c : label) {
      if (c < '1' || c > '9') throw Error(ErrorKind::Parse, "bad subset label '" + std::string(label) + "'");
      add(c - '0');
    }
  }
  return s;
}

/// Nonempty subsets of I_n in labeling order: by smallest element, then larger
/// subsets first, then lexicographically. For n = 3 this is
/// 123, 12, 13, 1, 23, 2, 3. Every proper superset of σ precedes σ.
inline std::vector<Subset> labeling_order(int n) {
  std::vector<Subset> out;
  for (int low = 1; low <= n; ++low) {
    for (int size = n - low + 1; size >= 1; --size) {
      // subsets of {low..n} containing low with the given size, lexicographic
      std::vector<Subset> level;
      Subset rest_full = full_subset(n) & ~full_subset(low);
      for (Subset rest = 0;; rest = (rest - rest_full) & rest_full) {
        if (subset_size(rest) == size - 1) level.push_back(singleton(low) | rest);
        if (rest == rest_full) break;
      }
      auto lex_key = [](Subset s) {
        std::vector<int> idx;
        for (int i = 1; s != 0; ++i, s >>= 1)
          if (s & 1u) idx.push_back(i);
        return idx;
      };
      std::sort(level.begin(), level.end(), [&](Subset a, Subset b) { return lex_key(a) < lex_key(b); });
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

/// Rank over F2 of a list of masks.
inline int mask_rank(const std::vector<Subset>& rows) {
  Subset pivot[32] = {};
  int r = 0;
  for (Subset v : rows) {
    for (int b = 31; b >= 0 && v != 0; --b) {
      if ((v >> b & 1u) == 0) continue;
      if (pivot[b] == 0) {
        pivot[b] = v;
        ++r;
        v = 0;
      } else {
        v ^= pivot[b];
      }
    }
  }
  return r;
}

/// Coefficients c with Σ_{k∈c} basis[k] = v, for independent `basis`;
/// returns ~0u when v lies outside their span.
inline Subset express_in(const std::vector<Subset>& basis, Subset v) {
  Subset pivot[32] = {};
  Subset combo[32] = {};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Subset x = basis[k];
    Subset c = Subset{1} << k;
    for (int b = 31; b >= 0 && x != 0; --b) {
      if ((x >> b & 1u) == 0) continue;
      if (pivot[b] == 0) {
        pivot[b] = x;
        combo[b] = c;
        x = 0;
      } else {
        x ^= pivot[b];
        c ^= combo[b];
      }
    }
  }
  Subset c = 0;
  for (int b = 31; b >= 0 && v != 0; --b) {
    if ((v >> b & 1u) == 0) continue;
    if (pivot[b] == 0) return ~Subset{0};
    v ^= pivot[b];
    c ^= combo[b];
  }
  return c;
}

}  // namespace loopforge
