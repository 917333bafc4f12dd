#pragma once

#include <algorithm>
#include <cstdint>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/char_vector.hpp"
#include "loopforge/classification.hpp"
#include "loopforge/code.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

/// Sign-valued φ on V×V, indexed by coefficient masks over the basis.
class FactorSet {
 public:
  static constexpr int kMaxRank = 4;

  /// Number of seed pairs (x, e_i) with 0 < x < 2^(i-1); bit k of
  /// `seed_choice` sets the k-th of them to -1 instead of +1.
  static int seed_count(int n) {
    int c = 0;
    for (int i = 1; i <= n; ++i) c += (1 << (i - 1)) - 1;
    return c;
  }

  /// Seeds φ(x, e_i) for x in the span of e_1..e_{i-1}, then closes under
  /// the commutation and cocycle rules; anything left open is set to +1 and
  /// propagation resumes. The finished table is checked against every axiom.
  explicit FactorSet(const BinaryCodeBasis& basis, std::uint32_t seed_choice = 0) : rank_(basis.rank()) {
    if (rank_ > kMaxRank) throw Error(ErrorKind::UnsupportedRank, "factor sets are built up to rank 4");
    if (!is_doubly_even(basis)) throw Error(ErrorKind::NotDoublyEven, "the code is not doubly even");
    const int size = 1 << rank_;
    words_.reserve(static_cast<std::size_t>(size));
    for (Subset a = 0; a < static_cast<Subset>(size); ++a) words_.push_back(basis.codeword(a));
    table_.assign(static_cast<std::size_t>(size * size), 0);

    for (Subset a = 0; a < static_cast<Subset>(size); ++a) {
      put(0, a, 1);
      put(a, 0, 1);
      put(a, a, weight(words_[a]) / 4 % 2 ? -1 : 1);
    }
    int k = 0;
    for (int i = 1; i <= rank_; ++i) {
      for (Subset x = 1; x < (Subset{1} << (i - 1)); ++x, ++k) put(x, singleton(i), (seed_choice >> k & 1u) ? -1 : 1);
    }

    for (;;) {
      propagate();
      auto open = std::find(table_.begin(), table_.end(), std::int8_t{0});
      if (open == table_.end()) break;
      *open = 1;
    }
    verify();
  }

  int rank() const { return rank_; }
  int size() const { return 1 << rank_; }
  const PositionSet& word(Subset a) const { return words_.at(a); }

  int operator()(Subset a, Subset b) const { return table_[index(a, b)]; }

  /// First violated axiom, or nullopt.
  std::optional<std::string> violation() const {
    const Subset n = static_cast<Subset>(size());
    for (Subset v = 0; v < n; ++v) {
      if ((*this)(0, v) != 1 || (*this)(v, 0) != 1) return "identity at " + std::to_string(v);
      if ((*this)(v, v) != sign(weight(words_[v]) / 4)) return "square at " + std::to_string(v);
      for (Subset w = 0; w < n; ++w) {
        if ((*this)(v, w) != sign((words_[v] & words_[w]).size() / 2) * (*this)(w, v))
          return "commutation at " + std::to_string(v) + "," + std::to_string(w);
        for (Subset u = 0; u < n; ++u) {
          const int lhs = (*this)(v ^ w, u);
          const int rhs = (*this)(v, w ^ u) * (*this)(v, w) * (*this)(w, u) * sign((words_[v] & words_[w] & words_[u]).size());
          if (lhs != rhs)
            return "cocycle at " + std::to_string(v) + "," + std::to_string(w) + "," + std::to_string(u);
        }
      }
    }
    return std::nullopt;
  }

 private:
  static int sign(int exponent) { return exponent % 2 ? -1 : 1; }

  std::size_t index(Subset a, Subset b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + b; }

  /// Returns true if the entry was newly set.
  bool put(Subset a, Subset b, int value) {
    auto& slot = table_[index(a, b)];
    if (slot == 0) {
      slot = static_cast<std::int8_t>(value);
      return true;
    }
    if (slot != value)
      throw Error(ErrorKind::NoFactorSet, "conflicting values for φ(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return false;
  }

  void propagate() {
    const Subset n = static_cast<Subset>(size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (Subset v = 0; v < n; ++v) {
        for (Subset w = 0; w < n; ++w) {
          const int vw = (*this)(v, w);
          if (vw != 0) {
            changed |= put(w, v, vw * sign((words_[v] & words_[w]).size() / 2));
          }
          for (Subset u = 0; u < n; ++u) {
            // φ(v+w,u) φ(v,w+u) φ(v,w) φ(w,u) = (-1)^|v∩w∩u|
            std::array<std::size_t, 4> cells{index(v ^ w, u), index(v, w ^ u), index(v, w), index(w, u)};
            int product = sign((words_[v] & words_[w] & words_[u]).size());
            int unknown = -1;
            int unknowns = 0;
            for (int c = 0; c < 4; ++c) {
              const int val = table_[cells[static_cast<std::size_t>(c)]];
              if (val == 0) {
                ++unknowns;
                unknown = c;
              } else {
                product *= val;
              }
            }
            if (unknowns == 1) {
              table_[cells[static_cast<std::size_t>(unknown)]] = static_cast<std::int8_t>(product);
              changed = true;
            } else if (unknowns == 0 && product != 1) {
              throw Error(ErrorKind::NoFactorSet, "cocycle rule fails during extension");
            }
          }
        }
      }
    }
  }

  void verify() const {
    if (auto bad = violation()) throw Error(ErrorKind::NoFactorSet, "axiom check failed: " + *bad);
  }

  int rank_;
  std::vector<PositionSet> words_;
  std::vector<std::int8_t> table_;  // 0 = not yet known
};

/// An element ±v of L(V); v is a coefficient mask over the basis.
struct LoopElement {
  bool negative = false;
  Subset v = 0;

  friend bool operator==(const LoopElement&, const LoopElement&) = default;
};

/// L(V) = {±1}×V with (ε,v)(δ,w) = (εδφ(v,w), v+w).
class CodeLoop {
 public:
  explicit CodeLoop(const BinaryCodeBasis& basis, std::uint32_t seed_choice = 0)
      : basis_(basis), phi_(basis, seed_choice) {
    const int n = order();
    table_.resize(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto a = element(x);
        const auto b = element(y);
        const bool neg = a.negative != b.negative ? phi_(a.v, b.v) == 1 : phi_(a.v, b.v) == -1;
        table_[static_cast<std::size_t>(x * n + y)] = static_cast<std::uint8_t>(index({neg, a.v ^ b.v}));
      }
  }

  const BinaryCodeBasis& basis() const { return basis_; }
  const FactorSet& factor_set() const { return phi_; }
  int rank() const { return basis_.rank(); }
  int order() const { return 2 << rank(); }

  LoopElement element(int k) const { return {(k >> rank()) != 0, static_cast<Subset>(k) & full_subset(rank())}; }
  int index(LoopElement e) const { return (e.negative ? 1 << rank() : 0) | static_cast<int>(e.v); }

  LoopElement identity() const { return {}; }
  LoopElement minus_one() const { return {true, 0}; }
  /// (+1, v_i), 1-based.
  LoopElement generator(int i) const { return {false, singleton(i)}; }

  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x * order() + y)]; }
  LoopElement mul(LoopElement x, LoopElement y) const { return element(mul(index(x), index(y))); }

  /// Two-sided inverse, found by scanning the row of x.
  LoopElement inverse(LoopElement x) const {
    const int xi = index(x);
    std::optional<int> found;
    for (int y = 0; y < order(); ++y) {
      if (mul(xi, y) == 0) {
        if (found) throw Error(ErrorKind::NoFactorSet, "right inverse is not unique");
        found = y;
      }
    }
    if (!found || mul(*found, xi) != 0) throw Error(ErrorKind::NoFactorSet, "no two-sided inverse");
    return element(*found);
  }

  LoopElement square(LoopElement x) const { return mul(x, x); }
  /// x⁻¹y⁻¹xy, bracketed as (x⁻¹y⁻¹)(xy).
  LoopElement commutator(LoopElement x, LoopElement y) const {
    return mul(mul(inverse(x), inverse(y)), mul(x, y));
  }
  /// ((xy)z)(x(yz))⁻¹.
  LoopElement associator(LoopElement x, LoopElement y, LoopElement z) const {
    return mul(mul(mul(x, y), z), inverse(mul(x, mul(y, z))));
  }

  bool is_associative() const {
    const int n = order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
    return true;
  }

  /// ((xy)x)z = x(y(xz)) for all triples.
  bool is_moufang() const {
    const int n = order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xyx = mul(mul(x, y), x);
        for (int z = 0; z < n; ++z)
          if (mul(xyx, z) != mul(x, mul(y, mul(x, z)))) return false;
      }
    return true;
  }

  /// Elements commuting and associating with everything.
  std::vector<LoopElement> center() const {
    const int n = order();
    std::vector<LoopElement> out;
    for (int c = 0; c < n; ++c) {
      bool central = true;
      for (int x = 0; x < n && central; ++x) {
        if (mul(c, x) != mul(x, c)) central = false;
        for (int y = 0; y < n && central; ++y) {
          if (mul(mul(c, x), y) != mul(c, mul(x, y)) || mul(mul(x, c), y) != mul(x, mul(c, y)) ||
              mul(mul(x, y), c) != mul(x, mul(y, c)))
            central = false;
        }
      }
      if (central) out.push_back(element(c));
    }
    return out;
  }

  /// "+{1,2,3,4}", "-{}" style label; positions of the codeword.
  std::string label(LoopElement e) const {
    return std::string(e.negative ? "-" : "+") + "{" + format_positions(basis_.codeword(e.v)) + "}";
  }

  /// Multiplication table as CSV: header row and column of element labels.
  std::string to_csv() const {
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = "\"\"";
    for (int y = 0; y < order(); ++y) out += "," + quoted(label(element(y)));
    out += "\n";
    for (int x = 0; x < order(); ++x) {
      out += quoted(label(element(x)));
      for (int y = 0; y < order(); ++y) out += "," + quoted(label(element(mul(x, y))));
      out += "\n";
    }
    return out;
  }

 private:
  BinaryCodeBasis basis_;
  FactorSet phi_;
  std::vector<std::uint8_t> table_;
};

/// λ read off the loop itself: signs of squares, commutators and associators
/// of the generators (+1, v_i).
inline CharVector char_vector_of(const CodeLoop& loop) {
  const int n = loop.rank();
  CharVector cv(n);
  for (int i = 1; i <= n; ++i) {
    cv.set_sigma(i, loop.square(loop.generator(i)).negative);
    for (int j = i + 1; j <= n; ++j) {
      cv.set_beta(i, j, loop.commutator(loop.generator(i), loop.generator(j)).negative);
      for (int k = j + 1; k <= n; ++k)
        cv.set_alpha(i, j, k, loop.associator(loop.generator(i), loop.generator(j), loop.generator(k)).negative);
    }
  }
  return cv;
}

/// Same class id after canonicalization of both characteristic vectors.
inline bool loops_isomorphic(const BinaryCodeBasis& a, const BinaryCodeBasis& b) {
  if (a.rank() != b.rank()) return false;
  return canonicalize(char_vector_of(a)).id == canonicalize(char_vector_of(b)).id;
}

/// Searches for an explicit isomorphism by choosing images of the generators
/// and closing under multiplication. Exhaustive; meant for rank <= 3.
inline bool explicit_isomorphism_exists(const CodeLoop& a, const CodeLoop& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  const int r = a.rank();
  std::vector<int> images(static_cast<std::size_t>(r), 0);

  auto try_map = [&]() {
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<int> known;
    map[0] = 0;
    known.push_back(0);
    for (int i = 0; i < r; ++i) {
      const int g = a.index(a.generator(i + 1));
      if (map[static_cast<std::size_t>(g)] >= 0 && map[static_cast<std::size_t>(g)] != images[static_cast<std::size_t>(i)]) return false;
      if (map[static_cast<std::size_t>(g)] < 0) known.push_back(g);
      map[static_cast<std::size_t>(g)] = images[static_cast<std::size_t>(i)];
    }
    for (bool grew = true; grew;) {
      grew = false;
      const auto snapshot = known;
      for (int x : snapshot)
        for (int y : snapshot) {
          const int xy = a.mul(x, y);
          const int img = b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
          if (map[static_cast<std::size_t>(xy)] < 0) {
            map[static_cast<std::size_t>(xy)] = img;
            known.push_back(xy);
            grew = true;
          } else if (map[static_cast<std::size_t>(xy)] != img) {
            return false;
          }
        }
    }
    if (static_cast<int>(known.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      if (hit[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])]) return false;
      hit[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = true;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[static_cast<std::size_t>(a.mul(x, y))] !=
            b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
          return false;
    return true;
  };

  const long total = [&] {
    long t = 1;
    for (int i = 0; i < r; ++i) t *= n;
    return t;
  }();
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < r; ++i, c /= n) images[static_cast<std::size_t>(i)] = static_cast<int>(c % n);
    if (try_map()) return true;
  }
  return false;
}

}  // namespace loopforge
