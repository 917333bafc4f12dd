#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "loopforge/code.hpp"
#include "loopforge/error.hpp"
#include "loopforge/gl_matrix.hpp"
#include "loopforge/subset.hpp"

namespace loopforge {

/// Characteristic vector (λ_i; λ_ij; λ_ijk) of an ordered generating set:
/// squares, commutators and associators of the generators as F2 values.
///
/// Coordinates are kept in the conventional order: λ_1..λ_n, then λ_ij for
/// i<j lexicographically, then λ_ijk for i<j<k lexicographically.
class CharVector {
 public:
  static constexpr int kMaxRank = 7;

  explicit CharVector(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank)
      throw Error(ErrorKind::UnsupportedRank, "characteristic vectors support rank 1.." + std::to_string(kMaxRank));
  }

  static CharVector from_packed(int rank, std::uint64_t bits) {
    CharVector cv(rank);
    if (bits >> coordinate_count(rank) != 0) throw Error(ErrorKind::Parse, "packed value wider than coordinate count");
    cv.bits_ = bits;
    return cv;
  }

  static constexpr int coordinate_count(int n) { return n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6; }

  int rank() const { return rank_; }
  int size() const { return coordinate_count(rank_); }
  std::uint64_t packed() const { return bits_; }

  bool coordinate(int index) const { return (bits_ >> index & 1u) != 0; }
  void set_coordinate(int index, bool value) {
    if (value) {
      bits_ |= std::uint64_t{1} << index;
    } else {
      bits_ &= ~(std::uint64_t{1} << index);
    }
  }

  // Indices are 1-based generator labels.
  bool sigma(int i) const { return coordinate(sigma_index(i)); }
  bool beta(int i, int j) const { return i != j && coordinate(pair_index(i, j)); }
  bool alpha(int i, int j, int k) const {
    return i != j && j != k && i != k && coordinate(triple_index(i, j, k));
  }
  void set_sigma(int i, bool v) { set_coordinate(sigma_index(i), v); }
  void set_beta(int i, int j, bool v) { set_coordinate(pair_index(i, j), v); }
  void set_alpha(int i, int j, int k, bool v) { set_coordinate(triple_index(i, j, k), v); }

  /// Some λ_ijk is nonzero.
  bool nonassociative() const {
    const int first = rank_ + rank_ * (rank_ - 1) / 2;
    return (bits_ >> first) != 0;
  }

  int sigma_index(int i) const {
    check(i);
    return i - 1;
  }

  int pair_index(int i, int j) const {
    check(i);
    check(j);
    if (i == j) throw Error(ErrorKind::Parse, "pair coordinate needs distinct indices");
    if (i > j) std::swap(i, j);
    int idx = rank_;
    for (int a = 1; a < i; ++a) idx += rank_ - a;
    return idx + (j - i - 1);
  }

  int triple_index(int i, int j, int k) const {
    check(i);
    check(j);
    check(k);
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorKind::Parse, "triple coordinate needs distinct indices");
    int idx = rank_ + rank_ * (rank_ - 1) / 2;
    for (int a = 1; a <= rank_; ++a)
      for (int b = a + 1; b <= rank_; ++b)
        for (int c = b + 1; c <= rank_; ++c) {
          if (a == t[0] && b == t[1] && c == t[2]) return idx;
          ++idx;
        }
    return idx;
  }

  /// Full coordinate bitstring in conventional order.
  std::string bits_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) out += coordinate(i) ? '1' : '0';
    return out;
  }

  friend bool operator==(const CharVector&, const CharVector&) = default;

 private:
  void check(int i) const {
    if (i < 1 || i > rank_) throw Error(ErrorKind::Parse, "generator index out of range");
  }

  int rank_;
  std::uint64_t bits_ = 0;
};

/// λ of the given generating set: λ_i = t_i/4, λ_ij = t_ij/2, λ_ijk = t_ijk (mod 2).
inline CharVector char_vector_of(const BinaryCodeBasis& basis) {
  if (!is_doubly_even(basis)) throw Error(ErrorKind::NotDoublyEven, "the code is not doubly even");
  const int n = basis.rank();
  CharVector cv(n);
  for (int i = 1; i <= n; ++i) {
    cv.set_sigma(i, weight(basis.generator(i)) / 4 % 2 != 0);
    for (int j = i + 1; j <= n; ++j) {
      const int tij = (basis.generator(i) & basis.generator(j)).size();
      if (tij % 2 != 0) throw Error(ErrorKind::NotDoublyEven, "odd pairwise intersection");
      cv.set_beta(i, j, tij / 2 % 2 != 0);
      for (int k = j + 1; k <= n; ++k) {
        cv.set_alpha(i, j, k, (basis.generator(i) & basis.generator(j) & basis.generator(k)).size() % 2 != 0);
      }
    }
  }
  return cv;
}

// Evaluation at arbitrary elements of V, given as coefficient masks. These
// are the expansions of |x|/4, |x∩y|/2 and |x∩y∩z| (mod 2) by
// inclusion-exclusion, written in the basis coordinates.

inline bool eval_alpha(const CharVector& cv, Subset x, Subset y, Subset z) {
  const int n = cv.rank();
  bool acc = false;
  for (int i = 1; i <= n; ++i) {
    if (!(x & singleton(i))) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == i || !(y & singleton(j))) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j || !(z & singleton(k))) continue;
        acc ^= cv.alpha(i, j, k);
      }
    }
  }
  return acc;
}

inline bool eval_beta(const CharVector& cv, Subset x, Subset y) {
  const int n = cv.rank();
  bool acc = false;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if ((x & singleton(i)) && (y & singleton(j))) acc ^= cv.beta(i, j);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        // {i,j} from x with k from y, and k from x with {i,j} from y
        if ((x & singleton(i)) && (x & singleton(j)) && (y & singleton(k))) acc ^= cv.alpha(i, j, k);
        if ((y & singleton(i)) && (y & singleton(j)) && (x & singleton(k))) acc ^= cv.alpha(i, j, k);
      }
    }
  }
  return acc;
}

inline bool eval_sigma(const CharVector& cv, Subset x) {
  const int n = cv.rank();
  bool acc = false;
  for (int i = 1; i <= n; ++i) {
    if (!(x & singleton(i))) continue;
    acc ^= cv.sigma(i);
    for (int j = i + 1; j <= n; ++j) {
      if (!(x & singleton(j))) continue;
      acc ^= cv.beta(i, j);
      for (int k = j + 1; k <= n; ++k)
        if (x & singleton(k)) acc ^= cv.alpha(i, j, k);
    }
  }
  return acc;
}

/// λ of the generating set whose i-th element has coefficients g.row(i).
inline CharVector gl_transform(const CharVector& cv, const GLMatrix& g) {
  const int n = cv.rank();
  if (g.rank() != n) throw Error(ErrorKind::UnsupportedRank, "matrix and characteristic vector ranks differ");
  CharVector out(n);
  for (int i = 1; i <= n; ++i) {
    out.set_sigma(i, eval_sigma(cv, g.row(i)));
    for (int j = i + 1; j <= n; ++j) {
      out.set_beta(i, j, eval_beta(cv, g.row(i), g.row(j)));
      for (int k = j + 1; k <= n; ++k) out.set_alpha(i, j, k, eval_alpha(cv, g.row(i), g.row(j), g.row(k)));
    }
  }
  return out;
}

/// Rank 3 with λ_123 = 1, or rank 4 with λ_123 = 1 and λ_124 = λ_134 = λ_234 = 0.
/// These are the vectors that have a short form.
inline bool has_short_form(const CharVector& cv) {
  if (cv.rank() == 3) return cv.alpha(1, 2, 3);
  if (cv.rank() == 4) return cv.alpha(1, 2, 3) && !cv.alpha(1, 2, 4) && !cv.alpha(1, 3, 4) && !cv.alpha(2, 3, 4);
  return false;
}

/// Short form ("000111", "0001111100") when available, "full:<bits>" otherwise.
inline std::string format_char_vector(const CharVector& cv) {
  if (!has_short_form(cv)) return "full:" + cv.bits_string();
  const int shown = cv.rank() + cv.rank() * (cv.rank() - 1) / 2;
  return cv.bits_string().substr(0, static_cast<std::size_t>(shown));
}

inline std::string format_char_vector_full(const CharVector& cv) { return "full:" + cv.bits_string(); }

/// Accepts "full:<bits>", a bare full bitstring, or the short forms of
/// length 6 (rank 3) and 10 (rank 4). Short forms set λ_123 = 1 and, at
/// rank 4, λ_124 = λ_134 = λ_234 = 0. rank = 0 infers the rank from the length.
inline CharVector parse_char_vector(std::string_view text, int rank = 0) {
  text = detail::trim(text);
  bool full = false;
  if (text.starts_with("full:")) {
    text.remove_prefix(5);
    full = true;
  }
  for (char c : text)
    if (c != '0' && c != '1') throw Error(ErrorKind::Parse, "characteristic vector must be a bitstring");
  const int len = static_cast<int>(text.size());

  int n = rank;
  bool short_form = false;
  if (n == 0) {
    for (int r = 1; r <= CharVector::kMaxRank; ++r)
      if (CharVector::coordinate_count(r) == len) n = r;
    if (!full && len == 6) { n = 3; short_form = true; }
    if (!full && len == 10) { n = 4; short_form = true; }
    if (n == 0) throw Error(ErrorKind::Parse, "cannot infer rank from " + std::to_string(len) + " bits");
  } else if (!full && ((n == 3 && len == 6) || (n == 4 && len == 10))) {
    short_form = true;
  }
  CharVector cv(n);
  if (short_form) {
    for (int i = 0; i < len; ++i) cv.set_coordinate(i, text[static_cast<std::size_t>(i)] == '1');
    cv.set_alpha(1, 2, 3, true);
    return cv;
  }
  if (len != cv.size())
    throw Error(ErrorKind::Parse, "rank " + std::to_string(n) + " needs " + std::to_string(cv.size()) + " bits, got " +
                                      std::to_string(len));
  for (int i = 0; i < len; ++i) cv.set_coordinate(i, text[static_cast<std::size_t>(i)] == '1');
  return cv;
}

}  // namespace loopforge

template <>
struct std::hash<loopforge::CharVector> {
  std::size_t operator()(const loopforge::CharVector& cv) const noexcept {
    return std::hash<std::uint64_t>{}(cv.packed() * 8 + static_cast<std::uint64_t>(cv.rank()));
  }
};
