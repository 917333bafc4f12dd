#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/error.hpp"

namespace loopforge {

/// A subset of I_m = {1, ..., m}, i.e. a binary word of length m.
/// Positions are 1-based. Storage is a fixed multi-word bit vector.
class PositionSet {
 public:
  static constexpr std::size_t kWords = 16;
  static constexpr int kMaxPosition = static_cast<int>(kWords * 64);

  PositionSet() = default;

  PositionSet(std::initializer_list<int> positions) {
    for (int p : positions) insert(p);
  }

  explicit PositionSet(std::span<const int> positions) {
    for (int p : positions) insert(p);
  }

  /// The interval {first, ..., last}.
  static PositionSet range(int first, int last) {
    PositionSet s;
    for (int p = first; p <= last; ++p) s.insert(p);
    return s;
  }

  void insert(int p) {
    check(p);
    words_[word(p)] |= bit(p);
  }

  void erase(int p) {
    check(p);
    words_[word(p)] &= ~bit(p);
  }

  bool contains(int p) const {
    if (p < 1 || p > kMaxPosition) return false;
    return (words_[word(p)] & bit(p)) != 0;
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Largest position present, 0 when empty.
  int max_position() const {
    for (std::size_t i = kWords; i-- > 0;) {
      if (words_[i] != 0) return static_cast<int>(i * 64 + 64 - std::countl_zero(words_[i]));
    }
    return 0;
  }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w) + 1);
        w &= w - 1;
      }
    }
    return out;
  }

  PositionSet& operator^=(const PositionSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  PositionSet& operator&=(const PositionSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  PositionSet& operator|=(const PositionSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PositionSet& operator-=(const PositionSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  /// Symmetric difference, which is the F2 vector sum.
  friend PositionSet operator^(PositionSet a, const PositionSet& b) { return a ^= b; }
  friend PositionSet operator+(PositionSet a, const PositionSet& b) { return a ^= b; }
  friend PositionSet operator&(PositionSet a, const PositionSet& b) { return a &= b; }
  friend PositionSet operator|(PositionSet a, const PositionSet& b) { return a |= b; }
  friend PositionSet operator-(PositionSet a, const PositionSet& b) { return a -= b; }

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

  /// Lexicographic order on the sorted position lists.
  friend bool operator<(const PositionSet& a, const PositionSet& b) {
    auto pa = a.positions();
    auto pb = b.positions();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  }

  bool is_subset_of(const PositionSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  static std::size_t word(int p) { return static_cast<std::size_t>(p - 1) / 64; }
  static std::uint64_t bit(int p) { return std::uint64_t{1} << (static_cast<unsigned>(p - 1) % 64); }
  static void check(int p) {
    if (p < 1 || p > kMaxPosition) {
      throw Error(ErrorKind::InvalidBasis, "position " + std::to_string(p) + " outside 1.." +
                                               std::to_string(kMaxPosition));
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

inline int weight(const PositionSet& v) { return v.size(); }

/// |v_1 ∩ ... ∩ v_k|.
inline int meet_weight(std::span<const PositionSet> vs) {
  if (vs.empty()) throw Error(ErrorKind::EmptyMeet, "meet of an empty list");
  PositionSet acc = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) acc &= vs[i];
  return acc.size();
}

inline int meet_weight(std::initializer_list<PositionSet> vs) {
  return meet_weight(std::span<const PositionSet>(vs.begin(), vs.size()));
}

/// "1,2,3,4" (ranges written out). Empty set formats as "".
inline std::string format_positions(const PositionSet& v) {
  std::string out;
  for (int p : v.positions()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

/// Compressed form with runs of three or more as "a-b", e.g. "1-8,13,14".
inline std::string format_positions_compact(const PositionSet& v) {
  auto ps = v.positions();
  std::string out;
  for (std::size_t i = 0; i < ps.size();) {
    std::size_t j = i;
    while (j + 1 < ps.size() && ps[j + 1] == ps[j] + 1) ++j;
    if (!out.empty()) out += ',';
    if (j - i >= 2) {
      out += std::to_string(ps[i]) + "-" + std::to_string(ps[j]);
    } else {
      for (std::size_t k = i; k <= j; ++k) {
        if (k != i) out += ',';
        out += std::to_string(ps[k]);
      }
    }
    i = j + 1;
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "1,2,3,4", also accepting runs "1-8" and surrounding parentheses or braces.
inline PositionSet parse_positions(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && (text.front() == '(' || text.front() == '{')) text.remove_prefix(1);
  if (!text.empty() && (text.back() == ')' || text.back() == '}')) text.remove_suffix(1);
  PositionSet out;
  while (!detail::trim(text).empty()) {
    auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto dash = item.find('-');
    if (dash != std::string_view::npos && dash > 0) {
      int a = detail::parse_int(item.substr(0, dash));
      int b = detail::parse_int(item.substr(dash + 1));
      if (a > b) throw Error(ErrorKind::Parse, "descending range '" + std::string(item) + "'");
      for (int p = a; p <= b; ++p) out.insert(p);
    } else {
      int p = detail::parse_int(item);
      if (p < 1) throw Error(ErrorKind::Parse, "positions are 1-based, got " + std::to_string(p));
      out.insert(p);
    }
  }
  return out;
}

}  // namespace loopforge
