#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopforge/error.hpp"
#include "loopforge/position_set.hpp"
#include "loopforge/subset.hpp"

namespace loopforge {

/// Rank of a list of words over F2.
inline int f2_rank(std::vector<PositionSet> rows) {
  std::vector<std::pair<int, PositionSet>> pivots;
  for (auto& r : rows) {
    for (const auto& [p, b] : pivots)
      if (r.contains(p)) r ^= b;
    if (!r.empty()) pivots.emplace_back(r.positions().front(), r);
  }
  return static_cast<int>(pivots.size());
}

/// An ordered, linearly independent list of generators v_1..v_n of a
/// subspace of F2^m. Immutable once constructed.
class BinaryCodeBasis {
 public:
  static constexpr int kMaxRank = 20;

  BinaryCodeBasis(int length, std::vector<PositionSet> generators)
      : length_(length), generators_(std::move(generators)) {
    if (length_ < 0 || length_ > PositionSet::kMaxPosition)
      throw Error(ErrorKind::InvalidBasis, "length " + std::to_string(length_) + " out of range");
    if (generators_.empty()) throw Error(ErrorKind::InvalidBasis, "a basis needs at least one generator");
    if (static_cast<int>(generators_.size()) > kMaxRank)
      throw Error(ErrorKind::InvalidBasis, "rank above " + std::to_string(kMaxRank));
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i].max_position() > length_)
        throw Error(ErrorKind::InvalidBasis, "generator " + std::to_string(i + 1) + " has a position beyond m=" +
                                                 std::to_string(length_));
    }
    if (f2_rank(generators_) != rank())
      throw Error(ErrorKind::InvalidBasis, "generators are linearly dependent");
  }

  /// Length is taken to be the largest position used.
  explicit BinaryCodeBasis(const std::vector<PositionSet>& generators)
      : BinaryCodeBasis(max_position_of(generators), generators) {}

  int length() const { return length_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<PositionSet>& generators() const { return generators_; }
  /// 1-based.
  const PositionSet& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }

  /// Σ_{i ∈ coeffs} v_i.
  PositionSet codeword(Subset coeffs) const {
    PositionSet out;
    for (int i = 1; coeffs != 0; ++i, coeffs >>= 1)
      if (coeffs & 1u) out ^= generators_[static_cast<std::size_t>(i - 1)];
    return out;
  }

  /// ∩_{i ∈ sigma} v_i.
  PositionSet meet(Subset sigma) const {
    PositionSet out = generators_[static_cast<std::size_t>(lowest_index(sigma) - 1)];
    for (int i = 1; sigma != 0; ++i, sigma >>= 1)
      if (sigma & 1u) out &= generators_[static_cast<std::size_t>(i - 1)];
    return out;
  }

  PositionSet support() const {
    PositionSet out;
    for (const auto& g : generators_) out |= g;
    return out;
  }

  bool covers() const { return support() == PositionSet::range(1, length_); }

  /// Generators containing position p.
  Subset column(int p) const {
    Subset s = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].contains(p)) s |= Subset{1} << i;
    return s;
  }

  friend bool operator==(const BinaryCodeBasis&, const BinaryCodeBasis&) = default;

 private:
  static int max_position_of(const std::vector<PositionSet>& gs) {
    int m = 0;
    for (const auto& g : gs) m = std::max(m, g.max_position());
    return m;
  }

  int length_;
  std::vector<PositionSet> generators_;
};

/// All 2^n codewords, indexed by coefficient mask; index 0 is the empty word.
inline std::vector<PositionSet> span(const BinaryCodeBasis& basis) {
  std::vector<PositionSet> out(std::size_t{1} << basis.rank());
  for (std::size_t c = 1; c < out.size(); ++c) {
    out[c] = out[c & (c - 1)] ^ basis.generators()[static_cast<std::size_t>(std::countr_zero(c))];
  }
  return out;
}

/// Every codeword has weight ≡ 0 (mod 4). Uses |u+v| = |u|+|v|-2|u∩v|:
/// generators of weight ≡ 0 (mod 4) with even pairwise meets suffice.
inline bool is_doubly_even(const BinaryCodeBasis& basis) {
  const auto& g = basis.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (weight(g[i]) % 4 != 0) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if ((g[i] & g[j]).size() % 2 != 0) return false;
  }
  return true;
}

struct PositionClass {
  Subset sigma;
  PositionSet positions;
};

/// The classes v^σ = (∩_{i∈σ} v_i) \ (∪_{j∉σ} v_j) for nonempty σ.
class ClassPartition {
 public:
  ClassPartition(int rank, int length, std::vector<PositionClass> classes)
      : rank_(rank), length_(length), classes_(std::move(classes)) {
    std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  }

  int rank() const { return rank_; }
  int length() const { return length_; }
  /// Nonempty classes only, ordered by σ mask.
  const std::vector<PositionClass>& classes() const { return classes_; }

  int size_of(Subset sigma) const {
    auto it = find(sigma);
    return it == classes_.end() ? 0 : it->positions.size();
  }

  PositionSet class_of(Subset sigma) const {
    auto it = find(sigma);
    return it == classes_.end() ? PositionSet{} : it->positions;
  }

  /// x_σ for every σ mask (index 0 unused and zero).
  std::vector<int> dense_sizes() const {
    std::vector<int> out(std::size_t{1} << rank_, 0);
    for (const auto& c : classes_) out[c.sigma] = c.positions.size();
    return out;
  }

  /// The partition of I_m with labels dropped, in canonical order.
  std::vector<PositionSet> blocks() const {
    std::vector<PositionSet> out;
    for (const auto& c : classes_) out.push_back(c.positions);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<PositionClass>::const_iterator find(Subset sigma) const {
    return std::find_if(classes_.begin(), classes_.end(), [&](const auto& c) { return c.sigma == sigma; });
  }

  int rank_;
  int length_;
  std::vector<PositionClass> classes_;
};

inline ClassPartition class_partition(const BinaryCodeBasis& basis) {
  std::map<Subset, PositionSet> by_sigma;
  for (int p = 1; p <= basis.length(); ++p) {
    Subset col = basis.column(p);
    if (col == 0)
      throw Error(ErrorKind::NotCovering, "position " + std::to_string(p) + " lies in no generator");
    by_sigma[col].insert(p);
  }
  std::vector<PositionClass> classes;
  for (auto& [sigma, ps] : by_sigma) classes.push_back({sigma, ps});
  return ClassPartition(basis.rank(), basis.length(), std::move(classes));
}

/// Nondecreasing sizes of the nonempty classes.
struct TypeVector {
  std::vector<int> sizes;

  int degree() const {
    int m = 0;
    for (int s : sizes) m += s;
    return m;
  }

  /// "(1111333)"; falls back to comma separation when a size exceeds 9.
  std::string to_string() const {
    bool wide = std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 9; });
    std::string out = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (wide && i > 0) out += ',';
      out += std::to_string(sizes[i]);
    }
    return out + ")";
  }

  static TypeVector parse(std::string_view text) {
    TypeVector t;
    text = detail::trim(text);
    if (!text.empty() && text.front() == '(') text.remove_prefix(1);
    if (!text.empty() && text.back() == ')') text.remove_suffix(1);
    if (text.find(',') != std::string_view::npos) {
      while (!text.empty()) {
        auto comma = text.find(',');
        t.sizes.push_back(detail::parse_int(text.substr(0, comma)));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw Error(ErrorKind::Parse, "bad type vector digit");
        t.sizes.push_back(c - '0');
      }
    }
    return t;
  }

  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

inline TypeVector type_vector(const ClassPartition& partition) {
  TypeVector t;
  for (const auto& c : partition.classes()) t.sizes.push_back(c.positions.size());
  std::sort(t.sizes.begin(), t.sizes.end());
  return t;
}

/// Multiplicity of each nonzero column of the generator matrix. Positions
/// in no generator are ignored. The multiset is the class-size function x_σ.
inline std::map<Subset, int> column_counts(const BinaryCodeBasis& basis) {
  std::map<Subset, int> out;
  for (int p = 1; p <= basis.length(); ++p) {
    Subset c = basis.column(p);
    if (c != 0) ++out[c];
  }
  return out;
}

namespace detail {

inline bool extend_map(const std::map<Subset, int>& ca, const std::map<Subset, int>& cb,
                       const std::vector<Subset>& a_basis, const std::vector<std::pair<Subset, Subset>>& a_coords,
                       std::vector<Subset>& images) {
  if (images.size() == a_basis.size()) {
    for (const auto& [col, coeffs] : a_coords) {
      Subset img = 0;
      for (std::size_t k = 0; k < images.size(); ++k)
        if (coeffs >> k & 1u) img ^= images[k];
      auto it = cb.find(img);
      if (it == cb.end() || it->second != ca.at(col)) return false;
    }
    return true;
  }
  const int need = ca.at(a_basis[images.size()]);
  for (const auto& [col, count] : cb) {
    if (count != need) continue;
    images.push_back(col);
    if (mask_rank(images) == static_cast<int>(images.size()) &&
        extend_map(ca, cb, a_basis, a_coords, images))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff a position bijection carries span(a) onto span(b). Positions
/// outside every generator are padding and ignored. Decided by searching for
/// an invertible map of F2^n matching the column multisets of the two
/// generator matrices (the per-position patterns).
inline bool codes_equivalent(const BinaryCodeBasis& a, const BinaryCodeBasis& b) {
  if (a.rank() != b.rank()) return false;
  const auto ca = column_counts(a);
  const auto cb = column_counts(b);
  if (ca.size() != cb.size()) return false;
  std::vector<int> ma, mb;
  for (const auto& [c, k] : ca) ma.push_back(k);
  for (const auto& [c, k] : cb) mb.push_back(k);
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb) return false;

  // a's columns span F2^n because its generators are independent
  std::vector<Subset> a_basis;
  for (const auto& [c, k] : ca) {
    a_basis.push_back(c);
    if (mask_rank(a_basis) != static_cast<int>(a_basis.size())) a_basis.pop_back();
  }
  std::vector<std::pair<Subset, Subset>> coords;
  for (const auto& [c, k] : ca) coords.emplace_back(c, express_in(a_basis, c));
  std::vector<Subset> images;
  return detail::extend_map(ca, cb, a_basis, coords, images);
}

/// t_σ = |∩_{i∈σ} v_i| for every nonempty σ.
class WeightProfile {
 public:
  explicit WeightProfile(int rank) : rank_(rank), t_(std::size_t{1} << rank, 0) {}

  static WeightProfile of(const BinaryCodeBasis& basis) {
    WeightProfile w(basis.rank());
    for (Subset s = 1; s < (Subset{1} << basis.rank()); ++s) w.t_[s] = basis.meet(s).size();
    return w;
  }

  int rank() const { return rank_; }
  int t(Subset sigma) const { return t_.at(sigma); }
  void set(Subset sigma, int value) { t_.at(sigma) = value; }

  int ti(int i) const { return t(singleton(i)); }
  int tij(int i, int j) const { return t(singleton(i) | singleton(j)); }
  int tijk(int i, int j, int k) const { return t(singleton(i) | singleton(j) | singleton(k)); }
  /// |v_1 ∩ ... ∩ v_n|.
  int t_all() const { return t(full_subset(rank_)); }

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;

 private:
  int rank_;
  std::vector<int> t_;
};

/// l_ij = |v_i ∪ v_j|.
inline int pair_length(int i, int j, const WeightProfile& w) { return w.ti(i) + w.ti(j) - w.tij(i, j); }

/// l_ijk = |v_i ∪ v_j ∪ v_k|.
inline int triple_length(int i, int j, int k, const WeightProfile& w) {
  return w.ti(i) + w.ti(j) + w.ti(k) - (w.tij(i, j) + w.tij(i, k) + w.tij(j, k)) + w.tijk(i, j, k);
}

}  // namespace loopforge
