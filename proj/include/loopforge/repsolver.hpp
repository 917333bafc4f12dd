#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "loopforge/char_vector.hpp"
#include "loopforge/classification.hpp"
#include "loopforge/code.hpp"
#include "loopforge/code_io.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

inline constexpr int kReducedClassBound = 7;

/// t_σ ≡ residue (mod modulus).
struct Congruence {
  Subset sigma;
  int modulus;
  int residue;
};

/// t_i ≡ 4λ_i (mod 8), t_ij ≡ 2λ_ij (mod 4), t_ijk ≡ λ_ijk (mod 2).
inline std::vector<Congruence> congruence_targets(const CharVector& cv) {
  const int n = cv.rank();
  std::vector<Congruence> out;
  for (int i = 1; i <= n; ++i) out.push_back({singleton(i), 8, cv.sigma(i) ? 4 : 0});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({singleton(i) | singleton(j), 4, cv.beta(i, j) ? 2 : 0});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        out.push_back({singleton(i) | singleton(j) | singleton(k), 2, cv.alpha(i, j, k) ? 1 : 0});
  return out;
}

namespace detail {

/// Subsets of I_n of the given size in lexicographic order.
inline std::vector<Subset> subsets_of_size(int n, int size) {
  std::vector<Subset> out;
  for (Subset s = 1; s <= full_subset(n); ++s)
    if (subset_size(s) == size) out.push_back(s);
  auto key = [](Subset s) {
    std::vector<int> idx;
    for (int i = 1; s != 0; ++i, s >>= 1)
      if (s & 1u) idx.push_back(i);
    return idx;
  };
  std::sort(out.begin(), out.end(), [&](Subset a, Subset b) { return key(a) < key(b); });
  return out;
}

}  // namespace detail

/// Listing order of a weight profile: I_n first, then by decreasing size,
/// lexicographic within a size. Rank 4: t, t123, t124, t134, t234, t12, ..., t4.
inline std::vector<Subset> profile_order(int n) {
  std::vector<Subset> out;
  for (int size = n; size >= 1; --size) {
    auto level = detail::subsets_of_size(n, size);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Listing order of a solution: as profile_order without I_n, whose class
/// size equals t_{1..n}.
inline std::vector<Subset> solution_order(int n) {
  auto out = profile_order(n);
  out.erase(out.begin());
  return out;
}

inline WeightProfile profile_from_listing(int n, const std::vector<int>& values) {
  const auto order = profile_order(n);
  if (values.size() != order.size())
    throw Error(ErrorKind::Parse, "rank " + std::to_string(n) + " profile needs " + std::to_string(order.size()) +
                                      " values, got " + std::to_string(values.size()));
  WeightProfile w(n);
  for (std::size_t i = 0; i < order.size(); ++i) w.set(order[i], values[i]);
  return w;
}

/// Class sizes x_σ for nonempty σ ⊆ I_n.
class ClassSizes {
 public:
  explicit ClassSizes(int rank) : rank_(rank), x_(std::size_t{1} << rank, 0) {}

  static ClassSizes of(const BinaryCodeBasis& basis) {
    ClassSizes s(basis.rank());
    for (const auto& [sigma, count] : column_counts(basis)) s.set(sigma, count);
    return s;
  }

  int rank() const { return rank_; }
  int operator[](Subset sigma) const { return x_.at(sigma); }
  void set(Subset sigma, int value) { x_.at(sigma) = value; }

  int degree() const {
    int m = 0;
    for (int v : x_) m += v;
    return m;
  }
  int max_size() const { return *std::max_element(x_.begin(), x_.end()); }

  TypeVector type() const {
    TypeVector t;
    for (int v : x_)
      if (v > 0) t.sizes.push_back(v);
    std::sort(t.sizes.begin(), t.sizes.end());
    return t;
  }

  /// Values in solution_order.
  std::vector<int> listing() const {
    std::vector<int> out;
    for (Subset s : solution_order(rank_)) out.push_back((*this)[s]);
    return out;
  }

  /// t_σ = Σ_{τ ⊇ σ} x_τ.
  WeightProfile profile() const {
    WeightProfile w(rank_);
    for (Subset s = 1; s < x_.size(); ++s) {
      int t = 0;
      for (Subset tau = 1; tau < x_.size(); ++tau)
        if ((tau & s) == s) t += x_[tau];
      w.set(s, t);
    }
    return w;
  }

  friend bool operator==(const ClassSizes&, const ClassSizes&) = default;

 private:
  int rank_;
  std::vector<int> x_;
};

namespace detail {

inline void check_solution(const ClassSizes& x, int max_class_size) {
  for (Subset s = 1; s <= full_subset(x.rank()); ++s) {
    if (x[s] < 0)
      throw Error(ErrorKind::InfeasibleProfile, "x_" + subset_label(s) + " = " + std::to_string(x[s]) + " < 0");
  }
  for (Subset s = 1; s <= full_subset(x.rank()); ++s) {
    if (x[s] > max_class_size)
      throw Error(ErrorKind::NotReduced,
                  "x_" + subset_label(s) + " = " + std::to_string(x[s]) + " exceeds " + std::to_string(max_class_size));
  }
}

}  // namespace detail

inline ClassSizes solve_system_rank3(const WeightProfile& w, int max_class_size = kReducedClassBound) {
  if (w.rank() != 3) throw Error(ErrorKind::UnsupportedRank, "expected a rank-3 profile");
  ClassSizes x(3);
  const int t123 = w.tijk(1, 2, 3);
  x.set(full_subset(3), t123);
  const int pairs[3][3] = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
  for (const auto& p : pairs) x.set(singleton(p[0]) | singleton(p[1]), w.tij(p[0], p[1]) - t123);
  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1;
    int k = 6 - i - j;
    x.set(singleton(i), w.ti(i) - w.tij(i, j) - w.tij(i, k) + t123);
  }
  detail::check_solution(x, max_class_size);
  return x;
}

inline ClassSizes solve_system_rank4(const WeightProfile& w, int max_class_size = kReducedClassBound) {
  if (w.rank() != 4) throw Error(ErrorKind::UnsupportedRank, "expected a rank-4 profile");
  ClassSizes x(4);
  const int t = w.t_all();
  x.set(full_subset(4), t);
  auto others = [](int a, int b) {
    std::vector<int> o;
    for (int i = 1; i <= 4; ++i)
      if (i != a && i != b) o.push_back(i);
    return o;
  };
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) x.set(singleton(i) | singleton(j) | singleton(k), w.tijk(i, j, k) - t);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      auto o = others(i, j);
      x.set(singleton(i) | singleton(j), w.tij(i, j) - w.tijk(i, j, o[0]) - w.tijk(i, j, o[1]) + t);
    }
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> o;
    for (int j = 1; j <= 4; ++j)
      if (j != i) o.push_back(j);
    const int a = o[0], b = o[1], c = o[2];
    x.set(singleton(i), w.ti(i) - w.tij(i, a) - w.tij(i, b) - w.tij(i, c) + w.tijk(i, a, b) + w.tijk(i, a, c) +
                            w.tijk(i, b, c) - t);
  }
  detail::check_solution(x, max_class_size);
  return x;
}

inline ClassSizes solve_system(const WeightProfile& w, int max_class_size = kReducedClassBound) {
  if (w.rank() == 3) return solve_system_rank3(w, max_class_size);
  if (w.rank() == 4) return solve_system_rank4(w, max_class_size);
  throw Error(ErrorKind::UnsupportedRank, "closed-form solutions exist for ranks 3 and 4");
}

/// Consecutive position blocks for the classes in labeling order; generator
/// i is the union of the blocks whose σ contains i.
inline BinaryCodeBasis assemble_representation(const ClassSizes& sizes) {
  const int n = sizes.rank();
  std::vector<PositionSet> gens(static_cast<std::size_t>(n));
  int next = 1;
  for (Subset sigma : labeling_order(n)) {
    for (int c = 0; c < sizes[sigma]; ++c, ++next)
      for (int i = 1; i <= n; ++i)
        if (sigma & singleton(i)) gens[static_cast<std::size_t>(i - 1)].insert(next);
  }
  for (int i = 1; i <= n; ++i)
    if (gens[static_cast<std::size_t>(i - 1)].empty())
      throw Error(ErrorKind::DegenerateBasis, "generator " + std::to_string(i) + " is empty");
  if (f2_rank(gens) != n) throw Error(ErrorKind::DegenerateBasis, "generators are linearly dependent");
  return BinaryCodeBasis(next - 1, std::move(gens));
}

/// The printed inequality families bounding t_ij4, t_i4 and t_4 (rank 4).
inline bool check_profile_bounds(const WeightProfile& w) {
  if (w.rank() != 4) throw Error(ErrorKind::UnsupportedRank, "profile bounds are stated for rank 4");
  const int t = w.t_all();
  const int t123 = w.tijk(1, 2, 3);
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& p : pairs) {
    const int tij4 = w.tijk(p[0], p[1], 4);
    if (t > tij4 || tij4 > w.tij(p[0], p[1]) - t123 + t) return false;
  }
  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1;
    int k = 6 - i - j;
    const int lo = w.tijk(i, j, 4) + w.tijk(i, k, 4) - t;
    const int hi = w.ti(i) - w.tij(i, j) - w.tij(i, k) + t123 + w.tijk(i, j, 4) + w.tijk(i, k, 4) - t;
    if (w.tij(i, 4) < lo || w.tij(i, 4) > hi) return false;
  }
  return w.ti(4) >= w.tij(1, 4) + w.tij(2, 4) + w.tij(3, 4) - w.tijk(1, 2, 4) - w.tijk(1, 3, 4) -
                        w.tijk(2, 3, 4) + t;
}

struct ReducedRepresentation {
  ClassSizes sizes;
  BinaryCodeBasis basis;

  int degree() const { return sizes.degree(); }
  TypeVector type() const { return sizes.type(); }
};

struct EnumerationOptions {
  int max_class_size = kReducedClassBound;
  bool use_profile_bounds = false;
  int jobs = 1;
};

namespace detail {

inline void require_enumerable(const CharVector& cv) {
  if (cv.rank() != 3 && cv.rank() != 4)
    throw Error(ErrorKind::UnsupportedRank, "enumeration is defined for ranks 3 and 4");
  if (!cv.nonassociative()) throw Error(ErrorKind::AssociativeLoop, "all associator coordinates are zero");
  if (!has_short_form(cv))
    throw Error(ErrorKind::UnexpectedRadical, "characteristic vector is not normalized (nucleus generator last)");
}

/// Depth-first walk over x_σ in labeling order. When x_σ is chosen all its
/// supersets are fixed, so the congruence on t_σ pins x_σ to a residue class.
class SizeSearch {
 public:
  SizeSearch(const CharVector& cv, const EnumerationOptions& opts) : n_(cv.rank()), opts_(opts), order_(labeling_order(n_)) {
    modulus_.assign(std::size_t{1} << n_, 1);
    residue_.assign(std::size_t{1} << n_, 0);
    for (const auto& c : congruence_targets(cv)) {
      modulus_[c.sigma] = c.modulus;
      residue_[c.sigma] = c.residue;
    }
  }

  /// Values allowed for the first variable, for splitting work.
  std::vector<int> first_values() const {
    ClassSizes x(n_);
    return candidates(x, 0);
  }

  void run(const std::function<void(const ClassSizes&)>& emit, std::optional<int> first = std::nullopt) const {
    ClassSizes x(n_);
    if (first) {
      x.set(order_[0], *first);
      walk(x, 1, emit);
    } else {
      walk(x, 0, emit);
    }
  }

 private:
  std::vector<int> candidates(const ClassSizes& x, std::size_t depth) const {
    const Subset sigma = order_[depth];
    int fixed = 0;
    for (Subset tau = 1; tau < (Subset{1} << n_); ++tau)
      if (tau != sigma && (tau & sigma) == sigma) fixed += x[tau];
    const int m = modulus_[sigma];
    const int start = (((residue_[sigma] - fixed) % m) + m) % m;
    std::vector<int> out;
    for (int v = start; v <= opts_.max_class_size; v += m) out.push_back(v);
    return out;
  }

  void walk(ClassSizes& x, std::size_t depth, const std::function<void(const ClassSizes&)>& emit) const {
    if (depth == order_.size()) {
      std::vector<Subset> used;
      for (Subset s : order_)
        if (x[s] > 0) used.push_back(s);
      if (mask_rank(used) != n_) return;
      if (opts_.use_profile_bounds && n_ == 4 && !check_profile_bounds(x.profile())) return;
      emit(x);
      return;
    }
    for (int v : candidates(x, depth)) {
      x.set(order_[depth], v);
      walk(x, depth + 1, emit);
    }
    x.set(order_[depth], 0);
  }

  int n_;
  EnumerationOptions opts_;
  std::vector<Subset> order_;
  std::vector<int> modulus_;
  std::vector<int> residue_;
};

/// Leaves of the search, in depth-first order regardless of `jobs`.
inline std::vector<ClassSizes> reduced_sizes(const CharVector& cv, const EnumerationOptions& opts) {
  require_enumerable(cv);
  if (opts.max_class_size < 1) throw Error(ErrorKind::Parse, "max class size must be at least 1");
  const SizeSearch search(cv, opts);
  const auto firsts = search.first_values();
  std::vector<std::vector<ClassSizes>> parts(firsts.size());
  auto work = [&](std::size_t b) {
    search.run([&](const ClassSizes& x) { parts[b].push_back(x); }, firsts[b]);
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opts.jobs));
  if (jobs == 1 || firsts.size() == 1) {
    for (std::size_t b = 0; b < firsts.size(); ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(jobs, firsts.size()); ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t b = t; b < firsts.size(); b += jobs) work(b);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<ClassSizes> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline ReducedRepresentation realize(const ClassSizes& x, const CharVector& cv) {
  ReducedRepresentation rep{x, assemble_representation(x)};
  if (char_vector_of(rep.basis) != cv)
    throw Error(ErrorKind::InfeasibleProfile, "assembled code has the wrong characteristic vector");
  return rep;
}

}  // namespace detail

/// Every reduced representation with characteristic vector exactly cv, one
/// per class-size assignment, in search order.
inline std::vector<ReducedRepresentation> enumerate_reduced(const CharVector& cv, const EnumerationOptions& opts = {}) {
  std::vector<ReducedRepresentation> out;
  for (const auto& x : detail::reduced_sizes(cv, opts)) out.push_back(detail::realize(x, cv));
  return out;
}

struct MinimalReport {
  std::optional<LoopClassId> loop;
  CharVector target;
  int degree = 0;
  /// Pairwise inequivalent, sorted by type and then by serialized basis.
  std::vector<ReducedRepresentation> representations;
  std::size_t reduced_count = 0;
  std::size_t attaining_count = 0;
  /// Minimality is certified only among class sizes <= max_class_size.
  int max_class_size = kReducedClassBound;
};

inline MinimalReport minimal_representations(const CharVector& cv, const EnumerationOptions& opts = {}) {
  const auto leaves = detail::reduced_sizes(cv, opts);
  MinimalReport report{std::nullopt, cv, 0, {}, leaves.size(), 0, opts.max_class_size};
  if (cv.rank() == 3 || cv.rank() == 4) report.loop = canonicalize(cv).id;
  if (leaves.empty()) return report;

  int best = leaves.front().degree();
  for (const auto& x : leaves) best = std::min(best, x.degree());
  report.degree = best;

  std::vector<ReducedRepresentation> attaining;
  for (const auto& x : leaves)
    if (x.degree() == best) attaining.push_back(detail::realize(x, cv));
  report.attaining_count = attaining.size();

  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < attaining.size(); ++i) keys.emplace_back(serialize_generators(attaining[i].basis), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const auto ta = attaining[a.second].type();
    const auto tb = attaining[b.second].type();
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  for (const auto& [key, i] : keys) {
    const auto& candidate = attaining[i];
    bool seen = false;
    for (const auto& kept : report.representations)
      if (codes_equivalent(kept.basis, candidate.basis)) {
        seen = true;
        break;
      }
    if (!seen) report.representations.push_back(candidate);
  }
  return report;
}

}  // namespace loopforge
