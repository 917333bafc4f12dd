#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "loopforge/code.hpp"
#include "loopforge/error.hpp"
#include "loopforge/subset.hpp"

namespace loopforge {

/// An invertible n×n matrix over F2 acting on generating sets: new generator
/// i is Σ_j g_ij · (old generator j). Row i is stored as a mask over j.
class GLMatrix {
 public:
  static constexpr int kMaxRank = 8;

  static GLMatrix identity(int rank) {
    GLMatrix g;
    g.rank_ = rank;
    for (int i = 0; i < rank; ++i) g.rows_[static_cast<std::size_t>(i)] = Subset{1} << i;
    return g;
  }

  GLMatrix(int rank, const std::vector<Subset>& rows) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) throw Error(ErrorKind::UnsupportedRank, "matrix rank " + std::to_string(rank));
    if (static_cast<int>(rows.size()) != rank) throw Error(ErrorKind::NotInvertible, "row count != rank");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((rows[i] & ~full_subset(rank)) != 0) throw Error(ErrorKind::NotInvertible, "row wider than rank");
      rows_[i] = rows[i];
    }
    if (mask_rank(rows) != rank) throw Error(ErrorKind::NotInvertible, "matrix is singular over F2");
  }

  /// Elementary transvection: row i gains row j (i != j), 1-based.
  static GLMatrix transvection(int rank, int i, int j) {
    GLMatrix g = identity(rank);
    g.rows_[static_cast<std::size_t>(i - 1)] |= singleton(j);
    return g;
  }

  int rank() const { return rank_; }
  /// 1-based row as a coefficient mask.
  Subset row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  std::vector<Subset> rows() const { return {rows_.begin(), rows_.begin() + rank_}; }

  bool entry(int i, int j) const { return (row(i) >> (j - 1) & 1u) != 0; }

  /// Coefficients over the new generators to coefficients over the old ones.
  Subset apply(Subset x) const {
    Subset out = 0;
    for (int i = 0; x != 0; ++i, x >>= 1)
      if (x & 1u) out ^= rows_[static_cast<std::size_t>(i)];
    return out;
  }

  /// Ordinary matrix product. Acting by g then by h equals acting by h*g.
  friend GLMatrix operator*(const GLMatrix& h, const GLMatrix& g) {
    GLMatrix out;
    out.rank_ = h.rank_;
    for (int i = 0; i < h.rank_; ++i) out.rows_[static_cast<std::size_t>(i)] = g.apply(h.rows_[static_cast<std::size_t>(i)]);
    return out;
  }

  GLMatrix inverse() const {
    std::array<Subset, kMaxRank> a = rows_;
    GLMatrix inv = identity(rank_);
    for (int col = 0; col < rank_; ++col) {
      int piv = col;
      while (piv < rank_ && (a[static_cast<std::size_t>(piv)] >> col & 1u) == 0) ++piv;
      std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
      std::swap(inv.rows_[static_cast<std::size_t>(col)], inv.rows_[static_cast<std::size_t>(piv)]);
      for (int r = 0; r < rank_; ++r) {
        if (r != col && (a[static_cast<std::size_t>(r)] >> col & 1u)) {
          a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
          inv.rows_[static_cast<std::size_t>(r)] ^= inv.rows_[static_cast<std::size_t>(col)];
        }
      }
    }
    return inv;
  }

  bool is_identity() const { return *this == identity(rank_); }

  /// Rows as bitstrings separated by '/', entry j of row i at column j: "100/010/001".
  std::string to_string() const {
    std::string out;
    for (int i = 1; i <= rank_; ++i) {
      if (i > 1) out += '/';
      for (int j = 1; j <= rank_; ++j) out += entry(i, j) ? '1' : '0';
    }
    return out;
  }

  friend bool operator==(const GLMatrix& a, const GLMatrix& b) {
    if (a.rank_ != b.rank_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.rank_, b.rows_.begin());
  }

  friend bool operator<(const GLMatrix& a, const GLMatrix& b) {
    return std::lexicographical_compare(a.rows_.begin(), a.rows_.begin() + a.rank_, b.rows_.begin(),
                                        b.rows_.begin() + b.rank_);
  }

 private:
  GLMatrix() = default;

  int rank_ = 0;
  std::array<Subset, kMaxRank> rows_{};
};

/// Every element of GL_n(2) for 1 <= n <= 4, identity first, then in
/// lexicographic row order. Built once.
inline const std::vector<GLMatrix>& general_linear_group(int n) {
  static const std::array<std::vector<GLMatrix>, 5> groups = [] {
    std::array<std::vector<GLMatrix>, 5> out;
    for (int rank = 1; rank <= 4; ++rank) {
      const Subset width = Subset{1} << rank;
      std::vector<Subset> rows(static_cast<std::size_t>(rank), 0);
      const std::size_t total = std::size_t{1} << (rank * rank);
      auto& group = out[static_cast<std::size_t>(rank)];
      group.push_back(GLMatrix::identity(rank));
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = rank - 1; i >= 0; --i) {
          rows[static_cast<std::size_t>(i)] = static_cast<Subset>(c % width);
          c /= width;
        }
        if (mask_rank(rows) != rank) continue;
        GLMatrix g(rank, rows);
        if (!g.is_identity()) group.push_back(g);
      }
    }
    return out;
  }();
  if (n < 1 || n > 4) throw Error(ErrorKind::UnsupportedRank, "GL_n(2) is tabulated for n <= 4 only");
  return groups[static_cast<std::size_t>(n)];
}

/// The generating set {Σ_j g_ij v_j}_i of the same code.
inline BinaryCodeBasis transform_basis(const BinaryCodeBasis& basis, const GLMatrix& g) {
  if (g.rank() != basis.rank()) throw Error(ErrorKind::UnsupportedRank, "matrix and basis ranks differ");
  std::vector<PositionSet> gens;
  for (int i = 1; i <= g.rank(); ++i) gens.push_back(basis.codeword(g.row(i)));
  return BinaryCodeBasis(basis.length(), std::move(gens));
}

}  // namespace loopforge
