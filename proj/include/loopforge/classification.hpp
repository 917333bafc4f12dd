#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/char_vector.hpp"
#include "loopforge/error.hpp"
#include "loopforge/gl_matrix.hpp"

namespace loopforge {

/// Isomorphism class C_index^rank of a nonassociative code loop.
struct LoopClassId {
  int rank = 0;
  int index = 0;

  static constexpr int class_count(int rank) { return rank == 3 ? 5 : rank == 4 ? 16 : 0; }

  /// "C3_5", "C4_16".
  std::string to_string() const { return "C" + std::to_string(rank) + "_" + std::to_string(index); }

  static LoopClassId parse(std::string_view text) {
    auto bad = [&] { return Error(ErrorKind::Parse, "loop id must look like C3_1 or C4_16, got '" + std::string(text) + "'"); };
    if (text.size() < 4 || (text[0] != 'C' && text[0] != 'c') || text[2] != '_') throw bad();
    LoopClassId id;
    id.rank = text[1] - '0';
    try {
      id.index = detail::parse_int(text.substr(3));
    } catch (const Error&) {
      throw bad();
    }
    if (class_count(id.rank) == 0) throw Error(ErrorKind::UnsupportedRank, "loop ids exist for ranks 3 and 4 only");
    if (id.index < 1 || id.index > class_count(id.rank)) throw bad();
    return id;
  }

  friend auto operator<=>(const LoopClassId&, const LoopClassId&) = default;
};

/// The fixed orbit representatives, in short form, index 1 first.
inline const std::vector<std::string_view>& representative_short_forms(int rank) {
  static const std::vector<std::string_view> rank3{"111111", "000000", "000111", "110000", "100000"};
  static const std::vector<std::string_view> rank4{
      "1110110100", "0000000000", "0000110100", "0010100000", "0000010100", "1111110100",
      "0001000000", "0000001000", "0100001000", "0001111000", "0001001000", "0000001100",
      "0110111100", "0001001100", "1001001100", "0001111100"};
  if (rank == 3) return rank3;
  if (rank == 4) return rank4;
  throw Error(ErrorKind::UnsupportedRank, "representatives exist for ranks 3 and 4 only");
}

/// Representative of the class as a full coordinate vector.
inline CharVector representative(LoopClassId id) {
  const auto& forms = representative_short_forms(id.rank);
  if (id.index < 1 || id.index > static_cast<int>(forms.size()))
    throw Error(ErrorKind::Parse, "no class " + id.to_string());
  return parse_char_vector(forms[static_cast<std::size_t>(id.index - 1)], id.rank);
}

/// All vectors with α ≠ 0, in increasing packed order: 64 at rank 3, 15360 at rank 4.
inline std::vector<CharVector> enumerate_nonassociative(int n) {
  if (n != 3 && n != 4) throw Error(ErrorKind::UnsupportedRank, "enumeration is defined for ranks 3 and 4");
  std::vector<CharVector> out;
  const std::uint64_t total = std::uint64_t{1} << CharVector::coordinate_count(n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto cv = CharVector::from_packed(n, bits);
    if (cv.nonassociative()) out.push_back(cv);
  }
  return out;
}

namespace detail {

/// Every nonassociative vector of a rank labelled with its class and a matrix
/// taking it to the representative. Filled by walking the full GL_n(2)-orbit
/// of each representative.
struct ClassTable {
  std::vector<std::int8_t> class_index;  // by packed value; 0 = unassigned
  std::vector<std::optional<GLMatrix>> witness;
  std::vector<int> orbit_size;           // by class index
  int collisions = 0;                    // vectors reached from two representatives
};

inline ClassTable build_class_table(int n) {
  ClassTable table;
  const std::size_t total = std::size_t{1} << CharVector::coordinate_count(n);
  table.class_index.assign(total, 0);
  table.witness.assign(total, std::nullopt);
  const int classes = LoopClassId::class_count(n);
  table.orbit_size.assign(static_cast<std::size_t>(classes + 1), 0);
  for (int idx = 1; idx <= classes; ++idx) {
    const CharVector rep = representative({n, idx});
    for (const auto& g : general_linear_group(n)) {
      const CharVector u = gl_transform(rep, g);
      auto& slot = table.class_index[u.packed()];
      if (slot == 0) {
        slot = static_cast<std::int8_t>(idx);
        table.witness[u.packed()] = g.inverse();
        ++table.orbit_size[static_cast<std::size_t>(idx)];
      } else if (slot != idx) {
        ++table.collisions;
      }
    }
  }
  return table;
}

inline const ClassTable& class_table(int n) {
  static const ClassTable rank3 = build_class_table(3);
  static const ClassTable rank4 = build_class_table(4);
  if (n == 3) return rank3;
  if (n == 4) return rank4;
  throw Error(ErrorKind::UnsupportedRank, "classification is available for ranks 3 and 4 only");
}

}  // namespace detail

struct Canonical {
  LoopClassId id;
  CharVector representative;
  /// gl_transform(input, witness) == representative.
  GLMatrix witness;
};

/// Orbit representative, class id and a witnessing basis change.
inline Canonical canonicalize(const CharVector& cv) {
  if (cv.rank() != 3 && cv.rank() != 4)
    throw Error(ErrorKind::UnsupportedRank, "no classification for rank " + std::to_string(cv.rank()));
  if (!cv.nonassociative()) throw Error(ErrorKind::AssociativeLoop, "all associator coordinates are zero");
  const auto& table = detail::class_table(cv.rank());
  const int idx = table.class_index[cv.packed()];
  if (idx == 0) throw Error(ErrorKind::UnknownOrbit, "vector lies in no representative's orbit");
  const LoopClassId id{cv.rank(), idx};
  return {id, representative(id), *table.witness[cv.packed()]};
}

/// Orbit sizes of the representatives, index 1 first.
inline std::vector<int> representative_orbit_sizes(int n) {
  const auto& sizes = detail::class_table(n).orbit_size;
  return {sizes.begin() + 1, sizes.end()};
}

struct OrbitBlock {
  std::vector<CharVector> members;
  /// Class ids of the representatives inside this block.
  std::vector<LoopClassId> representatives;
};

/// Orbits of GL_n(2) on the nonassociative vectors, found by union-find over
/// elementary transvections (which generate GL_n(2)) without consulting the
/// representatives; each block is then annotated with the representatives
/// it contains. Blocks are ordered by their smallest member.
inline std::vector<OrbitBlock> orbit_partition(int n) {
  const auto vectors = enumerate_nonassociative(n);
  const std::size_t total = std::size_t{1} << CharVector::coordinate_count(n);
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<GLMatrix> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(GLMatrix::transvection(n, i, j));
  for (const auto& cv : vectors) {
    for (const auto& g : gens) {
      auto a = find(static_cast<std::uint32_t>(cv.packed()));
      auto b = find(static_cast<std::uint32_t>(gl_transform(cv, g).packed()));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<OrbitBlock> blocks;
  std::vector<int> block_of(total, -1);
  for (const auto& cv : vectors) {
    auto root = find(static_cast<std::uint32_t>(cv.packed()));
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[root])].members.push_back(cv);
  }
  for (int idx = 1; idx <= LoopClassId::class_count(n); ++idx) {
    auto rep = representative({n, idx});
    auto root = find(static_cast<std::uint32_t>(rep.packed()));
    if (block_of[root] >= 0) blocks[static_cast<std::size_t>(block_of[root])].representatives.push_back({n, idx});
  }
  return blocks;
}

/// An F2-subspace of coefficient space, listed element by element.
struct Subspace {
  int ambient_rank = 0;
  std::vector<Subset> elements;

  int dimension() const {
    int d = 0;
    while ((std::size_t{1} << d) < elements.size()) ++d;
    return d;
  }
};

/// {x : α(x, y, z) = 0 for all y, z}.
inline Subspace alpha_radical(const CharVector& cv) {
  const int n = cv.rank();
  Subspace out{n, {}};
  const Subset count = Subset{1} << n;
  for (Subset x = 0; x < count; ++x) {
    bool in = true;
    for (int j = 1; j <= n && in; ++j)
      for (int k = j + 1; k <= n && in; ++k)
        if (eval_alpha(cv, x, singleton(j), singleton(k))) in = false;
    if (in) out.elements.push_back(x);
  }
  return out;
}

struct Normalized {
  CharVector vector;
  GLMatrix basis_change;
};

/// Moves the nucleus generator (the radical of α) to the last slot, so that
/// λ_123 = 1 and λ_ij4 = 0 and the 10-coordinate short form applies.
inline Normalized normalize_rank4(const CharVector& cv) {
  if (cv.rank() != 4) throw Error(ErrorKind::UnsupportedRank, "normalization applies to rank 4");
  if (!cv.nonassociative()) throw Error(ErrorKind::AssociativeLoop, "all associator coordinates are zero");
  const auto radical = alpha_radical(cv);
  if (radical.dimension() != 1)
    throw Error(ErrorKind::UnexpectedRadical, "radical has dimension " + std::to_string(radical.dimension()));
  const Subset d = radical.elements.back();
  std::vector<Subset> rows;
  for (int i = 1; i <= 4 && rows.size() < 3; ++i) {
    rows.push_back(singleton(i));
    auto with_d = rows;
    with_d.push_back(d);
    if (mask_rank(with_d) != static_cast<int>(with_d.size())) rows.pop_back();
  }
  rows.push_back(d);
  GLMatrix g(4, rows);
  CharVector out = gl_transform(cv, g);
  if (!has_short_form(out)) throw Error(ErrorKind::UnexpectedRadical, "normalization did not isolate the nucleus");
  return {out, g};
}

}  // namespace loopforge
