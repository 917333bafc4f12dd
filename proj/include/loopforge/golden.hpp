#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "loopforge/classification.hpp"
#include "loopforge/code.hpp"
#include "loopforge/position_set.hpp"

// Published reference data: minimal representations, their degrees and
// types, and the weight-profile example. Bases are kept exactly as printed,
// including the entries that fail their own claims (see `erratum`).

namespace loopforge::golden {

struct ListedBasis {
  LoopClassId loop;
  std::vector<std::string_view> generators;
  /// Non-empty when the printed basis is known not to represent `loop`.
  std::string_view erratum = {};
  /// Replacement basis for an erratum entry.
  std::vector<std::string_view> corrected = {};
};

inline BinaryCodeBasis make_basis(const std::vector<std::string_view>& gens) {
  std::vector<PositionSet> sets;
  for (auto g : gens) sets.push_back(parse_positions(g));
  return BinaryCodeBasis(sets);
}

inline const std::vector<ListedBasis>& rank3_bases() {
  static const std::vector<ListedBasis> data{
      {{3, 1}, {"1,2,3,4", "1,2,5,6", "1,3,5,7"}},
      {{3, 2}, {"1,2,3,4,5,6,7,8", "1,2,3,4,9,10,11,12", "1,5,6,7,9,10,11,13"}},
      {{3, 3}, {"1,2,3,4,5,6,7,8", "1,2,3,4,5,6,9,10", "1,2,3,4,5,7,9,11"}},
      {{3, 4}, {"1,2,3,4", "1,2,5-14", "1,3,5,6,7,8,9,10,11,15,16,17"}},
      {{3, 5}, {"1-12", "1-8,13,14,15,16", "1,2,3,4,5,9,10,11,13,14,15,17"}},
  };
  return data;
}

inline const std::vector<ListedBasis>& rank4_bases() {
  static const std::vector<ListedBasis> data{
      {{4, 1}, {"1,2,3,4", "1,2,5,6", "1,3,5,7", "1-8"}},
      {{4, 2}, {"1-8", "1-4,9-12", "1,5,6,7,9,10,11,13", "1,2,5,8,9,12,13,14"}},
      {{4, 3}, {"1-8", "1-6,9,10", "1,2,3,4,5,7,9,11", "1,6-12"}},
      {{4, 4}, {"1-8", "1-6,9,10", "1,2,3,7,9,11-17", "1,4,7,8,9,10,11,18"}},
      {{4, 5}, {"1-8", "1,2,3,4,9,10,11,12", "1,5,9,13-17", "1,2,5,6,9,10,13,18"}},
      {{4, 6}, {"1,2,3,4", "1,2,5,6", "1,3,5,7", "8,9,10,11"}},
      {{4, 7},
       {"1-8", "1,2,3,4,9,10,11,12", "1,2,3,5,9,13,14,15", "1-16"},
       "v4 has weight 16, so λ4 = 0; the code has degree 16 and lies in C4_2",
       {"1-8", "1,2,3,4,9-12", "1,5,6,7,9,10,11,13", "14,15,16,17"}},
      {{4, 8},
       {"1-8", "1,2,3,4,9-12", "1,2,3,5,9,13,14,15", "1,2,9,10,13,14,16,17"},
       "|v3 ∩ v4| = 5 is odd, so the code is not doubly even; position 9 of v4 should be 11",
       {"1-8", "1,2,3,4,9-12", "1,2,3,5,9,13,14,15", "1,2,10,11,13,14,16,17"}},
      {{4, 9}, {"1-8", "1,2,3,4,9-16", "1,5,6,7,9,10,11,17", "5,6,9,10,12,13,18,19"}},
      {{4, 10},
       {"1-8", "1,2,9-14", "1,3,9,10,11,15,16,17", "1-6,9-18"},
       "v4 = (1-6,9-18) gives degree 18 and class C4_8; v4 = (4,5,18,19) is the intended generator",
       {"1-8", "1,2,9-14", "1,3,9,10,11,15,16,17", "4,5,18,19"}},
      {{4, 11}, {"1-8", "1,2,3,4,9-12", "1,2,3,5,9,13,14,15", "6,7,16,17"}},
      {{4, 12}, {"1-8", "1,2,3,4,9-12", "1,2,3,5,9,10,11,13", "1,2,9,10,14,15,16,17"}},
      {{4, 13}, {"1-8", "1,2,9,10", "1,3,9,11", "4,5,12,13,14,15,16,17"}},
      {{4, 14}, {"1-8", "1,2,3,4,9-12", "1,2,3,5,9,10,11,13", "1,2,9,10"}},
      {{4, 15}, {"1-12", "1,2,3,4,13-16", "1,2,3,5,13,14,15,17", "1,2,13,14"}},
      {{4, 16}, {"1-8", "1,2,9,10,11,12,13,14", "1,3,9,10,11,12,13,15", "4,5,16,17"}},
  };
  return data;
}

/// The V10 basis with the fourth generator derived in the case analysis.
inline ListedBasis rank4_v10_as_derived() { return {{4, 10}, rank4_bases()[9].corrected}; }

struct DegreeType {
  LoopClassId loop;
  int degree;
  std::string_view type;
};

inline const std::vector<DegreeType>& rank3_minimal() {
  static const std::vector<DegreeType> data{
      {{3, 1}, 7, "(1111111)"}, {{3, 2}, 13, "(1111333)"}, {{3, 3}, 11, "(1111115)"},
      {{3, 4}, 17, "(1111337)"}, {{3, 5}, 17, "(1113335)"},
  };
  return data;
}

inline const std::vector<DegreeType>& rank4_minimal() {
  static const std::vector<DegreeType> data{
      {{4, 1}, 8, "(11111111)"},       {{4, 2}, 14, "(11111111222)"},  {{4, 3}, 12, "(111111114)"},
      {{4, 4}, 18, "(11111111226)"},   {{4, 5}, 18, "(111111112224)"}, {{4, 6}, 11, "(11111114)"},
      {{4, 7}, 17, "(11113334)"},      {{4, 8}, 17, "(11111122223)"},  {{4, 9}, 19, "(11111222233)"},
      {{4, 10}, 19, "(111223333)"},    {{4, 11}, 17, "(111122333)"},   {{4, 12}, 17, "(1111112234)"},
      {{4, 13}, 17, "(111111236)"},    {{4, 14}, 13, "(111111223)"},   {{4, 15}, 17, "(111111227)"},
      {{4, 16}, 17, "(111112235)"},
  };
  return data;
}

/// Weights in the order t, t123, t124, t134, t234, t12, t13, t14, t23, t24, t34, t1, t2, t3, t4.
inline constexpr std::array<int, 15> example_profile{0, 1, 0, 2, 0, 2, 6, 2, 6, 0, 4, 8, 8, 16, 4};
/// Class sizes in the order x123, x124, x134, x234, x12, x13, x14, x23, x24, x34, x1, x2, x3, x4.
inline constexpr std::array<int, 14> example_sizes{1, 0, 2, 0, 1, 3, 0, 5, 0, 2, 1, 1, 3, 0};
inline constexpr std::string_view example_generators =
    "{1,2,3,4,5,6,7,8}\n"
    "{1,4,9,10,11,12,13,14}\n"
    "{1,2,3,5,6,7,9,10,11,12,13,15,16,17,18,19}\n"
    "{2,3,15,16}\n";

inline constexpr int rank3_nonassociative_count = 64;
inline constexpr int rank4_nonassociative_count = 15360;

}  // namespace loopforge::golden
