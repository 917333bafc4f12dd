#include <gtest/gtest.h>

#include <random>
#include <set>

#include "loopforge/char_vector.hpp"
#include "loopforge/classification.hpp"
#include "loopforge/golden.hpp"
#include "test_support.hpp"

using namespace loopforge;

namespace {

BinaryCodeBasis b(std::vector<std::string_view> gens) { return golden::make_basis(gens); }

CharVector random_cv(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << CharVector::coordinate_count(n)) - 1);
  return CharVector::from_packed(n, bits(rng));
}

// λ from weights, written out independently of char_vector_of.
CharVector direct_lambda(const BinaryCodeBasis& basis) {
  const int n = basis.rank();
  CharVector cv(n);
  for (int i = 1; i <= n; ++i) {
    cv.set_sigma(i, (basis.generator(i).size() / 4) % 2 == 1);
    for (int j = i + 1; j <= n; ++j) {
      cv.set_beta(i, j, ((basis.generator(i) & basis.generator(j)).size() / 2) % 2 == 1);
      for (int k = j + 1; k <= n; ++k)
        cv.set_alpha(i, j, k, (basis.generator(i) & basis.generator(j) & basis.generator(k)).size() % 2 == 1);
    }
  }
  return cv;
}

}  // namespace

TEST(CharVector, CoordinateCounts) {
  EXPECT_EQ(CharVector::coordinate_count(3), 7);
  EXPECT_EQ(CharVector::coordinate_count(4), 14);
  EXPECT_EQ(CharVector::coordinate_count(5), 25);
}

TEST(CharVector, CoordinateOrder) {
  CharVector cv(4);
  cv.set_beta(1, 2, true);
  cv.set_beta(3, 4, true);
  cv.set_alpha(1, 2, 3, true);
  cv.set_alpha(2, 3, 4, true);
  EXPECT_EQ(cv.bits_string(), "00001000011001");
  EXPECT_TRUE(cv.beta(2, 1));
  EXPECT_TRUE(cv.alpha(3, 2, 1));
  EXPECT_FALSE(cv.alpha(1, 1, 2));
}

TEST(CharVectorOf, ThreeSquaresNoCommutators) {
  auto v5 = b({"1-12", "1-8,13,14,15,16", "1,2,3,4,5,9,10,11,13,14,15,17"});
  auto cv = char_vector_of(v5);
  EXPECT_EQ(format_char_vector(cv), "111000");
  EXPECT_EQ(cv, direct_lambda(v5));
}

TEST(CharVectorOf, SevenPoints) {
  auto v1 = b({"1,2,3,4", "1,2,5,6", "1,3,5,7"});
  auto cv = char_vector_of(v1);
  EXPECT_EQ(cv.bits_string(), "1111111");
  EXPECT_EQ(cv, direct_lambda(v1));
}

TEST(CharVectorOf, DisjointBlocksOfEight) {
  auto cv = char_vector_of(b({"1-8", "9-16"}));
  EXPECT_EQ(cv.rank(), 2);
  EXPECT_EQ(cv.bits_string(), "000");
  EXPECT_FALSE(cv.nonassociative());
}

TEST(CharVectorOf, RejectsCodesThatAreNotDoublyEven) {
  try {
    char_vector_of(b({"1,2", "3,4,5,6"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDoublyEven);
  }
}

TEST(CharVectorOf, MatchesDirectWeightsOnRandomCodes) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto basis = lftest::random_doubly_even(rng, 2 + trial % 5);
    EXPECT_EQ(char_vector_of(basis), direct_lambda(basis));
  }
}

TEST(Evaluation, BasisValues) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    auto cv = random_cv(rng, n);
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(eval_sigma(cv, singleton(i)), cv.sigma(i));
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(eval_beta(cv, singleton(i), singleton(j)), cv.beta(i, j));
        for (int k = 1; k <= n; ++k)
          if (k != i && k != j) {
            EXPECT_EQ(eval_alpha(cv, singleton(i), singleton(j), singleton(k)), cv.alpha(i, j, k));
          }
      }
    }
  }
}

TEST(Evaluation, SumOfTwoGeneratorsOfSevenPointCode) {
  auto v1 = b({"1,2,3,4", "1,2,5,6", "1,3,5,7"});
  const int direct = ((v1.generator(1) + v1.generator(2)).size() / 4) % 2;
  EXPECT_EQ(direct, 1);
  EXPECT_EQ(eval_sigma(char_vector_of(v1), 0b011), direct == 1);
}

TEST(Evaluation, PolarizationIdentities) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 3;
    auto cv = random_cv(rng, n);
    const Subset all = Subset{1} << n;
    for (Subset x = 0; x < all; ++x)
      for (Subset y = 0; y < all; ++y) {
        EXPECT_FALSE(eval_alpha(cv, x, x, y));
        EXPECT_EQ(eval_sigma(cv, x ^ y), eval_sigma(cv, x) ^ eval_sigma(cv, y) ^ eval_beta(cv, x, y));
        EXPECT_EQ(eval_beta(cv, x, y), eval_beta(cv, y, x));
        for (Subset z = 0; z < all; ++z) {
          EXPECT_EQ(eval_beta(cv, x ^ y, z), eval_beta(cv, x, z) ^ eval_beta(cv, y, z) ^ eval_alpha(cv, x, y, z));
          EXPECT_EQ(eval_alpha(cv, x ^ y, z, z ^ x), eval_alpha(cv, x, z, z ^ x) ^ eval_alpha(cv, y, z, z ^ x));
        }
      }
  }
}

TEST(Evaluation, MatchesWeightsOfCodewords) {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    auto basis = lftest::random_doubly_even(rng, 3 + trial % 3);
    auto cv = char_vector_of(basis);
    const Subset all = Subset{1} << basis.rank();
    for (Subset x = 0; x < all; ++x)
      for (Subset y = 0; y < all; ++y) {
        const auto u = basis.codeword(x);
        const auto w = basis.codeword(y);
        EXPECT_EQ(eval_sigma(cv, x), (u.size() / 4) % 2 == 1);
        EXPECT_EQ(eval_beta(cv, x, y), ((u & w).size() / 2) % 2 == 1);
        for (Subset z = 0; z < all; z += 3)
          EXPECT_EQ(eval_alpha(cv, x, y, z), (u & w & basis.codeword(z)).size() % 2 == 1);
      }
  }
}

TEST(GLMatrix, GroupOrders) {
  EXPECT_EQ(general_linear_group(3).size(), 168u);
  EXPECT_EQ(general_linear_group(4).size(), 20160u);
  EXPECT_TRUE(general_linear_group(4).front().is_identity());
  std::set<std::string> distinct;
  for (const auto& g : general_linear_group(3)) distinct.insert(g.to_string());
  EXPECT_EQ(distinct.size(), 168u);
}

TEST(GLMatrix, InverseAndProduct) {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    auto g = lftest::random_gl(rng, n);
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_TRUE((g.inverse() * g).is_identity());
  }
}

TEST(GLMatrix, SingularRejected) {
  try {
    GLMatrix(3, {0b001, 0b010, 0b011});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(Transform, IdentityAndSwap) {
  auto cv = parse_char_vector("100000");
  EXPECT_EQ(gl_transform(cv, GLMatrix::identity(3)), cv);
  GLMatrix swap(3, {0b010, 0b001, 0b100});
  EXPECT_EQ(format_char_vector(gl_transform(cv, swap)), "010000");
}

TEST(Transform, AgreesWithRecomputedWeights) {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    auto basis = lftest::random_doubly_even(rng, n);
    auto g = lftest::random_gl(rng, n);
    EXPECT_EQ(gl_transform(char_vector_of(basis), g), direct_lambda(transform_basis(basis, g)));
  }
}

TEST(Transform, Composition) {
  std::mt19937 rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    auto cv = random_cv(rng, n);
    auto g = lftest::random_gl(rng, n);
    auto h = lftest::random_gl(rng, n);
    EXPECT_EQ(gl_transform(gl_transform(cv, g), h), gl_transform(cv, h * g));
  }
}

TEST(Serialization, ShortAndFullForms) {
  auto c16 = parse_char_vector("0001111100");
  EXPECT_EQ(c16.rank(), 4);
  EXPECT_TRUE(c16.alpha(1, 2, 3));
  EXPECT_FALSE(c16.alpha(1, 2, 4));
  EXPECT_EQ(format_char_vector(c16), "0001111100");
  EXPECT_EQ(format_char_vector_full(c16), "full:00011111001000");
  EXPECT_EQ(parse_char_vector("full:00011111001000"), c16);
  EXPECT_EQ(parse_char_vector("00011111001000"), c16);
  auto odd = parse_char_vector("full:00000000000001");
  EXPECT_EQ(format_char_vector(odd), "full:00000000000001");
  EXPECT_EQ(parse_char_vector("111", 2).rank(), 2);
  EXPECT_THROW(parse_char_vector("10a"), Error);
  EXPECT_THROW(parse_char_vector("10101"), Error);
  EXPECT_THROW(parse_char_vector("101", 3), Error);
}

TEST(LoopClassId, ParseAndFormat) {
  EXPECT_EQ(LoopClassId::parse("C4_14"), (LoopClassId{4, 14}));
  EXPECT_EQ((LoopClassId{3, 5}).to_string(), "C3_5");
  EXPECT_THROW(LoopClassId::parse("C4_17"), Error);
  EXPECT_THROW(LoopClassId::parse("C5_1"), Error);
  EXPECT_THROW(LoopClassId::parse("D4_1"), Error);
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_nonassociative(3).size(), 64u);
  const auto four = enumerate_nonassociative(4);
  EXPECT_EQ(four.size(), 15u * 1024u);
  for (const auto& cv : four) EXPECT_TRUE(cv.alpha(1, 2, 3) || cv.alpha(1, 2, 4) || cv.alpha(1, 3, 4) || cv.alpha(2, 3, 4));
  for (const auto& cv : enumerate_nonassociative(3)) EXPECT_TRUE(cv.alpha(1, 2, 3));
  EXPECT_THROW(enumerate_nonassociative(5), Error);
}

TEST(Canonicalize, Examples) {
  auto a = canonicalize(parse_char_vector("111000"));
  EXPECT_EQ(a.id, (LoopClassId{3, 5}));
  EXPECT_EQ(format_char_vector(a.representative), "100000");
  auto c = canonicalize(parse_char_vector("111110"));
  EXPECT_EQ(c.id, (LoopClassId{3, 4}));
  EXPECT_EQ(format_char_vector(c.representative), "110000");
}

TEST(Canonicalize, RepresentativesAreFixedPoints) {
  for (int n : {3, 4}) {
    for (int i = 1; i <= LoopClassId::class_count(n); ++i) {
      auto rep = representative({n, i});
      auto c = canonicalize(rep);
      EXPECT_EQ(c.id, (LoopClassId{n, i}));
      EXPECT_EQ(c.representative, rep);
      EXPECT_TRUE(c.witness.is_identity());
    }
  }
}

TEST(Canonicalize, WitnessMapsInputToRepresentative) {
  for (int n : {3, 4}) {
    for (const auto& cv : enumerate_nonassociative(n)) {
      auto c = canonicalize(cv);
      ASSERT_EQ(gl_transform(cv, c.witness), c.representative) << cv.bits_string();
    }
  }
}

TEST(Canonicalize, Errors) {
  try {
    canonicalize(CharVector(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssociativeLoop);
  }
  CharVector five(5);
  five.set_alpha(1, 2, 3, true);
  try {
    canonicalize(five);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRank);
  }
}

// Orbits computed by closing each vector under the whole group, checked
// against the union-find partition and against orbit-stabilizer counts.
TEST(Orbits, DirectClosureAgrees) {
  for (int n : {3, 4}) {
    const auto& group = general_linear_group(n);
    std::set<std::uint64_t> seen;
    std::vector<std::set<std::uint64_t>> orbits;
    for (const auto& cv : enumerate_nonassociative(n)) {
      if (seen.count(cv.packed())) continue;
      std::set<std::uint64_t> orbit;
      for (const auto& g : group) orbit.insert(gl_transform(cv, g).packed());
      seen.insert(orbit.begin(), orbit.end());
      orbits.push_back(orbit);
    }
    ASSERT_EQ(static_cast<int>(orbits.size()), LoopClassId::class_count(n));
    const auto blocks = orbit_partition(n);
    ASSERT_EQ(blocks.size(), orbits.size());
    for (const auto& block : blocks) {
      ASSERT_EQ(block.representatives.size(), 1u);
      std::set<std::uint64_t> members;
      for (const auto& cv : block.members) members.insert(cv.packed());
      EXPECT_NE(std::find(orbits.begin(), orbits.end(), members), orbits.end());
    }
  }
}

TEST(Orbits, OrbitStabilizer) {
  for (int n : {3, 4}) {
    const auto& group = general_linear_group(n);
    const auto sizes = representative_orbit_sizes(n);
    int total = 0;
    for (int i = 1; i <= LoopClassId::class_count(n); ++i) {
      auto rep = representative({n, i});
      int stabilizer = 0;
      for (const auto& g : group) stabilizer += gl_transform(rep, g) == rep;
      EXPECT_EQ(sizes[static_cast<std::size_t>(i - 1)] * stabilizer, static_cast<int>(group.size()));
      total += sizes[static_cast<std::size_t>(i - 1)];
    }
    EXPECT_EQ(total, n == 3 ? 64 : 15360);
  }
}

TEST(Radical, RankThreeIsTrivial) {
  for (const auto& cv : enumerate_nonassociative(3)) {
    auto r = alpha_radical(cv);
    EXPECT_EQ(r.elements, std::vector<Subset>{0});
    EXPECT_EQ(r.dimension(), 0);
  }
}

TEST(Radical, RepresentativesHaveLastGeneratorAsNucleus) {
  for (int i = 1; i <= 16; ++i) {
    auto rep = representative({4, i});
    auto r = alpha_radical(rep);
    EXPECT_EQ(r.elements, (std::vector<Subset>{0, 0b1000}));
    auto norm = normalize_rank4(rep);
    EXPECT_TRUE(norm.basis_change.is_identity());
    EXPECT_EQ(norm.vector, rep);
  }
}

TEST(Radical, NormalizationStaysInOrbit) {
  std::mt19937 rng(28);
  for (int trial = 0; trial < 500; ++trial) {
    const LoopClassId id{4, 1 + trial % 16};
    auto moved = gl_transform(representative(id), lftest::random_gl(rng, 4));
    auto norm = normalize_rank4(moved);
    EXPECT_TRUE(has_short_form(norm.vector));
    EXPECT_EQ(gl_transform(moved, norm.basis_change), norm.vector);
    EXPECT_EQ(canonicalize(norm.vector).id, id);
  }
}

TEST(Radical, EveryRankFourVectorNormalizes) {
  for (const auto& cv : enumerate_nonassociative(4)) {
    ASSERT_EQ(alpha_radical(cv).dimension(), 1);
    ASSERT_TRUE(has_short_form(normalize_rank4(cv).vector));
  }
  EXPECT_THROW(normalize_rank4(representative({3, 1})), Error);
}
