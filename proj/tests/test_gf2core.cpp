#include <gtest/gtest.h>

#include <random>

#include "loopforge/code.hpp"
#include "loopforge/code_io.hpp"
#include "loopforge/gl_matrix.hpp"
#include "loopforge/golden.hpp"
#include "test_support.hpp"

using namespace loopforge;

namespace {

BinaryCodeBasis b(std::vector<std::string_view> gens) { return golden::make_basis(gens); }

const BinaryCodeBasis& v1_rank3() {
  static const auto basis = b({"1,2,3,4", "1,2,5,6", "1,3,5,7"});
  return basis;
}
const BinaryCodeBasis& v2_rank3() {
  static const auto basis = b({"1-8", "1,2,3,4,9,10,11,12", "1,5,6,7,9,10,11,13"});
  return basis;
}
const BinaryCodeBasis& v5_rank3() {
  static const auto basis = b({"1-12", "1-8,13,14,15,16", "1,2,3,4,5,9,10,11,13,14,15,17"});
  return basis;
}

}  // namespace

TEST(PositionSet, Weight) {
  EXPECT_EQ(weight(PositionSet{1, 2, 3, 4}), 4);
  EXPECT_EQ(weight(PositionSet{}), 0);
  EXPECT_EQ(weight(PositionSet::range(1, 12)), 12);
}

TEST(PositionSet, SymmetricDifferenceIsSum) {
  PositionSet a{1, 2, 3, 4};
  PositionSet c{3, 4, 5, 6};
  EXPECT_EQ(a + c, (PositionSet{1, 2, 5, 6}));
  EXPECT_EQ(a + a, PositionSet{});
}

TEST(PositionSet, RejectsOutOfRange) {
  EXPECT_THROW(PositionSet{0}, Error);
  EXPECT_THROW(PositionSet{PositionSet::kMaxPosition + 1}, Error);
  PositionSet big{1024};
  EXPECT_EQ(big.max_position(), 1024);
}

TEST(PositionSet, ParseAndFormat) {
  auto v = parse_positions("(1-4, 9,10 ,11-12)");
  EXPECT_EQ(v, (PositionSet{1, 2, 3, 4, 9, 10, 11, 12}));
  EXPECT_EQ(format_positions(v), "1,2,3,4,9,10,11,12");
  EXPECT_EQ(format_positions_compact(v), "1-4,9-12");
  EXPECT_EQ(format_positions_compact(PositionSet{1, 3}), "1,3");
  EXPECT_THROW(parse_positions("1,x"), Error);
  EXPECT_THROW(parse_positions("5-2"), Error);
}

TEST(MeetWeight, Examples) {
  EXPECT_EQ(meet_weight({PositionSet{1, 2, 3, 4}, PositionSet{1, 2, 5, 6}}), 2);
  PositionSet v{3, 7, 9, 11};
  EXPECT_EQ(meet_weight({v, v}), weight(v));
  EXPECT_EQ(meet_weight({parse_positions("1-12"), parse_positions("1-8,13-16"), parse_positions("1-5,9-11,13-15,17")}), 5);
}

TEST(MeetWeight, EmptyListFails) {
  try {
    meet_weight(std::span<const PositionSet>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyMeet);
  }
}

TEST(Basis, RejectsDependentGenerators) {
  auto full = PositionSet::range(1, 8);
  try {
    BinaryCodeBasis(8, {full, full});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidBasis);
  }
  EXPECT_THROW(BinaryCodeBasis(8, {PositionSet{1, 2}, PositionSet{3, 4}, PositionSet{1, 2, 3, 4}}), Error);
  EXPECT_THROW(BinaryCodeBasis(3, {PositionSet{1, 2, 3, 4}}), Error);
}

TEST(Span, ContainsSumOfFirstTwoGenerators) {
  auto words = span(v5_rank3());
  ASSERT_EQ(words.size(), 8u);
  EXPECT_TRUE(words[0].empty());
  EXPECT_NE(std::find(words.begin(), words.end(), parse_positions("9-16")), words.end());
}

TEST(Span, SingleGenerator) {
  BinaryCodeBasis one(4, {PositionSet{1, 2, 3, 4}});
  auto words = span(one);
  ASSERT_EQ(words.size(), 2u);
  EXPECT_TRUE(words[0].empty());
  EXPECT_EQ(words[1], (PositionSet{1, 2, 3, 4}));
}

TEST(Span, MatchesDirectEnumeration) {
  auto words = span(v1_rank3());
  auto direct = lftest::brute_span(v1_rank3());
  EXPECT_EQ(words, direct);
  for (const auto& w : direct) EXPECT_TRUE(w.size() == 0 || w.size() == 4) << format_positions(w);
}

TEST(DoublyEven, Examples) {
  EXPECT_TRUE(is_doubly_even(v5_rank3()));
  EXPECT_FALSE(is_doubly_even(BinaryCodeBasis(4, {PositionSet{1, 2}})));
  auto two = b({"1-4", "3-6"});
  EXPECT_TRUE(is_doubly_even(two));
  for (const auto& w : lftest::brute_span(two)) EXPECT_EQ(w.size() % 4, 0);
}

TEST(DoublyEven, AgreesWithSpanWeights) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pos(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PositionSet> gens(3);
    for (auto& g : gens)
      for (int k = 0; k < 6; ++k) g.insert(pos(rng));
    if (f2_rank(gens) != 3) continue;
    BinaryCodeBasis basis(12, gens);
    bool all = true;
    for (const auto& w : lftest::brute_span(basis)) all &= w.size() % 4 == 0;
    EXPECT_EQ(is_doubly_even(basis), all);
  }
}

TEST(ClassPartition, SevenSingletons) {
  auto part = class_partition(v1_rank3());
  EXPECT_EQ(part.classes().size(), 7u);
  for (const auto& c : part.classes()) EXPECT_EQ(c.positions.size(), 1);
  EXPECT_EQ(type_vector(part).to_string(), "(1111111)");
}

TEST(ClassPartition, SingleGeneratorCoveringEverything) {
  BinaryCodeBasis one(8, {PositionSet::range(1, 8)});
  auto part = class_partition(one);
  ASSERT_EQ(part.classes().size(), 1u);
  EXPECT_EQ(part.size_of(1), 8);
}

TEST(ClassPartition, NineClassesForTwelvePoints) {
  auto basis = b({"1-8", "1-6,9,10", "1,2,3,4,5,7,9,11", "1,6-12"});
  auto part = class_partition(basis);
  EXPECT_EQ(part.classes().size(), 9u);
  EXPECT_EQ(type_vector(part).sizes, (std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 4}));
}

TEST(ClassPartition, RequiresCovering) {
  BinaryCodeBasis padded(9, {PositionSet{1, 2, 3, 4}, PositionSet{1, 2, 5, 6}, PositionSet{1, 3, 5, 7}});
  try {
    class_partition(padded);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCovering);
  }
}

TEST(ClassPartition, ClassesMatchDefinition) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto basis = lftest::random_doubly_even(rng, 2 + trial % 4);
    auto part = class_partition(basis);
    PositionSet seen;
    int total = 0;
    for (const auto& c : part.classes()) {
      EXPECT_TRUE((seen & c.positions).empty());
      seen |= c.positions;
      total += c.positions.size();
      PositionSet expected = PositionSet::range(1, basis.length());
      for (int i = 1; i <= basis.rank(); ++i) {
        if (c.sigma & singleton(i)) {
          expected &= basis.generator(i);
        } else {
          expected -= basis.generator(i);
        }
      }
      EXPECT_EQ(expected, c.positions);
    }
    EXPECT_EQ(total, basis.length());
    EXPECT_EQ(seen, PositionSet::range(1, basis.length()));
  }
}

TEST(ClassPartition, InclusionExclusion) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto basis = lftest::random_doubly_even(rng, 3 + trial % 3);
    auto part = class_partition(basis);
    const int n = basis.rank();
    for (int i = 1; i <= n; ++i) {
      int sum_i = 0;
      for (const auto& c : part.classes())
        if (c.sigma & singleton(i)) sum_i += c.positions.size();
      EXPECT_EQ(sum_i, weight(basis.generator(i)));
      for (int j = i + 1; j <= n; ++j) {
        int sum_ij = 0;
        for (const auto& c : part.classes())
          if ((c.sigma & singleton(i)) && (c.sigma & singleton(j))) sum_ij += c.positions.size();
        EXPECT_EQ(sum_ij, meet_weight({basis.generator(i), basis.generator(j)}));
      }
    }
  }
}

TEST(ClassPartition, IndependentOfBasisChoice) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    auto basis = lftest::random_doubly_even(rng, n);
    auto other = transform_basis(basis, lftest::random_gl(rng, n));
    auto a = class_partition(basis).blocks();
    auto c = class_partition(other).blocks();
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    EXPECT_EQ(a, c);
  }
}

TEST(TypeVector, Examples) {
  EXPECT_EQ(type_vector(class_partition(v2_rank3())).to_string(), "(1111333)");
  auto v14 = b({"1-8", "1,2,3,4,9-12", "1,2,3,5,9,10,11,13", "1,2,9,10"});
  EXPECT_EQ(type_vector(class_partition(v14)).to_string(), "(111111223)");
  EXPECT_EQ(TypeVector::parse("(1111333)").sizes, (std::vector<int>{1, 1, 1, 1, 3, 3, 3}));
  EXPECT_EQ(TypeVector::parse("(1,2,12)").to_string(), "(1,2,12)");
  EXPECT_EQ(TypeVector::parse("(111)").degree(), 3);
}

TEST(CodesEquivalent, PermutedCopy) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto basis = lftest::random_doubly_even(rng, 2 + trial % 3);
    std::vector<int> perm(static_cast<std::size_t>(basis.length()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto moved = lftest::permute_positions(basis, perm);
    auto rebased = transform_basis(moved, lftest::random_gl(rng, basis.rank()));
    EXPECT_TRUE(codes_equivalent(basis, rebased));
    EXPECT_TRUE(codes_equivalent(rebased, basis));
  }
}

TEST(CodesEquivalent, DifferentDegrees) { EXPECT_FALSE(codes_equivalent(v1_rank3(), v2_rank3())); }

TEST(CodesEquivalent, IgnoresUnusedPositions) {
  BinaryCodeBasis padded(10, v1_rank3().generators());
  EXPECT_TRUE(codes_equivalent(padded, v1_rank3()));
}

TEST(CodesEquivalent, AgreesWithPermutationSearch) {
  std::mt19937 rng(9);
  std::bernoulli_distribution coin(0.5);
  auto random_code = [&](int n) {
    for (;;) {
      std::vector<PositionSet> gens(static_cast<std::size_t>(n));
      for (auto& g : gens)
        for (int p = 1; p <= 6; ++p)
          if (coin(rng)) g.insert(p);
      if (f2_rank(gens) == n) return BinaryCodeBasis(6, gens);
    }
  };
  int agree_true = 0;
  int agree_false = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 2;
    auto a = random_code(n);
    auto c = trial % 3 == 0 ? transform_basis(a, lftest::random_gl(rng, n)) : random_code(n);
    if (trial % 3 == 0) {
      std::vector<int> perm{1, 2, 3, 4, 5, 6};
      std::shuffle(perm.begin(), perm.end(), rng);
      c = lftest::permute_positions(c, perm);
    }
    const bool fast = codes_equivalent(a, c);
    EXPECT_EQ(fast, lftest::brute_equivalent(a, c)) << format_code(a) << format_code(c);
    (fast ? agree_true : agree_false)++;
  }
  EXPECT_GT(agree_true, 50);
  EXPECT_GT(agree_false, 50);
}

TEST(CodesEquivalent, IsAnEquivalenceRelation) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = lftest::random_doubly_even(rng, 2, 2);
    auto c = lftest::random_doubly_even(rng, 2, 2);
    auto d = lftest::random_doubly_even(rng, 2, 2);
    EXPECT_TRUE(codes_equivalent(a, a));
    EXPECT_EQ(codes_equivalent(a, c), codes_equivalent(c, a));
    if (codes_equivalent(a, c) && codes_equivalent(c, d)) {
      EXPECT_TRUE(codes_equivalent(a, d));
    }
  }
}

TEST(Lengths, UnionSizes) {
  auto w = WeightProfile::of(v2_rank3());
  EXPECT_EQ(w.ti(1), 8);
  EXPECT_EQ(w.ti(2), 8);
  EXPECT_EQ(w.tij(1, 2), 4);
  EXPECT_EQ(pair_length(1, 2, w), (v2_rank3().generator(1) | v2_rank3().generator(2)).size());
  EXPECT_EQ(pair_length(1, 2, w), 12);
  EXPECT_EQ(triple_length(1, 2, 3, w), 13);
  WeightProfile same(2);
  same.set(1, 8);
  same.set(2, 8);
  same.set(3, 8);
  EXPECT_EQ(pair_length(1, 2, same), 8);
}

TEST(Weights, SumIdentity) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> pos(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    PositionSet u, v;
    for (int k = 0; k < 15; ++k) {
      u.insert(pos(rng));
      v.insert(pos(rng));
    }
    EXPECT_EQ(weight(u + v), weight(u) + weight(v) - 2 * meet_weight({u, v}));
  }
}

TEST(CodeFile, ParsesBothGeneratorForms) {
  auto basis = parse_code("# comment\nm=8 n=2\n1,2,3,4\nb:00001111\n");
  EXPECT_EQ(basis.length(), 8);
  EXPECT_EQ(basis.generator(2), (PositionSet{5, 6, 7, 8}));
  EXPECT_EQ(parse_code(format_code(basis)).generators(), basis.generators());
  EXPECT_THROW(parse_code("m=8 n=3\n1,2,3,4\n"), Error);
  EXPECT_THROW(parse_code("m=4 n=1\nb:111\n"), Error);
  EXPECT_THROW(parse_code("m=4 n=1\n1,2,3,9\n"), Error);
}

TEST(CodeFile, CanonicalSerialization) {
  EXPECT_EQ(serialize_generators(v1_rank3()), "{1,2,3,4}\n{1,2,5,6}\n{1,3,5,7}\n");
}
