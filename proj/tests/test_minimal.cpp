#include <gtest/gtest.h>

#include <random>

#include "mincode/mincode.hpp"
#include "oracles.hpp"

using namespace mincode;

namespace {

SetSystem reference_system() { return SetSystem::from_indices(3, {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6}); }
SetSystem minimal_system() { return SetSystem::from_indices(3, {1, 2, 3}, {1, 2, 4, 5}, {1, 3, 4, 6}); }

const PartialSpread& spread3() {
  static const PartialSpread s = build_desarguesian_spread(GF2tField(3));
  return s;
}

LinearCode code_from_rows(const std::vector<std::string>& rows) {
  LinearCode c;
  c.length = rows.front().size();
  c.generator = GF2Matrix(c.length);
  for (const auto& r : rows) c.generator.append(BitVector::from_string(r));
  c.dimension = rank(c.generator);
  return c;
}

}  // namespace

TEST(Covers, Examples) {
  const auto x = BitVector::from_string("110");
  EXPECT_TRUE(covers(x, BitVector(3)));
  EXPECT_TRUE(covers(x, x));
  EXPECT_FALSE(covers(x, BitVector::from_string("011")));
  EXPECT_THROW(covers(x, BitVector(4)), PreconditionError);
}

TEST(Covers, PartialOrderOnSupports) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_vector(20, rng);
    const auto b = a & random_vector(20, rng);
    const auto c = b & random_vector(20, rng);
    EXPECT_TRUE(covers(a, a));
    EXPECT_TRUE(covers(a, b));
    EXPECT_TRUE(covers(b, c));
    EXPECT_TRUE(covers(a, c));
    if (covers(b, a)) {
      EXPECT_EQ(a, b);
    }
  }
}

TEST(CoverWeightIdentity, HoldsOnRandomPairs) {
  std::mt19937_64 rng(53);
  for (int n = 2; n <= 12; ++n) {
    const std::size_t len = (std::size_t{1} << n) - 1;
    for (int i = 0; i < 10000; ++i) {
      const auto x = random_vector(len, rng);
      auto y = random_vector(len, rng);
      if (i % 3 == 0) y &= x;
      ASSERT_TRUE(check_cover_weight_identity(x, y));
    }
  }
}

TEST(CoverWeightIdentity, BothSidesOnConstructedPairs) {
  const auto x = BitVector::from_string("1011010");
  const auto inside = BitVector::from_string("0011000");
  const auto outside = BitVector::from_string("0011100");
  EXPECT_TRUE(covers(x, inside));
  EXPECT_EQ((x ^ inside).popcount(), x.popcount() - inside.popcount());
  EXPECT_FALSE(covers(x, outside));
  EXPECT_NE((x ^ outside).popcount(), x.popcount() - outside.popcount());
  EXPECT_TRUE(check_cover_weight_identity(x, inside));
  EXPECT_TRUE(check_cover_weight_identity(x, outside));
}

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(Rational(14, 38), Rational(7, 19));
  EXPECT_EQ(Rational(14, 38).to_string(), "7/19");
  EXPECT_TRUE(Rational(7, 19) <= Rational(1, 2));
  EXPECT_FALSE(Rational(3, 5) <= Rational(1, 2));
  EXPECT_TRUE(Rational(1, 2) <= Rational(2, 4));
  EXPECT_THROW(Rational(1, 0), PreconditionError);
}

TEST(AbRatio, SimplexAndReference) {
  const auto simplex = ab_ratio(enumerate_weights(construct_generic_code(BooleanFunction(5))));
  EXPECT_EQ(simplex.ratio, Rational(1, 1));
  EXPECT_FALSE(simplex.violating);
  const auto ref = ab_ratio(enumerate_weights(construct_code(build_family(spread3(), reference_system()))));
  EXPECT_EQ(ref.wt_min, 14U);
  EXPECT_EQ(ref.wt_max, 38U);
  EXPECT_EQ(ref.ratio, Rational(14, 38));
  EXPECT_TRUE(ref.violating);
  EXPECT_THROW(ab_ratio(WeightDistribution{{{0, 1}}}), PreconditionError);
  EXPECT_THROW(ab_ratio(WeightDistribution{}), PreconditionError);
}

TEST(BruteForce, SimplexIsMinimal) {
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(is_minimal_bruteforce(construct_generic_code(BooleanFunction(n))).is_minimal);
}

TEST(BruteForce, ToyNonExampleHasWitness) {
  const auto r = is_minimal_bruteforce(code_from_rows({"00001", "00011"}));
  EXPECT_FALSE(r.is_minimal);
  ASSERT_TRUE(r.cover.has_value());
  EXPECT_TRUE(covers(r.cover->covering, r.cover->covered));
  EXPECT_NE(r.cover->covering, r.cover->covered);
  EXPECT_FALSE(r.cover->covered.none());
}

TEST(BruteForce, MatchesPairwiseOracle) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + i % 2;
    const auto rf = random_family(n, rng, 0.35);
    ASSERT_TRUE(rf.has_value());
    const auto words = oracle::codewords({&rf->f(), &rf->g(), &rf->h()}, n);
    const auto pairs = oracle::covering_pairs(words);
    const auto code = construct_code(*rf);
    EXPECT_EQ(is_minimal_bruteforce(code).is_minimal, pairs == 0);
    EXPECT_EQ(is_minimal_bruteforce(code, ScanMode::exhaustive).covering_pairs, pairs);
  }
}

TEST(BruteForce, WitnessIndependentOfWorkers) {
  const auto code = construct_code(build_family(spread3(), reference_system()));
  const auto base = is_minimal_bruteforce(code, ScanMode::first_witness, 1);
  ASSERT_TRUE(base.cover.has_value());
  for (unsigned w = 2; w <= 6; ++w) {
    const auto r = is_minimal_bruteforce(code, ScanMode::first_witness, w);
    ASSERT_TRUE(r.cover.has_value());
    EXPECT_EQ(r.cover->covering_message, base.cover->covering_message);
    EXPECT_EQ(r.cover->covered_message, base.cover->covered_message);
    EXPECT_EQ(is_minimal_bruteforce(code, ScanMode::exhaustive, w).covering_pairs,
              is_minimal_bruteforce(code, ScanMode::exhaustive, 1).covering_pairs);
  }
}

TEST(BruteForce, CapIsEnforced) {
  std::mt19937_64 rng(61);
  const auto rf = random_family(12, rng);
  ASSERT_TRUE(rf.has_value());
  EXPECT_THROW(is_minimal_bruteforce(construct_code(*rf)), CapExceeded);
}

// The reference triple passes conditions 1-3, yet A1^A2 = {4,5} and A1^A3 = {3,6} are
// disjoint, so the f+g word at w = 0 is covered by the g+h word.
TEST(ReferenceInstance, IsNotMinimal) {
  const auto fam = build_family(spread3(), reference_system());
  const auto code = construct_code(fam);
  const auto brute = is_minimal_bruteforce(code);
  EXPECT_FALSE(brute.is_minimal);
  ASSERT_TRUE(brute.cover.has_value());
  EXPECT_TRUE(covers(brute.cover->covering, brute.cover->covered));

  BitVector fg(63), gh(63);
  for (Point x = 1; x < 64; ++x) {
    if (fam[Member::f_g](x)) fg.set(x - 1);
    if (fam[Member::g_h](x)) gh.set(x - 1);
  }
  EXPECT_TRUE(covers(gh, fg));
  EXPECT_NE(gh, fg);

  const auto spectral = walsh_minimality_criterion(fam);
  EXPECT_FALSE(spectral.is_minimal);
  ASSERT_TRUE(spectral.violation.has_value());
  EXPECT_EQ(spectral.violation->phi1, Member::f_g);
  EXPECT_EQ(spectral.violation->phi2, Member::f_h);

  const auto props = proposition_suite(reference_system(), fam);
  EXPECT_FALSE(props.passed());
  ASSERT_EQ(props.results.size(), 5U);
  EXPECT_EQ(props.results[2].name, "shift_from_zero");
  EXPECT_FALSE(props.results[2].passed());
}

TEST(MinimalInstance, AllMethodsAgree) {
  const auto fam = build_family(spread3(), minimal_system());
  EXPECT_TRUE(is_minimal_bruteforce(construct_code(fam)).is_minimal);
  EXPECT_TRUE(walsh_minimality_criterion(fam).is_minimal);
  EXPECT_TRUE(proposition_suite(minimal_system(), fam).passed());
}

TEST(Criterion, AgreesWithBruteForceOnRandomFamilies) {
  std::mt19937_64 rng(67);
  const std::array<double, 3> densities{0.3, 0.4, 0.6};
  int minimal = 0, not_minimal = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 4 + i % 2;
    const auto rf = random_family(n, rng, densities[static_cast<std::size_t>(i) % 3]);
    ASSERT_TRUE(rf.has_value());
    const bool brute = is_minimal_bruteforce(construct_code(*rf)).is_minimal;
    const auto spectral = walsh_minimality_criterion(*rf);
    ASSERT_EQ(spectral.is_minimal, brute) << "family " << i;
    ASSERT_EQ(spectral.is_minimal, !spectral.violation.has_value());
    if (walsh_minimality_criterion(*rf, CriterionScope::literal).is_minimal) {
      EXPECT_TRUE(brute);
    }
    (brute ? minimal : not_minimal)++;
  }
  EXPECT_GT(minimal, 0);
  EXPECT_GT(not_minimal, 0);
}

TEST(Criterion, AgreesWithBruteForceOnSpreadFamilies) {
  const auto all = search_admissible(3, false);
  for (std::size_t i = 0; i < all.size(); i += 97) {
    const auto fam = build_family(spread3(), all[i]);
    ASSERT_EQ(walsh_minimality_criterion(fam).is_minimal, is_minimal_bruteforce(construct_code(fam)).is_minimal);
  }
}

TEST(Criterion, FiresOnLinearMember) {
  const auto spread = build_desarguesian_spread(GF2tField(2));
  const auto fam = FunctionFamily(BooleanFunction::linear(4, 1), indicator(spread, 1), indicator(spread, 2));
  const auto r = walsh_minimality_criterion(fam);
  EXPECT_FALSE(r.is_minimal);
  ASSERT_TRUE(r.violation.has_value());
}

TEST(Criterion, CapIsEnforced) {
  std::mt19937_64 rng(71);
  const auto rf = random_family(13, rng);
  ASSERT_TRUE(rf.has_value());
  EXPECT_THROW(walsh_minimality_criterion(*rf), CapExceeded);
}

TEST(Propositions, PreconditionsEnforced) {
  const auto spread = build_desarguesian_spread(GF2tField(3));
  const auto bad = SetSystem::from_indices(3, {1}, {1, 2, 3}, {1, 4, 5});
  EXPECT_THROW(proposition_suite(bad, build_family(spread, bad)), PreconditionError);
  const auto spread2 = build_desarguesian_spread(GF2tField(2));
  const auto small = SetSystem::from_indices(2, {1, 2}, {1, 3}, {1, 4});
  EXPECT_THROW(proposition_suite(small, build_family(spread2, small)), PreconditionError);
}

TEST(Propositions, PassExactlyOnMinimalSpreadCodes) {
  const auto all = search_admissible(3, false);
  for (std::size_t i = 0; i < all.size(); i += 499) {
    const auto fam = build_family(spread3(), all[i]);
    const bool minimal = is_minimal_bruteforce(construct_code(fam)).is_minimal;
    EXPECT_EQ(proposition_suite(all[i], fam).passed(), minimal);
    EXPECT_EQ(disjoint_members(all[i]).empty(), minimal);
  }
}

TEST(Propositions, SampledDegreeFourInstance) {
  const auto spread = build_desarguesian_spread(GF2tField(4));
  const auto sys = search_admissible(4, true).front();
  const auto fam = build_family(spread, sys);
  const auto rep = proposition_suite(sys, fam);
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(is_minimal_bruteforce(construct_code(fam)).is_minimal);
}

TEST(MinimumWeight, EqualsEpsilonBlocksUnderHypothesis) {
  const auto all = search_admissible(3, false);
  for (std::size_t i = 0; i < all.size(); i += 173) {
    const auto& st = all[i].stats();
    if (st.epsilon > 3) continue;
    const auto d = enumerate_weights(construct_code(build_family(spread3(), all[i])));
    EXPECT_EQ(d.min_nonzero(), static_cast<std::size_t>(st.epsilon * 7));
  }
}

TEST(AbViolation, RatioAtMostHalfOnSampledViolatingSystems) {
  const auto ab = search_admissible(3, true);
  for (std::size_t i = 0; i < ab.size(); i += 61) {
    const auto r = ab_ratio(enumerate_weights(construct_code(build_family(spread3(), ab[i]))));
    EXPECT_TRUE(r.violating);
    EXPECT_TRUE(r.ratio <= Rational(1, 2));
  }
}
