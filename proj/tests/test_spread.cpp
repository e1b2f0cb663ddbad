#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "mincode/mincode.hpp"
#include "oracles.hpp"

using namespace mincode;

namespace {

SetSystem reference_system() { return SetSystem::from_indices(3, {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6}); }

SetSystem random_system(int t, std::mt19937_64& rng) {
  const int nu = (1 << t) + 1;
  std::array<std::vector<int>, 3> sets;
  for (auto& s : sets) {
    for (int i = 1; i <= nu; ++i) {
      if (rng() % 3 == 0) s.push_back(i);
    }
    if (s.empty()) s.push_back(1);
  }
  return SetSystem::from_indices(t, sets[0], sets[1], sets[2]);
}

}  // namespace

class SpreadDegrees : public ::testing::TestWithParam<int> {};

TEST_P(SpreadDegrees, ComponentsPartitionNonzeroVectors) {
  const int t = GetParam();
  const auto spread = build_desarguesian_spread(GF2tField(t));
  const std::size_t q = std::size_t{1} << t;
  ASSERT_EQ(static_cast<std::size_t>(spread.size()), q + 1);
  std::vector<int> owner(q * q, 0);
  for (int i = 1; i <= spread.size(); ++i) {
    const auto& w = spread.component(i);
    EXPECT_EQ(rank(w.basis), static_cast<std::size_t>(t));
    EXPECT_EQ(w.members.popcount(), q);
    EXPECT_EQ(w.dual_members.popcount(), q);
    for (Point x = 1; x < q * q; ++x) {
      if (!w.members.test(x)) continue;
      EXPECT_EQ(owner[x], 0) << "point " << x << " in components " << owner[x] << " and " << i;
      owner[x] = i;
    }
  }
  for (Point x = 1; x < q * q; ++x) EXPECT_NE(owner[x], 0);
}

TEST(Spread, DualMembersAreOrthogonalComplements) {
  for (int t = 2; t <= 4; ++t) {
    const auto spread = build_desarguesian_spread(GF2tField(t));
    for (const auto& w : spread.components()) {
      std::vector<Point> basis;
      for (const auto& r : w.basis.row_list()) basis.push_back(r.to_point());
      const auto perp = oracle::orthogonal_complement(basis, 2 * t);
      for (Point v = 0; v < (Point{1} << (2 * t)); ++v) EXPECT_EQ(w.dual_members.test(v), perp.count(v) == 1) << t;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, SpreadDegrees, ::testing::Values(2, 3, 4, 5, 6, 7, 8));

TEST(Spread, VerticalComponentAtDegreeTwo) {
  const auto spread = build_desarguesian_spread(GF2tField(2));
  std::set<std::string> pts;
  for (Point x = 0; x < 16; ++x) {
    if (spread.component(5).members.test(x)) pts.insert(BitVector::from_point(x, 4).to_string());
  }
  EXPECT_EQ(pts, (std::set<std::string>{"0000", "0100", "1000", "1100"}));
}

TEST(Spread, LinesAreGraphsOfMultiplication) {
  const GF2tField field(3);
  const auto spread = build_desarguesian_spread(field);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t x = 0; x < 8; ++x) {
      EXPECT_TRUE(spread.component(static_cast<int>(a) + 1).members.test(x | (field.mul({a}, {x}).value << 3)));
    }
  }
}

TEST(Spread, CustomModulusAndBadDegree) {
  const auto spread = build_desarguesian_spread(3, 0xD);
  EXPECT_EQ(spread.size(), 9);
  EXPECT_THROW(build_desarguesian_spread(3, 0x9), PreconditionError);
  EXPECT_THROW(build_desarguesian_spread(GF2tField(9)), PreconditionError);
  EXPECT_THROW(spread.component(0), PreconditionError);
  EXPECT_THROW(spread.component(10), PreconditionError);
}

TEST(Spread, IndicatorHasWeightOfPuncturedSubspace) {
  const auto spread = build_desarguesian_spread(GF2tField(4));
  for (int i = 1; i <= spread.size(); ++i) {
    const auto f = indicator(spread, i);
    EXPECT_EQ(f.weight(), 15U);
    EXPECT_FALSE(f(0));
  }
}

TEST(Members, LabelsAndSums) {
  for (Member m : kMembers) EXPECT_EQ(member_from_label(label(m)), m);
  EXPECT_THROW(member_from_label("f+f"), ParseError);
  EXPECT_EQ(sum(Member::f, Member::g), Member::f_g);
  EXPECT_EQ(sum(Member::f_g, Member::h), Member::f_g_h);
  EXPECT_THROW(sum(Member::h, Member::h), PreconditionError);
}

TEST(SetSystem, ReferenceStatistics) {
  const auto st = reference_system().stats();
  EXPECT_EQ(st.s1, 4);
  EXPECT_EQ(st.s12, 3);
  EXPECT_EQ(st.s13, 3);
  EXPECT_EQ(st.s23, 2);
  EXPECT_EQ(st.s123, 2);
  EXPECT_EQ(st.chi12, 2);
  EXPECT_EQ(st.chi13, 2);
  EXPECT_EQ(st.chi23, 4);
  EXPECT_EQ(st.chi123, 4);
  EXPECT_EQ(st.epsilon, 2);
  EXPECT_EQ(st.mu, 4);
}

TEST(SetSystem, StatisticsMatchSetAlgebra) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const int t = 2 + static_cast<int>(rng() % 4);
    const auto sys = random_system(t, rng);
    const auto a1 = oracle::to_set(sys.indices(1));
    const auto a2 = oracle::to_set(sys.indices(2));
    const auto a3 = oracle::to_set(sys.indices(3));
    const auto& st = sys.stats();
    EXPECT_EQ(st.chi12, static_cast<int>(oracle::sym_diff(a1, a2).size()));
    EXPECT_EQ(st.chi13, static_cast<int>(oracle::sym_diff(a1, a3).size()));
    EXPECT_EQ(st.chi23, static_cast<int>(oracle::sym_diff(a2, a3).size()));
    EXPECT_EQ(st.chi123, static_cast<int>(oracle::sym_diff(oracle::sym_diff(a1, a2), a3).size()));
    EXPECT_EQ(st.s123, static_cast<int>(oracle::intersect(oracle::intersect(a1, a2), a3).size()));
    EXPECT_EQ(sys.member_size(Member::f_g_h), st.chi123);
    EXPECT_EQ(sys.member_size(Member::g_h), st.chi23);
  }
}

TEST(SetSystem, RejectsOutOfRangeIndices) {
  EXPECT_THROW(SetSystem::from_indices(3, {1, 10}, {1}, {2}), PreconditionError);
  EXPECT_THROW(SetSystem::from_indices(3, {0}, {1}, {2}), PreconditionError);
  EXPECT_THROW(SetSystem::from_indices(3, {1, 1}, {1}, {2}), PreconditionError);
  EXPECT_THROW(SetSystem::from_indices(9, {1}, {1}, {2}), PreconditionError);
  EXPECT_NO_THROW(SetSystem::from_indices(3, {9}, {1}, {2}));
}

TEST(SetSystem, LexicographicOrder) {
  const auto a = SetSystem::from_indices(3, {1, 2}, {1, 3}, {2, 3});
  const auto b = SetSystem::from_indices(3, {1, 2, 3}, {1, 3}, {2, 3});
  const auto c = SetSystem::from_indices(3, {1, 3}, {1, 2}, {2, 3});
  EXPECT_TRUE(a < b);
  EXPECT_TRUE(b < c);
  EXPECT_FALSE(a < a);
}

TEST(Conditions, ReferenceInstancePasses) {
  const auto r = check_conditions(reference_system());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(r.pairwise_intersections_differing, 2);
}

TEST(Conditions, EmptyTripleIntersectionFailsConditionTwo) {
  const auto r = check_conditions(SetSystem::from_indices(3, {1, 2}, {1, 3}, {2, 3}));
  EXPECT_FALSE(r.condition2);
  EXPECT_FALSE(r.triple_intersection_nonempty);
  EXPECT_FALSE(r.passed());
}

TEST(Conditions, NestedSetsFailConditionOne) {
  const auto r = check_conditions(SetSystem::from_indices(3, {1, 2}, {1, 2, 3, 4}, {1, 5, 6}));
  EXPECT_FALSE(r.condition1);
}

TEST(Conditions, MatchSetTheoreticDefinition) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    const auto sys = random_system(3, rng);
    const std::array<std::set<int>, 3> a{oracle::to_set(sys.indices(1)), oracle::to_set(sys.indices(2)),
                                         oracle::to_set(sys.indices(3))};
    auto subset = [](const std::set<int>& x, const std::set<int>& y) {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    bool c1 = true;
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        const auto d = oracle::sym_diff(a[p], a[q]);
        for (int k = 0; k < 3; ++k) c1 = c1 && !subset(a[k], d) && !subset(d, a[k]);
      }
    }
    const auto triple = oracle::intersect(oracle::intersect(a[0], a[1]), a[2]);
    int differing = 0;
    for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) differing += oracle::intersect(a[p], a[q]) != triple;
    const bool c2 = !triple.empty() && differing >= 2;
    const auto& st = sys.stats();
    const bool c3 = st.chi12 >= 2 && st.chi13 >= 2 && st.chi23 >= 2 && st.chi123 >= 2;
    const auto r = check_conditions(sys);
    EXPECT_EQ(r.condition1, c1);
    EXPECT_EQ(r.condition2, c2);
    EXPECT_EQ(r.condition3, c3);
  }
}

TEST(StructuralLemmas, HoldOnSearchedDegreeThreeSystems) {
  const auto all = search_admissible(3, false);
  for (std::size_t i = 0; i < all.size(); i += 37) EXPECT_TRUE(check_structural_lemmas(all[i]));
}

TEST(StructuralLemmas, SymmetricDifferenceBoundFailsForLargeUnion) {
  // Many indices lying in exactly one set push chi123 above 2^t - 2.
  const auto sys = SetSystem::from_indices(4, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 8, 9, 10, 11, 12}, {1, 3, 13, 14, 15, 16, 17});
  ASSERT_TRUE(check_conditions(sys).passed());
  ASSERT_TRUE(sizes_in_range(sys));
  EXPECT_EQ(sys.stats().chi123, 15);
  EXPECT_FALSE(check_structural_lemmas(sys));
}

TEST(StructuralLemmas, PreconditionsEnforced) {
  EXPECT_THROW(check_structural_lemmas(SetSystem::from_indices(3, {1, 2}, {1, 3}, {2, 3})), PreconditionError);
  EXPECT_THROW(check_structural_lemmas(SetSystem::from_indices(3, {1, 2, 3, 4, 5}, {1, 2, 6}, {1, 3, 7})),
               PreconditionError);
}

TEST(Family, ReferenceMembersAreIndicatorSums) {
  const auto spread = build_desarguesian_spread(GF2tField(3));
  const auto sys = reference_system();
  const auto fam = build_family(spread, sys);
  for (Member m : kMembers) {
    BooleanFunction expect(6);
    for (int i : to_indices(sys.member_set(m))) expect = expect + indicator(spread, i);
    EXPECT_EQ(fam[m], expect) << label(m);
    EXPECT_EQ(fam[m].weight(), static_cast<std::size_t>(sys.member_size(m)) * 7);
  }
}

TEST(Family, CoincidingSetsAreRejected) {
  const auto spread = build_desarguesian_spread(GF2tField(3));
  try {
    build_family(spread, SetSystem::from_indices(3, {1, 2}, {1, 2}, {3}));
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.condition(), "nonzero");
  }
  EXPECT_THROW(build_family(spread, SetSystem::from_indices(4, {1, 2}, {1, 3}, {3})), PreconditionError);
}

TEST(Family, DirectConstructionChecksConditions) {
  const auto x1 = BooleanFunction::linear(4, 1);
  const auto x2 = BooleanFunction::linear(4, 2);
  try {
    FunctionFamily(x1, x2, x1 + x2);
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.condition(), "nonzero");
  }
  const auto one = BooleanFunction::from(4, [](Point) { return true; });
  try {
    FunctionFamily(one, x1, x2);
    FAIL() << "expected FamilyError";
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.condition(), "vanishes_at_zero");
  }
}

TEST(Family, DisjointMembersOfReferenceInstance) {
  const auto d = disjoint_members(reference_system());
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].first, Member::f_g);
  EXPECT_EQ(d[0].second, Member::f_h);
  EXPECT_TRUE(disjoint_members(SetSystem::from_indices(3, {1, 2, 3}, {1, 2, 4, 5}, {1, 3, 4, 6})).empty());
}

TEST(Search, DegreeThreeIsExhaustive) {
  const auto all = search_admissible(3, false);
  EXPECT_EQ(all.size(), 378000U);
  std::map<int, std::size_t> by_eps;
  for (const auto& s : all) ++by_eps[s.stats().epsilon];
  EXPECT_EQ(by_eps[2], 128520U);
  EXPECT_EQ(by_eps[3], 173880U);
  EXPECT_EQ(by_eps[4], 75600U);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
  EXPECT_TRUE(std::binary_search(all.begin(), all.end(), reference_system()));
  for (std::size_t i = 0; i < all.size(); i += 101) {
    EXPECT_TRUE(check_conditions(all[i]).passed());
    EXPECT_TRUE(sizes_in_range(all[i]));
  }
}

TEST(Search, AbViolatingSubset) {
  const auto ab = search_admissible(3, true);
  EXPECT_EQ(ab.size(), 128520U);
  for (const auto& s : ab) ASSERT_LE(s.stats().epsilon, 2);
  EXPECT_TRUE(std::binary_search(ab.begin(), ab.end(), reference_system()));
}

TEST(Search, SampledSearchIsDeterministic) {
  SearchOptions opts;
  opts.samples = 3000;
  const auto a = search_admissible(4, true, opts);
  const auto b = search_admissible(4, true, opts);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
  for (const auto& s : a) {
    EXPECT_TRUE(check_conditions(s).passed());
    EXPECT_LE(s.stats().epsilon, 4);
    for (int k = 1; k <= 3; ++k) EXPECT_LE(s.indices(k).back(), 12);
  }
  opts.seed = 99;
  EXPECT_NE(search_admissible(4, true, opts), a);
  EXPECT_FALSE(search_admissible(5, false, opts).empty());
}

TEST(Search, UnsupportedDegree) {
  EXPECT_THROW(search_admissible(2, false), PreconditionError);
  EXPECT_THROW(search_admissible(6, false), PreconditionError);
}
