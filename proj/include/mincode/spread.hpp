#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mincode/bitvector.hpp"
#include "mincode/boolfn.hpp"
#include "mincode/errors.hpp"
#include "mincode/gf2matrix.hpp"
#include "mincode/gf2t.hpp"

namespace mincode {

inline constexpr int kMaxSpreadDegree = 8;
inline constexpr int kMaxSpreadIndex = (1 << kMaxSpreadDegree) + 1;

/// Subset of spread indices {1, ..., 2^t + 1}; bit i stands for index i, bit 0 is unused.
using IndexSet = std::bitset<kMaxSpreadIndex + 1>;

inline IndexSet make_index_set(std::initializer_list<int> indices) {
  IndexSet s;
  for (int i : indices) s.set(static_cast<std::size_t>(i));
  return s;
}

inline std::vector<int> to_indices(const IndexSet& s) {
  std::vector<int> out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.test(i)) out.push_back(static_cast<int>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spread

struct SpreadComponent {
  GF2Matrix basis;       // t rows
  GF2Matrix dual_basis;  // t rows spanning the orthogonal complement
  BitVector members;     // 2^n-bit membership table of the subspace
  BitVector dual_members;
};

namespace detail {

/// Membership table of span(basis) inside F_2^n, enumerated by Gray code.
inline BitVector span_members(const GF2Matrix& basis, int n) {
  std::vector<Point> rows;
  for (const auto& r : basis.row_list()) rows.push_back(r.to_point());
  BitVector table(std::size_t{1} << n);
  Point v = 0;
  table.set(0);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << rows.size()); ++step) {
    v ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
    table.set(v);
  }
  return table;
}

}  // namespace detail

/// Ordered list of t-dimensional subspaces of F_2^(2t) meeting pairwise in {0}.
class PartialSpread {
 public:
  PartialSpread(int t, std::vector<SpreadComponent> components) : t_(t), components_(std::move(components)) {}

  int t() const noexcept { return t_; }
  int n() const noexcept { return 2 * t_; }
  int size() const noexcept { return static_cast<int>(components_.size()); }

  /// Component W_index, 1-based.
  const SpreadComponent& component(int index) const {
    if (index < 1 || index > size()) throw PreconditionError("PartialSpread: index out of range");
    return components_[static_cast<std::size_t>(index - 1)];
  }

  const std::vector<SpreadComponent>& components() const noexcept { return components_; }

 private:
  int t_;
  std::vector<SpreadComponent> components_;
};

/// The 2^t + 1 subspaces {(x, a x)} for a in GF(2^t), in integer order of a, followed by {(0, y)}.
///
/// A pair (x, y) is embedded as the point x | (y << t).
inline PartialSpread build_desarguesian_spread(const GF2tField& field) {
  const int t = field.degree();
  if (t < 2 || t > kMaxSpreadDegree) {
    throw PreconditionError("build_desarguesian_spread: t must lie in [2, " + std::to_string(kMaxSpreadDegree) + "]");
  }
  const int n = 2 * t;
  std::vector<SpreadComponent> components;
  auto add = [&](std::vector<Point> basis_points) {
    SpreadComponent c;
    c.basis = GF2Matrix::from_points(basis_points, n);
    c.dual_basis = dual_basis(c.basis);
    c.members = detail::span_members(c.basis, n);
    c.dual_members = detail::span_members(c.dual_basis, n);
    components.push_back(std::move(c));
  };
  for (std::uint32_t a = 0; a < field.size(); ++a) {
    std::vector<Point> basis;
    for (int k = 0; k < t; ++k) {
      const GF2tElement x{1U << k};
      basis.push_back(x.value | (field.mul({a}, x).value << t));
    }
    add(std::move(basis));
  }
  std::vector<Point> vertical;
  for (int k = 0; k < t; ++k) vertical.push_back((1U << k) << t);
  add(std::move(vertical));
  return PartialSpread(t, std::move(components));
}

inline PartialSpread build_desarguesian_spread(int t, std::uint32_t modulus) {
  return build_desarguesian_spread(GF2tField(t, modulus));
}

/// f_i(x) = 1 iff x lies in W_i and x != 0.
inline BooleanFunction indicator(const PartialSpread& spread, int index) {
  BitVector table = spread.component(index).members;
  table.set(0, false);
  return BooleanFunction(spread.n(), std::move(table));
}

// ---------------------------------------------------------------------------
// Family members

/// Nonzero combinations alpha f + beta g + gamma h, coded as alpha | beta << 1 | gamma << 2.
enum class Member : unsigned { f = 1, g = 2, f_g = 3, h = 4, f_h = 5, g_h = 6, f_g_h = 7 };

/// Reporting order: f, g, h, f+g, f+h, g+h, f+g+h.
inline constexpr std::array<Member, 7> kMembers{Member::f,   Member::g,   Member::h,    Member::f_g,
                                                Member::f_h, Member::g_h, Member::f_g_h};

constexpr unsigned code(Member m) noexcept { return static_cast<unsigned>(m); }

inline std::string_view label(Member m) {
  switch (m) {
    case Member::f: return "f";
    case Member::g: return "g";
    case Member::f_g: return "f+g";
    case Member::h: return "h";
    case Member::f_h: return "f+h";
    case Member::g_h: return "g+h";
    case Member::f_g_h: return "f+g+h";
  }
  throw std::logic_error("label: bad member");
}

inline Member member_from_label(std::string_view s) {
  for (Member m : kMembers) {
    if (label(m) == s) return m;
  }
  throw ParseError("unknown family member '" + std::string(s) + "'");
}

/// Sum of two distinct members; throws when they coincide.
inline Member sum(Member a, Member b) {
  const unsigned c = code(a) ^ code(b);
  if (c == 0) throw PreconditionError("sum: a member added to itself is zero");
  return static_cast<Member>(c);
}

// ---------------------------------------------------------------------------
// Set systems

struct SetStatistics {
  int s1 = 0, s2 = 0, s3 = 0;
  int s12 = 0, s13 = 0, s23 = 0, s123 = 0;
  int chi12 = 0, chi13 = 0, chi23 = 0, chi123 = 0;
  int epsilon = 0;  // min of the seven sizes above
  int mu = 0;       // max of the same seven

  std::array<int, 7> member_sizes() const { return {s1, s2, s3, chi12, chi13, chi23, chi123}; }
};

namespace detail {

/// Index set over at most 32 spread indices, used by the search hot loop.
struct Mask32 {
  std::uint32_t bits = 0;

  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }
  bool none() const noexcept { return bits == 0; }
  bool any() const noexcept { return bits != 0; }
  friend Mask32 operator&(Mask32 a, Mask32 b) noexcept { return {a.bits & b.bits}; }
  friend Mask32 operator^(Mask32 a, Mask32 b) noexcept { return {a.bits ^ b.bits}; }
  friend bool operator==(Mask32, Mask32) = default;
};

template <class Set>
bool is_subset(const Set& a, const Set& b) {
  return (a & b) == a;
}

template <class Set>
SetStatistics compute_statistics(const std::array<Set, 3>& a) {
  SetStatistics st;
  st.s1 = static_cast<int>(a[0].count());
  st.s2 = static_cast<int>(a[1].count());
  st.s3 = static_cast<int>(a[2].count());
  st.s12 = static_cast<int>((a[0] & a[1]).count());
  st.s13 = static_cast<int>((a[0] & a[2]).count());
  st.s23 = static_cast<int>((a[1] & a[2]).count());
  st.s123 = static_cast<int>((a[0] & a[1] & a[2]).count());
  st.chi12 = st.s1 + st.s2 - 2 * st.s12;
  st.chi13 = st.s1 + st.s3 - 2 * st.s13;
  st.chi23 = st.s2 + st.s3 - 2 * st.s23;
  st.chi123 = st.s1 + st.s2 + st.s3 - 2 * (st.s12 + st.s13 + st.s23) + 4 * st.s123;
  const auto sizes = st.member_sizes();
  st.epsilon = *std::min_element(sizes.begin(), sizes.end());
  st.mu = *std::max_element(sizes.begin(), sizes.end());
  return st;
}

struct ConditionFlags {
  bool condition1 = true;
  bool condition2 = true;
  bool condition3 = true;
  bool triple_nonempty = false;
  int pairwise_differing = 0;
  std::vector<std::string> witnesses;
};

inline constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

template <class Set>
ConditionFlags evaluate_conditions(const std::array<Set, 3>& a, const SetStatistics& st, bool collect) {
  ConditionFlags r;
  const char* pair_names[3] = {"A1^A2", "A1^A3", "A2^A3"};
  for (std::size_t p = 0; p < kPairs.size(); ++p) {
    const Set d = a[kPairs[p][0]] ^ a[kPairs[p][1]];
    for (int k = 0; k < 3; ++k) {
      const bool k_in_d = is_subset(a[k], d);
      const bool d_in_k = is_subset(d, a[k]);
      if (k_in_d || d_in_k) {
        r.condition1 = false;
        if (!collect) return r;
        const std::string ak = "A" + std::to_string(k + 1);
        if (k_in_d) r.witnesses.push_back("condition 1: " + ak + " is contained in " + pair_names[p]);
        if (d_in_k) r.witnesses.push_back("condition 1: " + std::string(pair_names[p]) + " is contained in " + ak);
      }
    }
  }
  const Set triple = a[0] & a[1] & a[2];
  r.triple_nonempty = triple.any();
  for (const auto& pr : kPairs) {
    if (!((a[pr[0]] & a[pr[1]]) == triple)) ++r.pairwise_differing;
  }
  if (!r.triple_nonempty || r.pairwise_differing < 2) {
    r.condition2 = false;
    if (!collect) return r;
    if (!r.triple_nonempty) r.witnesses.push_back("condition 2: A1&A2&A3 is empty");
    if (r.pairwise_differing < 2) {
      r.witnesses.push_back("condition 2: only " + std::to_string(r.pairwise_differing) +
                            " pairwise intersection(s) differ from A1&A2&A3");
    }
  }
  const std::array<std::pair<const char*, int>, 4> chis{
      {{"chi12", st.chi12}, {"chi13", st.chi13}, {"chi23", st.chi23}, {"chi123", st.chi123}}};
  for (const auto& [name, value] : chis) {
    if (value < 2) {
      r.condition3 = false;
      if (!collect) return r;
      r.witnesses.push_back("condition 3: " + std::string(name) + " = " + std::to_string(value) + " < 2");
    }
  }
  return r;
}

}  // namespace detail

/// The triple (A1, A2, A3) of spread-index subsets with its derived statistics.
class SetSystem {
 public:
  SetSystem(int t, IndexSet a1, IndexSet a2, IndexSet a3) : t_(t), sets_{a1, a2, a3} {
    if (t < 2 || t > kMaxSpreadDegree) {
      throw PreconditionError("SetSystem: t must lie in [2, " + std::to_string(kMaxSpreadDegree) + "]");
    }
    const std::size_t nu = (std::size_t{1} << t) + 1;
    for (std::size_t k = 0; k < 3; ++k) {
      if (sets_[k].test(0)) throw PreconditionError("SetSystem: index 0 is not a spread index");
      for (std::size_t i = nu + 1; i < sets_[k].size(); ++i) {
        if (sets_[k].test(i)) {
          throw PreconditionError("SetSystem: index " + std::to_string(i) + " exceeds 2^t+1 = " + std::to_string(nu));
        }
      }
    }
    stats_ = detail::compute_statistics(sets_);
  }

  static SetSystem from_indices(int t, const std::vector<int>& a1, const std::vector<int>& a2,
                                const std::vector<int>& a3) {
    auto build = [](const std::vector<int>& v) {
      IndexSet s;
      for (int i : v) {
        if (i < 1 || i > kMaxSpreadIndex) throw PreconditionError("SetSystem: index " + std::to_string(i) + " out of range");
        if (s.test(static_cast<std::size_t>(i))) throw PreconditionError("SetSystem: duplicate index " + std::to_string(i));
        s.set(static_cast<std::size_t>(i));
      }
      return s;
    };
    return SetSystem(t, build(a1), build(a2), build(a3));
  }

  int t() const noexcept { return t_; }
  int n() const noexcept { return 2 * t_; }
  int nu() const noexcept { return (1 << t_) + 1; }

  /// A_k for k in {1, 2, 3}.
  const IndexSet& set(int k) const { return sets_.at(static_cast<std::size_t>(k - 1)); }
  std::vector<int> indices(int k) const { return to_indices(set(k)); }
  const std::array<IndexSet, 3>& sets() const noexcept { return sets_; }

  /// Index set whose indicator sum equals the member (symmetric difference of the chosen A_k).
  IndexSet member_set(Member m) const {
    IndexSet s;
    for (int k = 0; k < 3; ++k) {
      if ((code(m) >> k) & 1U) s ^= sets_[static_cast<std::size_t>(k)];
    }
    return s;
  }

  int member_size(Member m) const { return static_cast<int>(member_set(m).count()); }

  const SetStatistics& stats() const noexcept { return stats_; }

  friend bool operator==(const SetSystem& a, const SetSystem& b) { return a.t_ == b.t_ && a.sets_ == b.sets_; }

  /// Lexicographic on (A1, A2, A3), each compared as its ascending index list.
  friend bool operator<(const SetSystem& a, const SetSystem& b) {
    if (a.t_ != b.t_) return a.t_ < b.t_;
    for (int k = 1; k <= 3; ++k) {
      const auto x = a.indices(k);
      const auto y = b.indices(k);
      if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    return false;
  }

 private:
  int t_;
  std::array<IndexSet, 3> sets_;
  SetStatistics stats_;
};

struct ConditionReport {
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  bool triple_intersection_nonempty = false;
  int pairwise_intersections_differing = 0;  // raw count for stricter readings of condition 2
  std::vector<std::string> witnesses;

  bool passed() const noexcept { return condition1 && condition2 && condition3; }
};

/// Evaluates the three admissibility conditions on (A1, A2, A3).
///
/// Condition 1: for i != j and every k, neither A_k subset-of A_i^A_j nor A_i^A_j subset-of A_k.
/// Condition 2: A1&A2&A3 nonempty and at least two pairwise intersections differ from it.
/// Condition 3: every chi >= 2.
inline ConditionReport check_conditions(const SetSystem& sys) {
  const auto flags = detail::evaluate_conditions(sys.sets(), sys.stats(), true);
  ConditionReport r;
  r.condition1 = flags.condition1;
  r.condition2 = flags.condition2;
  r.condition3 = flags.condition3;
  r.triple_intersection_nonempty = flags.triple_nonempty;
  r.pairwise_intersections_differing = flags.pairwise_differing;
  r.witnesses = flags.witnesses;
  return r;
}

/// 2 <= s_i <= 2^(t-1) for all three sets.
inline bool sizes_in_range(const SetSystem& sys) {
  const auto& st = sys.stats();
  const int hi = 1 << (sys.t() - 1);
  for (int s : {st.s1, st.s2, st.s3}) {
    if (s < 2 || s > hi) return false;
  }
  return true;
}

/// Checks the consequences of conditions 1-2 under 2 <= s_i <= 2^(t-1): pairwise
/// non-containment and overlap, strict inclusion of (A_i&A_j)^(A_i&A_k) in A_j^A_k,
/// and chi <= 2^t - 2 for all four symmetric differences.
inline bool check_structural_lemmas(const SetSystem& sys) {
  if (!check_conditions(sys).passed()) throw PreconditionError("check_structural_lemmas: conditions 1-3 not satisfied");
  if (!sizes_in_range(sys)) throw PreconditionError("check_structural_lemmas: set sizes outside [2, 2^(t-1)]");
  const auto& a = sys.sets();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (detail::is_subset(a[i], a[j])) return false;
      if ((a[i] & a[j]).none()) return false;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const IndexSet lhs = (a[i] & a[j]) ^ (a[i] & a[k]);
    const IndexSet rhs = a[j] ^ a[k];
    if (!detail::is_subset(lhs, rhs) || lhs == rhs) return false;
  }
  const auto& st = sys.stats();
  const int bound = (1 << sys.t()) - 2;
  return st.chi12 <= bound && st.chi13 <= bound && st.chi23 <= bound && st.chi123 <= bound;
}

/// Pairs of members whose index sets are disjoint. For such a pair (a, b) the codeword
/// of a+b covers the codeword of a, so the code is not minimal.
inline std::vector<std::pair<Member, Member>> disjoint_members(const SetSystem& sys) {
  std::vector<std::pair<Member, Member>> out;
  for (std::size_t i = 0; i < kMembers.size(); ++i) {
    for (std::size_t j = i + 1; j < kMembers.size(); ++j) {
      if ((sys.member_set(kMembers[i]) & sys.member_set(kMembers[j])).none()) out.emplace_back(kMembers[i], kMembers[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Function families

/// A family member violated one of: nonzero, vanishes at 0, pairwise distinct.
class FamilyError : public PreconditionError {
 public:
  FamilyError(std::string condition, const std::string& what)
      : PreconditionError(what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// The seven nonzero combinations of f, g, h.
class FunctionFamily {
 public:
  FunctionFamily(const BooleanFunction& f, const BooleanFunction& g, const BooleanFunction& h) {
    if (f.n() != g.n() || f.n() != h.n()) throw PreconditionError("FunctionFamily: dimension mismatch");
    const std::array<const BooleanFunction*, 3> base{&f, &g, &h};
    for (unsigned c = 1; c < 8; ++c) {
      BooleanFunction m(f.n());
      for (unsigned k = 0; k < 3; ++k) {
        if ((c >> k) & 1U) m = m + *base[k];
      }
      members_[c - 1] = std::move(m);
    }
    for (Member m : kMembers) {
      const auto& phi = (*this)[m];
      if (phi.is_zero()) throw FamilyError("nonzero", "member " + std::string(label(m)) + " is the zero function");
      if (phi(0)) throw FamilyError("vanishes_at_zero", "member " + std::string(label(m)) + " is 1 at the zero vector");
    }
    // Over F_2 two members coincide iff their sum, itself a member, is zero; kept explicit for the report.
    for (std::size_t i = 0; i < kMembers.size(); ++i) {
      for (std::size_t j = i + 1; j < kMembers.size(); ++j) {
        if ((*this)[kMembers[i]] == (*this)[kMembers[j]]) {
          throw FamilyError("distinct", "members " + std::string(label(kMembers[i])) + " and " +
                                            std::string(label(kMembers[j])) + " coincide");
        }
      }
    }
  }

  int n() const noexcept { return members_[0].n(); }
  const BooleanFunction& operator[](Member m) const { return members_[code(m) - 1]; }
  const BooleanFunction& f() const { return (*this)[Member::f]; }
  const BooleanFunction& g() const { return (*this)[Member::g]; }
  const BooleanFunction& h() const { return (*this)[Member::h]; }

 private:
  std::array<BooleanFunction, 7> members_;
};

/// f, g, h as indicator sums over A1, A2, A3; each combined member is checked against
/// the indicator sum over its symmetric difference and its weight against |set| (2^t - 1).
inline FunctionFamily build_family(const PartialSpread& spread, const SetSystem& sys) {
  if (spread.t() != sys.t()) throw PreconditionError("build_family: spread and set system disagree on t");
  for (int k = 1; k <= 3; ++k) {
    if (sys.set(k).none()) throw PreconditionError("build_family: A" + std::to_string(k) + " is empty");
  }
  auto indicator_sum = [&](const IndexSet& s) {
    BitVector table(std::size_t{1} << spread.n());
    for (int i : to_indices(s)) table ^= spread.component(i).members;
    table.set(0, false);
    return BooleanFunction(spread.n(), std::move(table));
  };
  FunctionFamily fam(indicator_sum(sys.set(1)), indicator_sum(sys.set(2)), indicator_sum(sys.set(3)));
  const std::size_t block = (std::size_t{1} << sys.t()) - 1;
  for (Member m : kMembers) {
    const IndexSet s = sys.member_set(m);
    if (!(fam[m] == indicator_sum(s))) {
      throw std::logic_error("build_family: member " + std::string(label(m)) + " differs from its indicator sum");
    }
    if (fam[m].weight() != s.count() * block) {
      throw std::logic_error("build_family: member " + std::string(label(m)) + " has unexpected weight");
    }
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Search

struct SearchOptions {
  std::uint64_t seed = 0x6d696e636f6465ULL;
  std::size_t samples = 50000;  // random draws for t >= 4
  int index_pool = 12;          // t >= 4 draws indices from 1..min(2^t + 1, index_pool)
};

namespace detail {

inline bool admissible(const std::array<Mask32, 3>& a, int t, bool require_ab, SetStatistics* out = nullptr) {
  const int hi = 1 << (t - 1);
  for (const auto& s : a) {
    const int c = static_cast<int>(s.count());
    if (c < 2 || c > hi) return false;
  }
  const SetStatistics st = compute_statistics(a);
  const auto flags = evaluate_conditions(a, st, false);
  if (!(flags.condition1 && flags.condition2 && flags.condition3)) return false;
  if (require_ab && st.epsilon > (1 << (t - 2))) return false;
  if (out != nullptr) *out = st;
  return true;
}

inline IndexSet to_index_set(Mask32 m) {
  IndexSet s;
  for (std::uint32_t b = m.bits; b != 0; b &= b - 1) s.set(static_cast<std::size_t>(std::countr_zero(b)) + 1);
  return s;
}

inline std::vector<int> mask_indices(Mask32 m) {
  std::vector<int> v;
  for (std::uint32_t b = m.bits; b != 0; b &= b - 1) v.push_back(std::countr_zero(b) + 1);
  return v;
}

/// Minimal splitmix64 so sampled searches are reproducible across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace detail

/// Triples (A1 < A2 < A3) with 2 <= s_i <= 2^(t-1) passing conditions 1-3, optionally
/// restricted to epsilon <= 2^(t-2). Exhaustive for t = 3; for t in {4, 5} a seeded random
/// sample over the first min(2^t + 1, index_pool) indices. Output is sorted lexicographically.
inline std::vector<SetSystem> search_admissible(int t, bool require_ab_violation, const SearchOptions& opts = {}) {
  if (t < 3 || t > 5) throw PreconditionError("search_admissible: t must be 3, 4 or 5");
  std::vector<SetSystem> out;
  const int hi = 1 << (t - 1);
  if (t == 3) {
    const int nu = (1 << t) + 1;
    std::vector<detail::Mask32> subsets;
    for (std::uint32_t m = 1; m < (1U << nu); ++m) {
      const int c = std::popcount(m);
      if (c >= 2 && c <= hi) subsets.push_back({m});
    }
    std::sort(subsets.begin(), subsets.end(), [](detail::Mask32 a, detail::Mask32 b) {
      return detail::mask_indices(a) < detail::mask_indices(b);
    });
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < subsets.size(); ++j) {
        const auto ij = subsets[i] & subsets[j];
        if (ij.none() || ij == subsets[i] || ij == subsets[j]) continue;
        for (std::size_t k = j + 1; k < subsets.size(); ++k) {
          const std::array<detail::Mask32, 3> a{subsets[i], subsets[j], subsets[k]};
          if (!detail::admissible(a, t, require_ab_violation)) continue;
          out.emplace_back(t, detail::to_index_set(a[0]), detail::to_index_set(a[1]), detail::to_index_set(a[2]));
        }
      }
    }
    return out;
  }

  const int pool = std::min((1 << t) + 1, std::max(3, opts.index_pool));
  const int max_size = std::min(hi, pool);
  detail::SplitMix64 rng(opts.seed);
  auto draw = [&] {
    const int size = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size - 1)));
    std::vector<int> idx(static_cast<std::size_t>(pool));
    for (int i = 0; i < pool; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::uint32_t bits = 0;
    for (int i = 0; i < size; ++i) {
      const auto r = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(pool - i));
      std::swap(idx[static_cast<std::size_t>(i)], idx[r]);
      bits |= 1U << idx[static_cast<std::size_t>(i)];
    }
    return detail::Mask32{bits};
  };
  std::set<std::array<std::vector<int>, 3>> seen;
  for (std::size_t s = 0; s < opts.samples; ++s) {
    std::array<detail::Mask32, 3> a{draw(), draw(), draw()};
    std::sort(a.begin(), a.end(),
              [](detail::Mask32 x, detail::Mask32 y) { return detail::mask_indices(x) < detail::mask_indices(y); });
    if (a[0] == a[1] || a[1] == a[2]) continue;
    if (!detail::admissible(a, t, require_ab_violation)) continue;
    if (!seen.insert({detail::mask_indices(a[0]), detail::mask_indices(a[1]), detail::mask_indices(a[2])}).second) continue;
    out.emplace_back(t, detail::to_index_set(a[0]), detail::to_index_set(a[1]), detail::to_index_set(a[2]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mincode
