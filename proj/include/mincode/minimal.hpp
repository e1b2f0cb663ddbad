#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mincode/bitvector.hpp"
#include "mincode/boolfn.hpp"
#include "mincode/code.hpp"
#include "mincode/errors.hpp"
#include "mincode/parallel.hpp"
#include "mincode/spread.hpp"

namespace mincode {

inline constexpr int kMaxBruteForceDimension = 14;
inline constexpr int kMaxCriterionDimension = 12;

/// Supp(y) is contained in Supp(x).
inline bool covers(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw PreconditionError("covers: length mismatch");
  return (x & y) == y;
}

/// covers(x, y) holds exactly when wt(x + y) = wt(x) - wt(y).
inline bool check_cover_weight_identity(const BitVector& x, const BitVector& y) {
  const auto wx = static_cast<std::int64_t>(x.popcount());
  const auto wy = static_cast<std::int64_t>(y.popcount());
  const auto wsum = static_cast<std::int64_t>((x ^ y).popcount());
  return covers(x, y) == (wsum == wx - wy);
}

/// Exact nonnegative rational kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q) {
    if (q == 0) throw PreconditionError("Rational: zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    const std::int64_t g = std::gcd(p, q);
    num = g == 0 ? 0 : p / g;
    den = g == 0 ? 1 : q / g;
  }

  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

struct AbRatio {
  std::size_t wt_min = 0;
  std::size_t wt_max = 0;
  Rational ratio;
  bool violating = false;  // ratio <= 1/2, so the sufficient condition does not apply
};

inline AbRatio ab_ratio(const WeightDistribution& dist) {
  const std::size_t lo = dist.min_nonzero();
  if (lo == 0) throw PreconditionError("ab_ratio: distribution has no nonzero weight");
  AbRatio r;
  r.wt_min = lo;
  r.wt_max = dist.max_weight();
  r.ratio = Rational(static_cast<std::int64_t>(r.wt_min), static_cast<std::int64_t>(r.wt_max));
  r.violating = 2 * r.wt_min <= r.wt_max;
  return r;
}

struct CoverWitness {
  std::uint64_t covering_message = 0;
  std::uint64_t covered_message = 0;
  BitVector covering;
  BitVector covered;
  bool independent = true;  // distinct nonzero words over F_2
};

struct CriterionViolation {
  Member phi1 = Member::f;
  Member phi2 = Member::f;
  Point x = 0;
  Point y = 0;
  std::string inequality;
};

struct MinimalityReport {
  bool is_minimal = true;
  std::string method;
  std::optional<CoverWitness> cover;
  std::optional<CriterionViolation> violation;
  std::uint64_t covering_pairs = 0;  // exhaustive scans only
  AbRatio ab;
};

enum class ScanMode { first_witness, exhaustive };

/// Scans ordered pairs of distinct nonzero codewords for a cover. The witness is the
/// pair with the smallest (covering message, covered message), independent of workers.
inline MinimalityReport is_minimal_bruteforce(const LinearCode& code, ScanMode mode = ScanMode::first_witness,
                                              unsigned workers = 1) {
  detail::check_cap(code.dimension, kMaxBruteForceDimension, "is_minimal_bruteforce");
  const CodewordTable table = enumerate_codewords(code, workers);
  const std::size_t count = table.size();
  const std::size_t stride = table.stride();
  std::vector<std::size_t> weight(count);
  for (std::size_t m = 0; m < count; ++m) weight[m] = table.weight(m);

  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  const unsigned blocks = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> first(blocks, {kNone, kNone});
  std::vector<std::uint64_t> pairs(blocks, 0);
  parallel_blocks(count, blocks, [&](std::size_t b, std::size_t begin, std::size_t end) {
    for (std::size_t a = std::max<std::size_t>(begin, 1); a < end; ++a) {
      const std::uint64_t* pa = table.data(a);
      for (std::size_t c = 1; c < count; ++c) {
        // A distinct covered word has strictly smaller support.
        if (weight[c] >= weight[a]) continue;
        const std::uint64_t* pc = table.data(c);
        bool inside = true;
        for (std::size_t i = 0; i < stride && inside; ++i) inside = (pc[i] & ~pa[i]) == 0;
        if (!inside) continue;
        if (first[b].first == kNone) first[b] = {a, c};
        ++pairs[b];
        if (mode == ScanMode::first_witness) return;
      }
    }
  });

  MinimalityReport r;
  r.method = "brute_force";
  for (std::size_t b = 0; b < blocks; ++b) {
    r.covering_pairs += pairs[b];
    if (first[b].first != kNone && !r.cover) {
      CoverWitness w;
      w.covering_message = first[b].first;
      w.covered_message = first[b].second;
      w.covering = table.codeword(first[b].first);
      w.covered = table.codeword(first[b].second);
      r.cover = std::move(w);
    }
  }
  r.is_minimal = !r.cover.has_value();
  if (mode == ScanMode::first_witness) r.covering_pairs = r.is_minimal ? 0 : 1;

  WeightDistribution d;
  for (std::size_t m = 0; m < count; ++m) ++d.entries[weight[m]];
  if (d.min_nonzero() != 0) r.ab = ab_ratio(d);
  return r;
}

/// Which member pairs the first spectral condition ranges over.
enum class CriterionScope {
  proof_cases,  // equal members only; the second condition covers distinct members
  literal,      // all ordered member pairs
};

namespace detail {

inline std::array<WalshSpectrum, 8> family_spectra(const FunctionFamily& fam) {
  std::array<WalshSpectrum, 8> s;
  for (Member m : kMembers) s[code(m)] = walsh_hat(fam[m]);
  return s;
}

inline constexpr std::array<Member, 7> kCodeOrder{Member::f,   Member::g,   Member::f_g,  Member::h,
                                                  Member::f_h, Member::g_h, Member::f_g_h};

/// Smallest y != x with spec[y] == target, or nothing.
class ValueIndex {
 public:
  explicit ValueIndex(const WalshSpectrum& s) {
    for (Point y = 0; y < s.size(); ++y) {
      auto& slot = positions_[s[y]];
      if (slot.size() < 2) slot.push_back(y);
    }
  }
  std::optional<Point> find_other(std::int64_t target, Point x) const {
    if (target < std::numeric_limits<std::int32_t>::min() || target > std::numeric_limits<std::int32_t>::max()) {
      return std::nullopt;
    }
    const auto it = positions_.find(static_cast<std::int32_t>(target));
    if (it == positions_.end()) return std::nullopt;
    for (Point y : it->second) {
      if (y != x) return y;
    }
    return std::nullopt;
  }

 private:
  std::unordered_map<std::int32_t, std::vector<Point>> positions_;
};

}  // namespace detail

/// Decides minimality from the member spectra: no cover exists iff, with N = 2^n,
///   hat_a(x) + hat_b(y) != N and hat_a(x) - hat_b(y) != N for x != y, and
///   hat_a(x+y) + hat_b(x) - hat_{a+b}(y) != N for a != b and all x, y.
inline MinimalityReport walsh_minimality_criterion(const FunctionFamily& fam,
                                                   CriterionScope scope = CriterionScope::proof_cases) {
  const int n = fam.n();
  if (n > kMaxCriterionDimension) {
    throw CapExceeded("walsh_minimality_criterion: n exceeds " + std::to_string(kMaxCriterionDimension));
  }
  const auto spectra = detail::family_spectra(fam);
  const std::int64_t full = std::int64_t{1} << n;
  const Point size = static_cast<Point>(full);

  MinimalityReport r;
  r.method = "walsh_criterion";
  r.ab = ab_ratio(weights_from_spectra(fam));
  auto fail = [&](Member a, Member b, Point x, Point y, std::string which) {
    r.is_minimal = false;
    r.violation = CriterionViolation{a, b, x, y, std::move(which)};
    return r;
  };

  for (Member a : detail::kCodeOrder) {
    for (Member b : detail::kCodeOrder) {
      if (scope == CriterionScope::proof_cases && a != b) continue;
      const detail::ValueIndex idx(spectra[code(b)]);
      for (Point x = 0; x < size; ++x) {
        const std::int64_t va = spectra[code(a)][x];
        if (auto y = idx.find_other(full - va, x)) return fail(a, b, x, *y, "phi1^(x)+phi2^(y) != 2^n");
        if (auto y = idx.find_other(va - full, x)) return fail(a, b, x, *y, "phi1^(x)-phi2^(y) != 2^n");
      }
    }
  }
  for (Member a : detail::kCodeOrder) {
    for (Member b : detail::kCodeOrder) {
      if (a == b) continue;
      const auto& sa = spectra[code(a)].values;
      const auto& sb = spectra[code(b)].values;
      const auto& sab = spectra[code(sum(a, b))].values;
      for (Point x = 0; x < size; ++x) {
        for (Point y = 0; y < size; ++y) {
          if (std::int64_t{sa[x ^ y]} + sb[x] - sab[y] == full) {
            return fail(a, b, x, y, "phi1^(x+y)+phi2^(x)-(phi1+phi2)^(y) != 2^n");
          }
        }
      }
    }
  }
  return r;
}

struct PropositionResult {
  std::string name;
  std::string inequality;
  std::uint64_t checked = 0;
  std::optional<CriterionViolation> witness;

  bool passed() const noexcept { return !witness.has_value(); }
};

struct PropositionReport {
  std::vector<PropositionResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropositionResult& p) { return p.passed(); });
  }
};

/// Exhaustively checks the five spectral inequalities that together imply minimality of
/// a spread family. Requires conditions 1-3, 2 <= s_i <= 2^(t-1) and n >= 6.
inline PropositionReport proposition_suite(const SetSystem& sys, const FunctionFamily& fam) {
  if (sys.n() != fam.n()) throw PreconditionError("proposition_suite: set system and family disagree on n");
  if (sys.n() < 6) throw PreconditionError("proposition_suite: n must be at least 6");
  if (!check_conditions(sys).passed()) throw PreconditionError("proposition_suite: conditions 1-3 not satisfied");
  if (!sizes_in_range(sys)) throw PreconditionError("proposition_suite: set sizes outside [2, 2^(t-1)]");
  if (fam.n() > kMaxCriterionDimension) throw CapExceeded("proposition_suite: n exceeds cap");

  const auto spectra = detail::family_spectra(fam);
  const std::int64_t full = std::int64_t{1} << fam.n();
  const Point size = static_cast<Point>(full);
  auto hat = [&](Member m, Point w) { return std::int64_t{spectra[code(m)][w]}; };

  PropositionReport rep;
  auto run = [&](std::string name, std::string ineq, bool distinct_only, auto&& body) {
    PropositionResult res{std::move(name), std::move(ineq), 0, std::nullopt};
    for (Member a : detail::kCodeOrder) {
      for (Member b : detail::kCodeOrder) {
        if (distinct_only && a == b) continue;
        if (res.witness) break;
        body(a, b, res);
      }
    }
    rep.results.push_back(std::move(res));
  };
  auto record = [](PropositionResult& res, Member a, Member b, Point x, Point y) {
    if (!res.witness) res.witness = CriterionViolation{a, b, x, y, res.inequality};
  };

  run("sum_at_distinct_points", "phi1^(x)+phi2^(y) != 2^n", false, [&](Member a, Member b, PropositionResult& res) {
    for (Point x = 0; x < size; ++x) {
      for (Point y = 0; y < size; ++y) {
        if (x == y) continue;
        ++res.checked;
        if (hat(a, x) + hat(b, y) == full) record(res, a, b, x, y);
      }
    }
  });
  run("difference_at_distinct_points", "phi1^(x)-phi2^(y) != 2^n", false,
      [&](Member a, Member b, PropositionResult& res) {
        for (Point x = 0; x < size; ++x) {
          for (Point y = 0; y < size; ++y) {
            if (x == y) continue;
            ++res.checked;
            if (hat(a, x) - hat(b, y) == full) record(res, a, b, x, y);
          }
        }
      });
  run("shift_from_zero", "phi1^(0)+phi2^(x)-(phi1+phi2)^(x) != 2^n", true,
      [&](Member a, Member b, PropositionResult& res) {
        for (Point x = 0; x < size; ++x) {
          ++res.checked;
          if (hat(a, 0) + hat(b, x) - hat(sum(a, b), x) == full) record(res, a, b, x, 0);
        }
      });
  run("same_point_sum", "phi1^(x)+phi2^(x)-(phi1+phi2)^(0) != 2^n", true,
      [&](Member a, Member b, PropositionResult& res) {
        for (Point x = 1; x < size; ++x) {
          ++res.checked;
          if (hat(a, x) + hat(b, x) - hat(sum(a, b), 0) == full) record(res, a, b, x, x);
        }
      });
  run("mixed_shift", "phi1^(x+y)+phi2^(x)-(phi1+phi2)^(y) != 2^n", true,
      [&](Member a, Member b, PropositionResult& res) {
        for (Point x = 1; x < size; ++x) {
          for (Point y = 1; y < size; ++y) {
            if (x == y) continue;
            ++res.checked;
            if (hat(a, x ^ y) + hat(b, x) - hat(sum(a, b), y) == full) record(res, a, b, x, y);
          }
        }
      });
  return rep;
}

}  // namespace mincode
