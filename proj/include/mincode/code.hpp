#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mincode/bitvector.hpp"
#include "mincode/boolfn.hpp"
#include "mincode/errors.hpp"
#include "mincode/gf2matrix.hpp"
#include "mincode/parallel.hpp"
#include "mincode/spread.hpp"

namespace mincode {

inline constexpr int kMaxEnumerationDimension = 16;

/// Binary linear code with coordinates indexed by x = 1, ..., 2^n - 1 (coordinate x - 1).
struct LinearCode {
  int n = 0;
  std::size_t length = 0;
  GF2Matrix generator;
  std::size_t dimension = 0;
};

namespace detail {

inline BitVector evaluation_row(int n, const BooleanFunction& f) {
  const std::size_t len = (std::size_t{1} << n) - 1;
  BitVector row(len);
  for (Point x = 1; x <= len; ++x) {
    if (f(x)) row.set(x - 1);
  }
  return row;
}

inline LinearCode make_code(int n, const std::vector<const BooleanFunction*>& extra) {
  if (n < 1) throw PreconditionError("construct_code: n must be positive");
  LinearCode c;
  c.n = n;
  c.length = (std::size_t{1} << n) - 1;
  c.generator = GF2Matrix(c.length);
  for (int i = 0; i < n; ++i) c.generator.append(evaluation_row(n, BooleanFunction::linear(n, Point{1} << i)));
  for (const auto* f : extra) c.generator.append(evaluation_row(n, *f));
  c.dimension = rank(c.generator);
  return c;
}

}  // namespace detail

/// Rows: the n simplex rows x -> x_i, then the evaluations of f, g and h.
inline LinearCode construct_code(const FunctionFamily& fam) {
  return detail::make_code(fam.n(), {&fam.f(), &fam.g(), &fam.h()});
}

/// The single-function code: simplex rows plus the evaluation of f.
inline LinearCode construct_generic_code(const BooleanFunction& f) {
  if (f(0)) throw PreconditionError("construct_generic_code: f(0) must be 0");
  return detail::make_code(f.n(), {&f});
}

struct WeightDistribution {
  std::map<std::size_t, std::uint64_t> entries;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
  }
  std::uint64_t multiplicity(std::size_t weight) const {
    const auto it = entries.find(weight);
    return it == entries.end() ? 0 : it->second;
  }
  /// Smallest nonzero weight, 0 if there is none.
  std::size_t min_nonzero() const {
    for (const auto& [w, m] : entries) {
      if (w != 0 && m != 0) return w;
    }
    return 0;
  }
  std::size_t max_weight() const { return entries.empty() ? 0 : entries.rbegin()->first; }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// All 2^dimension codewords, stored flat; codeword m is the sum of basis rows selected by the bits of m.
class CodewordTable {
 public:
  CodewordTable(std::size_t length, std::size_t count)
      : length_(length), stride_(BitVector::word_count(length)), count_(count), words_(stride_ * count) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t stride() const noexcept { return stride_; }
  const std::uint64_t* data(std::size_t m) const noexcept { return words_.data() + m * stride_; }
  std::uint64_t* data(std::size_t m) noexcept { return words_.data() + m * stride_; }

  std::size_t weight(std::size_t m) const noexcept {
    std::size_t w = 0;
    const auto* p = data(m);
    for (std::size_t i = 0; i < stride_; ++i) w += static_cast<std::size_t>(std::popcount(p[i]));
    return w;
  }

  BitVector codeword(std::size_t m) const {
    BitVector v(length_);
    const auto* p = data(m);
    for (std::size_t i = 0; i < length_; ++i) {
      if ((p[i / 64] >> (i % 64)) & 1U) v.set(i);
    }
    return v;
  }

 private:
  std::size_t length_;
  std::size_t stride_;
  std::size_t count_;
  std::vector<std::uint64_t> words_;
};

namespace detail {

inline std::vector<BitVector> code_basis(const LinearCode& code) {
  std::vector<BitVector> basis;
  for (std::size_t i : independent_rows(code.generator)) basis.push_back(code.generator.row(i));
  return basis;
}

/// Visits codewords of messages [begin, end) in Gray order; fn(message, words).
template <class Fn>
void gray_walk(const std::vector<BitVector>& basis, std::size_t stride, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  std::vector<std::uint64_t> acc(stride, 0);
  std::uint64_t g = begin ^ (begin >> 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if ((g >> k) & 1U) {
      const auto w = basis[k].words();
      for (std::size_t i = 0; i < stride; ++i) acc[i] ^= w[i];
    }
  }
  fn(g, acc.data());
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto k = static_cast<std::size_t>(std::countr_zero(i));
    const auto w = basis[k].words();
    for (std::size_t j = 0; j < stride; ++j) acc[j] ^= w[j];
    g ^= std::uint64_t{1} << k;
    fn(g, acc.data());
  }
}

inline void check_cap(std::size_t dimension, int cap, const char* where) {
  if (dimension > static_cast<std::size_t>(cap)) {
    throw CapExceeded(std::string(where) + ": dimension " + std::to_string(dimension) + " exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace detail

/// Codeword table in message order over the greedy basis of the generator rows.
inline CodewordTable enumerate_codewords(const LinearCode& code, unsigned workers = 1) {
  detail::check_cap(code.dimension, kMaxEnumerationDimension, "enumerate_codewords");
  const auto basis = detail::code_basis(code);
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  CodewordTable table(code.length, count);
  parallel_blocks(count, resolve_workers(workers), [&](std::size_t, std::size_t begin, std::size_t end) {
    detail::gray_walk(basis, table.stride(), begin, end, [&](std::uint64_t m, const std::uint64_t* w) {
      std::copy(w, w + table.stride(), table.data(m));
    });
  });
  return table;
}

/// Weight distribution by enumerating all 2^dimension codewords, zero included.
inline WeightDistribution enumerate_weights(const LinearCode& code, unsigned workers = 1) {
  detail::check_cap(code.dimension, kMaxEnumerationDimension, "enumerate_weights");
  const auto basis = detail::code_basis(code);
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  const std::size_t stride = BitVector::word_count(code.length);
  const unsigned blocks = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), count));
  std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(code.length + 1, 0));
  parallel_blocks(count, blocks, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto& hist = partial[b];
    detail::gray_walk(basis, stride, begin, end, [&](std::uint64_t, const std::uint64_t* w) {
      std::size_t wt = 0;
      for (std::size_t i = 0; i < stride; ++i) wt += static_cast<std::size_t>(std::popcount(w[i]));
      ++hist[wt];
    });
  });
  WeightDistribution d;
  for (std::size_t wt = 0; wt <= code.length; ++wt) {
    std::uint64_t m = 0;
    for (const auto& h : partial) m += h[wt];
    if (m != 0) d.entries[wt] = m;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Predictions for spread families

struct Table1Row {
  std::string weight_expr;
  std::string multiplicity_expr;
  std::int64_t weight = 0;
  std::int64_t multiplicity = 0;
};

namespace detail {

inline const char* size_symbol(Member m) {
  switch (m) {
    case Member::f: return "s1";
    case Member::g: return "s2";
    case Member::h: return "s3";
    case Member::f_g: return "chi12";
    case Member::f_h: return "chi13";
    case Member::g_h: return "chi23";
    case Member::f_g_h: return "chi123";
  }
  return "?";
}

inline void require_nonempty_members(const SetSystem& sys, const char* where) {
  for (Member m : kMembers) {
    if (sys.member_size(m) == 0) {
      throw PreconditionError(std::string(where) + ": member " + std::string(label(m)) + " has an empty index set");
    }
  }
}

}  // namespace detail

/// The un-aggregated weight table: 23 rows covering the zero word, the seven w = 0
/// words, the simplex words and the two w != 0 classes of each member.
inline std::vector<Table1Row> predict_table1(const SetSystem& sys) {
  detail::require_nonempty_members(sys, "predict_table1");
  const int t = sys.t();
  const std::int64_t q = std::int64_t{1} << t;
  const std::int64_t half = std::int64_t{1} << (2 * t - 1);
  std::vector<Table1Row> rows;
  rows.push_back({"0", "1", 0, 1});
  for (Member m : kMembers) {
    const std::string s = detail::size_symbol(m);
    rows.push_back({s + "(2^t-1)", "1", sys.member_size(m) * (q - 1), 1});
  }
  rows.push_back({"2^(n-1)", "2^n-1", half, q * q - 1});
  for (Member m : kMembers) {
    const std::string s = detail::size_symbol(m);
    const std::int64_t v = sys.member_size(m);
    rows.push_back({"2^(n-1)-" + s, "(2^t+1-" + s + ")(2^t-1)", half - v, (q + 1 - v) * (q - 1)});
  }
  for (Member m : kMembers) {
    const std::string s = detail::size_symbol(m);
    const std::int64_t v = sys.member_size(m);
    rows.push_back({"2^(n-1)+2^t-" + s, s + "(2^t-1)", half + q - v, v * (q - 1)});
  }
  return rows;
}

/// Aggregated weight table; requires n = 2t and all seven member index sets nonempty.
inline WeightDistribution predict_weights(const SetSystem& sys, int n) {
  if (n != sys.n()) throw PreconditionError("predict_weights: n must equal 2t");
  WeightDistribution d;
  for (const auto& r : predict_table1(sys)) {
    if (r.multiplicity != 0) d.entries[static_cast<std::size_t>(r.weight)] += static_cast<std::uint64_t>(r.multiplicity);
  }
  return d;
}

/// Walsh spectrum of a member from the spread geometry alone: 2^n - 2s(2^t-1) at w = 0,
/// -2^(t+1) + 2s when w lies in the orthogonal complement of some W_i with i in the
/// member's index set, 2s otherwise.
inline WalshSpectrum predict_walsh(const SetSystem& sys, Member member, const PartialSpread& spread) {
  if (spread.t() != sys.t()) throw PreconditionError("predict_walsh: spread and set system disagree on t");
  const auto indices = to_indices(sys.member_set(member));
  for (int i : indices) {
    if (i > spread.size()) throw PreconditionError("predict_walsh: index beyond the spread");
  }
  const int n = sys.n();
  const std::int32_t s = static_cast<std::int32_t>(indices.size());
  const std::int32_t q = std::int32_t{1} << sys.t();
  WalshSpectrum out{n, std::vector<std::int32_t>(std::size_t{1} << n, 2 * s)};
  for (int i : indices) {
    const auto& perp = spread.component(i).dual_members;
    for (Point w = 1; w < out.size(); ++w) {
      if (perp.test(w)) out.values[w] = -2 * q + 2 * s;
    }
  }
  out.values[0] = (std::int32_t{1} << n) - 2 * s * (q - 1);
  return out;
}

/// Weights from spectra: {(2^n - hat_phi(w))/2 over members phi and all w}, plus
/// 2^(n-1) for each nonzero w and the zero word.
inline WeightDistribution weights_from_spectra(const FunctionFamily& fam) {
  const int n = fam.n();
  const std::int64_t full = std::int64_t{1} << n;
  WeightDistribution d;
  d.entries[0] = 1;
  d.entries[static_cast<std::size_t>(full / 2)] += static_cast<std::uint64_t>(full - 1);
  for (Member m : kMembers) {
    const auto s = walsh_hat(fam[m]);
    for (std::int32_t v : s.values) ++d.entries[static_cast<std::size_t>((full - v) / 2)];
  }
  return d;
}

}  // namespace mincode
