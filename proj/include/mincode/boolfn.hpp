#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mincode/bitvector.hpp"
#include "mincode/errors.hpp"

namespace mincode {

/// Truth table of f : F_2^n -> F_2; bit x of the table is f(x).
class BooleanFunction {
 public:
  BooleanFunction() = default;

  /// The constant-zero function on F_2^n.
  explicit BooleanFunction(int n) : n_(checked_dimension(n)), table_(std::size_t{1} << n) {}

  BooleanFunction(int n, BitVector table) : n_(checked_dimension(n)), table_(std::move(table)) {
    if (table_.size() != (std::size_t{1} << n)) throw PreconditionError("BooleanFunction: table length must be 2^n");
  }

  template <class Pred>
  static BooleanFunction from(int n, Pred&& pred) {
    BitVector table(std::size_t{1} << checked_dimension(n));
    for (Point x = 0; x < (Point{1} << n); ++x) {
      if (pred(x)) table.set(x);
    }
    return BooleanFunction(n, std::move(table));
  }

  /// x -> v.x
  static BooleanFunction linear(int n, Point v) {
    return from(n, [v](Point x) { return dot(v, x); });
  }

  int n() const noexcept { return n_; }
  std::size_t domain_size() const noexcept { return table_.size(); }
  bool operator()(Point x) const noexcept { return table_.test(x); }
  const BitVector& table() const noexcept { return table_; }
  std::size_t weight() const noexcept { return table_.popcount(); }
  bool is_zero() const noexcept { return table_.none(); }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

  static int checked_dimension(int n) {
    if (n < 0 || n > kMaxDimension) {
      throw PreconditionError("BooleanFunction: n must lie in [0, " + std::to_string(kMaxDimension) + "]");
    }
    return n;
  }

 private:
  int n_ = 0;
  BitVector table_{1};
};

/// Pointwise XOR.
inline BooleanFunction add(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n()) throw PreconditionError("add: dimension mismatch");
  return BooleanFunction(f.n(), f.table() ^ g.table());
}

inline BooleanFunction operator+(const BooleanFunction& f, const BooleanFunction& g) { return add(f, g); }

/// Signed spectrum; values[w] is the transform at w.
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int32_t> values;

  std::int32_t operator[](Point w) const { return values[w]; }
  std::size_t size() const noexcept { return values.size(); }

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// In-place unnormalised Walsh-Hadamard butterfly; size must be a power of two.
inline void fwht(std::span<std::int32_t> a) {
  const std::size_t len = a.size();
  if (len == 0 || (len & (len - 1)) != 0) throw PreconditionError("fwht: length must be a power of two");
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = a[j];
        const std::int32_t v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

/// sum_x (-1)^(f(x) + w.x)
inline WalshSpectrum walsh_hat(const BooleanFunction& f) {
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(f.domain_size())};
  for (Point x = 0; x < s.values.size(); ++x) s.values[x] = f(x) ? -1 : 1;
  fwht(s.values);
  return s;
}

/// sum_x f(x) (-1)^(w.x), with f read as a 0/1 integer function.
inline WalshSpectrum walsh_tilde(const BooleanFunction& f) {
  WalshSpectrum s{f.n(), std::vector<std::int32_t>(f.domain_size())};
  for (Point x = 0; x < s.values.size(); ++x) s.values[x] = f(x) ? 1 : 0;
  fwht(s.values);
  return s;
}

/// True iff hat(0) = 2^n - 2 tilde(0) and hat(w) = -2 tilde(w) for w != 0,
/// where hat is the supplied spectrum and tilde is computed from f.
inline bool check_hat_tilde_relation(const BooleanFunction& f, const WalshSpectrum& hat) {
  if (hat.n != f.n() || hat.size() != f.domain_size()) return false;
  const WalshSpectrum tilde = walsh_tilde(f);
  const std::int64_t full = std::int64_t{1} << f.n();
  if (hat[0] != full - 2 * std::int64_t{tilde[0]}) return false;
  for (Point w = 1; w < hat.size(); ++w) {
    if (hat[w] != -2 * std::int64_t{tilde[w]}) return false;
  }
  return true;
}

inline bool check_hat_tilde_relation(const BooleanFunction& f) { return check_hat_tilde_relation(f, walsh_hat(f)); }

/// Returns v when f(x) = v.x for every x, otherwise nothing.
inline std::optional<BitVector> linear_form(const BooleanFunction& f) {
  if (f(0)) return std::nullopt;
  const WalshSpectrum s = walsh_hat(f);
  const std::int32_t full = std::int32_t{1} << f.n();
  for (Point v = 0; v < s.size(); ++v) {
    if (s[v] == full) return BitVector::from_point(v, f.n());
  }
  return std::nullopt;
}

}  // namespace mincode
