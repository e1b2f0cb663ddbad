#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "mincode/bitvector.hpp"
#include "mincode/boolfn.hpp"
#include "mincode/spread.hpp"

namespace mincode {

/// Each f(x), x != 0, is 1 with probability density; f(0) = 0 unless zero_at_origin is false.
template <class Rng>
BooleanFunction random_function(int n, Rng& rng, double density = 0.5, bool zero_at_origin = true) {
  std::bernoulli_distribution bit(density);
  BitVector table(std::size_t{1} << BooleanFunction::checked_dimension(n));
  for (std::size_t x = zero_at_origin ? 1 : 0; x < table.size(); ++x) {
    if (bit(rng)) table.set(x);
  }
  return BooleanFunction(n, std::move(table));
}

/// Uniformly random vector of the given length.
template <class Rng>
BitVector random_vector(std::size_t length, Rng& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (bit(rng) != 0) v.set(i);
  }
  return v;
}

/// Draws (f, g, h) until the family is valid and no member is linear, or attempts run out.
template <class Rng>
std::optional<FunctionFamily> random_family(int n, Rng& rng, double density = 0.5, int max_attempts = 1000) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto f = random_function(n, rng, density);
    auto g = random_function(n, rng, density);
    auto h = random_function(n, rng, density);
    try {
      FunctionFamily fam(f, g, h);
      bool has_linear = false;
      for (Member m : kMembers) has_linear = has_linear || linear_form(fam[m]).has_value();
      if (!has_linear) return fam;
    } catch (const FamilyError&) {
    }
  }
  return std::nullopt;
}

}  // namespace mincode
