#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mfg/ck_element.hpp"
#include "mfg/markov_shift.hpp"
#include "mfg/phase.hpp"
#include "mfg/prefix_table.hpp"

namespace mfg {

/// Deterministic RNG wrapper; avoids std::uniform_int_distribution so that
/// sequences are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  bool coin() { return (eng_() & 1) != 0; }
  template <class T>
  const T& choose(const std::vector<T>& v) {
    return v[pick(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

/// Random full-group element built by composing generator pieces, with the
/// canonical table depth capped.
PrefixExchangeTable random_table(const MarkovShift& shift, Rng& rng, int max_depth);

/// Random length-preserving element (composition of permutation elements).
PrefixExchangeTable random_af_table(const MarkovShift& shift, Rng& rng, int max_p);

PhaseFunction random_phase(const MarkovShift& shift, int order, int depth, Rng& rng);

/// Random essential matrix satisfying condition (I), n x n.
MarkovShift random_condition_I_shift(int n, Rng& rng);

/// A factor of a random generator product.
struct GeneratorFactor {
  enum Kind { Isometry, Adjoint, Projection } kind;
  Word word;
};

std::vector<GeneratorFactor> random_factor_list(const MarkovShift& shift, Rng& rng, int max_factors,
                                                int max_cylinder_len);

/// Multiplies the factors with a random association order.
CKElement product_with_random_association(const MarkovShift& shift, int order,
                                          const std::vector<GeneratorFactor>& factors, Rng& rng);

}  // namespace mfg
