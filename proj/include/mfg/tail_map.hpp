#pragma once

#include <variant>
#include <vector>

#include "mfg/ck_element.hpp"
#include "mfg/ep_point.hpp"
#include "mfg/lc_function.hpp"
#include "mfg/markov_shift.hpp"
#include "mfg/prefix_table.hpp"
#include "mfg/sweep.hpp"

namespace mfg {

/// Greedy leftmost substitution of one word by another.
struct SubstClause {
  Word pattern;
  Word replacement;
};

/// Prefix exchange across shifts: entries (mu over the source, nu over the
/// target) whose domain cylinders partition the source space.
struct ExchangeClause {
  std::vector<std::pair<Word, Word>> entries;
};

using RewriteClause = std::variant<SubstClause, ExchangeClause>;

/// Cross-shift homeomorphism given as an ordered rewrite program together
/// with an explicit inverse program; exactly evaluable on eventually
/// periodic points. Bijectivity is a verified invariant (round trips on
/// bounded sweeps), not an assumption.
class TailMap {
 public:
  TailMap(MarkovShift source, MarkovShift target, std::vector<RewriteClause> forward,
          std::vector<RewriteClause> inverse);

  static TailMap identity(const MarkovShift& shift);
  static TailMap from_table(const PrefixExchangeTable& table);

  const MarkovShift& source() const { return source_; }
  const MarkovShift& target() const { return target_; }
  const std::vector<RewriteClause>& forward_program() const { return forward_; }
  const std::vector<RewriteClause>& inverse_program() const { return inverse_; }

  EPPoint apply(const EPPoint& p) const;
  EPPoint apply_inverse(const EPPoint& p) const;
  TailMap inverted() const;

 private:
  MarkovShift source_, target_;
  std::vector<RewriteClause> forward_, inverse_;
};

/// Orbit-equivalence cocycle exponents for a tail map and its inverse.
struct OrbitCocycleData {
  LCFunction<int> k1, l1;  // on the source
  LCFunction<int> k2, l2;  // on the target
};

/// The worked orbit equivalence between the golden-mean shift and the full
/// 2-shift: replace each 21 by 2 greedily from the left (well-defined since
/// 22 is forbidden, so every 2 heads a 21 block), with its cocycle tables.
struct GoldenMeanExample {
  TailMap map;
  OrbitCocycleData cocycles;
};
GoldenMeanExample golden_mean_example();

/// Checks sigma_B^{k1(x)}(h(sigma_A x)) = sigma_B^{l1(x)}(h(x)), the mirror
/// identity for the inverse, and the summed-cocycle power identities for
/// n <= 3, over all bounded points. Failures are report entries.
VerifyReport verify_orbit_cocycles(const TailMap& h, const OrbitCocycleData& data, const Bounds& bounds);

/// Uniform-orbit check with constant exponents: sigma_B^{k1}(h(sigma_A x))
/// must equal sigma_B^{k1}(sigma_B(h(x))), and the mirror with k2.
VerifyReport check_uniform_orbit_equivalence(const TailMap& h, int k1, int k2, const Bounds& bounds);

/// Infers a prefix-exchange table for h ∘ tau ∘ h^{-1} by probing target
/// cylinders with representatives, then certifies the table pointwise on the
/// full bounded sweep. Semidecision: DepthExhausted when no table is found
/// within max_depth; ValidationMismatch when an inferred table fails
/// certification.
PrefixExchangeTable conjugate_table(const TailMap& h, const PrefixExchangeTable& tau, int max_depth,
                                    const Bounds& bounds);

/// Computes f ∘ h^{-1} for diagonal f as a certified locally constant
/// element over the target.
CKElement transport_diagonal(const TailMap& h, const CKElement& f, int max_depth, const Bounds& bounds);

}  // namespace mfg
