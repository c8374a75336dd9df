#pragma once

#include <optional>

#include "mfg/ck_element.hpp"
#include "mfg/lc_function.hpp"

namespace mfg {

/// Locally constant function with values in the cyclic phase group
/// <zeta_M>, stored as exponents mod M. As a diagonal element it is a
/// unitary; it doubles as a unitary one-cocycle via U(k) = U(1)·(U(1)∘sigma)
/// ··· (U(1)∘sigma^{k-1}).
class PhaseFunction {
 public:
  PhaseFunction(int order, LCFunction<int> exponents);
  static PhaseFunction constant(const MarkovShift& shift, int order, int exponent = 0);

  int order() const { return order_; }
  int depth() const { return exps_.depth(); }
  const MarkovShift& shift() const { return exps_.shift(); }
  const LCFunction<int>& exponents() const { return exps_; }

  int exponent_at_word(const Word& w) const { return exps_.at_word(w); }
  Scalar value_at(const EPPoint& p) const;

  PhaseFunction times(const PhaseFunction& o) const;
  PhaseFunction conj() const;
  /// x -> f(sigma x).
  PhaseFunction composed_with_shift() const;
  /// The one-cocycle value U(k) generated by this function as U(1).
  PhaseFunction cocycle_power(int k) const;

  PhaseFunction refined(int depth) const;
  PhaseFunction canonical() const;
  CKElement to_element() const;

  friend bool operator==(const PhaseFunction& a, const PhaseFunction& b);

 private:
  int order_;
  LCFunction<int> exps_;
};

/// The automorphism lambda(U) with lambda(U)(S_mu) = U(|mu|) S_mu, applied
/// termwise: S_alpha S_beta^* -> U(|alpha|) S_alpha S_beta^* U(|beta|)^*.
/// Fixes the diagonal pointwise.
CKElement gauge_twist(const PhaseFunction& u1, const CKElement& e);

/// Decides whether u1 = v · conj(v ∘ sigma) for some phase function v that
/// is locally constant at the given depth; sound and complete at that depth.
/// Works on the word-overlap graph: vertices are depth-d words, each
/// depth-(d+1) word is an edge from its prefix to its suffix labeled by u1.
std::optional<PhaseFunction> solve_coboundary(const PhaseFunction& u1, int depth);

}  // namespace mfg
