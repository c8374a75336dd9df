#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mfg/cyclotomic.hpp"
#include "mfg/ep_point.hpp"
#include "mfg/markov_shift.hpp"
#include "mfg/prefix_table.hpp"

namespace mfg {

class PhaseFunction;

using TermKey = std::pair<Word, Word>;  // (alpha, beta) of a term S_alpha S_beta^*

/// Finite linear combination of terms S_alpha S_beta^* over a Markov shift,
/// with exact Q(zeta_M) coefficients, kept in graded normal form: within
/// each gauge degree m = |alpha| - |beta| every stored term has the same
/// beta-length, so coefficients are unique and equality is decidable.
///
/// The defining relations sum_j S_j S_j^* = 1 and
/// S_i^* S_i = sum_j A(i,j) S_j S_j^* are built into the term product and
/// the normal-form expansion S_alpha S_beta^* = sum_j S_{alpha j} S_{beta j}^*.
class CKElement {
 public:
  static CKElement zero(const MarkovShift& shift, int order = 4);
  static CKElement unit(const MarkovShift& shift, int order = 4);
  static CKElement generator(const MarkovShift& shift, Symbol i, int order = 4);
  /// S_mu (the unit for the empty word).
  static CKElement word_isometry(const MarkovShift& shift, const Word& mu, int order = 4);
  /// chi_{U_w} = S_w S_w^*.
  static CKElement cylinder_projection(const MarkovShift& shift, const Word& w, int order = 4);
  static CKElement from_terms(const MarkovShift& shift, int order, std::map<TermKey, Scalar> terms);
  /// The normalizer unitary u_tau = sum_i S_{nu_i} S_{mu_i}^* of a table.
  static CKElement from_table(const PrefixExchangeTable& table, int order = 4);

  const MarkovShift& shift() const { return shift_; }
  int order() const { return order_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }

  CKElement operator+(const CKElement& o) const;
  CKElement operator-(const CKElement& o) const;
  CKElement operator*(const CKElement& o) const;
  CKElement scaled(const Scalar& c) const;
  CKElement adjoint() const;

  bool is_zero() const { return terms_.empty(); }
  bool equals(const CKElement& o) const;
  friend bool operator==(const CKElement& a, const CKElement& b) { return a.equals(b); }

  /// Action on a basis point: S_alpha S_beta^* e_x = e_{alpha z} when
  /// x = beta z and alpha z is admissible, 0 otherwise; extended linearly.
  /// This is the independent equality oracle.
  std::vector<std::pair<EPPoint, Scalar>> act_on_point(const EPPoint& p) const;

  std::set<int> degrees() const;
  CKElement gauge_component(int m) const;
  /// Conditional expectation onto the gauge-invariant part (degree 0).
  CKElement expectation() const;
  /// mu -> E(S_mu^* v) for mu of length n; sum_mu S_mu v_mu reconstructs
  /// the degree-n component.
  std::map<Word, CKElement> strip_prefix(int n) const;

  bool is_diagonal() const;
  /// Degree 0 only (lies in the gauge-invariant core).
  bool is_in_af_core() const;
  bool is_unitary() const;
  /// Unitary and conjugation sends cylinder projections up to the term-depth
  /// bound into the diagonal.
  bool is_normalizer() const;

  /// Value of a diagonal element at a point.
  Scalar eval_diagonal(const EPPoint& p) const;

  /// f -> sum_i S_i f S_i^*, i.e. f ∘ sigma, for diagonal f.
  CKElement composed_with_shift() const;

  /// Factor a normalizer as (diagonal phase) · u_tau.
  std::pair<PhaseFunction, PrefixExchangeTable> normalizer_decompose() const;

  int max_alpha_len() const;
  int max_beta_len() const;

 private:
  CKElement(MarkovShift shift, int order, std::map<TermKey, Scalar> raw_terms);

  MarkovShift shift_;
  int order_;
  std::map<TermKey, Scalar> terms_;
};

}  // namespace mfg
