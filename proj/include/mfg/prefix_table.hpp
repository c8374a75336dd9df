#pragma once

#include <utility>
#include <vector>

#include "mfg/ep_point.hpp"
#include "mfg/lc_function.hpp"
#include "mfg/markov_shift.hpp"

namespace mfg {

/// Orbit cocycles k, l of a full-group element: sigma^{k(x)}(tau(x)) = sigma^{l(x)}(x).
struct CocyclePair {
  LCFunction<int> k;
  LCFunction<int> l;
};

/// Element of the topological full group, stored as a finite prefix
/// exchange: word pairs (mu_i, nu_i) whose domain and range cylinders each
/// partition the shift space and whose end rows agree, so that
/// mu_i z -> nu_i z is a homeomorphism moving points within their orbits.
///
/// Tables are kept canonical: entries row-equal, sibling entries merged,
/// sorted by domain word. Equality is decided by refining two tables to a
/// common domain depth and comparing entry lists.
class PrefixExchangeTable {
 public:
  static PrefixExchangeTable validate(const MarkovShift& shift, std::vector<std::pair<Word, Word>> entries);
  static PrefixExchangeTable identity(const MarkovShift& shift);

  const MarkovShift& shift() const { return shift_; }
  const std::vector<std::pair<Word, Word>>& entries() const { return entries_; }

  EPPoint apply(const EPPoint& p) const;
  /// this ∘ inner (apply inner first).
  PrefixExchangeTable compose(const PrefixExchangeTable& inner) const;
  PrefixExchangeTable inverse() const;

  /// Canonical cocycles k = |nu_i|, l = |mu_i| on U_{mu_i}, at the domain depth.
  CocyclePair cocycles() const;

  /// True iff every canonical entry is length-preserving; under condition (I)
  /// this characterizes membership in the AF-full group.
  bool is_af() const;

  int domain_depth() const;
  int range_depth() const;
  std::vector<std::pair<Word, Word>> refined_entries(std::size_t domain_len) const;

  friend bool operator==(const PrefixExchangeTable& a, const PrefixExchangeTable& b);

 private:
  PrefixExchangeTable(MarkovShift shift, std::vector<std::pair<Word, Word>> entries)
      : shift_(std::move(shift)), entries_(std::move(entries)) {}

  MarkovShift shift_;
  std::vector<std::pair<Word, Word>> entries_;
};

}  // namespace mfg
