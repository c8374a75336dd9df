#pragma once

#include <map>
#include <vector>

#include "mfg/ep_point.hpp"
#include "mfg/prefix_table.hpp"

namespace mfg {

/// Full-group element tau_mu acting as the shift on the cylinder U_mu, for a
/// length-2 word mu. Requires condition (I) for the matrix and its transpose.
PrefixExchangeTable local_shift_generator(const MarkovShift& shift, const Word& mu);

/// The small hand-picked cocycle witnesses for local_shift_generator:
/// k = 0, l = 1 on U_mu, and the matching values elsewhere.
CocyclePair local_shift_witness_cocycles(const MarkovShift& shift, const Word& mu);

/// Full-group element sending x to j·x (identity when x = j^inf).
PrefixExchangeTable prepend_mover(const MarkovShift& shift, const EPPoint& x, Symbol j);

/// W_p(i): words mu of length p with A(mu_p, i) = 1.
std::vector<Word> permutation_domain(const MarkovShift& shift, int p, Symbol i);

/// Depth-(p+1) element permuting the first p symbols according to the
/// per-symbol permutations s_i of W_p(i); always length-preserving.
PrefixExchangeTable permutation_element(const MarkovShift& shift, int p,
                                        const std::vector<std::map<Word, Word>>& perms);

/// Involution swapping the cylinders U_a and U_b (|a| = |b|, equal end rows)
/// and fixing everything else.
PrefixExchangeTable block_swap_involution(const MarkovShift& shift, const Word& a, const Word& b);

/// Constructive orbit witness: the point y = mu·sigma^l(x) together with an
/// explicit full-group table sending x to y, composed from shift pieces and
/// prepend movers.
std::pair<EPPoint, PrefixExchangeTable> orbit_witness(const MarkovShift& shift, const EPPoint& x,
                                                      int k, int l, const Word& mu);

}  // namespace mfg
