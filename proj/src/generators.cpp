#include "mfg/generators.hpp"

#include <algorithm>
#include <set>

#include "mfg/error.hpp"

namespace mfg {

namespace {

void require_condition_I_both(const MarkovShift& shift) {
  if (!shift.satisfies_condition_I()) fail(Errc::ConditionIFailure, "matrix fails condition (I)");
  if (!shift.transpose_satisfies_condition_I())
    fail(Errc::ConditionIFailure, "transposed matrix fails condition (I)");
}

// First predecessor of a other than a itself; exists when the transpose
// satisfies condition (I).
Symbol outside_predecessor(const MarkovShift& shift, Symbol a) {
  for (int b = 1; b <= shift.alphabet_size(); ++b) {
    if (b != a && shift.entry(b, a)) return b;
  }
  fail(Errc::ConditionIFailure, "symbol " + std::to_string(a) + " has no predecessor besides itself");
}

}  // namespace

PrefixExchangeTable local_shift_generator(const MarkovShift& shift, const Word& mu) {
  if (mu.size() != 2) fail(Errc::WordNotAdmissible, "generator word must have length 2");
  shift.require_admissible(mu);
  require_condition_I_both(shift);
  std::vector<std::pair<Word, Word>> entries;
  std::set<Word> covered;  // depth-2 cylinders already handled
  if (mu[0] == mu[1]) {
    Symbol a = mu[0];
    Symbol b1 = outside_predecessor(shift, a);
    entries.push_back({Word{a, a}, Word{a}});
    covered.insert(Word{a, a});
    for (Symbol b : shift.followers(a)) {
      if (b == a) continue;
      entries.push_back({Word{a, b}, Word{b1, a, b}});
      covered.insert(Word{a, b});
    }
    entries.push_back({Word{b1, a}, Word{b1, a, a}});
    covered.insert(Word{b1, a});
  } else {
    Symbol a = mu[0], b = mu[1];
    entries.push_back({Word{a, b}, Word{b}});
    covered.insert(Word{a, b});
    entries.push_back({Word{b}, Word{a, b}});
    for (Symbol j : shift.followers(b)) covered.insert(Word{b, j});
  }
  for (const auto& w : shift.admissible_words(2)) {
    if (!covered.count(w)) entries.push_back({w, w});
  }
  return PrefixExchangeTable::validate(shift, std::move(entries));
}

CocyclePair local_shift_witness_cocycles(const MarkovShift& shift, const Word& mu) {
  if (mu.size() != 2) fail(Errc::WordNotAdmissible, "generator word must have length 2");
  shift.require_admissible(mu);
  std::map<Word, int> kt, lt;
  for (const auto& w : shift.admissible_words(2)) kt[w] = lt[w] = 0;
  if (mu[0] == mu[1]) {
    Symbol a = mu[0];
    Symbol b1 = outside_predecessor(shift, a);
    kt[Word{a, a}] = 0;
    lt[Word{a, a}] = 1;
    for (Symbol b : shift.followers(a)) {
      if (b == a) continue;
      kt[Word{a, b}] = 1;
      lt[Word{a, b}] = 0;
    }
    kt[Word{b1, a}] = 2;
    lt[Word{b1, a}] = 1;
  } else {
    Symbol a = mu[0], b = mu[1];
    kt[Word{a, b}] = 0;
    lt[Word{a, b}] = 1;
    for (Symbol j : shift.followers(b)) {
      kt[Word{b, j}] = 1;
      lt[Word{b, j}] = 0;
    }
  }
  return {LCFunction<int>(shift, 2, std::move(kt)), LCFunction<int>(shift, 2, std::move(lt))};
}

PrefixExchangeTable prepend_mover(const MarkovShift& shift, const EPPoint& x, Symbol j) {
  if (!x.admissible_in(shift)) fail(Errc::Inadmissible, "point is not admissible over this shift");
  if (j < 1 || j > shift.alphabet_size() || !shift.entry(j, x.at(1)))
    fail(Errc::Inadmissible, "prepending " + std::to_string(j) + " to " + x.str(shift.alphabet_size()) +
                                 " is not admissible");
  // locate the first position where x departs from j^inf
  std::size_t k = 1;
  std::size_t horizon = x.preperiod().size() + x.period().size();
  while (k <= horizon && x.at(k) == j) ++k;
  if (k > horizon) return PrefixExchangeTable::identity(shift);  // x = j^inf
  Word mu = x.prefix(k);           // j^{k-1} i
  Word nu = concat(Word{j}, mu);   // j^k i
  std::vector<std::pair<Word, Word>> entries{{mu, nu}, {nu, mu}};
  for (const auto& w : shift.admissible_words(static_cast<int>(nu.size()))) {
    if (!is_prefix(mu, w) && w != nu) entries.push_back({w, w});
  }
  return PrefixExchangeTable::validate(shift, std::move(entries));
}

std::vector<Word> permutation_domain(const MarkovShift& shift, int p, Symbol i) {
  std::vector<Word> out;
  for (const auto& w : shift.admissible_words(p)) {
    if (shift.entry(w.back(), i)) out.push_back(w);
  }
  return out;
}

PrefixExchangeTable permutation_element(const MarkovShift& shift, int p,
                                        const std::vector<std::map<Word, Word>>& perms) {
  if (p < 1) fail(Errc::NotAPermutation, "depth p must be at least 1");
  if (perms.size() != static_cast<std::size_t>(shift.alphabet_size()))
    fail(Errc::NotAPermutation, "need one permutation per symbol");
  std::vector<std::pair<Word, Word>> entries;
  for (Symbol i = 1; i <= shift.alphabet_size(); ++i) {
    auto domain = permutation_domain(shift, p, i);
    const auto& s = perms[static_cast<std::size_t>(i - 1)];
    if (s.size() != domain.size())
      fail(Errc::NotAPermutation, "permutation for symbol " + std::to_string(i) + " has the wrong size");
    std::set<Word> image;
    for (const auto& w : domain) {
      auto it = s.find(w);
      if (it == s.end())
        fail(Errc::NotAPermutation, "word " + format_word(w, shift.alphabet_size()) + " missing from permutation");
      if (std::find(domain.begin(), domain.end(), it->second) == domain.end() || !image.insert(it->second).second)
        fail(Errc::NotAPermutation, "images do not form a permutation of the domain");
      entries.push_back({appended(w, i), appended(it->second, i)});
    }
  }
  return PrefixExchangeTable::validate(shift, std::move(entries));
}

PrefixExchangeTable block_swap_involution(const MarkovShift& shift, const Word& a, const Word& b) {
  if (a.size() != b.size() || a.empty()) fail(Errc::WordNotAdmissible, "swap words must share a positive length");
  shift.require_admissible(a);
  shift.require_admissible(b);
  std::vector<std::pair<Word, Word>> entries{{a, b}, {b, a}};
  for (const auto& w : shift.admissible_words(static_cast<int>(a.size()))) {
    if (w != a && w != b) entries.push_back({w, w});
  }
  return PrefixExchangeTable::validate(shift, std::move(entries));
}

std::pair<EPPoint, PrefixExchangeTable> orbit_witness(const MarkovShift& shift, const EPPoint& x, int k,
                                                      int l, const Word& mu) {
  if (!x.admissible_in(shift)) fail(Errc::Inadmissible, "point is not admissible over this shift");
  if (static_cast<int>(mu.size()) != k) fail(Errc::Inadmissible, "word length must equal k");
  if (!mu.empty()) shift.require_admissible(mu);
  EPPoint tail = x.shifted(static_cast<std::size_t>(l));
  if (!mu.empty() && !shift.entry(mu.back(), tail.at(1)))
    fail(Errc::Inadmissible, "target " + format_word(mu, shift.alphabet_size()) + "·sigma^" + std::to_string(l) +
                                 "(x) is not admissible");
  PrefixExchangeTable total = PrefixExchangeTable::identity(shift);
  EPPoint current = x;
  for (int step = 0; step < l; ++step) {
    auto piece = local_shift_generator(shift, current.prefix(2));
    total = piece.compose(total);
    current = piece.apply(current);
  }
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    auto piece = prepend_mover(shift, current, *it);
    total = piece.compose(total);
    current = piece.apply(current);
  }
  if (!(total.apply(x) == current)) fail(Errc::ValidationMismatch, "witness table does not reproduce the target");
  return {current, total};
}

}  // namespace mfg
