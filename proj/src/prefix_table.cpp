#include "mfg/prefix_table.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mfg/error.hpp"

namespace mfg {

namespace {

bool subset_sorted(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_side_partition(const MarkovShift& shift, const std::vector<std::pair<Word, Word>>& entries,
                          bool domain) {
  std::size_t depth = 0;
  for (const auto& e : entries) depth = std::max(depth, (domain ? e.first : e.second).size());
  std::set<Word> seen;
  std::size_t total = 0;
  Errc code = domain ? Errc::DomainNotPartition : Errc::RangeNotPartition;
  for (const auto& e : entries) {
    const Word& w = domain ? e.first : e.second;
    for (const auto& ext : shift.extensions(w, depth)) {
      if (!seen.insert(ext).second)
        fail(code, "cylinders overlap at " + format_word(ext, shift.alphabet_size()));
      ++total;
    }
  }
  if (total != shift.word_count(static_cast<int>(depth))) fail(code, "cylinders do not cover the shift space");
}

// Merge sibling entries (mu j, nu j), j ranging over the full follower row,
// down to (mu, nu); only done when the stem rows agree, so the merged entry
// stays row-canonical.
void merge_siblings(const MarkovShift& shift, std::vector<std::pair<Word, Word>>& entries) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Word, Word>, std::set<Symbol>> stems;
    for (const auto& [mu, nu] : entries) {
      if (mu.size() >= 2 && nu.size() >= 2 && mu.back() == nu.back()) {
        stems[{Word(mu.begin(), mu.end() - 1), Word(nu.begin(), nu.end() - 1)}].insert(mu.back());
      }
    }
    for (const auto& [stem, js] : stems) {
      const Word& smu = stem.first;
      const Word& snu = stem.second;
      const auto& row_mu = shift.followers(smu.back());
      if (row_mu != shift.followers(snu.back())) continue;
      if (js.size() != row_mu.size()) continue;
      std::erase_if(entries, [&](const std::pair<Word, Word>& e) {
        return e.first.size() == smu.size() + 1 && e.second.size() == snu.size() + 1 &&
               is_prefix(smu, e.first) && is_prefix(snu, e.second) && e.first.back() == e.second.back();
      });
      entries.push_back(stem);
      changed = true;
      break;
    }
  }
  std::sort(entries.begin(), entries.end());
}

}  // namespace

PrefixExchangeTable PrefixExchangeTable::validate(const MarkovShift& shift,
                                                  std::vector<std::pair<Word, Word>> raw) {
  if (raw.empty()) fail(Errc::DomainNotPartition, "table has no entries");
  for (const auto& [mu, nu] : raw) {
    if (mu.empty() || nu.empty()) fail(Errc::EmptyWordEntry, "entries must use nonempty words");
    shift.require_admissible(mu);
    shift.require_admissible(nu);
  }
  // refine each entry until the end rows agree; a single split suffices
  std::vector<std::pair<Word, Word>> entries;
  for (const auto& [mu, nu] : raw) {
    const auto& row_mu = shift.followers(mu.back());
    const auto& row_nu = shift.followers(nu.back());
    if (row_mu == row_nu) {
      entries.emplace_back(mu, nu);
    } else if (subset_sorted(row_mu, row_nu)) {
      for (Symbol j : row_mu) entries.emplace_back(appended(mu, j), appended(nu, j));
    } else {
      fail(Errc::SuffixMapNotIntoShift, "suffixes after " + format_word(mu, shift.alphabet_size()) +
                                            " are not admissible after " + format_word(nu, shift.alphabet_size()));
    }
  }
  check_side_partition(shift, entries, true);
  check_side_partition(shift, entries, false);
  merge_siblings(shift, entries);
  return PrefixExchangeTable(shift, std::move(entries));
}

PrefixExchangeTable PrefixExchangeTable::identity(const MarkovShift& shift) {
  std::vector<std::pair<Word, Word>> entries;
  for (int j = 1; j <= shift.alphabet_size(); ++j) entries.push_back({Word{j}, Word{j}});
  return validate(shift, std::move(entries));
}

EPPoint PrefixExchangeTable::apply(const EPPoint& p) const {
  for (const auto& [mu, nu] : entries_) {
    if (point_has_prefix(p, mu)) return p.shifted(mu.size()).prepended(nu);
  }
  fail(Errc::Inadmissible, "point " + p.str(shift_.alphabet_size()) + " is not admissible over this table's shift");
}

PrefixExchangeTable PrefixExchangeTable::compose(const PrefixExchangeTable& inner) const {
  require_same_shift(shift_, inner.shift_);
  std::vector<std::pair<Word, Word>> out;
  for (const auto& [mu, nu] : inner.entries_) {
    for (const auto& [mu2, nu2] : entries_) {
      if (is_prefix(nu, mu2)) {
        // mu2 = nu·w: x = mu w z -> nu w z -> nu2 z
        Word w(mu2.begin() + static_cast<long>(nu.size()), mu2.end());
        Word dom = concat(mu, w);
        if (!shift_.word_admissible(dom)) continue;
        out.emplace_back(std::move(dom), nu2);
      } else if (is_prefix(mu2, nu)) {
        // nu = mu2·w: x = mu z -> mu2 w z -> nu2 w z
        Word w(nu.begin() + static_cast<long>(mu2.size()), nu.end());
        Word ran = concat(nu2, w);
        if (!shift_.word_admissible(ran)) continue;
        out.emplace_back(mu, std::move(ran));
      }
    }
  }
  return validate(shift_, std::move(out));
}

PrefixExchangeTable PrefixExchangeTable::inverse() const {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(entries_.size());
  for (const auto& [mu, nu] : entries_) out.emplace_back(nu, mu);
  return validate(shift_, std::move(out));
}

CocyclePair PrefixExchangeTable::cocycles() const {
  int depth = domain_depth();
  std::map<Word, int> kt, lt;
  for (const auto& w : shift_.admissible_words(depth)) {
    for (const auto& [mu, nu] : entries_) {
      if (is_prefix(mu, w)) {
        kt[w] = static_cast<int>(nu.size());
        lt[w] = static_cast<int>(mu.size());
        break;
      }
    }
  }
  return {LCFunction<int>(shift_, depth, std::move(kt)), LCFunction<int>(shift_, depth, std::move(lt))};
}

bool PrefixExchangeTable::is_af() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.first.size() == e.second.size(); });
}

int PrefixExchangeTable::domain_depth() const {
  std::size_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.first.size());
  return static_cast<int>(d);
}

int PrefixExchangeTable::range_depth() const {
  std::size_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.second.size());
  return static_cast<int>(d);
}

std::vector<std::pair<Word, Word>> PrefixExchangeTable::refined_entries(std::size_t domain_len) const {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& [mu, nu] : entries_) {
    for (const auto& ext : shift_.extensions(mu, domain_len)) {
      Word suffix(ext.begin() + static_cast<long>(mu.size()), ext.end());
      out.emplace_back(ext, concat(nu, suffix));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const PrefixExchangeTable& a, const PrefixExchangeTable& b) {
  if (!(a.shift_ == b.shift_)) return false;
  std::size_t d = static_cast<std::size_t>(std::max(a.domain_depth(), b.domain_depth()));
  return a.refined_entries(d) == b.refined_entries(d);
}

}  // namespace mfg
