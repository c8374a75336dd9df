#pragma once

#include <map>
#include <optional>

#include "mfg/ep_point.hpp"
#include "mfg/error.hpp"
#include "mfg/markov_shift.hpp"

namespace mfg {

/// Locally constant function on the shift space: a total table on the
/// admissible words of one fixed depth. canonical() merges sibling cylinders
/// with equal value down to the minimal uniform depth.
template <class V>
class LCFunction {
 public:
  LCFunction(MarkovShift shift, int depth, std::map<Word, V> table)
      : shift_(std::move(shift)), depth_(depth), table_(std::move(table)) {
    for (const auto& w : shift_.admissible_words(depth_)) {
      if (!table_.count(w)) fail(Errc::ParseError, "table not total at word " + format_word(w, shift_.alphabet_size()));
    }
    if (table_.size() != shift_.word_count(depth_)) fail(Errc::ParseError, "table has extraneous words");
  }

  static LCFunction constant(const MarkovShift& shift, V value) {
    return LCFunction(shift, 0, std::map<Word, V>{{Word{}, value}});
  }

  const MarkovShift& shift() const { return shift_; }
  int depth() const { return depth_; }
  const std::map<Word, V>& table() const { return table_; }

  /// Value on the cylinder of w; |w| must be >= depth.
  const V& at_word(const Word& w) const {
    if (w.size() == static_cast<std::size_t>(depth_)) return table_.at(w);
    return table_.at(Word(w.begin(), w.begin() + depth_));
  }

  const V& operator()(const EPPoint& p) const { return table_.at(p.prefix(depth_)); }

  LCFunction refined(int depth) const {
    LCFunction out = *this;
    while (out.depth_ < depth) {
      std::map<Word, V> next;
      for (const auto& [w, v] : out.table_)
        for (Symbol j : shift_.followers_after(w)) next.emplace(appended(w, j), v);
      out.table_ = std::move(next);
      ++out.depth_;
    }
    return out;
  }

  LCFunction canonical() const {
    LCFunction out = *this;
    while (out.depth_ > 0) {
      std::map<Word, V> down;
      bool mergeable = true;
      for (const auto& w : shift_.admissible_words(out.depth_ - 1)) {
        std::optional<V> v;
        for (Symbol j : shift_.followers_after(w)) {
          const V& val = out.table_.at(appended(w, j));
          if (!v) {
            v = val;
          } else if (*v != val) {
            mergeable = false;
            break;
          }
        }
        if (!mergeable) break;
        down.emplace(w, *v);
      }
      if (!mergeable) break;
      out.table_ = std::move(down);
      --out.depth_;
    }
    return out;
  }

  friend bool operator==(const LCFunction& a, const LCFunction& b) {
    if (!(a.shift_ == b.shift_)) return false;
    int d = std::max(a.depth_, b.depth_);
    return a.refined(d).table_ == b.refined(d).table_;
  }

 private:
  MarkovShift shift_;
  int depth_;
  std::map<Word, V> table_;
};

}  // namespace mfg
