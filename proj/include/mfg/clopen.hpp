#pragma once

#include <set>

#include "mfg/ep_point.hpp"
#include "mfg/markov_shift.hpp"

namespace mfg {

/// Clopen subset of the shift space, represented at a single uniform depth
/// as a set of admissible words of that length.
class ClopenSet {
 public:
  ClopenSet(MarkovShift shift, int depth, std::set<Word> words);

  static ClopenSet cylinder(const MarkovShift& shift, const Word& w);
  static ClopenSet whole_space(const MarkovShift& shift, int depth);
  static ClopenSet empty_set(const MarkovShift& shift, int depth);

  const MarkovShift& shift() const { return shift_; }
  int depth() const { return depth_; }
  const std::set<Word>& words() const { return words_; }

  ClopenSet refined_to(int depth) const;
  ClopenSet complement() const;
  bool contains(const EPPoint& p) const;
  bool is_whole() const;
  bool is_empty() const { return words_.empty(); }

  friend ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
  friend ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
  friend bool operator==(const ClopenSet& a, const ClopenSet& b);

 private:
  MarkovShift shift_;
  int depth_;
  std::set<Word> words_;
};

}  // namespace mfg
