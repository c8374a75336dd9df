#include "mfg/clopen.hpp"

#include <algorithm>

#include "mfg/error.hpp"

namespace mfg {

ClopenSet::ClopenSet(MarkovShift shift, int depth, std::set<Word> words)
    : shift_(std::move(shift)), depth_(depth), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.size() != static_cast<std::size_t>(depth_))
      fail(Errc::ParseError, "member word " + format_word(w, shift_.alphabet_size()) + " has the wrong length");
    shift_.require_admissible(w);
  }
}

ClopenSet ClopenSet::cylinder(const MarkovShift& shift, const Word& w) {
  shift.require_admissible(w);
  return ClopenSet(shift, static_cast<int>(w.size()), {w});
}

ClopenSet ClopenSet::whole_space(const MarkovShift& shift, int depth) {
  auto words = shift.admissible_words(depth);
  return ClopenSet(shift, depth, std::set<Word>(words.begin(), words.end()));
}

ClopenSet ClopenSet::empty_set(const MarkovShift& shift, int depth) { return ClopenSet(shift, depth, {}); }

ClopenSet ClopenSet::refined_to(int depth) const {
  if (depth < depth_) fail(Errc::ParseError, "cannot refine to a smaller depth");
  std::set<Word> out;
  for (const auto& w : words_) {
    for (const auto& ext : shift_.extensions(w, static_cast<std::size_t>(depth))) out.insert(ext);
  }
  return ClopenSet(shift_, depth, std::move(out));
}

ClopenSet ClopenSet::complement() const {
  std::set<Word> out;
  for (const auto& w : shift_.admissible_words(depth_)) {
    if (!words_.count(w)) out.insert(w);
  }
  return ClopenSet(shift_, depth_, std::move(out));
}

bool ClopenSet::contains(const EPPoint& p) const {
  if (!p.admissible_in(shift_)) fail(Errc::ShiftMismatch, "point is not admissible over this set's shift");
  return words_.count(p.prefix(static_cast<std::size_t>(depth_))) != 0;
}

bool ClopenSet::is_whole() const { return words_.size() == shift_.word_count(depth_); }

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  require_same_shift(a.shift_, b.shift_);
  int d = std::max(a.depth_, b.depth_);
  ClopenSet ra = a.refined_to(d), rb = b.refined_to(d);
  std::set<Word> out = ra.words_;
  out.insert(rb.words_.begin(), rb.words_.end());
  return ClopenSet(a.shift_, d, std::move(out));
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  require_same_shift(a.shift_, b.shift_);
  int d = std::max(a.depth_, b.depth_);
  ClopenSet ra = a.refined_to(d), rb = b.refined_to(d);
  std::set<Word> out;
  std::set_intersection(ra.words_.begin(), ra.words_.end(), rb.words_.begin(), rb.words_.end(),
                        std::inserter(out, out.begin()));
  return ClopenSet(a.shift_, d, std::move(out));
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
  if (!(a.shift_ == b.shift_)) return false;
  int d = std::max(a.depth_, b.depth_);
  return a.refined_to(d).words_ == b.refined_to(d).words_;
}

}  // namespace mfg
