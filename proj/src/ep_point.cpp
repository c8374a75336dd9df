#include "mfg/ep_point.hpp"

#include <set>

#include "mfg/error.hpp"

namespace mfg {

EPPoint::EPPoint(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) fail(Errc::Inadmissible, "point needs a nonempty period");
  per_ = primitive_root(per_);
  // absorb preperiod symbols that already match the periodic tail
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    per_ = rotated_right(per_);
  }
}

EPPoint EPPoint::checked(const MarkovShift& shift, Word preperiod, Word period) {
  EPPoint p(std::move(preperiod), std::move(period));
  if (!p.admissible_in(shift))
    fail(Errc::Inadmissible, "point " + p.str(shift.alphabet_size()) + " is not admissible");
  return p;
}

Symbol EPPoint::at(std::size_t i) const {
  if (i <= pre_.size()) return pre_[i - 1];
  return per_[(i - pre_.size() - 1) % per_.size()];
}

Word EPPoint::prefix(std::size_t len) const {
  Word out;
  out.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) out.push_back(at(i));
  return out;
}

EPPoint EPPoint::shifted(std::size_t k) const {
  if (k == 0) return *this;
  if (k <= pre_.size()) return EPPoint(Word(pre_.begin() + static_cast<long>(k), pre_.end()), per_);
  std::size_t r = (k - pre_.size()) % per_.size();
  return EPPoint(Word{}, rotated_left(per_, r));
}

EPPoint EPPoint::prepended(const Word& w) const { return EPPoint(concat(w, pre_), per_); }

bool EPPoint::admissible_in(const MarkovShift& shift) const {
  std::size_t span = pre_.size() + per_.size();
  for (std::size_t i = 1; i <= span; ++i) {
    Symbol a = at(i), b = at(i + 1);
    if (a < 1 || a > shift.alphabet_size() || b < 1 || b > shift.alphabet_size()) return false;
    if (!shift.entry(a, b)) return false;
  }
  return true;
}

std::string EPPoint::str(int alphabet_size) const {
  return format_word(pre_, alphabet_size) + "|" + format_word(per_, alphabet_size);
}

bool point_has_prefix(const EPPoint& p, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (p.at(i + 1) != w[i]) return false;
  }
  return true;
}

EPPoint parse_point(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) fail(Errc::ParseError, "point '" + s + "' must use pre|per syntax");
  Word pre = parse_word(s.substr(0, bar));
  Word per = parse_word(s.substr(bar + 1));
  if (per.empty()) fail(Errc::ParseError, "point '" + s + "' has an empty period");
  return EPPoint(std::move(pre), std::move(per));
}

std::vector<EPPoint> enumerate_points(const MarkovShift& shift, int max_preperiod, int max_period) {
  std::set<EPPoint> out;
  for (int q = 1; q <= max_period; ++q) {
    for (const auto& per : shift.admissible_words(q)) {
      if (!shift.entry(per.back(), per.front())) continue;
      for (int p = 0; p <= max_preperiod; ++p) {
        for (const auto& pre : shift.admissible_words(p)) {
          if (!pre.empty() && !shift.entry(pre.back(), per.front())) continue;
          out.emplace(pre, per);
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace mfg
