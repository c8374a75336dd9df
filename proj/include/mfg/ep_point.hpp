#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mfg/markov_shift.hpp"
#include "mfg/word.hpp"

namespace mfg {

/// Eventually periodic point u·w^inf of a shift space, kept in canonical
/// form: the period is primitive and the preperiod is shortest (no trailing
/// symbol of the preperiod can be absorbed into a rotation of the period).
/// Equality of canonical forms is equality of the underlying sequences.
class EPPoint {
 public:
  EPPoint(Word preperiod, Word period);

  /// Constructs and checks admissibility of every transition, including the
  /// preperiod-period junction and the period wrap-around.
  static EPPoint checked(const MarkovShift& shift, Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  Symbol at(std::size_t i) const;  // 1-based position
  Word prefix(std::size_t len) const;
  EPPoint shifted(std::size_t k = 1) const;
  EPPoint prepended(const Word& w) const;
  bool admissible_in(const MarkovShift& shift) const;

  std::string str(int alphabet_size = 9) const;

  friend bool operator==(const EPPoint&, const EPPoint&) = default;
  friend std::strong_ordering operator<=>(const EPPoint&, const EPPoint&) = default;

 private:
  Word pre_, per_;
};

bool point_has_prefix(const EPPoint& p, const Word& w);

/// "pre|per" syntax, e.g. "21|1"; "|1" denotes 1^inf.
EPPoint parse_point(const std::string& s);

/// All canonical points with |preperiod| <= max_preperiod and
/// |period| <= max_period, sorted and deduplicated.
std::vector<EPPoint> enumerate_points(const MarkovShift& shift, int max_preperiod, int max_period);

}  // namespace mfg
