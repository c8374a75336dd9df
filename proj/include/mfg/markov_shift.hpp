#pragma once

#include <cstddef>
#include <vector>

#include "mfg/word.hpp"

namespace mfg {

/// Validated 0-1 transition matrix of a one-sided topological Markov shift.
///
/// Matrices must be essential (no zero row or column) so that every symbol
/// occurs in the shift space. Whether the matrix and its transpose satisfy
/// condition (I) — no isolated points, i.e. no symbol from which the future
/// is forced forever — is computed once and cached.
class MarkovShift {
 public:
  static MarkovShift validate(const std::vector<std::vector<int>>& rows);

  int alphabet_size() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool entry(Symbol i, Symbol j) const { return rows_[i - 1][j - 1] != 0; }

  /// Symbols j with A(i,j) = 1, sorted.
  const std::vector<Symbol>& followers(Symbol i) const { return followers_[i - 1]; }
  /// Followers of the last symbol of w; the whole alphabet for the empty word.
  const std::vector<Symbol>& followers_after(const Word& w) const {
    return w.empty() ? all_symbols_ : followers_[w.back() - 1];
  }

  bool word_admissible(const Word& w) const;
  void require_admissible(const Word& w) const;

  /// All admissible words of length k; {empty word} for k = 0.
  std::vector<Word> admissible_words(int k) const;
  /// Admissible extensions of w to the given length (>= |w|).
  std::vector<Word> extensions(const Word& w, std::size_t target_len) const;
  std::size_t word_count(int k) const;

  bool satisfies_condition_I() const { return cond_I_; }
  bool transpose_satisfies_condition_I() const { return cond_I_t_; }
  MarkovShift transposed() const;

  friend bool operator==(const MarkovShift& a, const MarkovShift& b) { return a.rows_ == b.rows_; }

 private:
  MarkovShift(int n, std::vector<std::vector<int>> rows);

  int n_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<Symbol>> followers_;
  std::vector<Symbol> all_symbols_;
  bool cond_I_ = false;
  bool cond_I_t_ = false;
};

/// The full shift on n symbols (all transitions allowed).
MarkovShift full_shift(int n);
/// The golden-mean shift: [[1,1],[1,0]], the word 22 forbidden.
MarkovShift golden_mean_shift();

void require_same_shift(const MarkovShift& a, const MarkovShift& b);

}  // namespace mfg
