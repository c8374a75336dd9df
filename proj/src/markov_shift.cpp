#include "mfg/markov_shift.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "mfg/error.hpp"

namespace mfg {

namespace {

// Condition (I) for an essential matrix: the shift space has no isolated
// point iff no symbol i exists such that every symbol reachable from i
// (including i itself) has out-degree exactly one.
bool condition_I(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> outdeg(n, 0);
  for (int i = 0; i < n; ++i) outdeg[i] = std::accumulate(rows[i].begin(), rows[i].end(), 0);
  for (int start = 0; start < n; ++start) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    bool forced = true;
    while (!q.empty() && forced) {
      int i = q.front();
      q.pop();
      if (outdeg[i] != 1) {
        forced = false;
        break;
      }
      for (int j = 0; j < n; ++j) {
        if (rows[i][j] && !seen[j]) {
          seen[j] = 1;
          q.push(j);
        }
      }
    }
    if (forced) return false;
  }
  return true;
}

std::vector<std::vector<int>> transpose_rows(const std::vector<std::vector<int>>& rows) {
  std::size_t n = rows.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows[i][j];
  return t;
}

}  // namespace

MarkovShift::MarkovShift(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
  followers_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (rows_[i][j]) followers_[i].push_back(j + 1);
    }
  }
  all_symbols_.resize(n_);
  for (int i = 0; i < n_; ++i) all_symbols_[i] = i + 1;
  cond_I_ = condition_I(rows_);
  cond_I_t_ = condition_I(transpose_rows(rows_));
}

MarkovShift MarkovShift::validate(const std::vector<std::vector<int>>& rows) {
  std::size_t n = rows.size();
  if (n < 2) fail(Errc::NonSquare, "matrix must be at least 2 x 2");
  for (const auto& row : rows) {
    if (row.size() != n) fail(Errc::NonSquare, "matrix rows of unequal length");
  }
  for (const auto& row : rows) {
    for (int v : row) {
      if (v != 0 && v != 1) fail(Errc::NonBinaryEntry, "entry " + std::to_string(v) + " is not 0 or 1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::accumulate(rows[i].begin(), rows[i].end(), 0) == 0)
      fail(Errc::ZeroRowOrColumn, "row " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t j = 0; j < n; ++j) {
    int col = 0;
    for (std::size_t i = 0; i < n; ++i) col += rows[i][j];
    if (col == 0) fail(Errc::ZeroRowOrColumn, "column " + std::to_string(j + 1) + " is zero");
  }
  return MarkovShift(static_cast<int>(n), rows);
}

bool MarkovShift::word_admissible(const Word& w) const {
  for (Symbol s : w) {
    if (s < 1 || s > n_) return false;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!entry(w[i], w[i + 1])) return false;
  }
  return true;
}

void MarkovShift::require_admissible(const Word& w) const {
  if (!word_admissible(w)) fail(Errc::WordNotAdmissible, "word " + format_word(w, n_) + " is not admissible");
}

std::vector<Word> MarkovShift::admissible_words(int k) const {
  std::vector<Word> cur{Word{}};
  for (int step = 0; step < k; ++step) {
    std::vector<Word> next;
    next.reserve(cur.size() * static_cast<std::size_t>(n_));
    for (const auto& w : cur) {
      for (Symbol j : followers_after(w)) next.push_back(appended(w, j));
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Word> MarkovShift::extensions(const Word& w, std::size_t target_len) const {
  std::vector<Word> cur{w};
  while (!cur.empty() && cur.front().size() < target_len) {
    std::vector<Word> next;
    for (const auto& u : cur) {
      for (Symbol j : followers_after(u)) next.push_back(appended(u, j));
    }
    cur = std::move(next);
  }
  return cur;
}

std::size_t MarkovShift::word_count(int k) const {
  if (k == 0) return 1;
  std::vector<std::size_t> cnt(static_cast<std::size_t>(n_), 1);  // words of length 1 ending at each symbol
  for (int step = 1; step < k; ++step) {
    std::vector<std::size_t> next(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (Symbol j : followers_[i]) next[static_cast<std::size_t>(j - 1)] += cnt[static_cast<std::size_t>(i)];
    }
    cnt = std::move(next);
  }
  return std::accumulate(cnt.begin(), cnt.end(), std::size_t{0});
}

MarkovShift MarkovShift::transposed() const { return MarkovShift(n_, transpose_rows(rows_)); }

MarkovShift full_shift(int n) {
  return MarkovShift::validate(std::vector<std::vector<int>>(static_cast<std::size_t>(n),
                                                             std::vector<int>(static_cast<std::size_t>(n), 1)));
}

MarkovShift golden_mean_shift() { return MarkovShift::validate({{1, 1}, {1, 0}}); }

void require_same_shift(const MarkovShift& a, const MarkovShift& b) {
  if (!(a == b)) fail(Errc::ShiftMismatch, "operands live over different shifts");
}

}  // namespace mfg
