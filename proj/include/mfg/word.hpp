#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mfg {

using Symbol = int;                // symbols are 1-based
using Word = std::vector<Symbol>;  // possibly empty

Word concat(const Word& a, const Word& b);
Word appended(Word w, Symbol j);
Word rotated_left(const Word& w, std::size_t k = 1);
Word rotated_right(const Word& w);
bool is_prefix(const Word& p, const Word& w);

/// Shortest word v with w = v^k.
Word primitive_root(const Word& w);

/// Sorted intersection of two sorted symbol lists.
std::vector<Symbol> intersect_sorted(const std::vector<Symbol>& a, const std::vector<Symbol>& b);

std::string format_word(const Word& w, int alphabet_size = 9);
Word parse_word(const std::string& s);

}  // namespace mfg
