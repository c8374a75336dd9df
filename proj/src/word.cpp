#include "mfg/word.hpp"

#include <algorithm>
#include <sstream>

#include "mfg/error.hpp"

namespace mfg {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word appended(Word w, Symbol j) {
  w.push_back(j);
  return w;
}

Word rotated_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

Word rotated_right(const Word& w) {
  if (w.empty()) return w;
  Word out;
  out.reserve(w.size());
  out.push_back(w.back());
  out.insert(out.end(), w.begin(), w.end() - 1);
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word primitive_root(const Word& w) {
  for (std::size_t p = 1; p <= w.size() / 2; ++p) {
    if (w.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < w.size(); ++i) {
      if (w[i] != w[i - p]) {
        periodic = false;
        break;
      }
    }
    if (periodic) return Word(w.begin(), w.begin() + static_cast<long>(p));
  }
  return w;
}

std::vector<Symbol> intersect_sorted(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  std::vector<Symbol> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string format_word(const Word& w, int alphabet_size) {
  std::ostringstream os;
  if (alphabet_size <= 9) {
    for (Symbol s : w) os << s;
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ',';
      os << w[i];
    }
  }
  return os.str();
}

Word parse_word(const std::string& s) {
  Word out;
  if (s.empty()) return out;
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
      try {
        out.push_back(std::stoi(part));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad symbol '" + part + "' in word '" + s + "'");
      }
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') fail(Errc::ParseError, std::string("bad symbol '") + c + "' in word '" + s + "'");
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace mfg
