#include "growthlab/word.hpp"

#include <cctype>
#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (l == 0) throw DomainError("zero letter in word");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(cat));
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l = static_cast<Letter>(-l);
  Word w;
  w.letters_ = std::move(inv);  // already reduced
  return w;
}

int Word::common_prefix(const Word& other) const {
  int n = 0;
  int m = std::min(length(), other.length());
  while (n < m && letters_[n] == other.letters_[n]) ++n;
  return n;
}

Word Word::prefix(int n) const {
  Word w;
  w.letters_.assign(letters_.begin(), letters_.begin() + n);
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (Letter l : letters_) {
    int idx = l > 0 ? l : -l;
    char c = static_cast<char>('a' + idx - 1);
    if (l > 0) {
      out.push_back(c);
    } else {
      out.push_back(static_cast<char>(std::toupper(c)));
    }
  }
  return out;
}

Word Word::parse(const std::string& text, int rank) {
  std::vector<Letter> letters;
  const std::string& s = text;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 'e' || c == '1') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw UsageError("cannot parse word '" + text + "' at '" + c + "'");
    }
    bool upper = std::isupper(static_cast<unsigned char>(c));
    int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    if (idx < 1 || idx > rank) {
      throw UsageError("generator '" + std::string(1, c) + "' out of range for rank " +
                       std::to_string(rank));
    }
    ++i;
    int exponent = upper ? -1 : 1;
    if (i < s.size() && (s[i] == '^' || s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i])))) {
      std::size_t j = i;
      if (s[j] == '^') ++j;
      bool neg = false;
      if (j < s.size() && s[j] == '-') {
        neg = true;
        ++j;
      }
      std::size_t k = j;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k > j) {
        int mag = std::stoi(s.substr(j, k - j));
        exponent *= neg ? -mag : mag;
        i = k;
      } else if (s[i] == '^') {
        throw UsageError("dangling '^' in word '" + text + "'");
      }
    }
    Letter base = static_cast<Letter>(exponent >= 0 ? idx : -idx);
    for (int r = 0; r < std::abs(exponent); ++r) letters.push_back(base);
  }
  return Word(letters);
}

}  // namespace growthlab
