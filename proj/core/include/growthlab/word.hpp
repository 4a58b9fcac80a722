#ifndef GROWTHLAB_WORD_HPP
#define GROWTHLAB_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace growthlab {

// A letter is a nonzero signed generator index: +i is the i-th generator
// (1-based), -i its inverse. Words are kept freely reduced at all times.
using Letter = std::int8_t;

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  static Word identity() { return Word(); }
  // Parses "a", "aB", "b^-1", "a b a^-1", "a2" (a then generator 2 is
  // written by index only for ranks > 26 which we never need here).
  static Word parse(const std::string& text, int rank);

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word operator*(const Word& other) const;
  Word inverse() const;
  bool operator==(const Word& other) const { return letters_ == other.letters_; }
  bool operator!=(const Word& other) const { return !(*this == other); }
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

  // longest common prefix length with another reduced word
  int common_prefix(const Word& other) const;
  Word prefix(int n) const;

  std::string str() const;  // "a b^-1 c" style

private:
  std::vector<Letter> letters_;
};

inline Letter letter_inverse(Letter l) { return static_cast<Letter>(-l); }

std::vector<Letter> free_reduce(const std::vector<Letter>& in);

}  // namespace growthlab

#endif
