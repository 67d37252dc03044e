#ifndef FPA_WORDS_HPP
#define FPA_WORDS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fpa/errors.hpp"

namespace fpa {

// Alphabet X = {x0, x1, ..., xm}: m input letters plus the drift letter x0.
struct Alphabet {
  int m = 1;

  Alphabet() = default;
  explicit Alphabet(int m_) : m(m_) {
    if (m < 0) throw DomainError("alphabet requires m >= 0");
  }
  int size() const { return m + 1; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Word over X, stored as letter indices.  The empty word is the monoid unit.
// Ordering is length-then-lexicographic, which fixes iteration and
// serialization order everywhere.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters)
      : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) letters_.push_back(static_cast<std::uint8_t>(l));
  }

  static Word empty() { return Word(); }
  static Word letter(int i) { return Word({i}); }
  // x0^k
  static Word x0_power(int k) {
    return Word(std::vector<std::uint8_t>(static_cast<std::size_t>(k), 0));
  }

  int length() const { return static_cast<int>(letters_.size()); }
  bool is_empty() const { return letters_.empty(); }
  std::uint8_t at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  // |w|_{x_i}
  int count(int letter) const {
    int n = 0;
    for (auto l : letters_)
      if (l == letter) ++n;
    return n;
  }

  bool fits(const Alphabet& a) const {
    for (auto l : letters_)
      if (l > a.m) return false;
    return true;
  }

  Word concat(const Word& rhs) const {
    std::vector<std::uint8_t> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
  }

  Word prepend(int letter) const {
    std::vector<std::uint8_t> out;
    out.reserve(letters_.size() + 1);
    out.push_back(static_cast<std::uint8_t>(letter));
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
  }

  // suffix dropping the first k letters
  Word suffix(int k) const {
    return Word(std::vector<std::uint8_t>(letters_.begin() + k, letters_.end()));
  }

  bool is_x0_power() const {
    for (auto l : letters_)
      if (l != 0) return false;
    return true;
  }

  // length of the maximal x0^k prefix
  int x0_prefix_length() const {
    int n = 0;
    for (auto l : letters_) {
      if (l != 0) break;
      ++n;
    }
    return n;
  }

  // length-lex order
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }
  friend bool operator==(const Word&, const Word&) = default;

  // "x0x1x0" with "e" for the empty word
  std::string str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (auto l : letters_) {
      s += 'x';
      s += std::to_string(static_cast<int>(l));
    }
    return s;
  }

 private:
  std::vector<std::uint8_t> letters_;
};

// All (m+1)^n words of length exactly n, lexicographic.
std::vector<Word> enumerate_words(const Alphabet& a, int n);

// All words of length <= n, length-lex.
std::vector<Word> enumerate_words_upto(const Alphabet& a, int n);

}  // namespace fpa

#endif
