#include "fpa/words.hpp"

namespace fpa {

std::vector<Word> enumerate_words(const Alphabet& a, int n) {
  if (n < 0) throw DomainError("enumerate_words requires n >= 0");
  std::vector<Word> out;
  if (n == 0) {
    out.push_back(Word::empty());
    return out;
  }
  const int base = a.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(base);
  out.reserve(total);
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(digits);
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] ==
                           static_cast<std::uint8_t>(base - 1)) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<Word> enumerate_words_upto(const Alphabet& a, int n) {
  std::vector<Word> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_words(a, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace fpa
