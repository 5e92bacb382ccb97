#include "justfp/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace justfp {

bool is_valid_generator_name(std::string_view name) {
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !alpha(name.front())) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Word::Word(std::span<Letter const> letters) : Word(free_reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

Word Word::generator(std::size_t g, long long exponent) {
  return power(Word{Letter::positive(g)}, exponent);
}

std::size_t Word::alphabet_bound() const noexcept {
  std::size_t bound = 0;
  for (Letter l : letters_) {
    bound = std::max(bound, l.generator() + 1);
  }
  return bound;
}

Word free_reduce(std::span<Letter const> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter l : letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  // The inverse of a reduced word is reduced.
  return free_reduce(out);
}

Word multiply(Word const& a, Word const& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(Word const& w, long long n) {
  if (n == 0 || w.empty()) {
    return {};
  }
  Word base = n > 0 ? w : invert(w);
  unsigned long long count = n > 0 ? static_cast<unsigned long long>(n)
                                   : 0ULL - static_cast<unsigned long long>(n);
  std::vector<Letter> out;
  out.reserve(base.size() * count);
  for (unsigned long long i = 0; i < count; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return free_reduce(out);
}

Word conjugate(Word const& w, Word const& g) {
  return multiply(multiply(invert(g), w), g);
}

CyclicReduction cyclic_reduction(Word const& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(letters.subspan(lo, hi - lo)), Word(letters.first(lo))};
}

Word cyclically_reduce(Word const& w) { return cyclic_reduction(w).reduced; }

long long exponent_sum(Word const& w, std::size_t generator) {
  long long sum = 0;
  for (Letter l : w) {
    if (l.generator() == generator) {
      sum += l.sign();
    }
  }
  return sum;
}

std::string format_word(Word const& w, std::span<std::string const> names) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    if (letters[i].generator() >= names.size()) {
      throw std::out_of_range("format_word: generator index " +
                              std::to_string(letters[i].generator()) +
                              " has no name");
    }
    long long exponent = static_cast<long long>(j - i) * letters[i].sign();
    if (!out.empty()) {
      out += '*';
    }
    out += names[letters[i].generator()];
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

}  // namespace justfp
