#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace justfp {

// A generator of a presentation's alphabet. `index` is the position in the
// alphabet; `name` matches [A-Za-z][A-Za-z0-9_]*.
struct GeneratorId {
  std::size_t index = 0;
  std::string name;

  friend bool operator==(GeneratorId const&, GeneratorId const&) = default;
};

bool is_valid_generator_name(std::string_view name);

// A generator or its inverse.
class Letter {
 public:
  constexpr Letter(std::size_t generator, int sign) noexcept
      : generator_(generator), inverse_(sign < 0) {}

  static constexpr Letter positive(std::size_t generator) noexcept {
    return Letter(generator, 1);
  }
  static constexpr Letter negative(std::size_t generator) noexcept {
    return Letter(generator, -1);
  }

  constexpr std::size_t generator() const noexcept { return generator_; }
  constexpr int sign() const noexcept { return inverse_ ? -1 : 1; }
  constexpr bool is_inverse() const noexcept { return inverse_; }
  constexpr Letter inverse() const noexcept {
    return Letter(generator_, inverse_ ? 1 : -1);
  }

  // Column of this letter in a coset table: 2g for g, 2g+1 for g^-1.
  constexpr std::size_t column() const noexcept {
    return 2 * generator_ + (inverse_ ? 1 : 0);
  }
  static constexpr Letter from_column(std::size_t column) noexcept {
    return Letter(column / 2, (column % 2) == 0 ? 1 : -1);
  }

  constexpr bool cancels(Letter other) const noexcept {
    return generator_ == other.generator_ && inverse_ != other.inverse_;
  }

  friend constexpr bool operator==(Letter, Letter) noexcept = default;
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
    return a.column() <=> b.column();
  }

 private:
  std::size_t generator_;
  bool inverse_;
};

// An element of a free group, always stored freely reduced.  The empty word
// is the identity.
class Word {
 public:
  Word() = default;

  // Freely reduces `letters`.
  explicit Word(std::span<Letter const> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::size_t g, long long exponent = 1);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Largest generator index used, plus one (0 for the identity).
  std::size_t alphabet_bound() const noexcept;

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& a, Word const& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend Word free_reduce(std::span<Letter const>);

  std::vector<Letter> letters_;
};

// Single left-to-right pass with an output stack.
Word free_reduce(std::span<Letter const> letters);

Word invert(Word const& w);
Word multiply(Word const& a, Word const& b);
Word power(Word const& w, long long n);

// g^-1 * w * g
Word conjugate(Word const& w, Word const& g);

struct CyclicReduction {
  Word reduced;
  // w == conjugator * reduced * conjugator^-1
  Word conjugator;
};

CyclicReduction cyclic_reduction(Word const& w);
Word cyclically_reduce(Word const& w);

long long exponent_sum(Word const& w, std::size_t generator);

// Renders with `names[g]` for generator g, in the canonical .fp form:
// runs collapse to powers, factors are separated by '*', identity is "1".
std::string format_word(Word const& w, std::span<std::string const> names);

}  // namespace justfp
