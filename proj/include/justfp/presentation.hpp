#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "justfp/word.hpp"

namespace justfp {

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// <X | R>: an ordered generator list and an ordered relator list.  Relators
// are freely reduced and never empty; every letter references a declared
// generator.  Duplicated relators are allowed.
class Presentation {
 public:
  Presentation() = default;

  // Throws PresentationError when an invariant fails.
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }

  std::span<std::string const> generator_names() const noexcept {
    return names_;
  }
  std::vector<GeneratorId> generators() const;
  GeneratorId generator(std::size_t index) const;
  std::string const& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> find_generator(std::string_view name) const;

  std::span<Word const> relators() const noexcept { return relators_; }
  Word const& relator(std::size_t i) const { return relators_.at(i); }

  // Throws PresentationError if `w` uses an undeclared generator.
  void check_word(Word const& w) const;

  std::string format(Word const& w) const { return format_word(w, names_); }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// <X | R \ {r_i}>.  Throws std::out_of_range.
Presentation remove_relator(Presentation const& p, std::size_t i);

// |X| - |R|
long long deficiency(Presentation const& p);

// `hint` if unused, otherwise the first unused of hint1, hint2, ...
GeneratorId fresh_generator(Presentation const& p, std::string_view hint);

// Appends a generator; the relators are unchanged.
Presentation add_generator(Presentation const& p, std::string name);

Presentation add_relators(Presentation const& p, std::span<Word const> extra);

}  // namespace justfp
