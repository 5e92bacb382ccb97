#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "justfp/presentation.hpp"

namespace justfp {

using Coset = std::uint32_t;
inline constexpr Coset kUndefinedCoset = UINT32_MAX;
inline constexpr std::size_t kDefaultMaxCosets = 100'000;

// Action of the generators on the cosets of a subgroup.  Coset 0 is the
// subgroup itself.  Column 2g holds the image under g, column 2g+1 the image
// under g^-1 (see Letter::column).
class CosetTable {
 public:
  CosetTable() = default;

  // Wraps rows produced elsewhere (e.g. the low-index search).  `entries`
  // holds coset_count * 2 * generator_count values; `complete` is derived.
  CosetTable(Presentation presentation, std::vector<Word> subgroup,
             std::vector<Coset> entries);

  Presentation const& presentation() const noexcept { return presentation_; }
  std::span<Word const> subgroup() const noexcept { return subgroup_; }

  std::size_t live_count() const noexcept;
  std::size_t column_count() const noexcept { return columns_; }
  bool complete() const noexcept { return complete_; }

  Coset act(Coset c, Letter l) const noexcept {
    return entries_[c * columns_ + l.column()];
  }
  std::span<Coset const> row(Coset c) const noexcept {
    return {entries_.data() + c * columns_, columns_};
  }
  std::span<Coset const> entries() const noexcept { return entries_; }

  // Follows w from `from`; nullopt if an undefined entry is met.
  std::optional<Coset> trace(Coset from, Word const& w) const;

  // The permutation of the cosets induced by w.  Requires a complete table.
  std::vector<Coset> permutation(Word const& w) const;

  friend bool operator==(CosetTable const&, CosetTable const&) = default;

 private:
  Presentation presentation_;
  std::vector<Word> subgroup_;
  std::size_t columns_ = 0;
  std::vector<Coset> entries_;
  bool complete_ = false;
};

// Empty when the table satisfies every complete-table invariant: all entries
// defined, c.g = d iff d.g^-1 = c, every relator closes at every coset, every
// subgroup generator fixes coset 0.  Otherwise describes the first failure.
std::optional<std::string> check_complete_table(CosetTable const& t);

struct Overflow {
  std::size_t max_cosets = 0;
};

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;
  std::size_t lookaheads = 0;
};

class EnumerationOutcome {
 public:
  EnumerationOutcome(CosetTable table, EnumerationStats stats)
      : result_(std::move(table)), stats_(stats) {}
  EnumerationOutcome(Overflow overflow, EnumerationStats stats)
      : result_(overflow), stats_(stats) {}

  bool is_complete() const noexcept {
    return std::holds_alternative<CosetTable>(result_);
  }
  CosetTable const& table() const { return std::get<CosetTable>(result_); }
  CosetTable&& take_table() && { return std::get<CosetTable>(std::move(result_)); }
  std::size_t index() const { return table().live_count(); }
  Overflow overflow() const { return std::get<Overflow>(result_); }
  EnumerationStats const& stats() const noexcept { return stats_; }

 private:
  std::variant<CosetTable, Overflow> result_;
  EnumerationStats stats_;
};

// HLT coset enumeration with lookahead when the table fills.  Deterministic.
// Overflow means the budget ran out; it is not evidence of infinite index.
// Throws std::invalid_argument if max_cosets < 1 or a subgroup word leaves the
// alphabet.
EnumerationOutcome coset_enumerate(Presentation const& p,
                                   std::span<Word const> subgroup,
                                   std::size_t max_cosets = kDefaultMaxCosets);

// |G| when the enumeration over the trivial subgroup completes.
std::optional<std::size_t> group_order(
    Presentation const& p, std::size_t max_cosets = kDefaultMaxCosets);

// The next two require a complete table over the trivial subgroup (the
// regular representation); they throw std::invalid_argument otherwise.
bool word_acts_trivially(CosetTable const& t, Word const& w);
std::uint64_t element_order(CosetTable const& t, Word const& w);

// Order of a permutation given as an image array.
std::uint64_t permutation_order(std::span<Coset const> perm);

}  // namespace justfp
