#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "justfp/presentation.hpp"

namespace justfp {

// Ties relator i of the input to its fresh generator and to the two relators
// of the output that replace it.
struct RelatorPair {
  std::size_t input_relator = 0;
  GeneratorId generator;
  // r^-1 b r b^-2 at 2i; deleting it leaves a group mapping onto Z.
  std::size_t b_conjugation_relator = 0;
  // b^-1 r b r^-2 at 2i+1; deleting it leaves an amalgamated product.
  std::size_t r_conjugation_relator = 0;

  friend bool operator==(RelatorPair const&, RelatorPair const&) = default;
};

struct TransformRecord {
  Presentation input;
  Presentation output;
  std::vector<RelatorPair> pairs;
};

// (r^-1 b r b^-2, b^-1 r b r^-2), freely reduced.  Throws
// std::invalid_argument if r is empty or if r uses b.
std::pair<Word, Word> neumann_relators(Word const& r, std::size_t b);

// Adds a fresh generator b_i (name hint "b") for every relator r_i and
// replaces r_i by its two Neumann relators.  Deficiency is unchanged.
TransformRecord just_finite_transform(Presentation const& p);

// Recovers the record when `p` is exactly the output of
// just_finite_transform applied to some presentation: the trailing
// generators are the b_i and relators 2i, 2i+1 are the Neumann pair of some
// b_i-free word r_i.  The candidate input is rebuilt and transformed again,
// and the record is returned only if that reproduces `p` verbatim.
std::optional<TransformRecord> recover_transform(Presentation const& p);

}  // namespace justfp
