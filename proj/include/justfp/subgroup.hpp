#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "justfp/abelian.hpp"
#include "justfp/coset_enum.hpp"
#include "justfp/presentation.hpp"

namespace justfp {

inline constexpr std::size_t kDefaultMaxIndex = 8;

// Reidemeister-Schreier output for the subgroup fixing coset 0.
struct SubgroupPresentation {
  // Schreier generators s, s1, ... and the nonempty rewritten relators.
  Presentation presentation;
  // Schreier generator i as a word in the parent's generators:
  // rep(c) * g * rep(c.g)^-1.
  std::vector<Word> generator_words;
  // All index * |R| rewritten relators before empty ones are dropped.
  std::vector<Word> rewritten_relators;
  // Breadth-first Schreier transversal, one word per coset.
  std::vector<Word> transversal;
};

struct SubgroupRecord {
  std::size_t index = 0;
  CosetTable table;
  SubgroupPresentation subgroup;
};

// One subgroup per conjugacy class of index <= max_index, each with a
// complete standardized coset table and its rewritten presentation.  Sorted
// by index, then by table entries.  Throws std::invalid_argument if
// max_index < 1.
std::vector<SubgroupRecord> low_index_subgroups(Presentation const& p,
                                                std::size_t max_index);

// Throws std::invalid_argument if the table is incomplete.
SubgroupPresentation rewrite_subgroup(Presentation const& p,
                                      CosetTable const& table);

struct InfiniteAbelianizationWitness {
  SubgroupRecord record;
  AbelianInvariants invariants;  // of the subgroup; free_rank >= 1
};

inline constexpr std::size_t kDefaultMaxSearchNodes = 2'000'000;

struct SubgroupSearchStats {
  std::size_t nodes = 0;
  std::size_t index_searched = 0;
  std::size_t subgroups_tested = 0;
  // The node limit stopped the search before max_index was covered.
  bool exhausted = false;
};

// First subgroup (in low_index_subgroups order) whose rewritten
// presentation has free rank >= 1.  Such a subgroup has infinite order, so
// its finite-index overgroup is infinite too.  Indices are searched in
// increasing order; `max_nodes` (0 for no limit) caps the backtracking
// nodes visited over the whole search.
std::optional<InfiniteAbelianizationWitness>
find_infinite_abelianization_subgroup(
    Presentation const& p, std::size_t max_index = kDefaultMaxIndex,
    SubgroupSearchStats* stats = nullptr,
    std::size_t max_nodes = kDefaultMaxSearchNodes);

}  // namespace justfp
