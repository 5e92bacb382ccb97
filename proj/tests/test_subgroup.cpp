#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "justfp/abelian.hpp"
#include "justfp/subgroup.hpp"
#include "support.hpp"

using namespace justfp;

namespace {

std::map<std::size_t, std::size_t> count_by_index(
    std::vector<SubgroupRecord> const& records) {
  std::map<std::size_t, std::size_t> out;
  for (auto const& r : records) {
    ++out[r.index];
  }
  return out;
}

// Substitutes the Schreier generator words into a word over the subgroup.
Word expand(SubgroupPresentation const& s, Word const& w) {
  Word out;
  for (Letter l : w) {
    Word g = s.generator_words[l.generator()];
    out = multiply(out, l.is_inverse() ? invert(g) : g);
  }
  return out;
}

void check_rewriting(Presentation const& p, SubgroupRecord const& rec) {
  SubgroupPresentation const& s = rec.subgroup;
  REQUIRE(rec.table.complete());
  REQUIRE(rec.table.live_count() == rec.index);
  REQUIRE(s.transversal.size() == rec.index);
  REQUIRE(s.transversal[0].empty());
  for (Coset c = 0; c < rec.index; ++c) {
    REQUIRE(rec.table.trace(0, s.transversal[c]) == std::optional<Coset>(c));
  }
  for (auto const& w : s.generator_words) {
    REQUIRE_FALSE(w.empty());
    REQUIRE(rec.table.trace(0, w) == std::optional<Coset>(0));
  }
  REQUIRE(rec.table.subgroup().size() == s.generator_words.size());
  REQUIRE(s.rewritten_relators.size() == rec.index * p.relator_count());
  std::size_t k = 0;
  for (Coset c = 0; c < rec.index; ++c) {
    for (auto const& r : p.relators()) {
      Word const& t = s.transversal[c];
      REQUIRE(expand(s, s.rewritten_relators[k]) ==
              multiply(multiply(t, r), invert(t)));
      ++k;
    }
  }
}

}  // namespace

TEST_CASE("cyclic group of order four") {
  auto records = low_index_subgroups(parse_presentation("< x | x^4 >"), 4);
  CHECK(records.size() == 3);
  CHECK(count_by_index(records) ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 1}});
}

TEST_CASE("infinite dihedral group") {
  Presentation p = parse_presentation("< a, b | a^2, b^2 >");
  auto records = low_index_subgroups(p, 2);
  CHECK(count_by_index(records) ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}});
  for (auto const& rec : records) {
    check_rewriting(p, rec);
  }
}

TEST_CASE("free group of rank two") {
  Presentation p = parse_presentation("< x, y | >");
  auto records = low_index_subgroups(p, 4);
  CHECK(count_by_index(records) ==
        std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 7}, {4, 26}});
  for (auto const& rec : records) {
    // Schreier index formula: rank n(2 - 1) + 1.
    CHECK(rec.subgroup.presentation.generator_count() == rec.index + 1);
    CHECK(rec.subgroup.presentation.relator_count() == 0);
    check_rewriting(p, rec);
  }
}

TEST_CASE("conjugacy classes of subgroups of finite groups") {
  CHECK(low_index_subgroups(testing::fixture("d8_classical"), 8).size() == 8);
  CHECK(low_index_subgroups(testing::fixture("s3"), 6).size() == 4);
  CHECK(low_index_subgroups(testing::fixture("q8"), 8).size() == 6);
  CHECK(low_index_subgroups(testing::fixture("klein4"), 4).size() == 5);
}

TEST_CASE("records are sorted by index then table") {
  auto records = low_index_subgroups(testing::fixture("s4"), 6);
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto const& a = records[i - 1];
    auto const& b = records[i];
    CHECK(a.index <= b.index);
    if (a.index == b.index) {
      auto ea = a.table.entries();
      auto eb = b.table.entries();
      CHECK(std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end()));
    }
  }
}

TEST_CASE("subgroup order times index is the group order") {
  for (auto const& f : testing::finite_fixtures()) {
    if (f.order > 24) {
      continue;
    }
    CAPTURE(f.name);
    Presentation p = testing::fixture(f.name);
    for (auto const& rec : low_index_subgroups(p, 4)) {
      check_rewriting(p, rec);
      auto h = group_order(rec.subgroup.presentation);
      REQUIRE(h.has_value());
      CHECK(*h * rec.index == f.order);
    }
  }
}

TEST_CASE("D8 without its third relator has an infinite subgroup witness") {
  Presentation h = remove_relator(testing::fixture("d8_classical"), 2);
  SubgroupSearchStats stats;
  auto w = find_infinite_abelianization_subgroup(h, 8, &stats);
  REQUIRE(w.has_value());
  CHECK(w->record.index <= 8);
  CHECK(w->invariants.free_rank >= 1);
  CHECK(abelian_invariants(w->record.subgroup.presentation) == w->invariants);
  CHECK_FALSE(stats.exhausted);
  check_rewriting(h, w->record);
  // It is the first such subgroup in low_index_subgroups order.
  for (auto const& rec : low_index_subgroups(h, w->record.index)) {
    if (abelian_invariants(rec.subgroup.presentation).free_rank >= 1) {
      CHECK(rec.table.entries().size() == w->record.table.entries().size());
      CHECK(std::equal(rec.table.entries().begin(), rec.table.entries().end(),
                       w->record.table.entries().begin()));
      break;
    }
  }
}

TEST_CASE("no witness for a finite group; node limit is reported") {
  SubgroupSearchStats stats;
  CHECK_FALSE(find_infinite_abelianization_subgroup(testing::fixture("s4"), 4, &stats)
                  .has_value());
  CHECK_FALSE(stats.exhausted);
  CHECK(stats.index_searched == 4);
  CHECK_FALSE(find_infinite_abelianization_subgroup(testing::fixture("a5"), 8, &stats, 10)
                  .has_value());
  CHECK(stats.exhausted);
}
