#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "justfp/transform.hpp"
#include "support.hpp"

using namespace justfp;

TEST_CASE("cyclic group of order two") {
  Presentation p = parse_presentation("< x | x^2 >");
  TransformRecord t = just_finite_transform(p);
  CHECK(print_presentation(t.output) ==
        "< x, b | x^-2*b*x^2*b^-2, b^-1*x^2*b*x^-4 >");
  REQUIRE(t.pairs.size() == 1);
  CHECK(t.pairs[0].generator.name == "b");
  CHECK(t.pairs[0].generator.index == 1);
  CHECK(t.pairs[0].b_conjugation_relator == 0);
  CHECK(t.pairs[0].r_conjugation_relator == 1);
}

TEST_CASE("D8 transform matches the displayed presentation") {
  TransformRecord t = just_finite_transform(testing::fixture("d8_classical"));
  Presentation displayed = testing::fixture("d8_transformed_abc");
  CHECK(t.output.generator_count() == 5);
  CHECK(t.output.relator_count() == 6);
  // Same words; the fresh generators are called a, b, c there.
  CHECK(std::equal(t.output.relators().begin(), t.output.relators().end(),
                   displayed.relators().begin(), displayed.relators().end()));
  CHECK(t.output.name(2) == "b");
  CHECK(t.output.name(3) == "b1");
  CHECK(t.output.name(4) == "b2");
}

TEST_CASE("fresh names avoid existing generators") {
  Presentation p = parse_presentation("< b, b1 | b^2, b1^3, b*b1 = b1*b >");
  TransformRecord t = just_finite_transform(p);
  CHECK(t.output.name(2) == "b2");
  CHECK(t.output.name(3) == "b3");
  CHECK(t.output.name(4) == "b4");
}

TEST_CASE("empty relator list is unchanged") {
  Presentation p = parse_presentation("< x | >");
  CHECK(just_finite_transform(p).output == p);
}

TEST_CASE("neumann relators reject bad input") {
  CHECK_THROWS_AS(neumann_relators(Word{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(neumann_relators(Word::generator(1), 1), std::invalid_argument);
}

TEST_CASE("deficiency is preserved on random presentations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p = testing::random_presentation(rng);
    TransformRecord t = just_finite_transform(p);
    REQUIRE(deficiency(t.output) == deficiency(p));
    REQUIRE(t.output.relator_count() == 2 * p.relator_count());
    REQUIRE(t.output.generator_count() == p.generator_count() + p.relator_count());
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
      auto [first, second] =
          neumann_relators(p.relator(i), t.pairs[i].generator.index);
      REQUIRE(t.output.relator(2 * i) == first);
      REQUIRE(t.output.relator(2 * i + 1) == second);
    }
  }
}

TEST_CASE("recover_transform inverts the transform") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p = testing::random_presentation(rng);
    if (p.relator_count() == 0) {
      continue;
    }
    TransformRecord t = just_finite_transform(p);
    auto back = recover_transform(t.output);
    REQUIRE(back.has_value());
    REQUIRE(back->input == p);
    REQUIRE(back->output == t.output);
  }
  auto displayed = recover_transform(testing::fixture("d8_transformed_abc"));
  REQUIRE(displayed.has_value());
  CHECK(displayed->input == testing::fixture("d8_classical"));
  CHECK(displayed->pairs[2].generator.name == "c");
  CHECK_FALSE(recover_transform(testing::fixture("d8_classical")).has_value());
  // The Neumann presentation is the transform of <u | u>.
  auto neumann = recover_transform(testing::fixture("neumann"));
  REQUIRE(neumann.has_value());
  CHECK(print_presentation(neumann->input) == "< u | u >");
}
