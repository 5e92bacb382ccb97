#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "justfp/abelian.hpp"
#include "justfp/coset_enum.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace justfp;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> sparse(0, 3);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      // Some zeros so that rank deficiency shows up.
      m(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng);
    if (m.rows() != m.cols()) {
      continue;
    }
    oracle::Rows rows(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        rows[i][j] = m(i, j);
      }
    }
    REQUIRE(determinant(m) == oracle::laplace(rows));
  }
}

TEST_CASE("Smith form of small matrices") {
  SmithForm s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});
  CHECK(s.rank == 3);
  SmithForm z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.diagonal == std::vector<BigInt>{0, 0});
}

TEST_CASE("Smith form: unimodular transforms and determinantal divisors") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix m = random_matrix(rng);
    SmithForm s = smith_normal_form(m);
    IntMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      d(i, i) = s.diagonal[i];
    }
    REQUIRE(s.left * m * s.right == d);
    REQUIRE(abs(determinant(s.left)) == 1);
    REQUIRE(abs(determinant(s.right)) == 1);
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      REQUIRE(s.diagonal[i] >= 0);
      REQUIRE((i < s.rank) == (s.diagonal[i] != 0));
      if (i + 1 < s.rank) {
        REQUIRE(s.diagonal[i + 1] % s.diagonal[i] == 0);
      }
    }
    REQUIRE(s.diagonal == oracle::invariant_factors(m));
  }
}

TEST_CASE("abelian invariants of fixtures") {
  CHECK(abelian_invariants(testing::fixture("d8_classical")).to_string() ==
        "Z/2 x Z/2");
  CHECK(abelian_invariants(testing::fixture("z2xz4")).to_string() == "Z/2 x Z/4");
  CHECK(abelian_invariants(testing::fixture("q8")).to_string() == "Z/2 x Z/2");
  CHECK(abelian_invariants(testing::fixture("a5")).to_string() == "1");
  CHECK(abelian_invariants(testing::fixture("a4")).to_string() == "Z/3");
  CHECK(abelian_invariants(testing::fixture("infinite_cyclic")).to_string() == "Z");
  CHECK(abelian_invariants(parse_presentation("< x, y | x^6 >")).to_string() ==
        "Z/6 x Z");
  CHECK(maps_onto_Z(testing::fixture("infinite_cyclic")));
  CHECK_FALSE(maps_onto_Z(testing::fixture("d8_classical")));
}

TEST_CASE("D8 deletions") {
  Presentation d8 = testing::fixture("d8_classical");
  CHECK(maps_onto_Z(remove_relator(d8, 1)));
  CHECK_FALSE(maps_onto_Z(remove_relator(d8, 0)));
  CHECK_FALSE(maps_onto_Z(remove_relator(d8, 2)));
  CHECK(is_surjection_onto_Z(remove_relator(d8, 1), std::vector<long long>{0, 1}));
  CHECK_FALSE(is_surjection_onto_Z(remove_relator(d8, 1), std::vector<long long>{0, 2}));
  CHECK_FALSE(is_surjection_onto_Z(remove_relator(d8, 1), std::vector<long long>{1, 0}));
}

TEST_CASE("abelianization order matches enumeration with commutators added") {
  for (auto const& f : testing::finite_fixtures()) {
    CAPTURE(f.name);
    Presentation p = testing::fixture(f.name);
    std::vector<Word> commutators;
    for (std::size_t a = 0; a < p.generator_count(); ++a) {
      for (std::size_t b = a + 1; b < p.generator_count(); ++b) {
        Word ga = Word::generator(a);
        Word gb = Word::generator(b);
        commutators.push_back(
            multiply(multiply(invert(ga), invert(gb)), multiply(ga, gb)));
      }
    }
    auto order = group_order(add_relators(p, commutators));
    REQUIRE(order.has_value());
    auto inv = abelian_invariants(p);
    REQUIRE(inv.order().has_value());
    CHECK(*inv.order() == BigInt(*order));
  }
}

TEST_CASE("abelianization map coordinates") {
  Presentation p = parse_presentation("< x, y | x^4, y^2 >");
  AbelianizationMap m(p);
  CHECK(m.is_trivial(Word::generator(0, 4)));
  CHECK_FALSE(m.is_trivial(Word::generator(0, 2)));
  CHECK_FALSE(m.has_free_component(Word::generator(0)));
  Presentation q = parse_presentation("< x, y | x^2 >");
  AbelianizationMap mq(q);
  CHECK(mq.has_free_component(Word::generator(1)));
  CHECK_FALSE(mq.has_free_component(Word::generator(0)));
  CHECK(mq.is_trivial(multiply(Word::generator(1), Word::generator(0, 2))) ==
        false);
  CHECK(mq.is_trivial(conjugate(Word::generator(0, 2), Word::generator(1))));
}
