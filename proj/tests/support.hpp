#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "justfp/presentation.hpp"
#include "justfp/syntax.hpp"
#include "justfp/word.hpp"

namespace testing {

inline std::string fixture_path(std::string const& name) {
  return std::string(JUSTFP_FIXTURE_DIR) + "/" + name + ".fp";
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline justfp::Presentation fixture(std::string const& name) {
  return justfp::parse_presentation(read_file(fixture_path(name)));
}

struct FiniteFixture {
  char const* name;
  std::size_t order;
};

// Every finite fixture with its order, known independently.
inline std::vector<FiniteFixture> const& finite_fixtures() {
  static std::vector<FiniteFixture> const all = {
      {"neumann", 1},     {"bs12_k2", 6},   {"bs12_k3", 21},
      {"bs12_k4", 60},  {"bs12_k5", 155}, {"d8_classical", 8},
      {"d8_second", 8},   {"d8_transformed_abc", 8},
      {"klein4", 4},      {"s3", 6},          {"q8", 8},
      {"a4", 12},         {"s4", 24},         {"a5", 60},
      {"z2xz4", 8},       {"z3xz3", 9},       {"d10", 10},
      {"d16", 16},        {"z2cubed", 8},     {"heisenberg3", 27},
      {"dic3", 12},       {"d32", 32},        {"z4xz4", 16},
  };
  return all;
}

// Irredundant presentations of non-cyclic groups of order <= 64.
inline std::vector<std::string> const& transform_pool() {
  static std::vector<std::string> const pool = {
      "klein4", "s3",    "q8",  "d8_classical", "d8_second", "z2xz4",
      "z3xz3",  "d10",   "a4",  "dic3",         "d16",       "z2cubed",
      "z4xz4",  "s4",    "d32", "a5",           "bs12_k2", "bs12_k3",
      "bs12_k4"};
  return pool;
}

inline std::vector<justfp::Letter> random_letters(std::mt19937_64& rng,
                                                  std::size_t gens,
                                                  std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> col(0, 2 * gens - 1);
  std::vector<justfp::Letter> out(len(rng), justfp::Letter(0, 1));
  for (auto& l : out) {
    l = justfp::Letter::from_column(col(rng));
  }
  return out;
}

inline justfp::Word random_word(std::mt19937_64& rng, std::size_t gens,
                                std::size_t max_len) {
  auto letters = random_letters(rng, gens, max_len);
  return justfp::free_reduce(letters);
}

// A random presentation whose relators are nonempty reduced words.
inline justfp::Presentation random_presentation(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> gens_d(1, 4);
  std::uniform_int_distribution<std::size_t> rels_d(0, 5);
  std::size_t gens = gens_d(rng);
  std::vector<std::string> names;
  for (std::size_t g = 0; g < gens; ++g) {
    names.push_back(std::string(1, static_cast<char>('a' + g)));
  }
  std::vector<justfp::Word> rels;
  std::size_t count = rels_d(rng);
  while (rels.size() < count) {
    justfp::Word w = random_word(rng, gens, 10);
    if (!w.empty()) {
      rels.push_back(std::move(w));
    }
  }
  return justfp::Presentation(std::move(names), std::move(rels));
}

}  // namespace testing
