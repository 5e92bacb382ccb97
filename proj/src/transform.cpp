#include "justfp/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace justfp {

std::pair<Word, Word> neumann_relators(Word const& r, std::size_t b) {
  if (r.empty()) {
    throw std::invalid_argument("neumann_relators: relator is empty");
  }
  for (Letter l : r) {
    if (l.generator() == b) {
      throw std::invalid_argument(
          "neumann_relators: relator uses the new generator");
    }
  }
  Word const bw = Word::generator(b);
  // r^-1 b r = b^2   and   b^-1 r b = r^2
  Word first = multiply(conjugate(bw, r), power(bw, -2));
  Word second = multiply(conjugate(r, bw), power(r, -2));
  return {std::move(first), std::move(second)};
}

TransformRecord just_finite_transform(Presentation const& p) {
  Presentation extended = p;
  std::vector<RelatorPair> pairs;
  pairs.reserve(p.relator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    GeneratorId b = fresh_generator(extended, "b");
    extended = add_generator(extended, b.name);
    pairs.push_back({i, std::move(b), 2 * i, 2 * i + 1});
  }

  std::vector<Word> relators;
  relators.reserve(2 * p.relator_count());
  for (auto const& pair : pairs) {
    auto [first, second] =
        neumann_relators(p.relator(pair.input_relator), pair.generator.index);
    relators.push_back(std::move(first));
    relators.push_back(std::move(second));
  }

  Presentation output(
      {extended.generator_names().begin(), extended.generator_names().end()},
      std::move(relators));
  return {p, std::move(output), std::move(pairs)};
}

std::optional<TransformRecord> recover_transform(Presentation const& p) {
  std::size_t const n = p.relator_count() / 2;
  if (p.relator_count() % 2 != 0 || n == 0 || n >= p.generator_count()) {
    return std::nullopt;
  }
  std::size_t const base = p.generator_count() - n;

  std::vector<Word> originals;
  originals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // b^-1 r b r^-2: r sits between the leading b^-1 and the next b.
    auto letters = p.relator(2 * i + 1).letters();
    Letter const b_inv = Letter::negative(base + i);
    if (letters.empty() || letters.front() != b_inv) {
      return std::nullopt;
    }
    std::size_t end = 1;
    while (end < letters.size() && letters[end].generator() != base + i) {
      ++end;
    }
    Word r(letters.subspan(1, end - 1));
    if (r.empty() || r.alphabet_bound() > base) {
      return std::nullopt;
    }
    originals.push_back(std::move(r));
  }

  std::vector<std::string> names(p.generator_names().begin(),
                                 p.generator_names().begin() +
                                     static_cast<std::ptrdiff_t>(base));
  Presentation input(std::move(names), std::move(originals));
  TransformRecord record = just_finite_transform(input);
  // The fresh generators may carry any names; only the words must agree.
  auto rebuilt = record.output.relators();
  if (!std::equal(rebuilt.begin(), rebuilt.end(), p.relators().begin(),
                  p.relators().end())) {
    return std::nullopt;
  }
  record.output = p;
  for (auto& pair : record.pairs) {
    pair.generator = p.generator(pair.generator.index);
  }
  return record;
}

}  // namespace justfp
