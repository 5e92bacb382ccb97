#include "justfp/presentation.hpp"

#include <algorithm>
#include <unordered_set>

namespace justfp {

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  std::unordered_set<std::string_view> seen;
  for (auto const& name : names_) {
    if (!is_valid_generator_name(name)) {
      throw PresentationError("invalid generator name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw PresentationError("duplicate generator name '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].empty()) {
      throw PresentationError("relator " + std::to_string(i) +
                              " is the empty word");
    }
    check_word(relators_[i]);
  }
}

std::vector<GeneratorId> Presentation::generators() const {
  std::vector<GeneratorId> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out.push_back({i, names_[i]});
  }
  return out;
}

GeneratorId Presentation::generator(std::size_t index) const {
  return {index, names_.at(index)};
}

std::optional<std::size_t> Presentation::find_generator(
    std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

void Presentation::check_word(Word const& w) const {
  if (w.alphabet_bound() > names_.size()) {
    throw PresentationError("word uses generator index " +
                            std::to_string(w.alphabet_bound() - 1) +
                            " outside an alphabet of size " +
                            std::to_string(names_.size()));
  }
}

Presentation remove_relator(Presentation const& p, std::size_t i) {
  if (i >= p.relator_count()) {
    throw std::out_of_range("relator index " + std::to_string(i) +
                            " out of range for " +
                            std::to_string(p.relator_count()) + " relators");
  }
  std::vector<Word> relators(p.relators().begin(), p.relators().end());
  relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(i));
  return Presentation(
      {p.generator_names().begin(), p.generator_names().end()},
      std::move(relators));
}

long long deficiency(Presentation const& p) {
  return static_cast<long long>(p.generator_count()) -
         static_cast<long long>(p.relator_count());
}

GeneratorId fresh_generator(Presentation const& p, std::string_view hint) {
  std::string candidate(hint);
  for (std::size_t suffix = 1; p.find_generator(candidate); ++suffix) {
    candidate = std::string(hint) + std::to_string(suffix);
  }
  return {p.generator_count(), candidate};
}

Presentation add_generator(Presentation const& p, std::string name) {
  std::vector<std::string> names(p.generator_names().begin(),
                                 p.generator_names().end());
  names.push_back(std::move(name));
  return Presentation(std::move(names),
                      {p.relators().begin(), p.relators().end()});
}

Presentation add_relators(Presentation const& p, std::span<Word const> extra) {
  std::vector<Word> relators(p.relators().begin(), p.relators().end());
  relators.insert(relators.end(), extra.begin(), extra.end());
  return Presentation({p.generator_names().begin(), p.generator_names().end()},
                      std::move(relators));
}

}  // namespace justfp
