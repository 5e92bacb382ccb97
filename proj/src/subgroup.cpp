#include "justfp/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace justfp {

namespace {

// Backtracking search over standardized partial coset tables (Sims).  The
// first undefined entry in row-major order is filled with each admissible
// coset in turn; relator scans then force further entries or refute the
// branch.  A table is kept only if no other base point renumbers it to a
// lexicographically smaller table, which leaves one table per conjugacy
// class.
class LowIndexSearch {
 public:
  LowIndexSearch(Presentation const& p, std::size_t max_index)
      : p_(p),
        columns_(2 * p.generator_count()),
        max_index_(max_index),
        table_(max_index * columns_, kUndefinedCoset) {
    for (auto const& r : p.relators()) {
      std::vector<std::size_t> cols;
      for (Letter l : r) {
        cols.push_back(l.column());
      }
      relators_.push_back(std::move(cols));
    }
  }

  // Visits every first-in-class complete table with exactly `index` cosets
  // (or at most max_index when `index` is 0).  Returns false if the node
  // limit stopped the search early.
  bool run(std::size_t index, std::size_t max_nodes,
           std::vector<std::vector<Coset>>& found) {
    exact_ = index;
    max_nodes_ = max_nodes;
    nodes_ = 0;
    exhausted_ = false;
    found_ = &found;
    if (columns_ == 0) {
      // No generators: the trivial group has only itself.
      found.emplace_back();
      return true;
    }
    search(1);
    return !exhausted_;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  static std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

  Coset& at(Coset c, std::size_t col) { return table_[c * columns_ + col]; }

  struct Assignment {
    Coset coset;
    std::size_t col;
  };

  void assign(Coset c, std::size_t col, Coset d,
              std::vector<Assignment>& trail) {
    at(c, col) = d;
    trail.push_back({c, col});
    at(d, inverse_column(col)) = c;
    trail.push_back({d, inverse_column(col)});
  }

  void undo(std::vector<Assignment> const& trail) {
    for (auto const& a : trail) {
      at(a.coset, a.col) = kUndefinedCoset;
    }
  }

  // Scans every relator at every coset until nothing more is forced.
  bool propagate(std::size_t n, std::vector<Assignment>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Coset c = 0; c < n; ++c) {
        for (auto const& w : relators_) {
          Coset f = c;
          Coset b = c;
          std::size_t i = 0;
          std::size_t j = w.size();
          while (i < j && at(f, w[i]) != kUndefinedCoset) {
            f = at(f, w[i++]);
          }
          while (j > i && at(b, inverse_column(w[j - 1])) != kUndefinedCoset) {
            b = at(b, inverse_column(w[--j]));
          }
          if (i == j) {
            if (f != b) {
              return false;
            }
          } else if (j == i + 1) {
            if (at(b, inverse_column(w[i])) != kUndefinedCoset) {
              return false;
            }
            assign(f, w[i], b, trail);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  enum class Order { kSmaller, kNotSmaller };

  // Compares the table renumbered from base point `alpha` with the current
  // table, as far as both are defined.
  Order compare_from(Coset alpha, std::size_t n) {
    std::vector<Coset> to_new(n, kUndefinedCoset);
    std::vector<Coset> to_old(n, kUndefinedCoset);
    to_new[alpha] = 0;
    to_old[0] = alpha;
    Coset next = 1;
    for (Coset row = 0; row < next; ++row) {
      Coset old = to_old[row];
      for (std::size_t col = 0; col < columns_; ++col) {
        Coset image = at(old, col);
        Coset mine = at(row, col);
        if (image == kUndefinedCoset || mine == kUndefinedCoset) {
          return Order::kNotSmaller;
        }
        if (to_new[image] == kUndefinedCoset) {
          to_new[image] = next;
          to_old[next] = image;
          ++next;
        }
        if (to_new[image] != mine) {
          return to_new[image] < mine ? Order::kSmaller : Order::kNotSmaller;
        }
      }
    }
    return Order::kNotSmaller;
  }

  bool first_in_class(std::size_t n) {
    for (Coset alpha = 1; alpha < n; ++alpha) {
      if (compare_from(alpha, n) == Order::kSmaller) {
        return false;
      }
    }
    return true;
  }

  void search(std::size_t n) {
    if (exhausted_) {
      return;
    }
    if (max_nodes_ != 0 && ++nodes_ > max_nodes_) {
      exhausted_ = true;
      return;
    }
    if (max_nodes_ == 0) {
      ++nodes_;
    }
    if (!first_in_class(n)) {
      return;
    }
    // First undefined entry, row-major.
    std::optional<Assignment> gap;
    for (Coset c = 0; c < n && !gap; ++c) {
      for (std::size_t col = 0; col < columns_; ++col) {
        if (at(c, col) == kUndefinedCoset) {
          gap = Assignment{c, col};
          break;
        }
      }
    }
    if (!gap) {
      if (exact_ == 0 || n == exact_) {
        found_->emplace_back(
            table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n * columns_));
      }
      return;
    }
    std::size_t const inv = inverse_column(gap->col);
    std::size_t const limit = std::min(n + 1, max_index_);
    for (Coset d = 0; d < limit; ++d) {
      if (d < n && at(d, inv) != kUndefinedCoset) {
        continue;
      }
      std::size_t next_n = d < n ? n : n + 1;
      std::vector<Assignment> trail;
      assign(gap->coset, gap->col, d, trail);
      if (propagate(next_n, trail)) {
        search(next_n);
      }
      undo(trail);
    }
  }

  Presentation const& p_;
  std::size_t columns_;
  std::size_t max_index_;
  std::vector<Coset> table_;
  std::vector<std::vector<std::size_t>> relators_;
  std::size_t exact_ = 0;
  std::size_t max_nodes_ = 0;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<Coset>>* found_ = nullptr;
};

bool table_order(std::vector<Coset> const& a, std::vector<Coset> const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

SubgroupRecord make_record(Presentation const& p, std::vector<Coset> entries) {
  std::size_t const columns = 2 * p.generator_count();
  CosetTable bare(p, {}, entries);
  SubgroupPresentation sub = rewrite_subgroup(p, bare);
  std::size_t index = columns == 0 ? 1 : entries.size() / columns;
  CosetTable table(p, sub.generator_words, std::move(entries));
  return {index, std::move(table), std::move(sub)};
}

}  // namespace

std::vector<SubgroupRecord> low_index_subgroups(Presentation const& p,
                                                std::size_t max_index) {
  if (max_index < 1) {
    throw std::invalid_argument("low_index_subgroups: max_index must be >= 1");
  }
  std::vector<std::vector<Coset>> tables;
  LowIndexSearch(p, max_index).run(0, 0, tables);
  std::sort(tables.begin(), tables.end(), table_order);
  std::vector<SubgroupRecord> out;
  out.reserve(tables.size());
  for (auto& entries : tables) {
    out.push_back(make_record(p, std::move(entries)));
  }
  return out;
}

SubgroupPresentation rewrite_subgroup(Presentation const& p,
                                      CosetTable const& table) {
  if (!table.complete()) {
    throw std::invalid_argument("rewrite_subgroup: coset table is incomplete");
  }
  auto const n = static_cast<Coset>(table.live_count());
  std::size_t const gens = p.generator_count();

  // Breadth-first transversal.
  std::vector<Word> transversal(n);
  std::vector<bool> reached(n, false);
  std::vector<Coset> queue{0};
  reached[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Coset c = queue[q];
    for (std::size_t col = 0; col < table.column_count(); ++col) {
      Letter l = Letter::from_column(col);
      Coset d = table.act(c, l);
      if (!reached[d]) {
        reached[d] = true;
        transversal[d] = multiply(transversal[c], Word{l});
        queue.push_back(d);
      }
    }
  }

  // Schreier generator for (coset, generator), or none if trivial.
  std::vector<std::optional<std::size_t>> schreier(n * gens);
  SubgroupPresentation out;
  std::vector<std::string> names;
  Presentation naming;
  for (Coset c = 0; c < n; ++c) {
    for (std::size_t g = 0; g < gens; ++g) {
      Coset d = table.act(c, Letter::positive(g));
      Word w = multiply(multiply(transversal[c], Word::generator(g)),
                        invert(transversal[d]));
      if (w.empty()) {
        continue;
      }
      schreier[c * gens + g] = out.generator_words.size();
      GeneratorId id = fresh_generator(naming, "s");
      naming = add_generator(naming, id.name);
      names.push_back(id.name);
      out.generator_words.push_back(std::move(w));
    }
  }

  std::vector<Word> relators;
  for (Coset c = 0; c < n; ++c) {
    for (auto const& r : p.relators()) {
      std::vector<Letter> letters;
      Coset cur = c;
      for (Letter l : r) {
        if (!l.is_inverse()) {
          if (auto s = schreier[cur * gens + l.generator()]) {
            letters.push_back(Letter::positive(*s));
          }
          cur = table.act(cur, l);
        } else {
          Coset prev = table.act(cur, l);
          if (auto s = schreier[prev * gens + l.generator()]) {
            letters.push_back(Letter::negative(*s));
          }
          cur = prev;
        }
      }
      Word rewritten(letters);
      if (!rewritten.empty()) {
        relators.push_back(rewritten);
      }
      out.rewritten_relators.push_back(std::move(rewritten));
    }
  }
  out.presentation = Presentation(std::move(names), std::move(relators));
  out.transversal = std::move(transversal);
  return out;
}

std::optional<InfiniteAbelianizationWitness>
find_infinite_abelianization_subgroup(Presentation const& p,
                                      std::size_t max_index,
                                      SubgroupSearchStats* stats,
                                      std::size_t max_nodes) {
  if (max_index < 1) {
    throw std::invalid_argument(
        "find_infinite_abelianization_subgroup: max_index must be >= 1");
  }
  SubgroupSearchStats local;
  SubgroupSearchStats& st = stats != nullptr ? *stats : local;
  st = {};
  // Index by index, so the first hit is the first in low_index_subgroups
  // order without searching larger indices.
  for (std::size_t index = 1; index <= max_index; ++index) {
    std::vector<std::vector<Coset>> tables;
    LowIndexSearch search(p, index);
    bool finished = search.run(index, max_nodes == 0 ? 0 : max_nodes - st.nodes, tables);
    st.nodes += search.nodes();
    st.index_searched = index;
    std::sort(tables.begin(), tables.end(), table_order);
    for (auto& entries : tables) {
      ++st.subgroups_tested;
      SubgroupRecord record = make_record(p, std::move(entries));
      AbelianInvariants inv = abelian_invariants(record.subgroup.presentation);
      if (inv.free_rank >= 1) {
        return InfiniteAbelianizationWitness{std::move(record), std::move(inv)};
      }
    }
    if (!finished || (max_nodes != 0 && st.nodes >= max_nodes)) {
      st.exhausted = index < max_index || !finished;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace justfp
