#include "justfp/coset_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace justfp {

CosetTable::CosetTable(Presentation presentation, std::vector<Word> subgroup,
                       std::vector<Coset> entries)
    : presentation_(std::move(presentation)),
      subgroup_(std::move(subgroup)),
      columns_(2 * presentation_.generator_count()),
      entries_(std::move(entries)) {
  if (columns_ == 0 ? !entries_.empty() : entries_.size() % columns_ != 0) {
    throw std::invalid_argument("CosetTable: ragged entry array");
  }
  complete_ = std::none_of(entries_.begin(), entries_.end(),
                           [](Coset c) { return c == kUndefinedCoset; });
}

std::size_t CosetTable::live_count() const noexcept {
  return columns_ == 0 ? 1 : entries_.size() / columns_;
}

std::optional<Coset> CosetTable::trace(Coset from, Word const& w) const {
  Coset c = from;
  for (Letter l : w) {
    c = act(c, l);
    if (c == kUndefinedCoset) {
      return std::nullopt;
    }
  }
  return c;
}

std::vector<Coset> CosetTable::permutation(Word const& w) const {
  if (!complete_) {
    throw std::invalid_argument("permutation: coset table is incomplete");
  }
  std::vector<Coset> perm(live_count());
  for (Coset c = 0; c < perm.size(); ++c) {
    perm[c] = *trace(c, w);
  }
  return perm;
}

std::optional<std::string> check_complete_table(CosetTable const& t) {
  if (!t.complete()) {
    return "table has undefined entries";
  }
  auto const n = static_cast<Coset>(t.live_count());
  for (Coset c = 0; c < n; ++c) {
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      Letter l = Letter::from_column(col);
      Coset d = t.act(c, l);
      if (d >= n) {
        return "entry out of range at coset " + std::to_string(c);
      }
      if (t.act(d, l.inverse()) != c) {
        return "inverse inconsistency at coset " + std::to_string(c) +
               " column " + std::to_string(col);
      }
    }
  }
  for (std::size_t i = 0; i < t.presentation().relator_count(); ++i) {
    Word const& r = t.presentation().relator(i);
    for (Coset c = 0; c < n; ++c) {
      if (t.trace(c, r) != c) {
        return "relator " + std::to_string(i) + " does not close at coset " +
               std::to_string(c);
      }
    }
  }
  for (std::size_t i = 0; i < t.subgroup().size(); ++i) {
    if (t.trace(0, t.subgroup()[i]) != Coset{0}) {
      return "subgroup generator " + std::to_string(i) +
             " does not fix coset 0";
    }
  }
  return std::nullopt;
}

namespace {

enum class Scan { kDone, kNeedSpace };

class Enumerator {
 public:
  Enumerator(Presentation const& p, std::span<Word const> subgroup,
             std::size_t max_cosets)
      : p_(p),
        subgroup_(subgroup),
        columns_(2 * p.generator_count()),
        max_cosets_(max_cosets) {
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
      relators_.push_back(column_word(p.relator(i)));
    }
    for (auto const& h : subgroup) {
      subgroup_columns_.push_back(column_word(h));
    }
    table_.reserve(std::min<std::size_t>(max_cosets_, 4096) * columns_);
    new_row();
  }

  EnumerationOutcome run() {
    for (auto const& h : subgroup_columns_) {
      if (!with_space([&] { return scan_and_fill(0, h); })) {
        return overflow();
      }
    }
    for (current_ = 0; current_ < rows(); ++current_) {
      for (std::size_t r = 0; r < relators_.size() && live(current_); ++r) {
        if (!with_space([&] { return scan_and_fill(current_, relators_[r]); })) {
          return overflow();
        }
      }
      for (std::size_t col = 0; col < columns_ && live(current_); ++col) {
        if (at(current_, col) == kUndefinedCoset) {
          if (!with_space([&] { return define(current_, col); })) {
            return overflow();
          }
        }
      }
    }
    compact();
    return EnumerationOutcome(
        CosetTable(p_, {subgroup_.begin(), subgroup_.end()}, std::move(table_)),
        stats_);
  }

 private:
  std::vector<std::size_t> column_word(Word const& w) const {
    if (w.alphabet_bound() > p_.generator_count()) {
      throw std::invalid_argument(
          "coset_enumerate: word outside the presentation's alphabet");
    }
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (Letter l : w) {
      out.push_back(l.column());
    }
    return out;
  }

  static std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

  std::size_t rows() const { return forward_.size(); }
  bool live(Coset c) const { return forward_[c] == c; }
  Coset& at(Coset c, std::size_t col) { return table_[c * columns_ + col]; }

  Coset new_row() {
    auto c = static_cast<Coset>(rows());
    table_.resize(table_.size() + columns_, kUndefinedCoset);
    forward_.push_back(c);
    ++live_;
    ++stats_.cosets_defined;
    return c;
  }

  // Runs `step` and, when it reports a full table, frees space and retries.
  template <typename Step>
  bool with_space(Step step) {
    while (step() == Scan::kNeedSpace) {
      if (!make_space()) {
        return false;
      }
    }
    return true;
  }

  Scan define(Coset c, std::size_t col) {
    if (rows() >= max_cosets_) {
      return Scan::kNeedSpace;
    }
    Coset d = new_row();
    at(c, col) = d;
    at(d, inverse_column(col)) = c;
    return Scan::kDone;
  }

  Scan scan_and_fill(Coset start, std::vector<std::size_t> const& w) {
    if (w.empty()) {
      return Scan::kDone;
    }
    for (;;) {
      auto [done, need] = scan(start, w);
      if (done) {
        return Scan::kDone;
      }
      if (define(need.first, need.second) == Scan::kNeedSpace) {
        return Scan::kNeedSpace;
      }
    }
  }

  // Traces w forward and backward from `start`.  Records a deduction or a
  // coincidence if the scan closes; otherwise returns the gap to fill.
  std::pair<bool, std::pair<Coset, std::size_t>> scan(
      Coset start, std::vector<std::size_t> const& w) {
    Coset f = start;
    Coset b = start;
    std::size_t i = 0;
    std::size_t j = w.size();  // unscanned letters are w[i, j)
    while (i < j && at(f, w[i]) != kUndefinedCoset) {
      f = at(f, w[i]);
      ++i;
    }
    if (i == j) {
      if (f != start) {
        coincidence(f, start);
      }
      return {true, {}};
    }
    while (j > i && at(b, inverse_column(w[j - 1])) != kUndefinedCoset) {
      b = at(b, inverse_column(w[j - 1]));
      --j;
    }
    if (j == i) {
      coincidence(f, b);
      return {true, {}};
    }
    if (j == i + 1) {
      at(f, w[i]) = b;
      at(b, inverse_column(w[i])) = f;
      return {true, {}};
    }
    return {false, {f, w[i]}};
  }

  Coset find(Coset c) {
    Coset root = c;
    while (forward_[root] != root) {
      root = forward_[root];
    }
    while (forward_[c] != root) {
      Coset next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset a, Coset b, std::vector<Coset>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (b < a) {
      std::swap(a, b);
    }
    forward_[b] = a;
    --live_;
    queue.push_back(b);
  }

  // Identifies cosets a and b and every consequence, merging the larger
  // number into the smaller.
  void coincidence(Coset a, Coset b) {
    ++stats_.coincidences;
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Coset dead = queue[q];
      for (std::size_t col = 0; col < columns_; ++col) {
        Coset image = at(dead, col);
        if (image == kUndefinedCoset) {
          continue;
        }
        std::size_t inv = inverse_column(col);
        if (at(image, inv) == dead) {
          at(image, inv) = kUndefinedCoset;
        }
        Coset x = find(dead);
        Coset y = find(image);
        if (at(x, col) != kUndefinedCoset) {
          merge(y, at(x, col), queue);
        } else if (at(y, inv) != kUndefinedCoset) {
          merge(x, at(y, inv), queue);
        } else {
          at(x, col) = y;
          at(y, inv) = x;
        }
      }
    }
  }

  // Closes every live coset against every relator without defining new
  // cosets, then compacts.  Fails if almost nothing was freed.
  bool make_space() {
    ++stats_.lookaheads;
    for (Coset c = 0; c < rows(); ++c) {
      for (std::size_t r = 0; r < relators_.size() && live(c); ++r) {
        scan(c, relators_[r]);
      }
    }
    std::size_t freed = rows() - live_;
    if (freed == 0 || freed < max_cosets_ / 100) {
      return false;
    }
    compact();
    return true;
  }

  // Renumbers live cosets contiguously, preserving their order.
  void compact() {
    std::vector<Coset> renumber(rows(), kUndefinedCoset);
    Coset next = 0;
    for (Coset c = 0; c < rows(); ++c) {
      if (live(c)) {
        renumber[c] = next++;
      }
    }
    std::vector<Coset> table;
    table.reserve(static_cast<std::size_t>(next) * columns_);
    for (Coset c = 0; c < rows(); ++c) {
      if (!live(c)) {
        continue;
      }
      for (std::size_t col = 0; col < columns_; ++col) {
        Coset d = at(c, col);
        table.push_back(d == kUndefinedCoset ? d : renumber[d]);
      }
    }
    if (current_ < rows()) {
      // A lookahead may kill the coset being processed; resume from its
      // representative, which only repeats work already done.
      current_ = renumber[find(current_)];
    }
    table_ = std::move(table);
    forward_.resize(next);
    std::iota(forward_.begin(), forward_.end(), Coset{0});
    live_ = next;
  }

  EnumerationOutcome overflow() const {
    return EnumerationOutcome(Overflow{max_cosets_}, stats_);
  }

  Presentation const& p_;
  std::span<Word const> subgroup_;
  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::size_t>> subgroup_columns_;
  std::vector<Coset> table_;
  std::vector<Coset> forward_;
  std::size_t live_ = 0;
  Coset current_ = 0;
  EnumerationStats stats_;
};

void require_regular(CosetTable const& t) {
  if (!t.complete()) {
    throw std::invalid_argument("coset table is incomplete");
  }
  if (!t.subgroup().empty()) {
    throw std::invalid_argument(
        "coset table is not over the trivial subgroup");
  }
}

}  // namespace

EnumerationOutcome coset_enumerate(Presentation const& p,
                                   std::span<Word const> subgroup,
                                   std::size_t max_cosets) {
  if (max_cosets < 1) {
    throw std::invalid_argument("coset_enumerate: max_cosets must be >= 1");
  }
  return Enumerator(p, subgroup, max_cosets).run();
}

std::optional<std::size_t> group_order(Presentation const& p,
                                       std::size_t max_cosets) {
  auto outcome = coset_enumerate(p, {}, max_cosets);
  if (!outcome.is_complete()) {
    return std::nullopt;
  }
  return outcome.index();
}

bool word_acts_trivially(CosetTable const& t, Word const& w) {
  require_regular(t);
  return t.trace(0, w) == Coset{0};
}

std::uint64_t element_order(CosetTable const& t, Word const& w) {
  require_regular(t);
  return permutation_order(t.permutation(w));
}

std::uint64_t permutation_order(std::span<Coset const> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    std::uint64_t length = 0;
    for (std::size_t c = start; !seen[c]; c = perm[c]) {
      seen[c] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

}  // namespace justfp
