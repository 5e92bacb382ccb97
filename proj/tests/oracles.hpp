#pragma once

// Slow, independent reference implementations used to check the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "justfp/abelian.hpp"
#include "justfp/coset_enum.hpp"
#include "justfp/word.hpp"

namespace oracle {

using justfp::BigInt;
using justfp::Coset;
using justfp::Letter;

// Deletes the first adjacent cancelling pair until none is left.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].cancels(w[i + 1])) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        again = true;
        break;
      }
    }
  }
  return w;
}

using Rows = std::vector<std::vector<BigInt>>;

// Laplace expansion along the first row.
inline BigInt laplace(Rows const& m) {
  std::size_t n = m.size();
  if (n == 1) {
    return m[0][0];
  }
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Rows minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) {
          row.push_back(m[i][k]);
        }
      }
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][j] * laplace(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_(k-1), where
// D_k is the gcd of all k x k minors.
inline std::vector<BigInt> invariant_factors(justfp::IntMatrix const& m) {
  std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (auto const& r : rs) {
      for (auto const& c : cs) {
        Rows sub;
        for (auto i : r) {
          std::vector<BigInt> row;
          for (auto j : c) {
            row.push_back(m(i, j));
          }
          sub.push_back(std::move(row));
        }
        g = gcd(g, laplace(sub));
      }
    }
    if (g == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Checks a complete table directly: permutation columns, inverse columns,
// relators and subgroup generators closed, transitive from coset 0.
inline std::optional<std::string> table_defect(justfp::CosetTable const& t) {
  std::size_t n = t.live_count();
  auto const& p = t.presentation();
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    std::vector<bool> hit(n, false);
    for (Coset c = 0; c < n; ++c) {
      Coset d = t.act(c, Letter::positive(g));
      if (d >= n || hit[d]) {
        return "column of generator " + std::to_string(g) + " is not a permutation";
      }
      hit[d] = true;
      if (t.act(d, Letter::negative(g)) != c) {
        return "inverse column mismatch";
      }
    }
  }
  for (Coset c = 0; c < n; ++c) {
    for (auto const& r : p.relators()) {
      if (t.trace(c, r) != std::optional<Coset>(c)) {
        return "relator does not close at coset " + std::to_string(c);
      }
    }
  }
  for (auto const& w : t.subgroup()) {
    if (t.trace(0, w) != std::optional<Coset>(0)) {
      return "subgroup generator moves coset 0";
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<Coset> queue{0};
  seen[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      Coset d = t.act(queue[q], Letter::from_column(col));
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  }
  if (queue.size() != n) {
    return "table is not transitive";
  }
  return std::nullopt;
}

using Perm = std::vector<std::size_t>;

// Right action: x^(gh) = (x^g)^h.
inline Perm compose(Perm const& g, Perm const& h) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out[x] = h[g[x]];
  }
  return out;
}

inline Perm inverse(Perm const& g) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out[g[x]] = x;
  }
  return out;
}

inline Perm evaluate(std::vector<Perm> const& gens, justfp::Word const& w) {
  Perm out(gens[0].size());
  std::iota(out.begin(), out.end(), 0);
  for (Letter l : w) {
    Perm const& g = gens[l.generator()];
    out = compose(out, l.is_inverse() ? inverse(g) : g);
  }
  return out;
}

inline std::uint64_t perm_order(Perm const& g) {
  Perm id(g.size());
  std::iota(id.begin(), id.end(), 0);
  Perm cur = g;
  std::uint64_t n = 1;
  while (cur != id) {
    cur = compose(cur, g);
    ++n;
  }
  return n;
}

}  // namespace oracle
