#include "justfp/abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace justfp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("IntMatrix: rows differ in length");
    }
    for (long long v : row) {
      data_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, a), (*this)(r, b));
  }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 BigInt const& factor) {
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(target, c) += factor * (*this)(source, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 BigInt const& factor) {
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, target) += factor * (*this)(r, source);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(r, c) = -(*this)(r, c);
  }
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  std::size_t const n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) {
        ++swap;
      }
      if (swap == n) {
        return 0;
      }
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..], first in row-major order.
std::optional<Position> smallest_in_block(IntMatrix const& d, std::size_t t) {
  std::optional<Position> best;
  BigInt best_value;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) {
        continue;
      }
      BigInt value = abs(d(i, j));
      if (!best || value < best_value) {
        best = Position{i, j};
        best_value = std::move(value);
      }
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t or column t (from t on).
std::optional<Position> smallest_in_cross(IntMatrix const& d, std::size_t t) {
  std::optional<Position> best;
  BigInt best_value;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (d(i, j) == 0) {
      return;
    }
    BigInt value = abs(d(i, j));
    if (!best || value < best_value) {
      best = Position{i, j};
      best_value = std::move(value);
    }
  };
  for (std::size_t j = t; j < d.cols(); ++j) {
    consider(t, j);
  }
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    consider(i, t);
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m) {
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  std::size_t const steps = std::min(m.rows(), m.cols());

  auto move_to_pivot = [&](std::size_t t, Position p) {
    d.swap_rows(t, p.row);
    left.swap_rows(t, p.row);
    d.swap_cols(t, p.col);
    right.swap_cols(t, p.col);
  };

  std::size_t t = 0;
  for (; t < steps; ++t) {
    auto pivot = smallest_in_block(d, t);
    if (!pivot) {
      break;
    }
    move_to_pivot(t, *pivot);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) {
          continue;
        }
        BigInt q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) {
          continue;
        }
        BigInt q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) {
        move_to_pivot(t, *smallest_in_cross(d, t));
        continue;
      }
      // Row and column t are clear; the pivot must divide the rest.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) {
        break;
      }
      d.add_row_multiple(t, *offending, 1);
      left.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm out;
  out.rank = t;
  out.diagonal.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.diagonal.push_back(d(i, i));
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (Letter l : p.relator(i)) {
      m(i, l.generator()) += l.sign();
    }
  }
  return m;
}

std::optional<BigInt> AbelianInvariants::order() const {
  if (free_rank > 0) {
    return std::nullopt;
  }
  BigInt product = 1;
  for (auto const& d : torsion) {
    product *= d;
  }
  return product;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  for (auto const& d : torsion) {
    if (!out.empty()) {
      out += " x ";
    }
    out += "Z/" + d.str();
  }
  if (free_rank > 0) {
    if (!out.empty()) {
      out += " x ";
    }
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "1" : out;
}

namespace {

AbelianInvariants invariants_from(SmithForm const& s, std::size_t generators) {
  AbelianInvariants inv;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.diagonal[i] > 1) {
      inv.torsion.push_back(s.diagonal[i]);
    }
  }
  inv.free_rank = generators - s.rank;
  return inv;
}

}  // namespace

AbelianInvariants abelian_invariants(Presentation const& p) {
  return invariants_from(smith_normal_form(relation_matrix(p)),
                         p.generator_count());
}

bool maps_onto_Z(Presentation const& p) {
  return abelian_invariants(p).free_rank >= 1;
}

bool is_surjection_onto_Z(Presentation const& p,
                          std::span<long long const> images) {
  if (images.size() != p.generator_count()) {
    throw std::invalid_argument(
        "is_surjection_onto_Z: need one image per generator");
  }
  for (auto const& r : p.relators()) {
    BigInt sum = 0;
    for (Letter l : r) {
      sum += BigInt(images[l.generator()]) * l.sign();
    }
    if (sum != 0) {
      return false;
    }
  }
  long long g = 0;
  for (long long v : images) {
    g = std::gcd(g, v);
  }
  return g == 1;
}

AbelianizationMap::AbelianizationMap(Presentation const& p)
    : generators_(p.generator_count()),
      smith_(smith_normal_form(relation_matrix(p))),
      invariants_(invariants_from(smith_, generators_)) {}

std::vector<BigInt> AbelianizationMap::coordinates(Word const& w) const {
  std::vector<BigInt> exponents(generators_);
  for (Letter l : w) {
    exponents.at(l.generator()) += l.sign();
  }
  std::vector<BigInt> out(generators_);
  for (std::size_t j = 0; j < generators_; ++j) {
    for (std::size_t i = 0; i < generators_; ++i) {
      out[j] += exponents[i] * smith_.right(i, j);
    }
    if (j < smith_.rank) {
      out[j] %= smith_.diagonal[j];
      if (out[j] < 0) {
        out[j] += smith_.diagonal[j];
      }
    }
  }
  return out;
}

bool AbelianizationMap::is_trivial(Word const& w) const {
  auto coords = coordinates(w);
  return std::all_of(coords.begin(), coords.end(),
                     [](BigInt const& v) { return v == 0; });
}

bool AbelianizationMap::has_free_component(Word const& w) const {
  auto coords = coordinates(w);
  return std::any_of(coords.begin() + static_cast<std::ptrdiff_t>(smith_.rank),
                     coords.end(), [](BigInt const& v) { return v != 0; });
}

}  // namespace justfp
