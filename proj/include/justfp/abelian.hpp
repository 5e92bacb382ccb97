#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "justfp/presentation.hpp"

namespace justfp {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  BigInt const& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        BigInt const& factor);
  void add_col_multiple(std::size_t target, std::size_t source,
                        BigInt const& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Bareiss fraction-free elimination.  Throws std::invalid_argument unless
// the matrix is square.
BigInt determinant(IntMatrix const& m);

// left * m * right == diagonal form, with left and right unimodular.
struct SmithForm {
  // min(rows, cols) entries, each dividing the next; zeros come last.
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  IntMatrix left;
  IntMatrix right;
};

// Pivots on the smallest nonzero absolute value, ties broken row-major.
SmithForm smith_normal_form(IntMatrix const& m);

// The relators x generators matrix of exponent sums.
IntMatrix relation_matrix(Presentation const& p);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each > 1
  std::size_t free_rank = 0;

  // Order of the abelianization; nullopt if infinite.
  std::optional<BigInt> order() const;
  std::string to_string() const;

  friend bool operator==(AbelianInvariants const&,
                         AbelianInvariants const&) = default;
};

AbelianInvariants abelian_invariants(Presentation const& p);

// True iff the abelianization has free rank >= 1, i.e. the group maps onto Z.
bool maps_onto_Z(Presentation const& p);

// Checks that generator g -> images[g] defines a homomorphism onto Z: every
// relator has weighted exponent sum zero and the images generate Z.
bool is_surjection_onto_Z(Presentation const& p,
                          std::span<long long const> images);

// The abelianization map G -> Z/d1 + ... + Z/dk + Z^f in Smith coordinates.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(Presentation const& p);

  AbelianInvariants const& invariants() const noexcept { return invariants_; }
  SmithForm const& smith() const noexcept { return smith_; }

  // One coordinate per generator; coordinate j is taken modulo diagonal[j]
  // for j < rank and is a free coordinate otherwise.
  std::vector<BigInt> coordinates(Word const& w) const;
  bool is_trivial(Word const& w) const;
  // Nonzero in some free coordinate: w has infinite order.
  bool has_free_component(Word const& w) const;

 private:
  std::size_t generators_;
  SmithForm smith_;
  AbelianInvariants invariants_;
};

}  // namespace justfp
