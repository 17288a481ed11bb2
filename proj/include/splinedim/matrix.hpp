#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// All rows must have the same length; throws std::invalid_argument otherwise.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  RationalMatrix transposed() const;
  void scale_row(std::size_t i, const Rational& factor);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free Bareiss elimination. Each row is first cleared
/// of denominators; pivots are the first nonzero entry found in the column.
std::size_t rank(const RationalMatrix& m);

/// cols - rank
std::size_t nullity(const RationalMatrix& m);

struct SparseEntry {
  std::uint32_t col;
  Integer value;
};

/// Integer row with strictly increasing column indices and no zero entries.
using SparseRow = std::vector<SparseEntry>;

/// Clears denominators of a dense rational row and drops zeros.
SparseRow integer_row(std::span<const Rational> dense);

/// Incrementally maintained row echelon form over the integers.
///
/// Rows are reduced fraction-free against the stored pivots (leading-column
/// elimination, content removed after every scaled step). A row that does not
/// reduce to zero becomes a new pivot row. The stored rows therefore always
/// form a basis of the span of everything inserted so far.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols);

  /// Returns true when the row was independent of the current span.
  bool insert(SparseRow row);

  /// Remainder of `row` after reduction; empty iff the row lies in the span.
  SparseRow reduce(SparseRow row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return pivot_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  std::vector<std::int32_t> pivot_;
  std::vector<SparseRow> rows_;
};

/// Rank of a sparse integer matrix with `cols` columns, via EchelonBasis.
std::size_t sparse_rank(std::size_t cols, std::vector<SparseRow> rows);

}  // namespace splinedim
