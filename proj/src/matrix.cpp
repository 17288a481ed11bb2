#include "splinedim/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace splinedim {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void RationalMatrix::scale_row(std::size_t i, const Rational& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= factor;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = m(i, j).get_num() * (den / m(i, j).get_den());
      a[i * cols + j] = std::move(v);
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };

  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

SparseRow integer_row(std::span<const Rational> dense) {
  Integer den = 1;
  for (const auto& q : dense)
    if (q != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  SparseRow row;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (dense[j] == 0) continue;
    row.push_back({static_cast<std::uint32_t>(j), dense[j].get_num() * (den / dense[j].get_den())});
  }
  return row;
}

namespace {

void remove_content(SparseRow& row) {
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

// row <- (b/g) * row - (a/g) * pivot, where a, b are the leading entries and
// g = gcd(a, b). The shared leading column cancels.
void eliminate_lead(SparseRow& row, const SparseRow& pivot, SparseRow& out) {
  const Integer& a = row.front().value;
  const Integer& b = pivot.front().value;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer row_scale = b / g;
  Integer pivot_scale = a / g;
  const bool unit = (row_scale == 1);

  out.clear();
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  Integer v;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
      if (unit)
        out.push_back({row[i].col, std::move(row[i].value)});
      else
        out.push_back({row[i].col, row_scale * row[i].value});
      ++i;
    } else if (i == row.size() || pivot[j].col < row[i].col) {
      out.push_back({pivot[j].col, -pivot_scale * pivot[j].value});
      ++j;
    } else {
      if (unit)
        v = row[i].value - pivot_scale * pivot[j].value;
      else
        v = row_scale * row[i].value - pivot_scale * pivot[j].value;
      if (v != 0) out.push_back({row[i].col, v});
      ++i;
      ++j;
    }
  }
  row.swap(out);
  if (!unit) remove_content(row);
}

}  // namespace

EchelonBasis::EchelonBasis(std::size_t cols) : pivot_(cols, -1) {}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  SparseRow scratch;
  while (!row.empty()) {
    const auto p = pivot_[row.front().col];
    if (p < 0) break;
    eliminate_lead(row, rows_[static_cast<std::size_t>(p)], scratch);
  }
  return row;
}

bool EchelonBasis::insert(SparseRow row) {
  for (const auto& e : row)
    if (e.col >= pivot_.size()) throw std::out_of_range("sparse row column out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  remove_content(row);
  if (row.front().value < 0)
    for (auto& e : row) e.value = -e.value;
  pivot_[row.front().col] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::size_t sparse_rank(std::size_t cols, std::vector<SparseRow> rows) {
  EchelonBasis basis(cols);
  for (auto& row : rows) basis.insert(std::move(row));
  return basis.rank();
}

}  // namespace splinedim
