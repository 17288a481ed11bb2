#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "splinedim/matrix.hpp"
#include "splinedim/mesh.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

/// C(u, m); zero whenever u < m, including negative u. Requires m >= 0.
std::int64_t binom(std::int64_t u, std::int64_t m);

using Exponent = std::array<int, 4>;

/// Monomials of total degree exactly `degree` in the first `nvars` of x, y, z, w,
/// in graded-lex order (x^k first, w^k last).
class MonomialBasis {
 public:
  MonomialBasis(int degree, int nvars);

  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }

  /// Position of `e` in the basis; throws std::out_of_range if absent.
  std::size_t index(const Exponent& e) const;

 private:
  int degree_;
  int nvars_;
  std::vector<Exponent> monomials_;
};

/// a*x + b*y + c*z + d*w with primitive integer coefficients whose first
/// nonzero entry is positive.
class LinearForm {
 public:
  /// Canonicalizes; throws std::invalid_argument on the zero form.
  explicit LinearForm(std::array<Integer, 4> coefficients);
  LinearForm(long a, long b, long c, long d);

  const std::array<Integer, 4>& coefficients() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b);

 private:
  std::array<Integer, 4> c_;
};

std::string to_string(const LinearForm& form);

/// Homogenized plane through three points; throws std::invalid_argument if
/// the points are collinear.
LinearForm plane_of_triangle(const Point3& p0, const Point3& p1, const Point3& p2);

/// Plane of every triangle of `tables`, indexed like tables.triangles.
std::vector<LinearForm> triangle_forms(const SimplicialComplex3& complex, const FaceTables& tables);

/// Removes duplicates, keeping the first occurrence of each form.
std::vector<LinearForm> distinct_forms(const std::vector<LinearForm>& forms);

/// Homogeneous polynomial as (exponent, coefficient) terms, graded-lex order.
using Polynomial = std::vector<std::pair<Exponent, Integer>>;

/// Multinomial expansion of form^d.
Polynomial form_power(const LinearForm& form, int d);

/// Coefficients of form^d * m in `basis`. Throws std::invalid_argument when
/// d + deg(m) != basis.degree() or when the product uses a variable the basis lacks.
std::vector<Rational> form_power_times_monomial(const LinearForm& form, int d, const Exponent& m,
                                                const MonomialBasis& basis);

/// Sparse variant taking a precomputed power (columns ascending).
SparseRow power_times_monomial_row(const Polynomial& power, const Exponent& m, const MonomialBasis& basis);

}  // namespace splinedim
