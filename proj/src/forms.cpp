#include "splinedim/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace splinedim {

std::int64_t binom(std::int64_t u, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("binom: negative lower index");
  if (u < m) return 0;
  m = std::min(m, u - m);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= m; ++i) result = result * (u - m + i) / i;
  return result;
}

namespace {

void enumerate(int remaining, int var, int nvars, Exponent& current, std::vector<Exponent>& out) {
  if (var == nvars - 1) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate(remaining - e, var + 1, nvars, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int degree, int nvars) : degree_(degree), nvars_(nvars) {
  if (nvars < 2 || nvars > 4) throw std::invalid_argument("MonomialBasis: nvars must be 2, 3 or 4");
  if (degree < 0) return;
  Exponent current{0, 0, 0, 0};
  enumerate(degree, 0, nvars, current, monomials_);
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  int total = 0;
  for (int v = 0; v < 4; ++v) {
    if (e[v] < 0 || (v >= nvars_ && e[v] != 0)) throw std::out_of_range("monomial not in basis");
    total += e[v];
  }
  if (total != degree_) throw std::out_of_range("monomial degree does not match basis");
  // Count the monomials preceding e: those with a larger exponent at the first
  // position where they differ.
  std::size_t idx = 0;
  int remaining = degree_;
  for (int v = 0; v < nvars_ - 1; ++v) {
    const int rest = nvars_ - v - 1;  // variables after v
    for (int larger = e[v] + 1; larger <= remaining; ++larger)
      idx += static_cast<std::size_t>(binom(remaining - larger + rest - 1, rest - 1));
    remaining -= e[v];
  }
  return idx;
}

LinearForm::LinearForm(std::array<Integer, 4> coefficients) : c_(std::move(coefficients)) {
  Integer g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw std::invalid_argument("zero linear form");
  auto lead = std::find_if(c_.begin(), c_.end(), [](const Integer& v) { return v != 0; });
  if (*lead < 0) g = -g;
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

LinearForm::LinearForm(long a, long b, long c, long d)
    : LinearForm(std::array<Integer, 4>{Integer(a), Integer(b), Integer(c), Integer(d)}) {}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) {
  for (int i = 0; i < 4; ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const LinearForm& form) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Integer& c = form[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str();
    out += names[i];
  }
  return out;
}

LinearForm plane_of_triangle(const Point3& p0, const Point3& p1, const Point3& p2) {
  const Rational u0 = p1[0] - p0[0], u1 = p1[1] - p0[1], u2 = p1[2] - p0[2];
  const Rational v0 = p2[0] - p0[0], v1 = p2[1] - p0[1], v2 = p2[2] - p0[2];
  std::array<Rational, 4> n{u1 * v2 - u2 * v1, u2 * v0 - u0 * v2, u0 * v1 - u1 * v0, 0};
  if (n[0] == 0 && n[1] == 0 && n[2] == 0) throw std::invalid_argument("collinear triangle");
  n[3] = -(n[0] * p0[0] + n[1] * p0[1] + n[2] * p0[2]);
  Integer den = 1;
  for (const auto& q : n) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::array<Integer, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = n[i].get_num() * (den / n[i].get_den());
  return LinearForm(std::move(c));
}

std::vector<LinearForm> triangle_forms(const SimplicialComplex3& complex, const FaceTables& tables) {
  std::vector<LinearForm> forms;
  forms.reserve(tables.triangles.size());
  const auto& v = complex.vertices();
  for (const auto& t : tables.triangles) forms.push_back(plane_of_triangle(v[t[0]], v[t[1]], v[t[2]]));
  return forms;
}

std::vector<LinearForm> distinct_forms(const std::vector<LinearForm>& forms) {
  std::vector<LinearForm> out;
  for (const auto& f : forms)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  return out;
}

Polynomial form_power(const LinearForm& form, int d) {
  if (d < 0) throw std::invalid_argument("negative power");
  MonomialBasis basis(d, 4);
  // Factorials up to d for multinomial coefficients.
  std::vector<Integer> fact(d + 1, 1);
  for (int i = 1; i <= d; ++i) fact[i] = fact[i - 1] * i;
  Polynomial out;
  Integer term, p;
  for (const auto& e : basis.monomials()) {
    term = fact[d];
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      if (form[v] == 0) {
        term = 0;
        break;
      }
      mpz_pow_ui(p.get_mpz_t(), form[v].get_mpz_t(), static_cast<unsigned long>(e[v]));
      term *= p;
      term /= fact[e[v]];
    }
    if (term != 0) out.emplace_back(e, term);
  }
  return out;
}

SparseRow power_times_monomial_row(const Polynomial& power, const Exponent& m, const MonomialBasis& basis) {
  SparseRow row;
  row.reserve(power.size());
  for (const auto& [e, c] : power) {
    Exponent prod{e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]};
    row.push_back({static_cast<std::uint32_t>(basis.index(prod)), c});
  }
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  return row;
}

std::vector<Rational> form_power_times_monomial(const LinearForm& form, int d, const Exponent& m,
                                                const MonomialBasis& basis) {
  if (d + m[0] + m[1] + m[2] + m[3] != basis.degree())
    throw std::invalid_argument("form_power_times_monomial: degree mismatch");
  std::vector<Rational> out(basis.size());
  try {
    for (const auto& entry : power_times_monomial_row(form_power(form, d), m, basis))
      out[entry.col] = entry.value;
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("form_power_times_monomial: product leaves the basis variables");
  }
  return out;
}

}  // namespace splinedim
