#include "splinedim/oracle.hpp"

#include <algorithm>
#include <array>

namespace splinedim {

namespace {

// Monomials x^a y^b z^c with a + b + c <= degree.
class AffineMonomials {
 public:
  explicit AffineMonomials(int degree) : degree_(degree) {
    if (degree < 0) return;
    const std::size_t side = static_cast<std::size_t>(degree) + 1;
    index_.assign(side * side * side, 0);
    for (int total = 0; total <= degree; ++total)
      for (int a = total; a >= 0; --a)
        for (int b = total - a; b >= 0; --b) {
          const int c = total - a - b;
          index_[slot(a, b, c)] = exps_.size();
          exps_.push_back({a, b, c});
        }
  }

  std::size_t size() const { return exps_.size(); }
  const std::array<int, 3>& operator[](std::size_t i) const { return exps_[i]; }
  std::size_t index(int a, int b, int c) const { return index_[slot(a, b, c)]; }

 private:
  std::size_t slot(int a, int b, int c) const {
    const std::size_t side = static_cast<std::size_t>(degree_) + 1;
    return (static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)) * side + static_cast<std::size_t>(c);
  }

  int degree_;
  std::vector<std::array<int, 3>> exps_;
  std::vector<std::size_t> index_;
};

struct AffineTerm {
  std::array<int, 3> exp;
  Integer coef;
};

// (a x + b y + c z + d)^power, expanded with multinomial coefficients.
std::vector<AffineTerm> affine_power(const LinearForm& form, int power) {
  std::vector<Integer> fact(power + 1, 1);
  for (int i = 1; i <= power; ++i) fact[i] = fact[i - 1] * i;
  std::vector<AffineTerm> out;
  Integer p;
  for (int i = 0; i <= power; ++i)
    for (int j = 0; i + j <= power; ++j)
      for (int l = 0; i + j + l <= power; ++l) {
        const int m = power - i - j - l;
        const int e[4] = {i, j, l, m};
        Integer coef = fact[power];
        for (int v = 0; v < 4; ++v) {
          mpz_pow_ui(p.get_mpz_t(), form[v].get_mpz_t(), static_cast<unsigned long>(e[v]));
          coef *= p;
          coef /= fact[e[v]];
        }
        if (coef != 0) out.push_back({{i, j, l}, coef});
      }
  return out;
}

}  // namespace

SmoothnessSystem build_system(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k) {
  SmoothnessSystem sys;
  sys.r = r;
  sys.k = k;
  const int power = r + 1;
  const AffineMonomials polys(k);
  const AffineMonomials cofactors(k - power);
  sys.poly_block = polys.size();
  sys.cofactor_block = cofactors.size();
  sys.triangle_count = tables.interior_triangles.size();
  sys.tet_count = tables.tets.size();
  sys.cols = sys.triangle_count * sys.cofactor_block + sys.tet_count * sys.poly_block;

  for (std::size_t local = 0; local < tables.interior_triangles.size(); ++local) {
    const std::size_t s = tables.interior_triangles[local];
    std::size_t t0 = tables.triangle_tets[s][0];
    std::size_t t1 = tables.triangle_tets[s][1];
    if (t1 < t0) std::swap(t0, t1);

    std::vector<SparseRow> block(polys.size());
    const auto terms = affine_power(forms[s], power);
    const std::size_t g0 = sys.cofactor_offset(local);
    for (std::size_t nu = 0; nu < cofactors.size(); ++nu) {
      const auto& e = cofactors[nu];
      for (const auto& term : terms) {
        const std::size_t mu = polys.index(e[0] + term.exp[0], e[1] + term.exp[1], e[2] + term.exp[2]);
        block[mu].push_back({static_cast<std::uint32_t>(g0 + nu), -term.coef});
      }
    }
    for (std::size_t mu = 0; mu < polys.size(); ++mu) {
      SparseRow& row = block[mu];
      std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
      row.push_back({static_cast<std::uint32_t>(sys.tet_offset(t0) + mu), Integer(1)});
      row.push_back({static_cast<std::uint32_t>(sys.tet_offset(t1) + mu), Integer(-1)});
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

bool cofactor_columns_independent(const SmoothnessSystem& system) {
  const std::size_t gcols = system.triangle_count * system.cofactor_block;
  std::vector<SparseRow> restricted;
  for (const auto& row : system.rows) {
    SparseRow part;
    for (const auto& e : row)
      if (e.col < gcols) part.push_back(e);
    if (!part.empty()) restricted.push_back(std::move(part));
  }
  return sparse_rank(gcols, std::move(restricted)) == gcols;
}

std::int64_t solution_dim(const SmoothnessSystem& system) {
  return static_cast<std::int64_t>(system.cols) - static_cast<std::int64_t>(sparse_rank(system.cols, system.rows));
}

std::int64_t spline_dim(const FaceTables& tables, const std::vector<LinearForm>& forms, int r, int k) {
  return solution_dim(build_system(tables, forms, r, k));
}

}  // namespace splinedim
