#include "splinedim/ideals.hpp"

#include <stdexcept>

namespace splinedim {

ResolutionData resolution_data(int s, int r) {
  if (s < 1) throw std::invalid_argument("resolution_data: s must be at least 1");
  if (r < 0) throw std::invalid_argument("resolution_data: r must be nonnegative");
  ResolutionData rd;
  rd.s = s;
  rd.r = r;
  if (s == 1) return rd;
  rd.omega = (s * r) / (s - 1) + 1;
  rd.a = s * (r + 1) + (1 - s) * rd.omega;
  rd.b = s - 1 - rd.a;
  return rd;
}

std::int64_t edge_ideal_dim_closed(int s, int r, int k) {
  const ResolutionData rd = resolution_data(s, r);
  return rd.s * binom(k + 2 - r, 3) - rd.b * binom(k + 3 - rd.omega, 3) - rd.a * binom(k + 2 - rd.omega, 3);
}

EchelonBasis ideal_basis(const std::vector<LinearForm>& forms, int d, int k, int nvars) {
  MonomialBasis target(k, nvars);
  EchelonBasis basis(target.size());
  if (k < d) return basis;
  MonomialBasis multipliers(k - d, nvars);
  for (const auto& form : forms) {
    for (int v = nvars; v < 4; ++v)
      if (form[v] != 0) throw std::invalid_argument("ideal_basis: form uses a variable outside the ring");
    const Polynomial power = form_power(form, d);
    for (const auto& m : multipliers.monomials()) {
      basis.insert(power_times_monomial_row(power, m, target));
      if (basis.rank() == target.size()) return basis;
    }
  }
  return basis;
}

std::size_t ideal_dim_rank(const std::vector<LinearForm>& forms, int d, int k, int nvars) {
  return ideal_basis(forms, d, k, nvars).rank();
}

std::int64_t froberg_F(int t, int d, int i) {
  if (t < 0 || d < 1 || i < 0) throw std::invalid_argument("froberg_F: bad arguments");
  // Truncation: the sequence is zero from the first nonpositive raw value on.
  for (int j = 0; j <= i; ++j) {
    std::int64_t raw = 0;
    for (int m = 0; m <= 3; ++m) {
      const std::int64_t term = binom(t, m) * binom(j - d * m + 2, 2);
      raw += (m % 2 == 0) ? term : -term;
    }
    if (raw <= 0) return 0;
    if (j == i) return raw;
  }
  return 0;
}

std::int64_t froberg_sum(int t, int d, int k) {
  std::int64_t sum = 0;
  for (int j = 0; j <= k; ++j) sum += froberg_F(t, d, j);
  return sum;
}

std::int64_t expected_E(int t, int r, int k) {
  if (k < 0) return 0;
  const std::int64_t full = static_cast<std::int64_t>(k + 1) * (k + 2);
  const std::int64_t fat = k <= r ? 0 : static_cast<std::int64_t>(t) * (k - r) * (k - r + 1);
  return std::max<std::int64_t>(0, (full - fat) / 2);
}

FrobergSeq froberg_sequence(int t, int d, int max_index) {
  FrobergSeq seq;
  seq.t = t;
  seq.d = d;
  std::int64_t sum = 0;
  for (int i = 0; i <= max_index; ++i) {
    seq.values.push_back(froberg_F(t, d, i));
    sum += seq.values.back();
    seq.prefix.push_back(sum);
  }
  return seq;
}

}  // namespace splinedim
