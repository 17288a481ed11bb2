#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "splinedim/ideals.hpp"

using namespace splinedim;

namespace {

// Coefficients of (1 - T^d)^t / (1 - T)^3 up to T^n, truncated from the
// first nonpositive coefficient on.
std::vector<std::int64_t> series_oracle(int t, int d, int n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  for (int rep = 0; rep < t; ++rep)
    for (int i = n; i >= d; --i) c[i] -= c[i - d];
  for (int rep = 0; rep < 3; ++rep)
    for (int i = 1; i <= n; ++i) c[i] += c[i - 1];
  bool dead = false;
  for (auto& v : c) {
    if (v <= 0) dead = true;
    if (dead) v = 0;
  }
  return c;
}

std::vector<LinearForm> pencil(int s) {
  std::vector<LinearForm> out;
  for (int j = 0; j < s; ++j) out.emplace_back(1, j, 0, 0);
  return out;
}

}  // namespace

TEST(Resolution, Examples) {
  auto rd = resolution_data(3, 1);
  EXPECT_EQ(rd.omega, 2);
  EXPECT_EQ(rd.a, 2);
  EXPECT_EQ(rd.b, 0);
  rd = resolution_data(2, 1);
  EXPECT_EQ(rd.omega, 3);
  EXPECT_EQ(rd.a, 1);
  EXPECT_EQ(rd.b, 0);
  rd = resolution_data(1, 5);
  EXPECT_EQ(rd.omega, 0);
  EXPECT_EQ(rd.a, 0);
  EXPECT_EQ(rd.b, 0);
  EXPECT_THROW(resolution_data(0, 1), std::invalid_argument);
}

TEST(Resolution, Invariants) {
  for (int s = 2; s <= 12; ++s)
    for (int r = 0; r <= 6; ++r) {
      const auto rd = resolution_data(s, r);
      EXPECT_GE(rd.a, 0);
      EXPECT_LE(rd.a, s - 1);
      EXPECT_EQ(rd.a + rd.b, s - 1);
    }
}

TEST(EdgeIdeal, ClosedFormExamples) {
  EXPECT_EQ(edge_ideal_dim_closed(3, 1, 3), 10);
  EXPECT_EQ(edge_ideal_dim_closed(2, 1, 1), 0);
  EXPECT_EQ(edge_ideal_dim_closed(2, 1, 2), 2);
  EXPECT_EQ(ideal_dim_rank(pencil(3), 2, 3), 10u);
  EXPECT_EQ(ideal_dim_rank(pencil(2), 2, 2), 2u);
}

TEST(EdgeIdeal, ClosedFormMatchesRankOnSmallGrid) {
  for (int s = 2; s <= 5; ++s)
    for (int r = 0; r <= 2; ++r)
      for (int k = 0; k <= 6; ++k)
        EXPECT_EQ(edge_ideal_dim_closed(s, r, k), static_cast<std::int64_t>(ideal_dim_rank(pencil(s), r + 1, k)))
            << s << " " << r << " " << k;
}

TEST(IdealRank, Examples) {
  const std::vector<LinearForm> xyz{LinearForm(1, 0, 0, 0), LinearForm(0, 1, 0, 0), LinearForm(0, 0, 1, 0)};
  EXPECT_EQ(ideal_dim_rank(xyz, 2, 2), 3u);
  EXPECT_EQ(binom(5, 3) - static_cast<std::int64_t>(ideal_dim_rank(xyz, 2, 2)), froberg_sum(3, 2, 2));
  EXPECT_EQ(ideal_dim_rank(xyz, 2, 1), 0u);
  for (int r = 0; r <= 3; ++r)
    for (int k = 0; k <= 9; ++k)
      EXPECT_EQ(static_cast<std::int64_t>(ideal_dim_rank(xyz, r + 1, k)), binom(k + 3, 3) - froberg_sum(3, r + 1, k));
}

TEST(IdealRank, ThreeVariableRingRejectsW) {
  EXPECT_THROW(ideal_dim_rank({LinearForm(1, 0, 0, 1)}, 2, 3, 3), std::invalid_argument);
  EXPECT_EQ(ideal_dim_rank({LinearForm(1, 1, 0, 0)}, 2, 3, 3), 3u);
}

TEST(IdealRank, MonotoneInGenerators) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<LinearForm> forms;
  std::size_t previous = 0;
  for (int i = 0; i < 8; ++i) {
    forms.emplace_back(c(rng), c(rng), c(rng), 1 + i);
    const std::size_t now = ideal_dim_rank(distinct_forms(forms), 2, 4);
    EXPECT_GE(now, previous);
    previous = now;
  }
}

TEST(Froberg, Examples) {
  const std::vector<std::int64_t> ci{1, 3, 3, 1, 0};
  for (int i = 0; i < 5; ++i) EXPECT_EQ(froberg_F(3, 2, i), ci[i]);
  EXPECT_EQ(froberg_F(12, 2, 0), 1);
  EXPECT_EQ(froberg_F(12, 2, 1), 3);
  EXPECT_EQ(froberg_F(12, 2, 2), 0);
  for (int d = 1; d <= 4; ++d)
    for (int i = 0; i <= 10; ++i) EXPECT_EQ(froberg_F(1, d, i), binom(i + 2, 2) - binom(i - d + 2, 2));
  EXPECT_EQ(froberg_F(0, 3, 4), binom(6, 2));
}

TEST(Froberg, MatchesSeriesOracle) {
  for (int t = 0; t <= 14; ++t)
    for (int d = 1; d <= 5; ++d) {
      const auto expected = series_oracle(t, d, 25);
      const auto seq = froberg_sequence(t, d, 25);
      for (int i = 0; i <= 25; ++i) ASSERT_EQ(seq.values[i], expected[i]) << t << " " << d << " " << i;
    }
}

TEST(Froberg, PrefixSumsAndIdentity) {
  EXPECT_EQ(froberg_sum(3, 2, 2), 7);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(froberg_sum(12, 2, k), 4);
  for (int r = 0; r <= 4; ++r)
    for (int k = 0; k <= 20; ++k)
      EXPECT_EQ(froberg_sum(3, r + 1, k),
                binom(k + 3, 3) - 3 * binom(k + 2 - r, 3) + 3 * binom(k - 2 * r + 1, 3) - binom(k - 3 * r, 3));
}

TEST(Froberg, TruncationAndMonotonicity) {
  for (int d = 1; d <= 4; ++d)
    for (int i = 0; i <= 15; ++i) {
      for (int t = 1; t <= 14; ++t) EXPECT_LE(froberg_F(t, d, i), froberg_F(t - 1, d, i));
      for (int t = 0; t <= 14; ++t)
        if (froberg_F(t, d, i) == 0)
          for (int j = i; j <= 20; ++j) EXPECT_EQ(froberg_F(t, d, j), 0);
    }
}

TEST(Expected, Examples) {
  EXPECT_EQ(expected_E(3, 1, 2), 3);
  for (int t = 1; t <= 20; ++t) EXPECT_EQ(expected_E(t, 2, 2), 6);
  EXPECT_EQ(expected_E(12, 1, 3), 0);
}

TEST(Froberg, ChainOnRandomThreeVariableForms) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-6, 6);
  std::uniform_int_distribution<int> count(1, 8);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<LinearForm> forms;
    const int t = count(rng);
    while (static_cast<int>(forms.size()) < t) {
      const long a = c(rng), b = c(rng), d = c(rng);
      if (!a && !b && !d) continue;
      forms = distinct_forms([&] {
        auto f = forms;
        f.emplace_back(a, b, d, 0);
        return f;
      }());
    }
    for (int r = 0; r <= 2; ++r)
      for (int i = 0; i <= 8; ++i) {
        const std::int64_t quotient = binom(i + 2, 2) - static_cast<std::int64_t>(ideal_dim_rank(forms, r + 1, i, 3));
        EXPECT_GE(quotient, froberg_F(t, r + 1, i));
        EXPECT_GE(froberg_F(t, r + 1, i), expected_E(t, r, i));
      }
  }
}
