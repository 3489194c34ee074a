#include "causal_lab/combinatorics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

using namespace causal_lab;

namespace {

// Standard Young tableaux by removing one corner box at a time.
BigInt count_syt(std::vector<int> rows, std::map<std::vector<int>, BigInt>& memo) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
    if (!corner) continue;
    auto smaller = rows;
    --smaller[i];
    total += count_syt(smaller, memo);
  }
  memo[rows] = total;
  return total;
}

// Partitions with at most d parts by brute force over all non-increasing tuples.
std::set<std::vector<int>> brute_partitions(int N, int d) {
  std::set<std::vector<int>> out;
  std::vector<int> t(d, 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int cap) {
    if (pos == d) {
      if (left == 0) {
        std::vector<int> r(t.begin(), t.end());
        while (!r.empty() && r.back() == 0) r.pop_back();
        out.insert(r);
      }
      return;
    }
    for (int v = 0; v <= std::min(left, cap); ++v) {
      t[pos] = v;
      rec(pos + 1, left - v, v);
    }
  };
  rec(0, N, N);
  return out;
}

// Set partitions of {0..N-1} into blocks of size d, counted by brute force.
long count_block_partitions(int N, int d) {
  std::vector<int> label(N, -1);
  long count = 0;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == N) {
      std::map<int, int> sizes;
      for (int l : label) ++sizes[l];
      for (auto& [l, s] : sizes)
        if (s != d) return;
      ++count;
      return;
    }
    int maxLabel = -1;
    for (int i = 0; i < pos; ++i) maxLabel = std::max(maxLabel, label[i]);
    for (int l = 0; l <= maxLabel + 1; ++l) {
      label[pos] = l;
      rec(pos + 1);
    }
    label[pos] = -1;
  };
  rec(0);
  return count;
}

}  // namespace

TEST(YoungDiagram, StripsZerosAndValidates) {
  YoungDiagram a({2, 2, 0});
  EXPECT_EQ(a.rows(), (std::vector<int>{2, 2}));
  EXPECT_EQ(a.box_count(), 4);
  EXPECT_EQ(a.column_length(0), 2);
  EXPECT_EQ(a.to_string(), "(2,2)");
  EXPECT_THROW(YoungDiagram({1, 2}), std::invalid_argument);
  EXPECT_THROW(YoungDiagram({2, -1}), std::invalid_argument);
}

TEST(EnumerateDiagrams, SmallCasesInDescendingOrder) {
  auto rows = [](const std::vector<YoungDiagram>& ds) {
    std::vector<std::vector<int>> out;
    for (const auto& d : ds) out.push_back(d.rows());
    return out;
  };
  EXPECT_EQ(rows(enumerate_diagrams(2, 2)), (std::vector<std::vector<int>>{{2}, {1, 1}}));
  EXPECT_EQ(rows(enumerate_diagrams(4, 2)), (std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}}));
  EXPECT_EQ(rows(enumerate_diagrams(3, 3)), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}}));
  EXPECT_EQ(enumerate_diagrams(0, 3).size(), 1u);
}

TEST(EnumerateDiagrams, MatchesBruteForceAndIsSorted) {
  for (int d = 1; d <= 4; ++d)
    for (int N = 0; N <= 10; ++N) {
      const auto ds = enumerate_diagrams(N, d);
      std::set<std::vector<int>> got;
      for (const auto& l : ds) got.insert(l.rows());
      EXPECT_EQ(got, brute_partitions(N, d)) << "N=" << N << " d=" << d;
      for (std::size_t i = 1; i < ds.size(); ++i) EXPECT_GT(ds[i - 1].rows(), ds[i].rows());
    }
}

TEST(EnumerateDiagrams, Guardrails) {
  EXPECT_THROW(enumerate_diagrams(-1, 2), std::invalid_argument);
  EXPECT_THROW(enumerate_diagrams(3, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_diagrams(201, 2), std::length_error);
  EXPECT_THROW(enumerate_diagrams(200, 200), std::length_error);
}

TEST(SchurWeylRecord, HookFormulaExamples) {
  const auto r = schur_weyl_record(YoungDiagram({2, 2}), 2);
  EXPECT_EQ(r.hookProduct, 12);
  EXPECT_EQ(r.repDim, 1);
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.measure, Rational(1, 8));

  for (int N = 1; N <= 12; ++N) {
    const auto row = schur_weyl_record(YoungDiagram({N}), 2);
    EXPECT_EQ(row.repDim, N + 1);
    EXPECT_EQ(row.multiplicity, 1);
  }
  EXPECT_EQ(schur_weyl_record(YoungDiagram({6, 6}), 2).multiplicity, 132);
  EXPECT_EQ(schur_weyl_record(YoungDiagram({3, 3}), 2).multiplicity, 5);
  EXPECT_EQ(schur_weyl_record(YoungDiagram({4, 4}), 2).multiplicity, 14);
  EXPECT_THROW(schur_weyl_record(YoungDiagram({1, 1, 1}), 2), std::invalid_argument);
}

TEST(SchurWeylRecord, DimensionSumIsTotalDimension) {
  for (int d = 1; d <= 4; ++d)
    for (int N = 0; N <= 14; ++N) {
      BigInt total = 0;
      Rational measure = 0;
      for (const auto& l : enumerate_diagrams(N, d)) {
        const auto r = schur_weyl_record(l, d);
        EXPECT_GT(r.repDim, 0);
        EXPECT_GT(r.multiplicity, 0);
        total += r.repDim * r.multiplicity;
        measure += r.measure;
      }
      EXPECT_EQ(total, boost::multiprecision::pow(BigInt(d), N)) << "N=" << N << " d=" << d;
      EXPECT_EQ(measure, Rational(1));
    }
}

TEST(SchurWeylRecord, MultiplicityCountsStandardTableaux) {
  std::map<std::vector<int>, BigInt> memo;
  for (int N = 0; N <= 10; ++N)
    for (const auto& l : enumerate_diagrams(N, N == 0 ? 1 : N))
      EXPECT_EQ(schur_weyl_record(l, N == 0 ? 1 : N).multiplicity, count_syt(l.rows(), memo)) << l.to_string();
}

TEST(SchurWeylRecord, QubitMultiplicitySumIsCentralBinomial) {
  for (int N = 0; N <= 12; ++N) EXPECT_EQ(multiplicity_sum(N, 2), binomial(N, N / 2)) << N;
}

TEST(Majorization, Examples) {
  EXPECT_TRUE(majorizes(YoungDiagram({4}), YoungDiagram({2, 2})));
  EXPECT_TRUE(majorizes(YoungDiagram({2, 2}), YoungDiagram({2, 2})));
  EXPECT_TRUE(majorizes(YoungDiagram({3, 1}), YoungDiagram({2, 2})));
  EXPECT_FALSE(majorizes(YoungDiagram({2, 2}), YoungDiagram({3, 1})));
  EXPECT_THROW(majorizes(YoungDiagram({3}), YoungDiagram({2, 2})), std::invalid_argument);
}

TEST(Majorization, RatioIsMonotone) {
  int violations = 0;
  for (int d = 1; d <= 4; ++d)
    for (int N = 1; N <= 12; ++N) {
      const auto all = enumerate_diagrams(N, d);
      for (const auto& a : all)
        for (const auto& b : all)
          if (majorizes(a, b) && dimension_ratio(a, d) < dimension_ratio(b, d)) ++violations;
    }
  EXPECT_EQ(violations, 0);
}

TEST(ExtremalDiagrams, Examples) {
  auto ex = extremal_diagrams(4, 2);
  EXPECT_EQ(ex.minRatio, YoungDiagram({2, 2}));
  EXPECT_EQ(ex.maxRatio, YoungDiagram({4}));
  EXPECT_TRUE(ex.scanned);
  ex = extremal_diagrams(5, 2);
  EXPECT_EQ(ex.minRatio, YoungDiagram({3, 2}));
  EXPECT_EQ(ex.maxRatio, YoungDiagram({5}));
  ex = extremal_diagrams(7, 3);
  EXPECT_EQ(ex.minRatio, YoungDiagram({3, 2, 2}));
  EXPECT_EQ(ex.maxRatio, YoungDiagram({7}));
}

TEST(ExtremalDiagrams, BalancedDiagramIsGlobalMinimum) {
  for (int d = 1; d <= 4; ++d)
    for (int N = 1; N <= 12; ++N) {
      const auto ex = extremal_diagrams(N, d);
      const Rational lo = dimension_ratio(ex.minRatio, d);
      for (const auto& l : enumerate_diagrams(N, d)) EXPECT_LE(lo, dimension_ratio(l, d));
    }
}

TEST(Groupings, CountsAndCanonicalOrder) {
  EXPECT_EQ(groupings(2, 2).count, 1);
  EXPECT_EQ(groupings(4, 2).count, 3);
  EXPECT_EQ(groupings(6, 3).count, 10);
  const auto cat = groupings(4, 2);
  ASSERT_EQ(cat.configurations.size(), 3u);
  EXPECT_EQ(cat.configurations[0], (Grouping{{0, 1}, {2, 3}}));
  EXPECT_EQ(cat.configurations[1], (Grouping{{0, 2}, {1, 3}}));
  EXPECT_EQ(cat.configurations[2], (Grouping{{0, 3}, {1, 2}}));
  EXPECT_THROW(groupings(5, 2), std::invalid_argument);
}

TEST(Groupings, EnumerationMatchesClosedFormAndBruteForce) {
  for (int d = 1; d <= 5; ++d)
    for (int N = d; N <= 10; N += d) {
      const auto cat = groupings(N, d);
      ASSERT_FALSE(cat.countOnly);
      EXPECT_EQ(BigInt(cat.configurations.size()), cat.count);
      EXPECT_EQ(cat.count, count_block_partitions(N, d)) << "N=" << N << " d=" << d;
      std::set<Grouping> distinct(cat.configurations.begin(), cat.configurations.end());
      EXPECT_EQ(distinct.size(), cat.configurations.size());
      EXPECT_TRUE(std::is_sorted(cat.configurations.begin(), cat.configurations.end()));
      for (const auto& g : cat.configurations) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          EXPECT_EQ(static_cast<int>(g[b].size()), d);
          EXPECT_TRUE(std::is_sorted(g[b].begin(), g[b].end()));
          if (b > 0) EXPECT_LT(g[b - 1].front(), g[b].front());
        }
      }
    }
}

TEST(Groupings, CountOnlyAboveGuardrail) {
  const auto cat = groupings(20, 2);
  EXPECT_TRUE(cat.countOnly);
  EXPECT_TRUE(cat.configurations.empty());
  EXPECT_EQ(cat.count, grouping_count(20, 2));
}

TEST(Groupings, ReferenceCoversRectangularMultiplicity) {
  for (int N = 2; N <= 16; N += 2)
    EXPECT_GE(grouping_count(N, 2), schur_weyl_record(balanced_diagram(N, 2), 2).multiplicity) << N;
  for (int N = 3; N <= 9; N += 3)
    EXPECT_GE(grouping_count(N, 3), schur_weyl_record(balanced_diagram(N, 3), 3).multiplicity) << N;
}

TEST(AsymptoticMultiplicity, ApproachesExactValue) {
  auto ratio = [](int N) {
    const BigInt m = schur_weyl_record(balanced_diagram(N, 2), 2).multiplicity;
    return std::exp(std::log(m.convert_to<double>()) - log_asymptotic_multiplicity(N, 2));
  };
  const double r12 = ratio(12);
  EXPECT_GT(r12, 0.8);
  EXPECT_LT(r12, 1.2);
  EXPECT_LT(std::abs(ratio(40) - 1.0), std::abs(ratio(20) - 1.0));
  EXPECT_NEAR(log_asymptotic_multiplicity(60, 2) / std::log(2.0) / 60.0, 1.0, 0.5);
  EXPECT_THROW(asymptotic_multiplicity(5, 2), std::invalid_argument);
}

TEST(CausePlans, ExactAndApproximate) {
  EXPECT_EQ(cause_exact_plan(6, 2).N, 4);
  EXPECT_EQ(cause_exact_plan(2, 2).N, 2);
  EXPECT_EQ(cause_exact_plan(1, 2).N, 1);
  EXPECT_EQ(cause_exact_plan(6, 2).errorBound, 0.0);
  for (int N0 = 1; N0 <= 6; ++N0) {
    const auto k = static_cast<std::int64_t>(std::llround(std::pow(2.0, 2 * N0)));
    EXPECT_EQ(cause_approx_plan(k, 2, 0.0).N, N0);
  }
  const auto p = cause_approx_plan(1000, 2, 0.1);
  EXPECT_GE(p.N, 1);
  EXPECT_GE(p.errorBound, 0.0);
  EXPECT_LE(p.errorBound, 1.0);
  EXPECT_THROW(cause_exact_plan(0, 2), std::invalid_argument);
  EXPECT_THROW(cause_approx_plan(0, 2, 0.1), std::invalid_argument);
}

TEST(Rational, ToDoubleHandlesHugeOperands) {
  const BigInt big = boost::multiprecision::pow(BigInt(10), 400);
  EXPECT_DOUBLE_EQ(to_double(Rational(big, big * 4)), 0.25);
  EXPECT_DOUBLE_EQ(to_double(Rational(-3, 8)), -0.375);
  EXPECT_DOUBLE_EQ(to_double(Rational(47, 768)), 47.0 / 768.0);
}
