#include <gtest/gtest.h>

#include <map>
#include <set>

#include "tschur/partition.hpp"

using namespace tschur;

namespace {

// Euler's pentagonal recurrence for p(n).
std::vector<Integer> euler_partition_counts(int N)
{
    std::vector<Integer> p(N + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            Integer s = (k % 2) ? 1 : -1;
            p[n] += s * p[n - g1];
            if (g2 <= n) p[n] += s * p[n - g2];
        }
    }
    return p;
}

// Standard Young tableaux counted by removing the cell holding the largest entry.
Integer syt_by_corners(const std::vector<int>& l, std::map<std::vector<int>, Integer>& memo)
{
    int n = 0;
    for (int v : l) n += v;
    if (n <= 1) return 1;
    if (auto it = memo.find(l); it != memo.end()) return it->second;
    Integer total = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        bool corner = (i + 1 == l.size()) || l[i + 1] < l[i];
        if (!corner) continue;
        auto m = l;
        m[i]--;
        if (m[i] == 0) m.pop_back();
        total += syt_by_corners(m, memo);
    }
    return memo[l] = total;
}

} // namespace

TEST(Partition, ConjugateExamples)
{
    EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_EQ(Partition({2, 1, 0, 0}), (Partition{2, 1}));
}

TEST(Partition, ConjugationInvolutionAndWeight)
{
    for (const auto& l : enumerate(12, EnumerateMode::up_to_weight)) {
        EXPECT_EQ(l.conjugate().conjugate(), l);
        EXPECT_EQ(l.conjugate().size(), l.size());
    }
}

TEST(Partition, EnumerateCounts)
{
    EXPECT_EQ(enumerate(4).size(), 5u);
    auto zero = enumerate(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].empty());
    auto p = euler_partition_counts(40);
    // p(0) + ... + p(10) = 139
    Integer upto = 0;
    for (int N = 0; N <= 10; ++N) upto += p[N];
    EXPECT_EQ(upto, 139);
    EXPECT_EQ(Integer(enumerate(10, EnumerateMode::up_to_weight).size()), upto);
    for (int N = 0; N <= 40; ++N) EXPECT_EQ(Integer(enumerate(N).size()), p[N]) << N;
}

TEST(Partition, EnumerateOrderAndUniqueness)
{
    auto v = enumerate(6);
    std::set<Partition> seen(v.begin(), v.end());
    EXPECT_EQ(seen.size(), v.size());
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GT(v[i - 1], v[i]);
    EXPECT_EQ(v.front(), Partition{6});
    EXPECT_EQ(v.back(), (Partition{1, 1, 1, 1, 1, 1}));
    for (const auto& l : enumerate(8, EnumerateMode::exact_weight, 2)) EXPECT_LE(l.length(), 2);
}

TEST(Partition, SytCount)
{
    EXPECT_EQ(syt_count(Partition{1}), 1);
    EXPECT_EQ(syt_count(Partition{2, 1}), 2);
    Integer s = 0;
    for (const auto& l : enumerate(5)) s += syt_count(l) * syt_count(l);
    EXPECT_EQ(s, 120);
    std::map<std::vector<int>, Integer> memo;
    for (const auto& l : enumerate(8, EnumerateMode::up_to_weight)) EXPECT_EQ(syt_count(l), syt_by_corners(l.parts(), memo)) << to_string(l);
}

TEST(Partition, FrobeniusPoints)
{
    EXPECT_EQ(frobenius_points(Partition{}, 3).points, (std::vector<int>{-1, -2, -3}));
    EXPECT_EQ(frobenius_points(Partition{1}, 3).points, (std::vector<int>{0, -2, -3}));
    EXPECT_EQ(frobenius_points(Partition{1, 1}, 2).points, (std::vector<int>{0, -1}));
    EXPECT_THROW(frobenius_points(Partition{1, 1}, 1), std::invalid_argument);
}

TEST(Partition, ContainsPoints)
{
    EXPECT_TRUE(contains_points(Partition{1, 1}, std::vector<int>{-1}));
    EXPECT_FALSE(contains_points(Partition{1}, std::vector<int>{-1}));
    EXPECT_TRUE(contains_points(Partition{3, 1}, std::vector<int>{}));
    EXPECT_TRUE(contains_points(Partition{3, 1}, PointSet{{2, -1, -3}, 3}));
}

TEST(Partition, ParticleHoleDuality)
{
    for (const auto& l : enumerate(10, EnumerateMode::up_to_weight)) {
        const int K = 11;
        auto a = frobenius_points(l, K).points;
        auto b = frobenius_points(l.conjugate(), K).points;
        std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        for (int x = -K; x <= K - 1; ++x) EXPECT_NE(sa.count(x), sb.count(-1 - x)) << to_string(l) << " " << x;
    }
}

TEST(Partition, ToString)
{
    EXPECT_EQ(to_string(Partition{3, 1}), "[3,1]");
    EXPECT_EQ(to_string(Partition{}), "[]");
}
