#include <gtest/gtest.h>

#include <thread>

#include "straightlaw/straightening.hpp"
#include "support.hpp"

using namespace straightlaw;
using straightlaw::testkit::Gen;

namespace {

Polynomial x(unsigned i, unsigned j) { return Polynomial(Variable::x(i, j)); }

std::vector<Minor> all_minors(unsigned m, unsigned n, bool include_unit) {
    std::vector<Minor> out;
    for (unsigned p = include_unit ? 0 : 1; p <= std::min(m, n); ++p) {
        for (const auto& r : subsets_of_size(m, p)) {
            for (const auto& c : subsets_of_size(n, p)) out.push_back({r, c});
        }
    }
    return out;
}

Multiset merged(const IndexSet& a, const IndexSet& b) {
    const std::vector<IndexSet> both{a, b};
    return multiset_content(both);
}

// Every documented property of one straighten_pair call.
void check_pair(const MinorPair& p, unsigned m, unsigned n) {
    const PairCombination out = straighten_pair(p, m, n);
    ASSERT_EQ(expand(out, m, n), expand_minor(p.first, m, n) * expand_minor(p.second, m, n)) << p.first << p.second;
    if (leq(p.first, p.second)) {
        ASSERT_EQ(out.size(), 1U);
        ASSERT_EQ(out.begin()->first, p);
        return;
    }
    const Multiset rows = merged(p.first.rows, p.second.rows);
    const Multiset cols = merged(p.first.cols, p.second.cols);
    for (const auto& [t, c] : out) {
        ASSERT_NE(c, 0);
        ASSERT_FALSE(t.first.is_zero() || t.second.is_zero());
        ASSERT_TRUE(less(t.first, p.first)) << "term " << t.first << t.second << " from " << p.first << p.second;
        ASSERT_TRUE(leq(t.first, t.second)) << "term " << t.first << t.second << " from " << p.first << p.second;
        ASSERT_EQ(merged(t.first.rows, t.second.rows), rows);
        ASSERT_EQ(merged(t.first.cols, t.second.cols), cols);
    }
}

}  // namespace

TEST(StraightenLaplace, Examples) {
    EXPECT_EQ(straighten_laplace(IndexSet{1}, IndexSet{1}, 2), LaplaceCombination::single(IndexSet{1}, IndexSet{1}, 2));
    EXPECT_EQ(straighten_laplace(IndexSet{2}, IndexSet{2}, 2), LaplaceCombination::single(IndexSet{1}, IndexSet{1}, 2));
    const auto three = straighten_laplace(IndexSet{3}, IndexSet{3}, 3);
    EXPECT_EQ(expand(three), x(3, 3) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)));
    for (const auto& [k, c] : three.terms()) {
        EXPECT_TRUE(is_good(k.first, 3) && is_good(k.second, 3));
    }
    EXPECT_TRUE(straighten_laplace(IndexSet{1}, IndexSet{1, 2}, 3).empty());
}

TEST(StraightenLaplace, ExhaustiveUpToFour) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (const auto& a : subsets_of_size(n, p)) {
                for (const auto& b : subsets_of_size(n, p)) {
                    const auto out = straighten_laplace(a, b, n);
                    for (const auto& [k, c] : out.terms()) {
                        ASSERT_TRUE(is_good(k.first, n) && is_good(k.second, n)) << a << "|" << b;
                        ASSERT_TRUE(leq(k.first, a) && leq(k.second, b)) << a << "|" << b;
                    }
                    ASSERT_EQ(expand(out), expand_laplace({a, b, n})) << a << "|" << b << " n=" << n;
                }
            }
        }
    }
}

TEST(StraightenLaplace, ReductionStepsDescend) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (const auto& a : subsets_of_size(n, p)) {
                for (const auto& b : subsets_of_size(n, p)) {
                    if (is_good(a, n) && is_good(b, n)) {
                        EXPECT_THROW(reduction_step(a, b, n), InvalidInput);
                        continue;
                    }
                    const ReductionStep step = reduction_step(a, b, n);
                    ASSERT_TRUE(expand(step.relation).is_zero());
                    ASSERT_TRUE(check_relation(step.relation));
                    ASSERT_EQ(expand(step.rest), expand_laplace({a, b, n}));
                    if (step.kind == ReductionStep::Kind::Transposed) continue;
                    for (const auto& [k, c] : step.rest.terms()) {
                        ASSERT_TRUE(leq(k.first, a) && leq(k.second, b));
                        ASSERT_FALSE(k.first == a && k.second == b);
                    }
                }
            }
        }
    }
}

TEST(StraightenLaplace, ConcurrentCallsAgree) {
    LaplaceStraightener shared;
    std::vector<std::vector<LaplaceCombination>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] {
            for (unsigned p = 0; p <= 4; ++p) {
                for (const auto& a : subsets_of_size(4, p)) {
                    for (const auto& b : subsets_of_size(4, p)) results[t].push_back(shared.straighten(a, b, 4));
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (std::size_t t = 1; t < results.size(); ++t) EXPECT_EQ(results[t], results[0]);
    EXPECT_GT(shared.cache_size(), 0U);
    shared.clear();
    EXPECT_EQ(shared.cache_size(), 0U);
}

TEST(MergeMap, Examples) {
    const MergeMap a = merge_map(IndexSet{1, 3}, IndexSet{1, 2});
    EXPECT_EQ(a.k, 4U);
    EXPECT_EQ(a.f, (std::vector<unsigned>{1, 1, 2, 3}));
    EXPECT_EQ(a.kprime, (IndexSet{1, 4}));
    EXPECT_EQ(a.kdoubleprime, (IndexSet{2, 3}));

    const MergeMap b = merge_map(IndexSet{1, 2}, IndexSet{});
    EXPECT_EQ(b.f, (std::vector<unsigned>{1, 2}));
    EXPECT_EQ(b.kprime, (IndexSet{1, 2}));
    EXPECT_TRUE(b.kdoubleprime.empty());

    const MergeMap c = merge_map(IndexSet{1}, IndexSet{1});
    EXPECT_EQ(c.f, (std::vector<unsigned>{1, 1}));
    EXPECT_EQ(c.kprime, (IndexSet{1}));
    EXPECT_EQ(c.kdoubleprime, (IndexSet{2}));
    EXPECT_FALSE(c.injective_on(IndexSet{1, 2}));
    EXPECT_TRUE(c.injective_on(IndexSet{2}));
}

TEST(MergeMap, StructuralProperties) {
    Gen g;
    for (int trial = 0; trial < 2000; ++trial) {
        const IndexSet u1 = g.subset(6);
        const IndexSet u2 = g.subset(6);
        const MergeMap f = merge_map(u1, u2);
        ASSERT_EQ(f.k, u1.size() + u2.size());
        ASSERT_EQ(f.kprime.united(f.kdoubleprime), IndexSet::range(f.k));
        ASSERT_TRUE(f.kprime.intersected(f.kdoubleprime).empty());
        ASSERT_EQ(f.image(f.kprime), u1);
        ASSERT_EQ(f.image(f.kdoubleprime), u2);
        for (unsigned a = 1; a < f.k; ++a) {
            ASSERT_LE(f(a), f(a + 1));
            if (f(a) == f(a + 1)) {
                ASSERT_TRUE(f.kprime.contains(a) && f.kdoubleprime.contains(a + 1));
            }
        }
    }
}

// P < K' with f injective on P gives f(P) < f(K').
TEST(MergeMap, StrictOrderIsPreservedOnInjectiveSets) {
    Gen g;
    std::size_t checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const MergeMap f = merge_map(g.subset(5), g.subset(5));
        for_each_subset(IndexSet::range(f.k), [&](const IndexSet& p) {
            if (!f.injective_on(p) || !less(p, f.kprime)) return;
            ++checked;
            ASSERT_TRUE(less(f.image(p), f.image(f.kprime))) << p;
        });
    }
    EXPECT_GT(checked, 1000U);
}

TEST(StraightenPair, Examples) {
    const MinorPair ordered{{IndexSet{1}, IndexSet{1}}, {IndexSet{2}, IndexSet{2}}};
    const PairCombination same = straighten_pair(ordered, 2, 2);
    ASSERT_EQ(same.size(), 1U);
    EXPECT_EQ(same.begin()->first, ordered);
    EXPECT_EQ(same.begin()->second, 1);

    const PairCombination out = straighten_pair({{IndexSet{2}, IndexSet{1}}, {IndexSet{1}, IndexSet{2}}}, 2, 2);
    PairCombination expected;
    expected[{{IndexSet{1}, IndexSet{1}}, {IndexSet{2}, IndexSet{2}}}] = 1;
    expected[{{IndexSet{1, 2}, IndexSet{1, 2}}, {IndexSet{}, IndexSet{}}}] = -1;
    EXPECT_EQ(out, expected) << to_string(out);

    EXPECT_TRUE(straighten_pair({{IndexSet{1}, IndexSet{1, 2}}, {IndexSet{1}, IndexSet{1}}}, 2, 2).empty());
    EXPECT_THROW(straighten_pair({{IndexSet{3}, IndexSet{1}}, {IndexSet{1}, IndexSet{1}}}, 2, 2), InvalidInput);
}

TEST(StraightenPair, ExhaustiveUpToThree) {
    for (unsigned m = 1; m <= 3; ++m) {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto minors = all_minors(m, n, true);
            for (const auto& a : minors) {
                for (const auto& b : minors) ASSERT_NO_FATAL_FAILURE(check_pair({a, b}, m, n));
            }
        }
    }
}

TEST(StraightenPair, RandomThreeByFour) {
    Gen g;
    for (int trial = 0; trial < 300; ++trial) ASSERT_NO_FATAL_FAILURE(check_pair({g.minor(3, 4), g.minor(3, 4)}, 3, 4));
}
