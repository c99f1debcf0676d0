#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "mimd/schubert.hpp"

using namespace mimd;

namespace {

// Independent oracle: expand Schur polynomials in k+1 variables from
// semistandard tableaux, multiply them, and peel off the Schur expansion by
// repeatedly taking the lexicographically largest monomial.
using Poly = std::map<std::vector<int>, long>;

Poly schur_poly(const Partition& shape, int vars) {
    Poly out;
    if (shape.length() > vars) return out;
    std::vector<std::vector<int>> t;
    for (int r = 0; r < shape.length(); ++r) t.emplace_back(static_cast<std::size_t>(shape[r]), 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            for (const auto& row : t) {
                for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
            }
            ++out[e];
            return;
        }
        const auto [r, c] = cells[i];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= vars; ++v) {
            t[r][c] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

CohClass oracle_product(const Partition& lambda, const Partition& mu, const GrassCtx& ctx) {
    Poly p = multiply(schur_poly(lambda, ctx.rows()), schur_poly(mu, ctx.rows()));
    CohClass out(ctx);
    while (!p.empty()) {
        const auto lead = p.rbegin()->first;
        const long c = p.rbegin()->second;
        const Partition nu(lead);
        if (nu.fits(ctx)) out.add_term(nu, c);
        for (const auto& [e, v] : schur_poly(nu, ctx.rows())) {
            p[e] -= c * v;
            if (p[e] == 0) p.erase(e);
        }
    }
    return out;
}

// Brute-force Pieri: every nu in the box of the right size that is a
// horizontal strip over mu.
CohClass oracle_pieri(int r, const Partition& mu, const GrassCtx& ctx) {
    CohClass out(ctx);
    for (const auto& nu : box_partitions(ctx)) {
        if (nu.size() != mu.size() + r) continue;
        bool strip = true;
        for (int i = 0; i < ctx.rows(); ++i) {
            const int upper = i == 0 ? ctx.cols() : mu[i - 1];
            strip = strip && mu[i] <= nu[i] && nu[i] <= upper;
        }
        if (strip) out.add_term(nu, 1);
    }
    return out;
}

const GrassCtx kGr13 = gr13();

CohClass X(const Partition& p, Coeff c = 1) { return CohClass(kGr13, p, c); }

}  // namespace

TEST(Partition, TrimsZerosAndRejectsIncreasing) {
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, 0, 1}), DomainError);
    EXPECT_TRUE(Partition{}.empty());
    EXPECT_TRUE(Partition{}.fits(kGr13));
    EXPECT_FALSE(Partition({3}).fits(kGr13));
    EXPECT_FALSE(Partition({1, 1, 1}).fits(kGr13));
}

TEST(Partition, OrderIsCodimensionThenLex) {
    const auto all = box_partitions(kGr13);
    const std::vector<Partition> expected{{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}};
    EXPECT_EQ(all, expected);
}

TEST(GrassCtx, RejectsBadDimensions) {
    EXPECT_THROW(GrassCtx(3, 3), DomainError);
    EXPECT_THROW(GrassCtx(-1, 3), DomainError);
    EXPECT_EQ(GrassCtx(1, 3).dim(), 4);
}

TEST(SubsetToPartition, Examples) {
    EXPECT_EQ(subset_to_partition({1, 3}, kGr13), Partition({2, 1}));
    EXPECT_EQ(subset_to_partition({3, 4}, kGr13), Partition{});
    EXPECT_EQ(subset_to_partition({1, 4}, kGr13), Partition({2}));
    EXPECT_EQ(subset_to_partition({2, 3}, kGr13), Partition({1, 1}));
    EXPECT_EQ(subset_to_partition({1, 2}, kGr13), Partition({2, 2}));
    const GrassCtx ctx(2, 6);
    EXPECT_EQ(subset_to_partition({1, 2, 3}, ctx), Partition({4, 4, 4}));
}

TEST(SubsetToPartition, Errors) {
    EXPECT_THROW(subset_to_partition({1}, kGr13), DomainError);
    EXPECT_THROW(subset_to_partition({1, 1}, kGr13), DomainError);
    EXPECT_THROW(subset_to_partition({0, 2}, kGr13), DomainError);
    EXPECT_THROW(subset_to_partition({1, 5}, kGr13), DomainError);
}

TEST(SubsetToPartition, RoundTripAllSubsets) {
    for (int d = 1; d <= 8; ++d) {
        for (int k = 0; k < d; ++k) {
            const GrassCtx ctx(k, d);
            // every (k+1)-subset of 1..d+1 via bitmasks
            int count = 0;
            for (unsigned mask = 0; mask < (1u << (d + 1)); ++mask) {
                if (__builtin_popcount(mask) != k + 1) continue;
                std::vector<int> j;
                for (int b = 0; b <= d; ++b) {
                    if (mask & (1u << b)) j.push_back(b + 1);
                }
                const Partition lambda = subset_to_partition(j, ctx);
                ASSERT_TRUE(lambda.fits(ctx));
                ASSERT_EQ(partition_to_subset(lambda, ctx), j);
                ++count;
            }
            EXPECT_EQ(static_cast<std::size_t>(count), box_partitions(ctx).size());
        }
    }
}

TEST(DimSchubert, Examples) {
    EXPECT_EQ(dim_schubert(Partition{}, kGr13), 4);
    EXPECT_EQ(dim_schubert(Partition({2, 2}), kGr13), 0);
    EXPECT_EQ(dim_schubert(Partition({2, 1}), kGr13), 1);
    EXPECT_THROW(dim_schubert(Partition({3}), kGr13), DomainError);
}

TEST(Poset, ContainmentExamples) {
    EXPECT_TRUE(poset_contains(Partition({1}), Partition({2, 1})));
    EXPECT_TRUE(poset_contains(Partition({2, 1}), Partition({2, 1})));
    EXPECT_FALSE(poset_contains(Partition({2}), Partition({1, 1})));
    EXPECT_FALSE(poset_contains(Partition({1, 1}), Partition({2})));
}

TEST(Poset, HasseDiagramOfGr13) {
    const std::vector<std::pair<Partition, Partition>> expected{
        {{}, {1}}, {{1}, {1, 1}}, {{1}, {2}}, {{1, 1}, {2, 1}}, {{2}, {2, 1}}, {{2, 1}, {2, 2}}};
    EXPECT_EQ(poset_covers(kGr13), expected);
    // graded by dimension
    for (const auto& [lo, hi] : poset_covers(kGr13)) {
        EXPECT_EQ(dim_schubert(lo, kGr13), dim_schubert(hi, kGr13) + 1);
    }
}

TEST(Pieri, Examples) {
    EXPECT_EQ(pieri(1, Partition({2}), kGr13), X({2, 1}));
    EXPECT_EQ(pieri(1, Partition({1}), kGr13), X({2}) + X({1, 1}));
    EXPECT_EQ(pieri(1, Partition{}, kGr13), X({1}));
    EXPECT_THROW(pieri(3, Partition{}, kGr13), DomainError);
}

TEST(Pieri, MatchesBruteForceAndIsMultiplicityFree) {
    for (int rows = 1; rows <= 4; ++rows) {
        for (int cols = 1; cols <= 4; ++cols) {
            const GrassCtx ctx(rows - 1, rows - 1 + cols);
            for (int r = 1; r <= cols; ++r) {
                for (const auto& mu : box_partitions(ctx)) {
                    const CohClass p = pieri(r, mu, ctx);
                    ASSERT_EQ(p, oracle_pieri(r, mu, ctx));
                    for (const auto& [nu, c] : p.terms()) ASSERT_EQ(c, 1);
                }
            }
        }
    }
}

TEST(LrProduct, Examples) {
    EXPECT_EQ(lr_product(Partition({2}), Partition({2}), kGr13), X({2, 2}));
    EXPECT_TRUE(lr_product(Partition({2}), Partition({1, 1}), kGr13).is_zero());
    EXPECT_EQ(lr_product(Partition({1}), Partition({1}), kGr13), X({2}) + X({1, 1}));
}

TEST(LrProduct, KnownCoefficientOutsideSmallBoxes) {
    // c^{(3,2,1)}_{(2,1),(2,1)} = 2
    EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
    const GrassCtx big(2, 5);
    EXPECT_EQ(lr_product(Partition({2, 1}), Partition({2, 1}), big).coeff(Partition({3, 2, 1})), 2);
}

TEST(LrProduct, MatchesSchurPolynomialOracle) {
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 3; ++cols) {
            const GrassCtx ctx(rows - 1, rows - 1 + cols);
            const auto basis = box_partitions(ctx);
            for (const auto& a : basis) {
                for (const auto& b : basis) {
                    ASSERT_EQ(lr_product(a, b, ctx), oracle_product(a, b, ctx))
                        << "box " << rows << "x" << cols;
                }
            }
        }
    }
}

TEST(LrProduct, CommutativeAndGraded) {
    for (const GrassCtx ctx : {GrassCtx(1, 3), GrassCtx(1, 4), GrassCtx(2, 5)}) {
        const auto basis = box_partitions(ctx);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                const CohClass ab = lr_product(a, b, ctx);
                EXPECT_EQ(ab, lr_product(b, a, ctx));
                for (const auto& [nu, c] : ab.terms()) EXPECT_EQ(nu.size(), a.size() + b.size());
            }
        }
    }
}

TEST(LrProduct, AssociativeIn2x2And2x3Boxes) {
    for (const GrassCtx ctx : {GrassCtx(1, 3), GrassCtx(1, 4)}) {
        const auto basis = box_partitions(ctx);
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis) {
                    const CohClass ca(ctx, a), cb(ctx, b), cc(ctx, c);
                    ASSERT_EQ(cup(cup(ca, cb), cc), cup(ca, cup(cb, cc)));
                }
            }
        }
    }
}

TEST(LrProduct, AgreesWithPieriForOneRowFactors) {
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 3; ++cols) {
            const GrassCtx ctx(rows - 1, rows - 1 + cols);
            for (int r = 1; r <= cols; ++r) {
                for (const auto& mu : box_partitions(ctx)) {
                    ASSERT_EQ(lr_product(Partition{r}, mu, ctx), pieri(r, mu, ctx));
                }
            }
        }
    }
}

TEST(LrProduct, PoincareDualityInGr13) {
    const auto basis = box_partitions(kGr13);
    for (const auto& a : basis) {
        const Partition complement{2 - a[1], 2 - a[0]};
        for (const auto& b : basis) {
            EXPECT_EQ(lr_product(a, b, kGr13).coeff(Partition({2, 2})), b == complement ? 1 : 0);
        }
    }
}

TEST(Cup, Examples) {
    EXPECT_EQ(cup(X({1}) + X({2}), X({})), X({1}) + X({2}));
    EXPECT_EQ(cup(X({1}), X({2}) + X({1, 1})), X({2, 1}, 2));
    EXPECT_EQ(cup(X({2}, 2), X({2}, 3)), X({2, 2}, 6));
    EXPECT_THROW(cup(X({1}), CohClass(GrassCtx(1, 4), Partition{1})), DomainError);
}

TEST(Gr13Table, FrozenEntries) {
    const auto t = gr13_table();
    // index: 0 {}, 1 (1), 2 (1,1), 3 (2), 4 (2,1), 5 (2,2)
    EXPECT_EQ(t[4][1], X({2, 2}));
    EXPECT_EQ(t[2][2], X({2, 2}));
    EXPECT_EQ(t[1][1], X({2}) + X({1, 1}));
    EXPECT_EQ(t[1][3], X({2, 1}));
    EXPECT_EQ(t[1][2], X({2, 1}));
    EXPECT_EQ(t[3][3], X({2, 2}));
    EXPECT_TRUE(t[3][2].is_zero());
    EXPECT_EQ(t[5][0], X({2, 2}));
    for (std::size_t j = 1; j < 6; ++j) EXPECT_TRUE(t[5][j].is_zero());
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(t[0][j], X(box_partitions(kGr13)[j]));
}

TEST(CohClass, CanonicalForm) {
    CohClass c = X({1}) + X({1}, -1);
    EXPECT_TRUE(c.is_zero());
    EXPECT_THROW(X({3}), DomainError);
    CohClass big(kGr13, Partition{1}, INT64_MAX);
    EXPECT_THROW(big += X({1}), std::overflow_error);
}
