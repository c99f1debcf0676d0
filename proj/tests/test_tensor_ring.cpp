#include <gtest/gtest.h>

#include <random>

#include "mimd/tensor_ring.hpp"

using namespace mimd;

namespace {

const GrassCtx kGr = gr13();

CohClass X(const Partition& p, Coeff c = 1) { return CohClass(kGr, p, c); }

TensorClass random_tensor(std::mt19937& rng, std::size_t n) {
    const auto basis = box_partitions(kGr);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nterms(0, 4);
    TensorClass t(n, kGr);
    for (int i = nterms(rng); i > 0; --i) {
        SlotKey key;
        for (std::size_t s = 0; s < n; ++s) key.push_back(basis[pick(rng)]);
        t.add_term(key, coeff(rng));
    }
    return t;
}

MDegPoly random_poly(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(0, 5);
    MDegPoly p(n);
    for (int i = nterms(rng); i > 0; --i) {
        Exponents e(n);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

std::vector<int> codims(const SlotKey& k) {
    std::vector<int> out;
    for (const auto& p : k) out.push_back(p.size());
    return out;
}

}  // namespace

TEST(TensorOf, Examples) {
    const TensorClass a = tensor_of({X({1}), X({})});
    ASSERT_EQ(a.terms().size(), 1u);
    EXPECT_EQ(a.coeff({Partition{1}, Partition{}}), 1);

    const TensorClass b = tensor_of({X({1}) + X({2}), X({1})});
    EXPECT_EQ(b.terms().size(), 2u);
    EXPECT_EQ(b.coeff({Partition{1}, Partition{1}}), 1);
    EXPECT_EQ(b.coeff({Partition{2}, Partition{1}}), 1);

    const TensorClass c = tensor_of({X({2}, 2), X({1}, 3), X({})});
    ASSERT_EQ(c.terms().size(), 1u);
    EXPECT_EQ(c.coeff({Partition{2}, Partition{1}, Partition{}}), 6);

    EXPECT_THROW(tensor_of({}), DomainError);
    EXPECT_THROW(tensor_of({X({1}), CohClass(GrassCtx(1, 4), Partition{1})}), DomainError);
}

TEST(TensorMul, Examples) {
    const TensorClass b = tensor_of({X({2}) + X({1, 1}), X({1}, 2)});
    EXPECT_EQ(tensor_mul(tensor_one(2, kGr), b), b);

    const TensorClass lhs = tensor_of({X({1}), X({1})});
    const TensorClass rhs = tensor_of({X({2}), X({1, 1})});
    EXPECT_EQ(tensor_mul(lhs, rhs), tensor_of({X({2, 1}), X({2, 1})}));

    EXPECT_TRUE(tensor_mul(tensor_of({X({2}), X({})}), tensor_of({X({1, 1}), X({})})).is_zero());

    EXPECT_THROW(tensor_mul(tensor_one(2, kGr), tensor_one(3, kGr)), DomainError);
}

TEST(TensorMul, RingPropertiesOnRandomInputs) {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 1 + iter % 3;
        const auto a = random_tensor(rng, n), b = random_tensor(rng, n), c = random_tensor(rng, n);
        ASSERT_EQ(tensor_mul(a, b), tensor_mul(b, a));
        ASSERT_EQ(tensor_mul(tensor_mul(a, b), c), tensor_mul(a, tensor_mul(b, c)));
        ASSERT_EQ(tensor_mul(a, b + c), tensor_mul(a, b) + tensor_mul(a, c));
        ASSERT_EQ(tensor_mul(tensor_one(n, kGr), a), a);
        ASSERT_EQ(tensor_mul(a, tensor_one(n, kGr)), a);
    }
}

TEST(TensorMul, CodimensionVectorsAdd) {
    const auto basis = box_partitions(kGr);
    for (const auto& p : basis) {
        for (const auto& q : basis) {
            for (const auto& r : basis) {
                const SlotKey ka{p, q}, kb{q, r};
                TensorClass a(2, kGr), b(2, kGr);
                a.add_term(ka, 1);
                b.add_term(kb, 1);
                const TensorClass prod = tensor_mul(a, b);
                for (const auto& [k, c] : prod.terms()) {
                    const auto got = codims(k);
                    EXPECT_EQ(got[0], p.size() + q.size());
                    EXPECT_EQ(got[1], q.size() + r.size());
                }
            }
        }
    }
}

TEST(TensorClass, DeterministicOrder) {
    // Same total codimension: larger first-slot codimension first.
    TensorClass t(3, kGr);
    t.add_term({Partition{}, Partition{1}, Partition{2}}, 1);
    t.add_term({Partition{2}, Partition{1}, Partition{}}, 1);
    t.add_term({Partition{1}, Partition{1}, Partition{1}}, 1);
    std::vector<std::vector<int>> order;
    for (const auto& [k, c] : t.terms()) order.push_back(codims(k));
    EXPECT_EQ(order, (std::vector<std::vector<int>>{{2, 1, 0}, {1, 1, 1}, {0, 1, 2}}));
}

TEST(MDegPoly, Examples) {
    const MDegPoly a = monomial(2, {2, 1}, 4), b = monomial(2, {1, 2}, 4);
    const MDegPoly sum = poly_add(a, b);
    EXPECT_EQ(sum.terms().size(), 2u);
    EXPECT_EQ(poly_total_degree(sum), 3);

    const MDegPoly prod = poly_mul(monomial(1, {1}), monomial(1, {5}));
    EXPECT_EQ(prod, monomial(1, {6}));

    EXPECT_EQ(MDegPoly(3).total_degree(), -1);
    EXPECT_THROW(poly_add(MDegPoly(2), MDegPoly(3)), DomainError);
    EXPECT_THROW(monomial(2, {1}), DomainError);
}

TEST(MDegPoly, GradedLexOrder) {
    MDegPoly p(2);
    p.add_term({1, 2}, 4);
    p.add_term({2, 1}, 4);
    p.add_term({1, 0}, 1);
    std::vector<Exponents> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    EXPECT_EQ(order, (std::vector<Exponents>{{1, 0}, {2, 1}, {1, 2}}));
}

TEST(MDegPoly, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + iter % 4;
        const auto a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
        const MDegPoly one = monomial(n, Exponents(n, 0));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * one, a);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(MDegPoly, OverflowIsDetected) {
    const MDegPoly big = monomial(1, {1}, INT64_MAX / 2 + 1);
    EXPECT_THROW(big * monomial(1, {0}, 2), std::overflow_error);
    EXPECT_THROW(big + big, std::overflow_error);
}
