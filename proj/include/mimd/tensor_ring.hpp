#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mimd/schubert.hpp"

namespace mimd {

/// One Kunneth basis element: a Schubert index per slot.
using SlotKey = std::vector<Partition>;

/// Orders slot keys by total codimension, then by the per-slot codimension
/// vector (larger first), then by the per-slot partitions.
struct SlotKeyOrder {
    bool operator()(const SlotKey& a, const SlotKey& b) const;
};

/// Element of H*(Gr)^{(x) n}.
class TensorClass {
public:
    using Terms = std::map<SlotKey, Coeff, SlotKeyOrder>;

    TensorClass(std::size_t n, GrassCtx ctx);

    std::size_t slots() const { return n_; }
    const GrassCtx& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const SlotKey& key) const;

    void add_term(const SlotKey& key, Coeff c);

    TensorClass& operator+=(const TensorClass& o);
    friend TensorClass operator+(TensorClass a, const TensorClass& b) { return a += b; }
    friend TensorClass operator*(Coeff s, const TensorClass& a);

    friend bool operator==(const TensorClass&, const TensorClass&) = default;

private:
    std::size_t n_;
    GrassCtx ctx_;
    Terms terms_;
};

/// All-[X_{}] tensor, the multiplicative identity.
TensorClass tensor_one(std::size_t n, const GrassCtx& ctx);

/// Outer product of per-slot classes.
TensorClass tensor_of(const std::vector<CohClass>& slots);

/// Slotwise cup product.
TensorClass tensor_mul(const TensorClass& a, const TensorClass& b);

using Exponents = std::vector<int>;

/// Graded order on exponent vectors: lower total degree first, then
/// lexicographically larger first (z1^2*z2 before z1*z2^2).
struct GradedLexOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in z1..zn with exact integer coefficients.
class MDegPoly {
public:
    using Terms = std::map<Exponents, Coeff, GradedLexOrder>;

    explicit MDegPoly(std::size_t n) : n_(n) {}

    std::size_t vars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const Exponents& e) const;

    void add_term(const Exponents& e, Coeff c);

    /// Max exponent sum over terms; -1 for the zero polynomial.
    int total_degree() const;

    MDegPoly& operator+=(const MDegPoly& o);
    friend MDegPoly operator+(MDegPoly a, const MDegPoly& b) { return a += b; }
    friend MDegPoly operator-(const MDegPoly& a, const MDegPoly& b);
    friend MDegPoly operator*(const MDegPoly& a, const MDegPoly& b);
    friend MDegPoly operator*(Coeff s, const MDegPoly& a);

    friend bool operator==(const MDegPoly&, const MDegPoly&) = default;

private:
    std::size_t n_;
    Terms terms_;
};

MDegPoly monomial(std::size_t n, Exponents e, Coeff c = 1);

inline MDegPoly poly_add(const MDegPoly& a, const MDegPoly& b) { return a + b; }
inline MDegPoly poly_mul(const MDegPoly& a, const MDegPoly& b) { return a * b; }
inline int poly_total_degree(const MDegPoly& p) { return p.total_degree(); }

}  // namespace mimd
