#pragma once

// K_0 of products of projective spaces, Z[H_1..H_n] / (H_i^{a_i+1}), where
// H_i is the class of a hyperplane in the i-th factor.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mimd/tensor_ring.hpp"

namespace mimd {

/// Ambient dimensions (a_1, ..., a_n) of P^{a_1} x ... x P^{a_n}.
class KRingCtx {
public:
    explicit KRingCtx(std::vector<int> dims);
    /// (P^a)^n.
    static KRingCtx power(int a, std::size_t n) { return KRingCtx(std::vector<int>(n, a)); }

    const std::vector<int>& dims() const { return dims_; }
    std::size_t factors() const { return dims_.size(); }

    friend bool operator==(const KRingCtx&, const KRingCtx&) = default;

private:
    std::vector<int> dims_;
};

/// Truncated polynomial in H_1..H_n. Terms with e_i > a_i are discarded on
/// insertion, so every stored value is already reduced.
class KElement {
public:
    using Terms = std::map<Exponents, Coeff, GradedLexOrder>;

    explicit KElement(KRingCtx ctx) : ctx_(std::move(ctx)) {}

    static KElement one(const KRingCtx& ctx);
    /// H_slot^power (zero if power exceeds the slot dimension).
    static KElement hyperplane_power(const KRingCtx& ctx, std::size_t slot, int power);
    /// Univariate polynomial sum_p coeffs[p] H_slot^p.
    static KElement univariate(const KRingCtx& ctx, std::size_t slot, const std::vector<Coeff>& coeffs);

    const KRingCtx& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const Exponents& e) const;

    void add_term(const Exponents& e, Coeff c);

    KElement& operator+=(const KElement& o);
    friend KElement operator+(KElement a, const KElement& b) { return a += b; }
    friend KElement operator-(const KElement& a, const KElement& b);
    friend KElement operator*(const KElement& a, const KElement& b);
    friend KElement operator*(Coeff s, const KElement& a);

    friend bool operator==(const KElement&, const KElement&) = default;

private:
    KRingCtx ctx_;
    Terms terms_;
};

inline KElement k_add(const KElement& a, const KElement& b) { return a + b; }
inline KElement k_mul(const KElement& a, const KElement& b) { return a * b; }

/// Copies a into a larger ring: factor i of a becomes factor targets[i].
/// Factors not named keep exponent 0.
KElement place(const KElement& a, const KRingCtx& ctx, const std::vector<std::size_t>& targets);

/// Structure-sheaf class of a transverse complete intersection of
/// hypersurfaces with the given multidegrees:
/// prod_j (1 - prod_i (1 - H_i)^{d_ij}).
KElement ci_class(const std::vector<Exponents>& multidegrees, const KRingCtx& ctx);

/// Diagonal of P^3 x P^3:
/// sum_{v=0}^{3} h_1^{3-v} (h_2^v - h_2^{v+1}).
KElement diagonal_p3_pair();

/// Small diagonal of (P^3)^n as the product of the pair diagonals on
/// adjacent factors (i, i+1).
KElement diagonal_p3_n(std::size_t n);

/// V_2 in P^5 x P^5 cut out by the two Plucker quadrics and the (1,1)
/// incidence form of two lines meeting.
KElement kclass_V2_ci();

/// Two ways of reading a per-slot case that is printed as a two-factor tensor.
enum class KInterpretation {
    /// Both factors multiplied into the slot the case belongs to.
    LiteralPerSlotProduct,
    /// Factor one in slot i, factor two in slot i+1, for i = 1..n-1; the
    /// products over i are multiplied together.
    AdjacentPairSpan,
};

std::string_view interpretation_name(KInterpretation k);
/// Throws DomainError on unknown names.
KInterpretation parse_interpretation(std::string_view name);
std::string interpretation_description(KInterpretation k);

/// Transcription of the [V_n]_K case formula in K((P^5)^n) under the
/// chosen reading. Per step d in {0,1,2} the printed case is A_d (x) B_d:
///   A_0 = -H^3,          B_0 = 2H - H^2
///   A_1 = 2H^2 - H^3,    B_1 = 2H - 3H^2 + H^3
///   A_2 = 2H - H^2,      B_2 = 2H^2 - 2H^3
/// No correctness is claimed for the result; compare it with kclass_V2_ci().
KElement encode_paper_kclass_Vn(std::size_t n, KInterpretation interpretation);

/// Homogeneous part of minimal total degree, with H_i read as z_i.
MDegPoly lowest_degree_part(const KElement& k);

}  // namespace mimd
