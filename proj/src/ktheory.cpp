#include "mimd/ktheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "mimd/multiview.hpp"

namespace mimd {

KRingCtx::KRingCtx(std::vector<int> dims) : dims_(std::move(dims)) {
    require(!dims_.empty(), "KRingCtx: need at least one factor");
    for (int a : dims_) require(a >= 1, "KRingCtx: projective dimensions must be >= 1");
}

KElement KElement::one(const KRingCtx& ctx) {
    KElement k(ctx);
    k.add_term(Exponents(ctx.factors(), 0), 1);
    return k;
}

KElement KElement::hyperplane_power(const KRingCtx& ctx, std::size_t slot, int power) {
    require(slot < ctx.factors(), "hyperplane_power: slot out of range");
    require(power >= 0, "hyperplane_power: negative power");
    KElement k(ctx);
    Exponents e(ctx.factors(), 0);
    e[slot] = power;
    k.add_term(e, 1);
    return k;
}

KElement KElement::univariate(const KRingCtx& ctx, std::size_t slot, const std::vector<Coeff>& coeffs) {
    require(slot < ctx.factors(), "univariate: slot out of range");
    KElement k(ctx);
    Exponents e(ctx.factors(), 0);
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
        e[slot] = static_cast<int>(p);
        k.add_term(e, coeffs[p]);
    }
    return k;
}

Coeff KElement::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void KElement::add_term(const Exponents& e, Coeff c) {
    require(e.size() == ctx_.factors(), "KElement: exponent vector has the wrong length");
    for (std::size_t i = 0; i < e.size(); ++i) {
        require(e[i] >= 0, "KElement: negative exponent");
        if (e[i] > ctx_.dims()[i]) return;  // H_i^{a_i+1} = 0
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

KElement& KElement::operator+=(const KElement& o) {
    require(ctx_ == o.ctx_, "KElement: ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

KElement operator-(const KElement& a, const KElement& b) {
    return a + (-1) * b;
}

KElement operator*(const KElement& a, const KElement& b) {
    require(a.ctx_ == b.ctx_, "KElement: ring mismatch");
    KElement out(a.ctx_);
    Exponents e(a.ctx_.factors());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

KElement operator*(Coeff s, const KElement& a) {
    KElement out(a.ctx_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, checked_mul(s, c));
    return out;
}

KElement place(const KElement& a, const KRingCtx& ctx, const std::vector<std::size_t>& targets) {
    require(targets.size() == a.ctx().factors(), "place: one target slot per factor required");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        require(targets[i] < ctx.factors(), "place: target slot out of range");
        for (std::size_t j = 0; j < i; ++j) require(targets[i] != targets[j], "place: target slots must be distinct");
    }
    KElement out(ctx);
    Exponents e(ctx.factors());
    for (const auto& [ea, c] : a.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < targets.size(); ++i) e[targets[i]] = ea[i];
        out.add_term(e, c);
    }
    return out;
}

KElement ci_class(const std::vector<Exponents>& multidegrees, const KRingCtx& ctx) {
    const KElement one = KElement::one(ctx);
    KElement out = one;
    for (const auto& d : multidegrees) {
        require(d.size() == ctx.factors(), "ci_class: degree vector has the wrong length");
        require(std::any_of(d.begin(), d.end(), [](int x) { return x != 0; }), "ci_class: all-zero degree vector");
        KElement section = one;
        for (std::size_t i = 0; i < d.size(); ++i) {
            require(d[i] >= 0, "ci_class: negative degree");
            const KElement factor = one - KElement::hyperplane_power(ctx, i, 1);
            for (int p = 0; p < d[i]; ++p) section = section * factor;
        }
        out = out * (one - section);
    }
    return out;
}

KElement diagonal_p3_pair() {
    const auto ctx = KRingCtx::power(3, 2);
    KElement out(ctx);
    for (int v = 0; v <= 3; ++v) {
        const KElement left = KElement::hyperplane_power(ctx, 0, 3 - v);
        const KElement right = KElement::hyperplane_power(ctx, 1, v) - KElement::hyperplane_power(ctx, 1, v + 1);
        out += left * right;
    }
    return out;
}

KElement diagonal_p3_n(std::size_t n) {
    require(n >= 2, "diagonal_p3_n: need n >= 2");
    const auto ctx = KRingCtx::power(3, n);
    const KElement pair = diagonal_p3_pair();
    KElement out = KElement::one(ctx);
    for (std::size_t i = 0; i + 1 < n; ++i) out = out * place(pair, ctx, {i, i + 1});
    return out;
}

KElement kclass_V2_ci() {
    return ci_class({{2, 0}, {0, 2}, {1, 1}}, KRingCtx::power(5, 2));
}

std::string_view interpretation_name(KInterpretation k) {
    switch (k) {
        case KInterpretation::LiteralPerSlotProduct: return "literal-per-slot-product";
        case KInterpretation::AdjacentPairSpan: return "adjacent-pair-span";
    }
    return "";
}

KInterpretation parse_interpretation(std::string_view name) {
    for (auto k : {KInterpretation::LiteralPerSlotProduct, KInterpretation::AdjacentPairSpan}) {
        if (interpretation_name(k) == name) return k;
    }
    throw DomainError("unknown interpretation '" + std::string(name) +
                      "' (expected literal-per-slot-product or adjacent-pair-span)");
}

std::string interpretation_description(KInterpretation k) {
    switch (k) {
        case KInterpretation::LiteralPerSlotProduct:
            return "slot i carries A_d(H_i)*B_d(H_i) for its step d; slots tensored";
        case KInterpretation::AdjacentPairSpan:
            return "for i=1..n-1 the step d_i case places A_d(H_i) (x) B_d(H_{i+1}); factors multiplied, step d_n unused";
    }
    return "";
}

KElement encode_paper_kclass_Vn(std::size_t n, KInterpretation interpretation) {
    require(n >= 2, "encode_paper_kclass_Vn: need n >= 2");
    // Coefficients of H^0..H^3 for the two printed factors per step.
    const std::array<std::array<std::vector<Coeff>, 2>, 3> cases{{
        {{{0, 0, 0, -1}, {0, 2, -1}}},
        {{{0, 0, 2, -1}, {0, 2, -3, 1}}},
        {{{0, 2, -1}, {0, 0, 2, -2}}},
    }};
    const auto ctx = KRingCtx::power(5, n);
    KElement out(ctx);
    for (const auto& v : enumerate_vsequences(n)) {
        KElement term = KElement::one(ctx);
        if (interpretation == KInterpretation::LiteralPerSlotProduct) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto& c = cases[static_cast<std::size_t>(v[i])];
                term = term * (KElement::univariate(ctx, i, c[0]) * KElement::univariate(ctx, i, c[1]));
            }
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const auto& c = cases[static_cast<std::size_t>(v[i])];
                term = term * (KElement::univariate(ctx, i, c[0]) * KElement::univariate(ctx, i + 1, c[1]));
            }
        }
        out += term;
    }
    return out;
}

MDegPoly lowest_degree_part(const KElement& k) {
    MDegPoly out(k.ctx().factors());
    if (k.is_zero()) return out;
    // Terms are ordered by total degree, lowest first.
    const auto& first = k.terms().begin()->first;
    const int low = std::accumulate(first.begin(), first.end(), 0);
    for (const auto& [e, c] : k.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) != low) break;
        out.add_term(e, c);
    }
    return out;
}

}  // namespace mimd
