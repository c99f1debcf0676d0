#include "mimd/tensor_ring.hpp"

#include <algorithm>
#include <numeric>

namespace mimd {

namespace {

int total_codim(const SlotKey& k) {
    int s = 0;
    for (const auto& p : k) s += p.size();
    return s;
}

int exponent_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool SlotKeyOrder::operator()(const SlotKey& a, const SlotKey& b) const {
    if (const int ca = total_codim(a), cb = total_codim(b); ca != cb) return ca < cb;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != b[i].size()) return a[i].size() > b[i].size();
    }
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

TensorClass::TensorClass(std::size_t n, GrassCtx ctx) : n_(n), ctx_(ctx) {
    require(n >= 1, "TensorClass: need at least one slot");
}

Coeff TensorClass::coeff(const SlotKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void TensorClass::add_term(const SlotKey& key, Coeff c) {
    require(key.size() == n_, "TensorClass: slot count mismatch");
    for (const auto& p : key) require(p.fits(ctx_), "TensorClass: slot partition outside the box");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

TensorClass& TensorClass::operator+=(const TensorClass& o) {
    require(n_ == o.n_ && ctx_ == o.ctx_, "TensorClass: shape mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorClass operator*(Coeff s, const TensorClass& a) {
    TensorClass r(a.n_, a.ctx_);
    for (const auto& [k, c] : a.terms_) r.add_term(k, checked_mul(s, c));
    return r;
}

TensorClass tensor_one(std::size_t n, const GrassCtx& ctx) {
    TensorClass t(n, ctx);
    t.add_term(SlotKey(n), 1);
    return t;
}

TensorClass tensor_of(const std::vector<CohClass>& slots) {
    require(!slots.empty(), "tensor_of: empty slot list");
    const GrassCtx ctx = slots.front().ctx();
    for (const auto& s : slots) require(s.ctx() == ctx, "tensor_of: slots live in different Grassmannians");

    // Grow the expansion one slot at a time.
    std::vector<std::pair<SlotKey, Coeff>> partial{{SlotKey{}, 1}};
    for (const auto& s : slots) {
        std::vector<std::pair<SlotKey, Coeff>> next;
        next.reserve(partial.size() * s.terms().size());
        for (const auto& [key, c] : partial) {
            for (const auto& [p, cp] : s.terms()) {
                SlotKey k = key;
                k.push_back(p);
                next.emplace_back(std::move(k), checked_mul(c, cp));
            }
        }
        partial = std::move(next);
    }
    TensorClass out(slots.size(), ctx);
    for (const auto& [k, c] : partial) out.add_term(k, c);
    return out;
}

TensorClass tensor_mul(const TensorClass& a, const TensorClass& b) {
    require(a.slots() == b.slots(), "tensor_mul: slot count mismatch");
    require(a.ctx() == b.ctx(), "tensor_mul: Grassmannian mismatch");
    const GrassCtx& ctx = a.ctx();

    // Per-call memo of slot products; every pair of terms reuses it.
    std::map<std::pair<Partition, Partition>, CohClass> memo;
    auto slot_product = [&](const Partition& x, const Partition& y) -> const CohClass& {
        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, lr_product(key.first, key.second, ctx)).first;
        return it->second;
    };

    TensorClass out(a.slots(), ctx);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<CohClass> factors;
            factors.reserve(ka.size());
            bool vanishes = false;
            for (std::size_t i = 0; i < ka.size() && !vanishes; ++i) {
                factors.push_back(slot_product(ka[i], kb[i]));
                vanishes = factors.back().is_zero();
            }
            if (vanishes) continue;
            out += checked_mul(ca, cb) * tensor_of(factors);
        }
    }
    return out;
}

bool GradedLexOrder::operator()(const Exponents& a, const Exponents& b) const {
    if (const int da = exponent_sum(a), db = exponent_sum(b); da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Coeff MDegPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MDegPoly::add_term(const Exponents& e, Coeff c) {
    require(e.size() == n_, "MDegPoly: exponent vector has the wrong length");
    for (int x : e) require(x >= 0, "MDegPoly: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

int MDegPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, exponent_sum(e));
    return deg;
}

MDegPoly& MDegPoly::operator+=(const MDegPoly& o) {
    require(n_ == o.n_, "MDegPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MDegPoly operator-(const MDegPoly& a, const MDegPoly& b) {
    return a + (-1) * b;
}

MDegPoly operator*(const MDegPoly& a, const MDegPoly& b) {
    require(a.n_ == b.n_, "MDegPoly: variable count mismatch");
    MDegPoly out(a.n_);
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

MDegPoly operator*(Coeff s, const MDegPoly& a) {
    MDegPoly out(a.n_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, checked_mul(s, c));
    return out;
}

MDegPoly monomial(std::size_t n, Exponents e, Coeff c) {
    MDegPoly p(n);
    p.add_term(e, c);
    return p;
}

}  // namespace mimd
