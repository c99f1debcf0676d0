#include "mimd/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace mimd {

GrassCtx::GrassCtx(int k, int d) : k_(k), d_(d) {
    require(k >= 0, "GrassCtx: k must be nonnegative");
    require(d > k, "GrassCtx: need k < d");
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "Partition: parts must be nonnegative with zeros only at the end");
        require(i == 0 || parts_[i] <= parts_[i - 1], "Partition: parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits(const GrassCtx& ctx) const {
    return length() <= ctx.rows() && (empty() || parts_.front() <= ctx.cols());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

CohClass::CohClass(GrassCtx ctx, const Partition& p, Coeff c) : ctx_(ctx) {
    add_term(p, c);
}

Coeff CohClass::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void CohClass::add_term(const Partition& p, Coeff c) {
    require(p.fits(ctx_), "CohClass: partition outside the box");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

CohClass& CohClass::operator+=(const CohClass& o) {
    require(ctx_ == o.ctx_, "CohClass: Grassmannian mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

CohClass operator*(Coeff s, const CohClass& a) {
    CohClass r(a.ctx_);
    for (const auto& [p, c] : a.terms_) r.add_term(p, checked_mul(s, c));
    return r;
}

std::vector<Partition> box_partitions(const GrassCtx& ctx) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int max_part) {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == ctx.rows()) return;
        for (int p = 1; p <= max_part; ++p) {
            parts.push_back(p);
            rec(p);
            parts.pop_back();
        }
    };
    rec(ctx.cols());
    std::sort(out.begin(), out.end());
    return out;
}

Partition subset_to_partition(std::vector<int> j, const GrassCtx& ctx) {
    require(static_cast<int>(j.size()) == ctx.rows(), "subset_to_partition: subset must have k+1 elements");
    std::sort(j.begin(), j.end());
    require(std::adjacent_find(j.begin(), j.end()) == j.end(), "subset_to_partition: elements must be distinct");
    require(j.front() >= 1 && j.back() <= ctx.d() + 1, "subset_to_partition: elements must lie in 1..d+1");
    std::vector<int> parts(j.size());
    for (std::size_t l = 0; l < j.size(); ++l) {
        parts[l] = ctx.cols() + static_cast<int>(l) + 1 - j[l];
    }
    return Partition(std::move(parts));
}

std::vector<int> partition_to_subset(const Partition& lambda, const GrassCtx& ctx) {
    require(lambda.fits(ctx), "partition_to_subset: partition outside the box");
    std::vector<int> j(static_cast<std::size_t>(ctx.rows()));
    for (int l = 0; l < ctx.rows(); ++l) {
        j[static_cast<std::size_t>(l)] = ctx.cols() + l + 1 - lambda[l];
    }
    return j;
}

int dim_schubert(const Partition& lambda, const GrassCtx& ctx) {
    require(lambda.fits(ctx), "dim_schubert: partition outside the box");
    return ctx.dim() - lambda.size();
}

bool poset_contains(const Partition& lambda, const Partition& mu) {
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        if (lambda[i] > mu[i]) return false;
    }
    return true;
}

std::vector<std::pair<Partition, Partition>> poset_covers(const GrassCtx& ctx) {
    const auto all = box_partitions(ctx);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lo : all) {
        for (const auto& hi : all) {
            if (hi.size() == lo.size() + 1 && poset_contains(lo, hi)) out.emplace_back(lo, hi);
        }
    }
    return out;
}

CohClass pieri(int r, const Partition& mu, const GrassCtx& ctx) {
    require(r >= 1, "pieri: r must be positive");
    require(r <= ctx.cols(), "pieri: r exceeds the box width d-k");
    require(mu.fits(ctx), "pieri: partition outside the box");

    CohClass out(ctx);
    const int rows = ctx.rows();
    const int target = r + mu.size();
    std::vector<int> nu(static_cast<std::size_t>(rows));
    // mu_i <= nu_i <= mu_{i-1}, with mu_0 read as the box width.
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == rows) {
            if (sum == target) out.add_term(Partition(nu), 1);
            return;
        }
        const int upper = i == 0 ? ctx.cols() : mu[i - 1];
        for (int v = mu[i]; v <= upper && sum + v <= target; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

Coeff lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!poset_contains(lambda, nu) || nu.size() != lambda.size() + mu.size()) return 0;
    if (mu.empty()) return 1;

    // Cells of nu/lambda in reverse reading order: rows top to bottom,
    // right to left within a row.
    struct Cell {
        int row;
        int col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r) {
        for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});
    }

    const int letters = mu.length();
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r) fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
    std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);

    Coeff count = 0;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            count = checked_add(count, 1);
            return;
        }
        const auto [r, c] = cells[idx];
        const auto ur = static_cast<std::size_t>(r);
        const auto uc = static_cast<std::size_t>(c);
        int hi = letters;
        // Rows weakly increase left to right; the right neighbour is already placed.
        if (c + 1 < nu[r]) hi = std::min(hi, fill[ur][uc + 1]);
        int lo = 1;
        // Columns strictly increase downward.
        if (r > 0 && c >= lambda[r - 1]) lo = fill[ur - 1][uc] + 1;
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (used[uv] == mu[v - 1]) continue;
            if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;  // lattice word
            ++used[uv];
            fill[ur][uc] = v;
            place(idx + 1);
            fill[ur][uc] = 0;
            --used[uv];
        }
    };
    place(0);
    return count;
}

CohClass lr_product(const Partition& lambda, const Partition& mu, const GrassCtx& ctx) {
    require(lambda.fits(ctx) && mu.fits(ctx), "lr_product: partition outside the box");
    CohClass out(ctx);
    const int target = lambda.size() + mu.size();
    if (target > ctx.dim()) return out;
    for (const auto& nu : box_partitions(ctx)) {
        if (nu.size() != target) continue;
        out.add_term(nu, lr_coefficient(lambda, mu, nu));
    }
    return out;
}

CohClass cup(const CohClass& a, const CohClass& b) {
    require(a.ctx() == b.ctx(), "cup: Grassmannian mismatch");
    CohClass out(a.ctx());
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            out += checked_mul(ca, cb) * lr_product(pa, pb, a.ctx());
        }
    }
    return out;
}

Gr13Table gr13_table() {
    const auto ctx = gr13();
    const auto basis = box_partitions(ctx);
    auto row = [&](std::size_t i) {
        auto cell = [&](std::size_t j) { return lr_product(basis[i], basis[j], ctx); };
        return std::array<CohClass, 6>{cell(0), cell(1), cell(2), cell(3), cell(4), cell(5)};
    };
    return Gr13Table{row(0), row(1), row(2), row(3), row(4), row(5)};
}

}  // namespace mimd
