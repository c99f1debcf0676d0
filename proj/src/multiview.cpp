#include "mimd/multiview.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mimd {

Congruence::Congruence(Coeff alpha, Coeff beta) : alpha_(alpha), beta_(beta) {
    require(alpha >= 0 && beta >= 0, "Congruence: bidegree entries must be nonnegative");
    require(alpha != 0 || beta != 0, "Congruence: bidegree (0,0) is not a congruence");
}

VSequence::VSequence(std::vector<int> diffs) : diffs_(std::move(diffs)) {
    require(diffs_.size() >= 2, "VSequence: need at least two steps");
    for (int d : diffs_) require(d >= 0 && d <= 2, "VSequence: steps must lie in {0,1,2}");
    require(std::accumulate(diffs_.begin(), diffs_.end(), 0) == 3, "VSequence: steps must sum to 3");
}

std::vector<VSequence> enumerate_vsequences(std::size_t n) {
    require(n >= 2, "enumerate_vsequences: need n >= 2");
    std::vector<VSequence> out;
    std::vector<int> diffs(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == n) {
            if (remaining == 0) out.emplace_back(diffs);
            return;
        }
        for (int d = 0; d <= std::min(2, remaining); ++d) {
            diffs[i] = d;
            rec(i + 1, remaining - d);
        }
        diffs[i] = 0;
    };
    rec(0, 3);
    return out;
}

CohClass congruence_class(const Congruence& c) {
    CohClass out(gr13());
    out.add_term(Partition{2}, c.alpha());
    out.add_term(Partition{1, 1}, c.beta());
    return out;
}

TensorClass class_Vn(std::size_t n) {
    require(n >= 2, "class_Vn: need n >= 2");
    const Partition by_step[3] = {Partition{2}, Partition{1}, Partition{}};
    TensorClass out(n, gr13());
    for (const auto& v : enumerate_vsequences(n)) {
        SlotKey key;
        key.reserve(n);
        for (int d : v.diffs()) key.push_back(by_step[d]);
        out.add_term(key, 1);
    }
    return out;
}

TensorClass class_miv_direct(const std::vector<Congruence>& cams) {
    require(cams.size() >= 2, "class_miv_direct: need at least two cameras");
    const auto ctx = gr13();
    TensorClass out(cams.size(), ctx);
    for (const auto& v : enumerate_vsequences(cams.size())) {
        std::vector<CohClass> slots;
        slots.reserve(cams.size());
        for (std::size_t i = 0; i < cams.size(); ++i) {
            const auto& c = cams[i];
            switch (v[i]) {
                case 0: slots.emplace_back(ctx, Partition{2, 2}, c.alpha()); break;
                case 1: slots.emplace_back(ctx, Partition{2, 1}, checked_add(c.alpha(), c.beta())); break;
                default: slots.push_back(congruence_class(c)); break;
            }
        }
        out += tensor_of(slots);
    }
    return out;
}

TensorClass class_miv_cup(const std::vector<Congruence>& cams) {
    require(cams.size() >= 2, "class_miv_cup: need at least two cameras");
    std::vector<CohClass> slots;
    slots.reserve(cams.size());
    for (const auto& c : cams) slots.push_back(congruence_class(c));
    return tensor_mul(class_Vn(cams.size()), tensor_of(slots));
}

}  // namespace mimd
