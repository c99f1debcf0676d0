#pragma once

// Cohomology classes of the concurrent-lines variety V_n in Gr(1,P^3)^n and
// of its intersection with a product of camera congruences.

#include <cstddef>
#include <vector>

#include "mimd/tensor_ring.hpp"

namespace mimd {

/// Bidegree (order, class) of a congruence of lines: [C] = alpha [X_2] + beta [X_{1,1}].
/// (0, 0) is rejected; (0, beta) with beta > 0 is allowed.
class Congruence {
public:
    Congruence(Coeff alpha, Coeff beta);

    Coeff alpha() const { return alpha_; }
    Coeff beta() const { return beta_; }

    friend bool operator==(const Congruence&, const Congruence&) = default;

private:
    Coeff alpha_;
    Coeff beta_;
};

/// Step vector of a chain 0 = v_0 <= v_1 <= ... <= v_n = 3 with every step
/// in {0, 1, 2}. Either three steps equal 1, or one step is 2 and another is 1.
class VSequence {
public:
    explicit VSequence(std::vector<int> diffs);

    const std::vector<int>& diffs() const { return diffs_; }
    std::size_t size() const { return diffs_.size(); }
    int operator[](std::size_t i) const { return diffs_[i]; }

    friend bool operator==(const VSequence&, const VSequence&) = default;

private:
    std::vector<int> diffs_;
};

/// All v-sequences of length n in lexicographic order of their step vectors.
/// There are C(n,3) + n(n-1) of them.
std::vector<VSequence> enumerate_vsequences(std::size_t n);

CohClass congruence_class(const Congruence& c);

/// [V_n] = sum over v-sequences of (x)_i {[X_2], [X_1], [Gr]} for step {0, 1, 2}.
TensorClass class_Vn(std::size_t n);

/// Class of (C_1 x ... x C_n) cap V_n, written out slot by slot:
/// step 0 -> alpha [X_{2,2}], step 1 -> (alpha+beta) [X_{2,1}],
/// step 2 -> alpha [X_2] + beta [X_{1,1}].
TensorClass class_miv_direct(const std::vector<Congruence>& cams);

/// Same class computed as [V_n] cup ([C_1] (x) ... (x) [C_n]).
TensorClass class_miv_cup(const std::vector<Congruence>& cams);

}  // namespace mimd
