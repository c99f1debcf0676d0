#pragma once

// Schubert calculus on Gr(k, P^d): partitions in the (k+1) x (d-k) box,
// the subset <-> partition bijection, the containment poset, and the cup
// product computed by the Pieri rule and by Littlewood-Richardson tableaux.

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "mimd/arith.hpp"

namespace mimd {

/// Gr(k, P^d): k-planes in P^d. Schubert indices live in a box with
/// k+1 rows and d-k columns.
class GrassCtx {
public:
    GrassCtx(int k, int d);

    int k() const { return k_; }
    int d() const { return d_; }
    int rows() const { return k_ + 1; }
    int cols() const { return d_ - k_; }
    int dim() const { return rows() * cols(); }

    friend bool operator==(const GrassCtx&, const GrassCtx&) = default;

private:
    int k_;
    int d_;
};

/// Lines in P^3; the ambient of everything multi-view.
inline GrassCtx gr13() { return GrassCtx(1, 3); }

/// Weakly decreasing list of positive parts. Zeros are trimmed on
/// construction so equal partitions are structurally equal.
///
/// Ordering is by size (codimension) first, then lexicographic on the parts:
/// {}, (1), (1,1), (2), (2,1), (2,2) in the 2x2 box.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return weight_; }
    /// i-th part, 0-based; zero past the end.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    bool fits(const GrassCtx& ctx) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Integer combination of Schubert classes [X_lambda] in one Grassmannian.
/// Zero coefficients are never stored.
class CohClass {
public:
    using Terms = std::map<Partition, Coeff>;

    explicit CohClass(GrassCtx ctx) : ctx_(ctx) {}
    CohClass(GrassCtx ctx, const Partition& p, Coeff c = 1);

    const GrassCtx& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const Partition& p) const;

    void add_term(const Partition& p, Coeff c);

    CohClass& operator+=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator*(Coeff s, const CohClass& a);

    friend bool operator==(const CohClass&, const CohClass&) = default;

private:
    GrassCtx ctx_;
    Terms terms_;
};

/// All partitions in the box of ctx, in Partition order.
std::vector<Partition> box_partitions(const GrassCtx& ctx);

/// j is a (k+1)-subset of {1..d+1}; lambda_l = d-k+l-j_l with j sorted.
Partition subset_to_partition(std::vector<int> j, const GrassCtx& ctx);
std::vector<int> partition_to_subset(const Partition& lambda, const GrassCtx& ctx);

/// (k+1)(d-k) - |lambda|.
int dim_schubert(const Partition& lambda, const GrassCtx& ctx);

/// X_lambda contains X_mu iff lambda is inside mu.
bool poset_contains(const Partition& lambda, const Partition& mu);

/// Cover relations (lambda, mu) of the containment order on the box:
/// lambda inside mu with |mu| = |lambda| + 1.
std::vector<std::pair<Partition, Partition>> poset_covers(const GrassCtx& ctx);

/// [X_(r)] cup [X_mu] by the Pieri rule.
CohClass pieri(int r, const Partition& mu, const GrassCtx& ctx);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of skew
/// tableaux of shape nu/lambda and content mu whose reverse reading word is
/// a lattice word.
Coeff lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// [X_lambda] cup [X_mu], terms outside the box dropped.
CohClass lr_product(const Partition& lambda, const Partition& mu, const GrassCtx& ctx);

CohClass cup(const CohClass& a, const CohClass& b);

/// Multiplication table of the six Schubert classes of Gr(1, P^3), indexed
/// in box_partitions(gr13()) order.
using Gr13Table = std::array<std::array<CohClass, 6>, 6>;
Gr13Table gr13_table();

}  // namespace mimd
