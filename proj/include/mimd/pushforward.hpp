#pragma once

// Plucker pushforward Gr(1,P^3) -> P^5 and the multidegrees of V_n and of the
// multi-image variety in (P^5)^n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mimd/multiview.hpp"

namespace mimd {

/// iota_*[X_lambda] = coeff * z^codim in H*(P^5).
struct PushEntry {
    int codim;
    Coeff coeff;
    friend bool operator==(const PushEntry&, const PushEntry&) = default;
};

/// Images of the six Schubert classes of Gr(1,P^3) under the Plucker embedding.
///
/// Gr(1,P^3) is the quadric p12 p34 - p13 p24 + p23 p14 = 0, so [Gr] -> 2z.
/// X_1 = {p34 = 0} on the quadric, a complete intersection of degree 2.
/// X_{1,1} = {p14 = p24 = p34 = 0} and X_2 = {p23 = p24 = p34 = 0} are planes,
/// X_{2,1} a line, X_{2,2} a point; each has degree 1.
///
/// Exponents are codimensions. Read as dimensions instead, the coefficient of
/// z^c counts points of the variety on a general linear subspace of
/// dimension c; both readings give the same polynomial.
class PushTable {
public:
    explicit PushTable(std::map<Partition, PushEntry> entries);

    static PushTable plucker();

    const std::map<Partition, PushEntry>& entries() const { return entries_; }
    /// Throws DomainError for partitions outside the table.
    const PushEntry& at(const Partition& p) const;

private:
    std::map<Partition, PushEntry> entries_;
};

MDegPoly push_to_mdeg(const TensorClass& t, const PushTable& table = PushTable::plucker());

/// (z_1...z_n)^3 (4 sum_{i != j} z_i^-2 z_j^-1 + 8 sum_{i<j<k} z_i^-1 z_j^-1 z_k^-1).
MDegPoly mdeg_Vn_closed(std::size_t n);

/// Closed form for (C_1 x ... x C_n) cap V_n, expanded without division so it
/// stays valid when some alpha_i = 0:
///   sum_{i != j} (a_i+b_i)(a_j+b_j) prod_{l != i,j} a_l * z_i^3 z_j^4 prod z_l^5
/// + sum_{i<j<k} (a_i+b_i)(a_j+b_j)(a_k+b_k) prod_{l != i,j,k} a_l * (z_i z_j z_k)^4 prod z_l^5.
MDegPoly mdeg_miv_closed(const std::vector<Congruence>& cams);

/// Outcome of comparing one enumeration pipeline with its closed form.
struct CheckResult {
    std::string name;
    bool passed = true;
    /// First monomial (in graded order) where the two sides disagree.
    std::optional<Exponents> first_difference;
    Coeff pipeline_coeff = 0;
    Coeff closed_coeff = 0;

    std::string describe() const;
};

struct PipelineReport {
    std::size_t n = 0;
    std::optional<std::vector<Congruence>> cams;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Passed iff the polynomials are equal; otherwise records the first differing monomial.
CheckResult compare_polys(std::string name, const MDegPoly& pipeline, const MDegPoly& closed);

/// push_to_mdeg(class_Vn(n)) against mdeg_Vn_closed(n), and, when cams are
/// given, push_to_mdeg(class_miv_direct(cams)) against mdeg_miv_closed(cams).
PipelineReport verify_pipeline(std::size_t n, const std::optional<std::vector<Congruence>>& cams = std::nullopt,
                               const PushTable& table = PushTable::plucker());

}  // namespace mimd
