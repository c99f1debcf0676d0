#include "mimd/pushforward.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mimd {

PushTable::PushTable(std::map<Partition, PushEntry> entries) : entries_(std::move(entries)) {
    const auto basis = box_partitions(gr13());
    require(entries_.size() == basis.size(), "PushTable: need exactly one entry per Schubert class of Gr(1,P^3)");
    for (const auto& p : basis) require(entries_.count(p) == 1, "PushTable: missing Schubert class");
}

PushTable PushTable::plucker() {
    return PushTable({
        {Partition{}, {1, 2}},
        {Partition{1}, {2, 2}},
        {Partition{1, 1}, {3, 1}},
        {Partition{2}, {3, 1}},
        {Partition{2, 1}, {4, 1}},
        {Partition{2, 2}, {5, 1}},
    });
}

const PushEntry& PushTable::at(const Partition& p) const {
    auto it = entries_.find(p);
    require(it != entries_.end(), "PushTable: partition is not a Schubert class of Gr(1,P^3)");
    return it->second;
}

MDegPoly push_to_mdeg(const TensorClass& t, const PushTable& table) {
    require(t.ctx() == gr13(), "push_to_mdeg: tensor slots must be Gr(1,P^3)");
    const std::size_t n = t.slots();
    MDegPoly out(n);
    Exponents e(n);
    for (const auto& [key, c] : t.terms()) {
        Coeff coeff = c;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& entry = table.at(key[i]);
            e[i] = entry.codim;
            coeff = checked_mul(coeff, entry.coeff);
        }
        out.add_term(e, coeff);
    }
    return out;
}

MDegPoly mdeg_Vn_closed(std::size_t n) {
    require(n >= 2, "mdeg_Vn_closed: need n >= 2");
    MDegPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Exponents e(n, 3);
            e[i] = 1;
            e[j] = 2;
            out.add_term(e, 4);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Exponents e(n, 3);
                e[i] = e[j] = e[k] = 2;
                out.add_term(e, 8);
            }
        }
    }
    return out;
}

MDegPoly mdeg_miv_closed(const std::vector<Congruence>& cams) {
    const std::size_t n = cams.size();
    require(n >= 2, "mdeg_miv_closed: need at least two cameras");

    auto order_plus_class = [&](std::size_t i) { return checked_add(cams[i].alpha(), cams[i].beta()); };
    auto alpha_outside = [&](std::initializer_list<std::size_t> skip) {
        Coeff prod = 1;
        for (std::size_t l = 0; l < n; ++l) {
            if (std::find(skip.begin(), skip.end(), l) == skip.end()) prod = checked_mul(prod, cams[l].alpha());
        }
        return prod;
    };

    MDegPoly out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Exponents e(n, 5);
            e[i] = 3;
            e[j] = 4;
            const Coeff c = checked_mul(checked_mul(order_plus_class(i), order_plus_class(j)), alpha_outside({i, j}));
            out.add_term(e, c);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Exponents e(n, 5);
                e[i] = e[j] = e[k] = 4;
                const Coeff c = checked_mul(
                    checked_mul(checked_mul(order_plus_class(i), order_plus_class(j)), order_plus_class(k)),
                    alpha_outside({i, j, k}));
                out.add_term(e, c);
            }
        }
    }
    return out;
}

std::string CheckResult::describe() const {
    std::ostringstream os;
    os << name << ": " << (passed ? "pass" : "FAIL");
    if (first_difference) {
        os << " at z^(";
        for (std::size_t i = 0; i < first_difference->size(); ++i) os << (i ? "," : "") << (*first_difference)[i];
        os << ") pipeline=" << pipeline_coeff << " closed=" << closed_coeff;
    }
    return os.str();
}

bool PipelineReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

CheckResult compare_polys(std::string name, const MDegPoly& pipeline, const MDegPoly& closed) {
    CheckResult r;
    r.name = std::move(name);
    std::set<Exponents, GradedLexOrder> support;
    for (const auto& [e, c] : pipeline.terms()) support.insert(e);
    for (const auto& [e, c] : closed.terms()) support.insert(e);
    for (const auto& e : support) {
        const Coeff a = pipeline.coeff(e), b = closed.coeff(e);
        if (a != b) {
            r.passed = false;
            r.first_difference = e;
            r.pipeline_coeff = a;
            r.closed_coeff = b;
            break;
        }
    }
    return r;
}

PipelineReport verify_pipeline(std::size_t n, const std::optional<std::vector<Congruence>>& cams,
                               const PushTable& table) {
    require(n >= 2, "verify_pipeline: need n >= 2");
    PipelineReport report;
    report.n = n;
    report.cams = cams;
    report.checks.push_back(compare_polys("Vn n=" + std::to_string(n), push_to_mdeg(class_Vn(n), table), mdeg_Vn_closed(n)));
    if (cams) {
        require(cams->size() == n, "verify_pipeline: camera count differs from n");
        report.checks.push_back(compare_polys("multi-image n=" + std::to_string(n),
                                              push_to_mdeg(class_miv_direct(*cams), table), mdeg_miv_closed(*cams)));
    }
    return report;
}

}  // namespace mimd
