#include "mimd/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "mimd/commands.hpp"
#include "mimd/ktheory.hpp"

namespace mimd {

std::vector<Congruence> bidegree_grid() {
    std::vector<Congruence> out;
    for (Coeff a = 0; a <= 3; ++a) {
        for (Coeff b = 0; b <= 3; ++b) {
            if (a != 0 || b != 0) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::vector<Congruence>> camera_cases(std::size_t n, std::size_t samples, std::uint64_t seed) {
    require(n >= 2, "camera_cases: need n >= 2");
    const auto grid = bidegree_grid();
    std::vector<std::vector<Congruence>> out;
    if (n <= 3) {
        std::vector<Congruence> cur;
        std::function<void()> rec = [&]() {
            if (cur.size() == n) {
                out.push_back(cur);
                return;
            }
            for (const auto& c : grid) {
                cur.push_back(c);
                rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    }
    std::mt19937_64 rng(seed + n);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Congruence> cams;
        for (std::size_t i = 0; i < n; ++i) cams.push_back(grid[pick(rng)]);
        out.push_back(std::move(cams));
    }
    return out;
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << (passed ? "PASS " : "FAIL ") << name << " (" << cases << " cases)";
    if (!passed) os << ": " << failure;
    return os.str();
}

namespace {

std::string cams_text(const std::vector<Congruence>& cams) {
    std::string s;
    for (const auto& c : cams) s += (s.empty() ? "" : " ") + std::to_string(c.alpha()) + "," + std::to_string(c.beta());
    return s;
}

// Collects checks; keeps the first failure message.
class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& why) {
        ++r_.cases;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.failure = why();
        }
    }

    SuiteResult done() && { return std::move(r_); }

private:
    SuiteResult r_;
};

SuiteResult gr13_fixtures() {
    Suite s("gr13-fixtures");
    const auto ctx = gr13();
    const Partition e{}, x1{1}, x2{2}, x11{1, 1}, x21{2, 1}, x22{2, 2};
    auto expect = [&](const Partition& a, const Partition& b, const CohClass& want) {
        s.check(lr_product(a, b, ctx) == want, [&] { return schubert_text(a) + " * " + schubert_text(b) + " is wrong"; });
    };
    expect(x1, x2, CohClass(ctx, x21));
    expect(x1, x11, CohClass(ctx, x21));
    expect(x2, x2, CohClass(ctx, x22));
    expect(x2, x11, CohClass(ctx));
    expect(x1, x1, CohClass(ctx, x2) + CohClass(ctx, x11));
    const auto covers = poset_covers(ctx);
    const std::vector<std::pair<Partition, Partition>> fig{{e, x1}, {x1, x11}, {x1, x2}, {x11, x21}, {x2, x21}, {x21, x22}};
    s.check(box_partitions(ctx).size() == 6, [] { return "expected six Schubert classes"; });
    s.check(covers == fig, [] { return "containment poset differs from the six-edge Hasse diagram"; });
    return std::move(s).done();
}

SuiteResult lr_properties() {
    Suite s("lr-properties");
    const GrassCtx small(1, 3);
    const auto basis = box_partitions(small);
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            s.check(lr_product(a, b, small) == lr_product(b, a, small),
                    [&] { return "not commutative at " + schubert_text(a) + ", " + schubert_text(b); });
            for (const auto& c : basis) {
                const CohClass ca(small, a), cb(small, b), cc(small, c);
                s.check(cup(cup(ca, cb), cc) == cup(ca, cup(cb, cc)), [&] {
                    return "not associative at " + schubert_text(a) + ", " + schubert_text(b) + ", " + schubert_text(c);
                });
            }
        }
    }
    for (int rows = 1; rows <= 3; ++rows) {
        for (int cols = 1; cols <= 3; ++cols) {
            const GrassCtx ctx(rows - 1, rows - 1 + cols);
            for (int r = 1; r <= cols; ++r) {
                for (const auto& mu : box_partitions(ctx)) {
                    s.check(lr_product(Partition{r}, mu, ctx) == pieri(r, mu, ctx), [&] {
                        return "Pieri/LR disagree for r=" + std::to_string(r) + ", mu=" + schubert_text(mu);
                    });
                }
            }
        }
    }
    // Duality: the point class appears exactly for complementary pairs.
    const Partition point{2, 2};
    for (const auto& a : basis) {
        const Partition complement{2 - a[1], 2 - a[0]};
        for (const auto& b : basis) {
            const Coeff want = b == complement ? 1 : 0;
            s.check(lr_product(a, b, small).coeff(point) == want,
                    [&] { return "duality pairing fails at " + schubert_text(a) + ", " + schubert_text(b); });
        }
    }
    return std::move(s).done();
}

SuiteResult vn_pipeline(const SelftestOptions& opts, const PushTable& table) {
    Suite s("vn-pipeline");
    for (std::size_t n = 2; n <= opts.max_n; ++n) {
        const auto report = verify_pipeline(n, std::nullopt, table);
        s.check(report.passed(), [&] { return report.checks.front().describe(); });
    }
    return std::move(s).done();
}

SuiteResult miv_pipeline(const SelftestOptions& opts, const PushTable& table) {
    Suite s("miv-pipeline");
    for (std::size_t n = 2; n <= opts.max_n; ++n) {
        for (const auto& cams : camera_cases(n, opts.samples, opts.seed)) {
            const TensorClass direct = class_miv_direct(cams);
            const auto check = compare_polys("multi-image n=" + std::to_string(n), push_to_mdeg(direct, table),
                                             mdeg_miv_closed(cams));
            s.check(check.passed, [&] { return check.describe() + " cams=" + cams_text(cams); });
            s.check(direct == class_miv_cup(cams), [&] { return "direct and cup classes differ for cams=" + cams_text(cams); });
        }
    }
    return std::move(s).done();
}

SuiteResult pinhole(const SelftestOptions& opts, const PushTable& table) {
    Suite s("pinhole");
    for (std::size_t n = 2; n <= opts.max_n; ++n) {
        const std::vector<Congruence> cams(n, Congruence(1, 0));
        const MDegPoly p = push_to_mdeg(class_miv_direct(cams), table);
        const std::size_t expected_terms = n * (n - 1) + n * (n - 1) * (n - 2) / 6;
        bool all_one = p.terms().size() == expected_terms;
        for (const auto& [e, c] : p.terms()) all_one = all_one && c == 1;
        s.check(all_one, [&] { return "pinhole multidegree not multiplicity-free at n=" + std::to_string(n); });
    }
    return std::move(s).done();
}

SuiteResult degree_law(const SelftestOptions& opts) {
    Suite s("degree-law");
    for (std::size_t n = 2; n <= std::max<std::size_t>(opts.max_n, 2); ++n) {
        const int vn = mdeg_Vn_closed(n).total_degree();
        s.check(vn == static_cast<int>(3 * n - 3), [&] { return "deg V_n = " + std::to_string(vn) + " at n=" + std::to_string(n); });
        const std::vector<Congruence> cams(n, Congruence(2, 1));
        const int miv = mdeg_miv_closed(cams).total_degree();
        s.check(miv == static_cast<int>(5 * n - 3), [&] { return "deg MIV = " + std::to_string(miv) + " at n=" + std::to_string(n); });
    }
    return std::move(s).done();
}

SuiteResult ktheory_checks(const SelftestOptions& opts) {
    Suite s("ktheory");
    const auto p1p1 = KRingCtx::power(1, 2);
    KElement expected(p1p1);
    expected.add_term({1, 0}, 1);
    expected.add_term({0, 1}, 1);
    expected.add_term({1, 1}, -1);
    s.check(ci_class({{1, 1}}, p1p1) == expected, [] { return "P1 diagonal class is not H1+H2-H1H2"; });

    const KElement pair = diagonal_p3_pair();
    s.check(place(pair, pair.ctx(), {1, 0}) == pair, [] { return "P3 diagonal is not swap-symmetric"; });
    s.check(lowest_degree_part(kclass_V2_ci()) == mdeg_Vn_closed(2), [] { return "gr of the V_2 K-class differs from its multidegree"; });

    for (std::size_t n = 2; n <= std::min<std::size_t>(opts.max_n, 4); ++n) {
        // Cohomology diagonal: all chains 0 = v_0 <= ... <= v_n = 3.
        MDegPoly diag(n);
        Exponents e(n);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
            if (i + 1 == n) {
                e[i] = 3 - remaining;
                diag.add_term(e, 1);
                return;
            }
            for (int d = 0; d <= remaining; ++d) {
                e[i] = 3 - d;
                rec(i + 1, remaining - d);
            }
        };
        rec(0, 3);
        s.check(lowest_degree_part(diagonal_p3_n(n)) == diag,
                [&] { return "gr of the (P3)^n diagonal is not the cohomology diagonal at n=" + std::to_string(n); });
    }
    return std::move(s).done();
}

SuiteResult json_roundtrip(const SelftestOptions& opts) {
    Suite s("json-roundtrip");
    std::vector<OutputDocument> docs;
    for (std::size_t n = 2; n <= opts.max_n; ++n) {
        docs.push_back(concurrent_document(n, false));
        docs.push_back(concurrent_document(n, true));
        const std::vector<Congruence> cams(n, Congruence(1, 2));
        docs.push_back(multiimage_document(cams, false));
        docs.push_back(multiimage_document(cams, true));
    }
    for (auto interp : {KInterpretation::LiteralPerSlotProduct, KInterpretation::AdjacentPairSpan}) {
        docs.push_back(kclass_document(2, interp, false));
        if (opts.max_n >= 3) docs.push_back(kclass_document(3, interp, false));
    }
    docs.push_back(kclass_document(2, KInterpretation::AdjacentPairSpan, true));
    docs.push_back(table_document());
    for (const auto& d : docs) {
        s.check(from_json(to_json(d)) == d, [&] { return std::string("round-trip failed for a ") + std::string(kind_name(d.kind)) + " document"; });
    }
    return std::move(s).done();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
    require(opts.max_n >= 2, "selftest: max-n must be at least 2");
    const PushTable table = opts.push_table.value_or(PushTable::plucker());
    std::vector<SuiteResult> out;
    out.push_back(gr13_fixtures());
    out.push_back(lr_properties());
    out.push_back(vn_pipeline(opts, table));
    out.push_back(miv_pipeline(opts, table));
    out.push_back(pinhole(opts, table));
    out.push_back(degree_law(opts));
    out.push_back(ktheory_checks(opts));
    out.push_back(json_roundtrip(opts));
    return out;
}

}  // namespace mimd
