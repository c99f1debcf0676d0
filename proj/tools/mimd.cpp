// mimd: classes and multidegrees of the concurrent-lines and multi-image
// varieties in Gr(1,P^3)^n and (P^5)^n.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "mimd/commands.hpp"
#include "mimd/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const mimd::OutputDocument& doc, const std::string& format) {
    if (format == "json") {
        std::cout << mimd::to_json(doc) << "\n";
    } else if (format == "latex") {
        std::cout << mimd::render_latex(doc);
    } else {
        std::cout << mimd::render_text(doc);
    }
}

void emit_table_text() {
    const auto ctx = mimd::gr13();
    const auto basis = mimd::box_partitions(ctx);
    const auto table = mimd::gr13_table();
    std::cout << "cup products in Gr(1,P^3):\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::cout << "  " << mimd::schubert_text(basis[i]) << " * " << mimd::schubert_text(basis[j]) << " = "
                      << mimd::terms_text(mimd::doc_terms(table[i][j])) << "\n";
        }
    }
    std::cout << "containment poset (" << basis.size() << " nodes):\n";
    for (const auto& p : basis) {
        std::cout << "  " << mimd::schubert_text(p) << " dim " << mimd::dim_schubert(p, ctx) << "\n";
    }
    const auto covers = mimd::poset_covers(ctx);
    std::cout << "cover relations (" << covers.size() << " edges):\n";
    for (const auto& [lo, hi] : covers) {
        std::cout << "  " << mimd::schubert_text(lo) << " contains " << mimd::schubert_text(hi) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert-calculus engine for concurrent lines and multi-image varieties"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    };

    int n = 0;
    bool as_class = false;
    auto* concurrent = app.add_subcommand("concurrent", "Multidegree (or class) of the concurrent lines variety V_n");
    concurrent->add_option("--n", n, "Number of lines (n >= 2; V_1 is all of Gr(1,P^3))")->required();
    concurrent->add_flag("--class", as_class, "Print the class in Gr(1,P^3)^n instead of the multidegree");
    add_format(concurrent);

    std::vector<std::string> bidegrees;
    auto* multiimage = app.add_subcommand("multiimage", "Multidegree (or class) of (C_1 x ... x C_n) cap V_n");
    multiimage->add_option("--bidegree", bidegrees, "Camera bidegree a,b (repeat once per camera, in order)")->required();
    multiimage->add_flag("--class", as_class, "Print the class in Gr(1,P^3)^n instead of the multidegree");
    add_format(multiimage);

    std::string interpretation = "adjacent-pair-span";
    bool oracle_only = false;
    auto* kclass = app.add_subcommand("kclass", "K-class of V_n from the transcribed case formula");
    kclass->add_option("--n", n, "Number of lines (n >= 2)")->required();
    kclass->add_option("--interpretation", interpretation,
                       "Reading of the two-factor cases: literal-per-slot-product | adjacent-pair-span");
    kclass->add_flag("--oracle-only", oracle_only, "Print only the complete-intersection class of V_2");
    add_format(kclass);

    auto* table = app.add_subcommand("table", "Gr(1,P^3) multiplication table and containment poset");
    add_format(table);

    std::size_t max_n = 6;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "Check every closed form against its enumeration oracle");
    selftest->add_option("--max-n", max_n, "Largest n to verify (>= 2)");
    selftest->add_flag("--inject-push-fault", inject_fault, "Corrupt the Plucker table (negative control)")->group("");
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*concurrent) {
            mimd::require(n >= 2, "concurrent: --n must be at least 2 (V_1 is the fundamental class of Gr(1,P^3))");
            emit(mimd::concurrent_document(static_cast<std::size_t>(n), as_class), format);
        } else if (*multiimage) {
            std::vector<mimd::Congruence> cams;
            for (const auto& b : bidegrees) cams.push_back(mimd::parse_bidegree(b));
            mimd::require(cams.size() >= 2, "multiimage: need at least two --bidegree values");
            emit(mimd::multiimage_document(cams, as_class), format);
        } else if (*kclass) {
            mimd::require(n >= 2, "kclass: --n must be at least 2");
            const auto interp = mimd::parse_interpretation(interpretation);
            emit(mimd::kclass_document(static_cast<std::size_t>(n), interp, oracle_only), format);
        } else if (*table) {
            if (format == "text") {
                emit_table_text();
            } else {
                emit(mimd::table_document(), format);
            }
        } else if (*selftest) {
            mimd::require(max_n >= 2, "selftest: --max-n must be at least 2");
            mimd::SelftestOptions opts;
            opts.max_n = max_n;
            if (inject_fault) {
                auto entries = mimd::PushTable::plucker().entries();
                entries.at(mimd::Partition{1}).coeff = 3;
                opts.push_table = mimd::PushTable(entries);
            }
            const auto results = mimd::run_selftest(opts);
            bool ok = true;
            mimd::OutputDocument doc;
            doc.kind = mimd::DocKind::Report;
            doc.n = max_n;
            for (const auto& r : results) {
                ok = ok && r.passed;
                doc.meta[r.name] = r.summary();
            }
            if (format == "text") {
                for (const auto& r : results) std::cout << r.summary() << "\n";
            } else {
                emit(doc, format);
            }
            if (!ok) {
                for (const auto& r : results) {
                    if (r.passed) continue;
                    std::cerr << "first counterexample (" << r.name << "): " << r.failure << "\n";
                    break;
                }
                return kExitVerifyFailed;
            }
        }
    } catch (const mimd::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}
