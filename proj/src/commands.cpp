#include "mimd/commands.hpp"

#include <charconv>

#include "mimd/pushforward.hpp"

namespace mimd {

namespace {

std::string partition_key(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace

OutputDocument concurrent_document(std::size_t n, bool as_class) {
    OutputDocument doc;
    doc.n = n;
    doc.meta["version"] = kToolVersion;
    if (as_class) {
        doc.kind = DocKind::CohomologyClass;
        doc.terms = doc_terms(class_Vn(n));
    } else {
        doc.kind = DocKind::Multidegree;
        doc.terms = doc_terms(mdeg_Vn_closed(n));
    }
    return doc;
}

OutputDocument multiimage_document(const std::vector<Congruence>& cams, bool as_class) {
    OutputDocument doc;
    doc.n = cams.size();
    doc.meta["version"] = kToolVersion;
    std::vector<std::pair<Coeff, Coeff>> bidegrees;
    for (const auto& c : cams) bidegrees.emplace_back(c.alpha(), c.beta());
    doc.bidegrees = std::move(bidegrees);
    if (as_class) {
        doc.kind = DocKind::CohomologyClass;
        doc.terms = doc_terms(class_miv_direct(cams));
    } else {
        doc.kind = DocKind::Multidegree;
        doc.terms = doc_terms(mdeg_miv_closed(cams));
    }
    return doc;
}

OutputDocument kclass_document(std::size_t n, KInterpretation interpretation, bool oracle_only) {
    require(n >= 2, "kclass: need n >= 2");
    OutputDocument doc;
    doc.kind = DocKind::KClass;
    doc.n = n;
    doc.var = "H";
    doc.meta["version"] = kToolVersion;
    doc.meta["ambient"] = "K((P^5)^" + std::to_string(n) + ")";

    if (oracle_only) {
        require(n == 2, "kclass: --oracle-only is available for n = 2 only");
        const KElement oracle = kclass_V2_ci();
        doc.meta["source"] = "complete intersection: Plucker quadrics (2,0), (0,2) and incidence form (1,1)";
        doc.terms = doc_terms(oracle);
        doc.sections.push_back({"gr", "z", doc_terms(lowest_degree_part(oracle))});
        return doc;
    }

    const KElement encoded = encode_paper_kclass_Vn(n, interpretation);
    doc.meta["source"] = "transcribed case formula";
    doc.meta["interpretation"] = std::string(interpretation_name(interpretation));
    doc.meta["interpretation_detail"] = interpretation_description(interpretation);
    doc.terms = doc_terms(encoded);
    doc.sections.push_back({"gr", "z", doc_terms(lowest_degree_part(encoded))});
    if (n == 2) {
        const KElement oracle = kclass_V2_ci();
        const KElement diff = encoded - oracle;
        doc.sections.push_back({"oracle", "H", doc_terms(oracle)});
        doc.sections.push_back({"oracle gr", "z", doc_terms(lowest_degree_part(oracle))});
        doc.sections.push_back({"diff (transcribed - oracle)", "H", doc_terms(diff)});
        doc.meta["matches_oracle"] = diff.is_zero() ? "yes" : "no";
        doc.meta["gr_matches_oracle"] = lowest_degree_part(encoded) == lowest_degree_part(oracle) ? "yes" : "no";
    }
    return doc;
}

OutputDocument table_document() {
    const auto ctx = gr13();
    const auto basis = box_partitions(ctx);
    const auto table = gr13_table();
    OutputDocument doc;
    doc.kind = DocKind::Report;
    doc.n = 1;
    doc.meta["version"] = kToolVersion;
    doc.meta["report"] = "Gr(1,P^3) cup products";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            doc.sections.push_back({schubert_text(basis[i]) + " * " + schubert_text(basis[j]), "z", doc_terms(table[i][j])});
        }
    }
    std::string nodes;
    for (const auto& p : basis) {
        nodes += (nodes.empty() ? "" : " ") + partition_key(p) + ":dim" + std::to_string(dim_schubert(p, ctx));
    }
    std::string covers;
    for (const auto& [lo, hi] : poset_covers(ctx)) {
        covers += (covers.empty() ? "" : " ") + schubert_text(lo) + ">" + schubert_text(hi);
    }
    doc.meta["poset_nodes"] = nodes;
    doc.meta["poset_covers"] = covers;
    return doc;
}

Congruence parse_bidegree(const std::string& text) {
    const auto comma = text.find(',');
    require(comma != std::string::npos, "bidegree '" + text + "' must have the form a,b");
    auto parse = [&](std::string_view part) {
        Coeff v = 0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, v);
        require(!part.empty() && ec == std::errc() && ptr == end, "bidegree '" + text + "' must have the form a,b");
        require(v >= 0, "bidegree '" + text + "' has a negative entry");
        return v;
    };
    const std::string_view sv(text);
    return Congruence(parse(sv.substr(0, comma)), parse(sv.substr(comma + 1)));
}

}  // namespace mimd
