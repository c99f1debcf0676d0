#pragma once

// Serializable result documents and their text / JSON / LaTeX renderings.
//
// JSON schema:
//   { "kind": "cohomology-class" | "multidegree" | "kclass" | "report",
//     "n": int,
//     "bidegrees": [[a, b], ...]            (optional)
//     "var": "z" | "H",
//     "terms": [ {"exps": [...], "coeff": int} | {"slots": [[parts], ...], "coeff": int} ],
//     "meta": { string: string },
//     "sections": [ {"name": string, "var": string, "terms": [...]} ] }

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mimd/ktheory.hpp"
#include "mimd/tensor_ring.hpp"

namespace mimd {

enum class DocKind { CohomologyClass, Multidegree, KClass, Report };

std::string_view kind_name(DocKind k);
DocKind parse_kind(std::string_view s);

struct DocTerm {
    std::variant<Exponents, SlotKey> key;
    Coeff coeff = 0;
    friend bool operator==(const DocTerm&, const DocTerm&) = default;
};

struct DocSection {
    std::string name;
    std::string var = "z";
    std::vector<DocTerm> terms;
    friend bool operator==(const DocSection&, const DocSection&) = default;
};

struct OutputDocument {
    DocKind kind = DocKind::Report;
    std::size_t n = 0;
    std::optional<std::vector<std::pair<Coeff, Coeff>>> bidegrees;
    std::string var = "z";
    std::vector<DocTerm> terms;
    std::map<std::string, std::string> meta;
    std::vector<DocSection> sections;
    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

inline constexpr const char* kToolVersion = "1.0.0";

std::vector<DocTerm> doc_terms(const TensorClass& t);
std::vector<DocTerm> doc_terms(const CohClass& c);
std::vector<DocTerm> doc_terms(const MDegPoly& p);
std::vector<DocTerm> doc_terms(const KElement& k);

std::string to_json(const OutputDocument& doc);
/// Throws DomainError on schema violations.
OutputDocument from_json(const std::string& text);

/// "[X_{2,1}]", "[X_2]", and "[Gr]" for the empty partition.
std::string schubert_text(const Partition& p);
/// `c*z1^a*z2^b` terms joined by " + " / " - "; "0" when empty.
std::string terms_text(const std::vector<DocTerm>& terms, const std::string& var = "z");
std::string terms_latex(const std::vector<DocTerm>& terms, const std::string& var = "z");

std::string render_text(const OutputDocument& doc);
std::string render_latex(const OutputDocument& doc);

}  // namespace mimd
