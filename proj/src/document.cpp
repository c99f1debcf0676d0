#include "mimd/document.hpp"

#include <json.hpp>
#include <sstream>

namespace mimd {

using nlohmann::json;

std::string_view kind_name(DocKind k) {
    switch (k) {
        case DocKind::CohomologyClass: return "cohomology-class";
        case DocKind::Multidegree: return "multidegree";
        case DocKind::KClass: return "kclass";
        case DocKind::Report: return "report";
    }
    return "";
}

DocKind parse_kind(std::string_view s) {
    for (auto k : {DocKind::CohomologyClass, DocKind::Multidegree, DocKind::KClass, DocKind::Report}) {
        if (kind_name(k) == s) return k;
    }
    throw DomainError("unknown document kind '" + std::string(s) + "'");
}

std::vector<DocTerm> doc_terms(const TensorClass& t) {
    std::vector<DocTerm> out;
    for (const auto& [k, c] : t.terms()) out.push_back({k, c});
    return out;
}

std::vector<DocTerm> doc_terms(const CohClass& c) {
    std::vector<DocTerm> out;
    for (const auto& [p, v] : c.terms()) out.push_back({SlotKey{p}, v});
    return out;
}

std::vector<DocTerm> doc_terms(const MDegPoly& p) {
    std::vector<DocTerm> out;
    for (const auto& [e, c] : p.terms()) out.push_back({e, c});
    return out;
}

std::vector<DocTerm> doc_terms(const KElement& k) {
    std::vector<DocTerm> out;
    for (const auto& [e, c] : k.terms()) out.push_back({e, c});
    return out;
}

namespace {

json term_to_json(const DocTerm& t) {
    json j;
    if (const auto* e = std::get_if<Exponents>(&t.key)) {
        j["exps"] = *e;
    } else {
        json slots = json::array();
        for (const auto& p : std::get<SlotKey>(t.key)) slots.push_back(p.parts());
        j["slots"] = std::move(slots);
    }
    j["coeff"] = t.coeff;
    return j;
}

json terms_to_json(const std::vector<DocTerm>& terms) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back(term_to_json(t));
    return arr;
}

DocTerm term_from_json(const json& j) {
    require(j.is_object() && j.contains("coeff") && j["coeff"].is_number_integer(), "document: term needs an integer coeff");
    DocTerm t;
    t.coeff = j["coeff"].get<Coeff>();
    if (j.contains("exps")) {
        t.key = j["exps"].get<Exponents>();
    } else {
        require(j.contains("slots") && j["slots"].is_array(), "document: term needs exps or slots");
        SlotKey key;
        for (const auto& s : j["slots"]) key.emplace_back(s.get<std::vector<int>>());
        t.key = std::move(key);
    }
    return t;
}

std::vector<DocTerm> terms_from_json(const json& j) {
    require(j.is_array(), "document: terms must be an array");
    std::vector<DocTerm> out;
    for (const auto& t : j) out.push_back(term_from_json(t));
    return out;
}

}  // namespace

std::string to_json(const OutputDocument& doc) {
    json j;
    j["kind"] = kind_name(doc.kind);
    j["n"] = doc.n;
    if (doc.bidegrees) {
        json b = json::array();
        for (const auto& [a, c] : *doc.bidegrees) b.push_back({a, c});
        j["bidegrees"] = std::move(b);
    }
    j["var"] = doc.var;
    j["terms"] = terms_to_json(doc.terms);
    j["meta"] = doc.meta;
    json sections = json::array();
    for (const auto& s : doc.sections) {
        sections.push_back({{"name", s.name}, {"var", s.var}, {"terms", terms_to_json(s.terms)}});
    }
    j["sections"] = std::move(sections);
    return j.dump(2);
}

OutputDocument from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("document: invalid JSON: ") + e.what());
    }
    try {
        OutputDocument doc;
        doc.kind = parse_kind(j.at("kind").get<std::string>());
        doc.n = j.at("n").get<std::size_t>();
        if (j.contains("bidegrees")) {
            std::vector<std::pair<Coeff, Coeff>> b;
            for (const auto& pair : j["bidegrees"]) b.emplace_back(pair.at(0).get<Coeff>(), pair.at(1).get<Coeff>());
            doc.bidegrees = std::move(b);
        }
        doc.var = j.value("var", "z");
        doc.terms = terms_from_json(j.at("terms"));
        if (j.contains("meta")) doc.meta = j["meta"].get<std::map<std::string, std::string>>();
        if (j.contains("sections")) {
            for (const auto& s : j["sections"]) {
                doc.sections.push_back({s.at("name").get<std::string>(), s.value("var", "z"), terms_from_json(s.at("terms"))});
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw DomainError(std::string("document: schema violation: ") + e.what());
    }
}

std::string schubert_text(const Partition& p) {
    if (p.empty()) return "[Gr]";
    if (p.length() == 1) return "[X_" + std::to_string(p[0]) + "]";
    std::string s = "[X_{";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "}]";
}

namespace {

std::string schubert_latex(const Partition& p) {
    if (p.empty()) return "[\\mathrm{Gr}(1,\\mathbb{P}^3)]";
    std::string s = "[X_{";
    for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "}]";
}

// Body of one term without its sign; `unit` tells whether the body is the
// bare constant 1 (so the coefficient must be printed).
std::string monomial_text(const Exponents& e, const std::string& var, bool& unit) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    unit = s.empty();
    return s;
}

std::string monomial_latex(const Exponents& e, const std::string& var, bool& unit) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += var + "_{" + std::to_string(i + 1) + "}";
        if (e[i] != 1) s += "^{" + std::to_string(e[i]) + "}";
    }
    unit = s.empty();
    return s;
}

template <class Body>
std::string join_terms(const std::vector<DocTerm>& terms, const std::string& times, Body body) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        const bool negative = t.coeff < 0;
        // Magnitude printed as unsigned so INT64_MIN does not overflow.
        const auto mag = negative ? 0 - static_cast<std::uint64_t>(t.coeff) : static_cast<std::uint64_t>(t.coeff);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        bool unit = false;
        const std::string b = body(t, unit);
        if (unit) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + times;
            out += b;
        }
    }
    return out;
}

}  // namespace

std::string terms_text(const std::vector<DocTerm>& terms, const std::string& var) {
    return join_terms(terms, "*", [&](const DocTerm& t, bool& unit) {
        if (const auto* e = std::get_if<Exponents>(&t.key)) return monomial_text(*e, var, unit);
        std::string s;
        for (const auto& p : std::get<SlotKey>(t.key)) s += (s.empty() ? "" : " ⊗ ") + schubert_text(p);
        return s;
    });
}

std::string terms_latex(const std::vector<DocTerm>& terms, const std::string& var) {
    return join_terms(terms, " ", [&](const DocTerm& t, bool& unit) {
        if (const auto* e = std::get_if<Exponents>(&t.key)) return monomial_latex(*e, var, unit);
        std::string s;
        for (const auto& p : std::get<SlotKey>(t.key)) s += (s.empty() ? "" : " \\otimes ") + schubert_latex(p);
        return s;
    });
}

std::string render_text(const OutputDocument& doc) {
    std::ostringstream os;
    if (doc.kind == DocKind::KClass || doc.kind == DocKind::Report) {
        for (const auto& [k, v] : doc.meta) os << "# " << k << ": " << v << "\n";
    }
    if (!(doc.kind == DocKind::Report && doc.terms.empty())) os << terms_text(doc.terms, doc.var) << "\n";
    for (const auto& s : doc.sections) os << s.name << ": " << terms_text(s.terms, s.var) << "\n";
    return os.str();
}

std::string render_latex(const OutputDocument& doc) {
    std::ostringstream os;
    for (const auto& [k, v] : doc.meta) os << "% " << k << ": " << v << "\n";
    if (!(doc.kind == DocKind::Report && doc.terms.empty())) os << "\\[ " << terms_latex(doc.terms, doc.var) << " \\]\n";
    for (const auto& s : doc.sections) {
        os << "% " << s.name << "\n\\[ " << terms_latex(s.terms, s.var) << " \\]\n";
    }
    return os.str();
}

}  // namespace mimd
