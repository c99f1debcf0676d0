#pragma once

// Document builders behind the CLI subcommands. Kept in the library so the
// self-test and the test suites exercise exactly what the tool prints.

#include <optional>
#include <vector>

#include "mimd/document.hpp"
#include "mimd/ktheory.hpp"
#include "mimd/multiview.hpp"

namespace mimd {

/// Multidegree of V_n, or with as_class its Schubert expansion.
OutputDocument concurrent_document(std::size_t n, bool as_class);

/// Multidegree of (C_1 x ... x C_n) cap V_n, or with as_class its Schubert expansion.
OutputDocument multiimage_document(const std::vector<Congruence>& cams, bool as_class);

/// Transcribed K-class with its lowest-degree part. For n = 2 the
/// complete-intersection class of V_2 and the difference are appended as
/// sections. With oracle_only only the complete-intersection class is
/// emitted (n must be 2).
OutputDocument kclass_document(std::size_t n, KInterpretation interpretation, bool oracle_only);

/// Gr(1,P^3) multiplication table as sections; poset in meta.
OutputDocument table_document();

/// Parses "a,b" into a congruence; throws DomainError on bad syntax or (0,0).
Congruence parse_bidegree(const std::string& text);

}  // namespace mimd
