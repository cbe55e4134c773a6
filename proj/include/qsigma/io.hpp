#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qsigma/gm_subgroups.hpp"
#include "qsigma/pseudofield.hpp"
#include "qsigma/witness.hpp"

namespace qsigma::io {

using nlohmann::json;

/// Integers serialize as JSON numbers while exactly representable in a
/// double (|x| < 2^53) and as decimal strings beyond; both forms parse.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

/// Parsed equation document: the factored input plus the optional numeric
/// hints for the orbit-distinctness probe.
struct ParsedDocument {
    FactoredRatFun a;
    std::vector<std::optional<std::complex<double>>> orbit_hints;
    std::optional<std::complex<double>> q_hint;
};

ParsedDocument parse_equation_document(const json& doc);

/// Numeric consistency probe: errors when two declared orbits are related by
/// zeta^k q^d within tolerance (requires hints and a q hint).
void probe_orbit_distinctness(const ParsedDocument& doc, unsigned t, long long d_range = 6,
                              double tolerance = 1e-9);

json ratfun_to_json(const FactoredRatFun& f);
json witness_to_json(const Witness& w, bool verified);
Witness witness_from_json(const json& j, const FactoredRatFun& a);
json verdict_to_json(const Verdict& v, bool include_trace);

/// gm-group document: {"t": .., "equations": [{"idempotent", "exponents"}]}
/// or {"t": .., "phi": [[..] | null, ..]}.
GmMultFunction parse_gm_document(const json& doc);
json group_structure_to_json(const GroupStructure& g);

json constants_report_to_json(const ConstantsReport& r);

}  // namespace qsigma::io
