#include "qsigma/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qsigma::io {

namespace {

const Int kJsonSafeBound = (Int(1) << 53);

[[noreturn]] void schema_error(const std::string& msg) { throw std::invalid_argument("schema: " + msg); }

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long small_int(const json& j, const char* what) {
    Int v = int_from_json(j);
    if (!v.fits_slong_p()) schema_error(std::string(what) + " out of range");
    return v.get_si();
}

}  // namespace

json int_to_json(const Int& x) {
    if (abs(x) < kJsonSafeBound) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            schema_error("malformed integer string '" + j.get<std::string>() + "'");
        }
    }
    schema_error("expected an integer (number or decimal string)");
}

ParsedDocument parse_equation_document(const json& doc) {
    if (!doc.is_object()) schema_error("document must be an object");
    long long t = small_int(require(doc, "t"), "t");
    if (t < 2) schema_error("t must be at least 2");

    ConstGroup::Builder builder(static_cast<unsigned>(t));
    Int lambda_q = 0, lambda_zeta = 0;
    std::optional<std::size_t> symbol_index;
    if (doc.contains("lambda")) {
        const json& lam = doc.at("lambda");
        if (!lam.is_object()) schema_error("lambda must be an object");
        for (auto it = lam.begin(); it != lam.end(); ++it)
            if (it.key() != "q_exp" && it.key() != "zeta_exp" && it.key() != "symbol")
                schema_error("unknown lambda field '" + it.key() + "'");
        if (lam.contains("q_exp")) lambda_q = int_from_json(lam.at("q_exp"));
        if (lam.contains("zeta_exp")) lambda_zeta = int_from_json(lam.at("zeta_exp"));
        if (lam.contains("symbol")) {
            const json& sym = lam.at("symbol");
            std::string name = sym.contains("name") ? sym.at("name").get<std::string>() : "lam";
            symbol_index = builder.add_symbol(name);
            const json& declare = require(sym, "declare");
            if (declare.is_string() && declare.get<std::string>() == "free") {
                // no relation
            } else if (declare.is_object() && declare.contains("torsion")) {
                long long w = small_int(declare.at("torsion"), "torsion order");
                if (w < 1) schema_error("torsion order must be positive");
                std::vector<Int> rel(*symbol_index + 1, Int(0));
                rel[*symbol_index] = static_cast<long>(w);
                builder.add_relation(std::move(rel));
            } else if (declare.is_object() && declare.contains("q_relation")) {
                const json& uv = declare.at("q_relation");
                if (!uv.is_array() || uv.size() != 2) schema_error("q_relation must be [u, v]");
                Int u = int_from_json(uv[0]), v = int_from_json(uv[1]);
                if (u == 0) schema_error("q_relation exponent u must be nonzero");
                std::vector<Int> rel(*symbol_index + 1, Int(0));
                rel[*symbol_index] = u;
                rel[ConstGroup::q_index] = -v;
                builder.add_relation(std::move(rel));
            } else {
                schema_error("symbol declare must be \"free\", {\"torsion\": w} or {\"q_relation\": [u,v]}");
            }
        }
    }
    auto group = builder.build();

    std::vector<std::string> names;
    std::vector<std::optional<std::complex<double>>> hints;
    const json& orbits = doc.contains("orbits") ? doc.at("orbits") : json::array();
    if (!orbits.is_array()) schema_error("orbits must be an array");
    std::set<std::string> seen;
    for (const json& orbit : orbits) {
        std::string base = require(orbit, "base").get<std::string>();
        if (base.empty() || !seen.insert(base).second) schema_error("orbit base names must be unique");
        names.push_back(base);
        if (orbit.contains("hint")) {
            const json& h = orbit.at("hint");
            hints.emplace_back(std::complex<double>(require(h, "re").get<double>(),
                                                    h.contains("im") ? h.at("im").get<double>() : 0.0));
        } else {
            hints.emplace_back(std::nullopt);
        }
    }

    FactoredRatFun a(group, names);
    if (doc.contains("T")) a.set_z_power(int_from_json(doc.at("T")));
    ConstElem lambda = const_mul(group->q_power(lambda_q), group->zeta_power(lambda_zeta));
    if (symbol_index) lambda = const_mul(lambda, group->generator(*symbol_index));
    a.set_constant(std::move(lambda));

    for (std::size_t i = 0; i < names.size(); ++i) {
        const json& factors = require(orbits[i], "factors");
        if (!factors.is_array()) schema_error("factors must be an array");
        std::set<std::pair<long long, long long>> keys;
        for (const json& f : factors) {
            long long k = small_int(require(f, "k"), "k");
            long long d = small_int(require(f, "d"), "d");
            Int s = int_from_json(require(f, "s"));
            if (k < 0 || k >= t) schema_error("factor k must lie in [0, t)");
            if (d < -100000 || d > 100000) schema_error("factor d out of supported range");
            if (s == 0) schema_error("factor exponents must be nonzero");
            if (!keys.insert({k, d}).second) schema_error("duplicate factor (k, d) within an orbit");
            a.add_factor(i, k, d, s);
        }
    }

    std::optional<std::complex<double>> q_hint;
    if (doc.contains("q_hint")) {
        const json& qh = doc.at("q_hint");
        if (qh.is_number())
            q_hint = std::complex<double>(qh.get<double>(), 0.0);
        else
            q_hint = std::complex<double>(require(qh, "re").get<double>(),
                                          qh.contains("im") ? qh.at("im").get<double>() : 0.0);
        if (std::abs(*q_hint) <= 1.0) schema_error("q_hint must have modulus above 1");
    }
    return ParsedDocument{std::move(a), std::move(hints), q_hint};
}

void probe_orbit_distinctness(const ParsedDocument& doc, unsigned t, long long d_range, double tolerance) {
    if (!doc.q_hint) schema_error("distinctness probe requires q_hint");
    const std::complex<double> q = *doc.q_hint;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < doc.orbit_hints.size(); ++i) {
        if (!doc.orbit_hints[i]) continue;
        for (std::size_t j = i + 1; j < doc.orbit_hints.size(); ++j) {
            if (!doc.orbit_hints[j]) continue;
            for (unsigned k = 0; k < t; ++k)
                for (long long d = -d_range; d <= d_range; ++d) {
                    std::complex<double> image = std::polar(1.0, two_pi * k / t) *
                                                 std::pow(q, static_cast<double>(d)) * *doc.orbit_hints[j];
                    double scale = std::max(1.0, std::abs(*doc.orbit_hints[i]));
                    if (std::abs(image - *doc.orbit_hints[i]) <= tolerance * scale)
                        throw std::invalid_argument(
                            "orbit hints '" + doc.a.orbit_names()[i] + "' and '" + doc.a.orbit_names()[j] +
                            "' are related by zeta^" + std::to_string(k) + " q^" + std::to_string(d));
                }
        }
    }
}

json ratfun_to_json(const FactoredRatFun& f) {
    json factors = json::array();
    for (const auto& [ref, s] : f.factors())
        factors.push_back(json{{"orbit", f.orbit_names()[ref.orbit]},
                               {"k", ref.zeta_exp},
                               {"d", ref.q_exp},
                               {"s", int_to_json(s)}});
    json constant = json::object();
    ConstElem c = const_canonical(f.constant());
    for (std::size_t i = 0; i < c.exponents.size(); ++i)
        if (c.exponents[i] != 0) constant[f.group_ptr()->generator_names()[i]] = int_to_json(c.exponents[i]);
    return json{{"constant", constant},
                {"z_power", int_to_json(f.z_power())},
                {"factors", factors},
                {"pretty", f.to_string()}};
}

json witness_to_json(const Witness& w, bool verified) {
    json phi = json::array();
    for (const Int& n : w.phi.n) phi.push_back(int_to_json(n));
    return json{{"phi", phi},
                {"b", ratfun_to_json(w.b)},
                {"M", int_to_json(w.b.z_power())},
                {"verified", verified}};
}

Witness witness_from_json(const json& j, const FactoredRatFun& a) {
    MultFunction phi;
    const json& phi_json = require(j, "phi");
    if (!phi_json.is_array() || phi_json.size() != a.t()) schema_error("phi must be an array of length t");
    for (const json& e : phi_json) phi.n.push_back(int_from_json(e));

    FactoredRatFun b(a.group_ptr(), a.orbit_names());
    const json& bj = require(j, "b");
    if (bj.contains("z_power")) b.set_z_power(int_from_json(bj.at("z_power")));
    if (bj.contains("constant")) {
        const json& cj = bj.at("constant");
        ConstElem c = a.group_ptr()->one();
        const auto& names = a.group_ptr()->generator_names();
        for (auto it = cj.begin(); it != cj.end(); ++it) {
            auto pos = std::find(names.begin(), names.end(), it.key());
            if (pos == names.end()) schema_error("unknown constant symbol '" + it.key() + "'");
            c.exponents[pos - names.begin()] = int_from_json(it.value());
        }
        b.set_constant(std::move(c));
    }
    if (bj.contains("factors")) {
        for (const json& f : bj.at("factors")) {
            std::string orbit = require(f, "orbit").get<std::string>();
            const auto& names = a.orbit_names();
            auto pos = std::find(names.begin(), names.end(), orbit);
            if (pos == names.end()) schema_error("witness references undeclared orbit '" + orbit + "'");
            b.add_factor(pos - names.begin(), small_int(require(f, "k"), "k"), small_int(require(f, "d"), "d"),
                         int_from_json(require(f, "s")));
        }
    }
    return Witness{std::move(phi), std::move(b)};
}

json verdict_to_json(const Verdict& v, bool include_trace) {
    json out{{"dependent", v.dependent}, {"case", v.tag == CaseTag::case1 ? 1 : 2}};
    out["zero_rows"] = v.zero_rows;
    if (v.witness) out["witness"] = witness_to_json(*v.witness, true);
    if (include_trace) {
        json a_matrix = json::array();
        for (const auto& row : v.summary.a) {
            json r = json::array();
            for (const Int& x : row) r.push_back(int_to_json(x));
            a_matrix.push_back(std::move(r));
        }
        json d_matrix = json::array();
        json d_pretty = json::array();
        for (unsigned k = 0; k < v.dmatrix.t; ++k) {
            json row = json::array(), prow = json::array();
            for (std::size_t i = 0; i < v.dmatrix.orbit_count; ++i) {
                json coeffs = json::array();
                for (const Rat& c : v.dmatrix.d[k][i].coeffs()) coeffs.push_back(rat_to_string(c));
                row.push_back(std::move(coeffs));
                prow.push_back(v.dmatrix.d[k][i].to_string());
            }
            d_matrix.push_back(std::move(row));
            d_pretty.push_back(std::move(prow));
        }
        json rescale{{"case", v.tag == CaseTag::case1 ? 1 : 2}};
        if (v.lambda_class.q_relation) {
            rescale["u"] = int_to_json(v.lambda_class.q_relation->first);
            rescale["v"] = int_to_json(v.lambda_class.q_relation->second);
        }
        if (v.lambda_class.torsion_order) rescale["w"] = int_to_json(*v.lambda_class.torsion_order);
        out["trace"] = json{{"window", v.summary.window},
                            {"a_matrix", a_matrix},
                            {"d_matrix", d_matrix},
                            {"d_matrix_pretty", d_pretty},
                            {"rescale", rescale}};
        auto int_vector = [](const std::vector<Int>& v) {
            json arr = json::array();
            for (const Int& x : v) arr.push_back(int_to_json(x));
            return arr;
        };
        if (v.synthesis.kernel_n) out["trace"]["kernel_n"] = int_vector(*v.synthesis.kernel_n);
        if (v.synthesis.rescaled_n) out["trace"]["rescaled_n"] = int_vector(*v.synthesis.rescaled_n);
        if (v.witness) out["trace"]["final_phi"] = int_vector(v.witness->phi.n);
    }
    return out;
}

GmMultFunction parse_gm_document(const json& doc) {
    long long t = small_int(require(doc, "t"), "t");
    if (t < 1) schema_error("t must be positive");
    if (doc.contains("phi")) {
        const json& rows = doc.at("phi");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(t))
            schema_error("phi must be an array of t rows");
        GmMultFunction phi;
        phi.t = static_cast<unsigned>(t);
        for (const json& row : rows) {
            if (row.is_null()) {
                phi.rows.emplace_back(std::nullopt);
                continue;
            }
            if (!row.is_array() || row.size() != static_cast<std::size_t>(t))
                schema_error("phi rows must be null or length-t arrays");
            std::vector<Int> exps;
            for (const json& e : row) exps.push_back(int_from_json(e));
            phi.rows.emplace_back(std::move(exps));
        }
        return phi;
    }
    MonomialSystem sys;
    sys.t = static_cast<unsigned>(t);
    for (const json& eq : require(doc, "equations")) {
        MonomialSystem::Equation e;
        long long idem = small_int(require(eq, "idempotent"), "idempotent");
        if (idem < 0 || idem >= t) schema_error("idempotent index out of range");
        e.idempotent = static_cast<std::size_t>(idem);
        const json& exps = require(eq, "exponents");
        if (!exps.is_array() || exps.size() != static_cast<std::size_t>(t))
            schema_error("exponents must be a length-t array");
        for (const json& x : exps) e.exponents.push_back(int_from_json(x));
        sys.equations.push_back(std::move(e));
    }
    return reduce_to_phi(sys);
}

namespace {

std::string root_of_unity_pretty(const Int& num, const Int& den) {
    if (den == 1) return "1";
    if (den == 2) return "-1";
    if (den == 4 && num == 1) return "i";
    if (den == 4 && num == 3) return "-i";
    return "e(" + num.get_str() + "/" + den.get_str() + ")";
}

}  // namespace

json group_structure_to_json(const GroupStructure& g) {
    json out{{"empty", g.empty}, {"free_rank", g.free_rank}};
    json torsion = json::array();
    Int order = 1;
    for (const Int& d : g.torsion) {
        torsion.push_back(int_to_json(d));
        order *= d;
    }
    out["torsion"] = torsion;
    if (g.empty) return out;
    out["finite"] = g.free_rank == 0;
    if (g.free_rank == 0) out["order"] = int_to_json(order);
    if (g.elements) {
        json elements = json::array();
        for (const RootOfUnityTuple& e : *g.elements) {
            json coords = json::array(), pretty = json::array();
            for (const auto& [num, den] : e.coords) {
                coords.push_back(num.get_str() + "/" + den.get_str());
                pretty.push_back(root_of_unity_pretty(num, den));
            }
            elements.push_back(json{{"exponents", coords}, {"pretty", pretty}});
        }
        out["elements"] = elements;
    }
    return out;
}

json constants_report_to_json(const ConstantsReport& r) {
    json out{{"dimension", r.dimension_over_q},
             {"idempotents", r.indecomposable_idempotents}};
    if (r.dimension_over_base) out["dimension_over_base"] = *r.dimension_over_base;
    json basis = json::array();
    for (const PfElement& b : r.basis) {
        json coords = json::array();
        for (const CycNum& c : b) coords.push_back(c.to_string());
        basis.push_back(std::move(coords));
    }
    out["basis"] = basis;
    return out;
}

}  // namespace qsigma::io
