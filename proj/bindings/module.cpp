#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsigma/io.hpp"
#include "qsigma/theta.hpp"

namespace py = pybind11;
using qsigma::io::json;

namespace {

// JSON strings in, JSON strings out: the python wrapper turns them into
// dicts, so the exact document schema of the CLI is the binding surface too.

std::string decide_str(const std::string& document) {
    json doc = json::parse(document);
    qsigma::io::ParsedDocument parsed = qsigma::io::parse_equation_document(doc);
    return qsigma::io::verdict_to_json(qsigma::decide(parsed.a), false).dump();
}

std::string decide_traced_str(const std::string& document) {
    json doc = json::parse(document);
    qsigma::io::ParsedDocument parsed = qsigma::io::parse_equation_document(doc);
    return qsigma::io::verdict_to_json(qsigma::decide(parsed.a), true).dump();
}

std::string verify_str(const std::string& document, const std::string& witness) {
    qsigma::io::ParsedDocument parsed = qsigma::io::parse_equation_document(json::parse(document));
    qsigma::Witness w = qsigma::io::witness_from_json(json::parse(witness), parsed.a);
    return json{{"verified", qsigma::verify(parsed.a, w)}}.dump();
}

std::string oracle_str(const std::string& document, long bound) {
    qsigma::io::ParsedDocument parsed = qsigma::io::parse_equation_document(json::parse(document));
    auto w = qsigma::brute_force_oracle(parsed.a, qsigma::Int(bound));
    json result{{"found", w.has_value()}, {"bound", bound}};
    if (w) result["witness"] = qsigma::io::witness_to_json(*w, true);
    return result.dump();
}

std::string gm_group_str(const std::string& document) {
    qsigma::GmMultFunction phi = qsigma::io::parse_gm_document(json::parse(document));
    return qsigma::io::group_structure_to_json(qsigma::group_structure(phi)).dump();
}

double theta_relation_residual(int kind, unsigned t, std::optional<long> u, std::optional<long> v,
                               std::optional<long> n, double q, int truncation, std::size_t samples) {
    qsigma::ThetaParams params{std::complex<double>(q, 0.0), truncation,
                               qsigma::default_theta_samples(samples)};
    return qsigma::relation_check_431(kind, t, u, v, n, params);
}

double theta_functional_residual(double q, int truncation, std::size_t samples) {
    qsigma::ThetaParams params{std::complex<double>(q, 0.0), truncation,
                               qsigma::default_theta_samples(samples)};
    return qsigma::functional_eq_residual(params);
}

}  // namespace

PYBIND11_MODULE(_qsigma, m) {
    m.doc() = "exact dependence certificates for first-order q-difference equations";
    m.def("decide_json", &decide_str, py::arg("document"));
    m.def("decide_traced_json", &decide_traced_str, py::arg("document"));
    m.def("verify_json", &verify_str, py::arg("document"), py::arg("witness"));
    m.def("oracle_json", &oracle_str, py::arg("document"), py::arg("bound"));
    m.def("gm_group_json", &gm_group_str, py::arg("document"));
    m.def("theta_relation_residual", &theta_relation_residual, py::arg("kind"), py::arg("t"),
          py::arg("u") = std::nullopt, py::arg("v") = std::nullopt, py::arg("n") = std::nullopt,
          py::arg("q") = 2.0, py::arg("truncation") = 40, py::arg("samples") = 32);
    m.def("theta_functional_residual", &theta_functional_residual, py::arg("q") = 2.0,
          py::arg("truncation") = 40, py::arg("samples") = 32);
}
