#include "qsigma/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "qsigma/io.hpp"
#include "qsigma/theta.hpp"

namespace qsigma::cli {

namespace {

using io::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

json decide_document(const json& doc, bool trace, bool probe) {
    io::ParsedDocument parsed = io::parse_equation_document(doc);
    if (probe) io::probe_orbit_distinctness(parsed, parsed.a.t());
    return io::verdict_to_json(decide(parsed.a), trace);
}

json theta_relation_report(int kind, unsigned t, std::optional<long> u, std::optional<long> v,
                           std::optional<long> n, const ThetaParams& params, bool negative_control,
                           double tolerance) {
    double residual;
    if (!negative_control) {
        residual = relation_check_431(kind, t, u, v, n, params);
    } else {
        // Same lambda expression with one exponent bumped; must fail badly.
        std::vector<ThetaMonomial> monomial;
        const long tl = static_cast<long>(t);
        switch (kind) {
            case 1: monomial = {{0, 1}, {1, -1}, {2, 1}}; break;
            case 2: monomial = {{u.value(), n.value()}, {v.value(), -n.value() + 1}}; break;
            case 3: monomial = {{0, tl}, {1, -tl + 1}}; break;
            default: throw std::invalid_argument("relation kind must be 1, 2 or 3");
        }
        residual = sigma_q_invariance_residual(monomial, t, params);
    }
    json out{{"kind", kind},
             {"t", t},
             {"q", params.q.real()},
             {"truncation", params.truncation},
             {"samples", params.samples.size()},
             {"negative_control", negative_control},
             {"residual", residual},
             {"tolerance", tolerance}};
    out["pass"] = negative_control ? residual > tolerance : residual < tolerance;
    if (u) out["u"] = *u;
    if (v) out["v"] = *v;
    if (n) out["n"] = *n;
    return out;
}

json pseudofield_regression_report() {
    // Q(i)[x]/(x^4-1) split into four components by x -> (1, i, -1, -i);
    // sigma(f)(v) = f(-v) sends component c to c-2, rho(f)(v) = f(iv)
    // sends c to c-1.
    Pseudofield pf(4, 4);
    PfAction sigma{{2, 3, 0, 1}, {1, 1, 1, 1}};
    PfAction rho{{3, 0, 1, 2}, {1, 1, 1, 1}};
    pf.set_sigma(sigma);
    pf.add_sigma1_generator(rho, 4);
    ConstantsReport sigma_constants = constants_subring(pf, true, {});
    ConstantsReport full_constants = constants_subring(pf, true, {0});
    json out{{"description", "Q(i)[x]/(x^4-1) with sigma: x -> -x, rho: x -> ix"},
             {"base_order", 4},
             {"components", 4},
             {"action_tables",
              json{{"sigma", json{{"perm", sigma.perm}, {"aut", sigma.aut}}},
                   {"rho", json{{"perm", rho.perm}, {"aut", rho.aut}}}}},
             {"constants", io::constants_report_to_json(sigma_constants)},
             {"full_constants", io::constants_report_to_json(full_constants)},
             {"simple_under_sigma_rho", is_simple(pf, true, {0})},
             {"simple_under_sigma", is_simple(pf, true, {})}};
    return out;
}

json f_sigma1_report(unsigned base_order, const std::vector<unsigned>& orders) {
    FSigma1 f = f_sigma1(base_order, orders);
    json actions = json::object();
    for (std::size_t g = 0; g < f.pf.sigma1_count(); ++g)
        actions["rho_" + std::to_string(g)] = json{{"perm", f.pf.sigma1_generator(g).perm},
                                                   {"aut", f.pf.sigma1_generator(g).aut},
                                                   {"order", f.pf.sigma1_order(g)}};
    std::vector<std::size_t> all_gens;
    for (std::size_t g = 0; g < f.pf.sigma1_count(); ++g) all_gens.push_back(g);
    json out{{"base_order", base_order},
             {"components", f.pf.components()},
             {"action_tables", actions},
             {"constants", io::constants_report_to_json(constants_subring(f.pf, true, all_gens))},
             {"simple", is_simple(f.pf, false, all_gens)}};
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact dependence certificates for first-order q-difference equations "
                 "with periodic twists"};
    app.require_subcommand(1);

    std::string input_path, witness_path, batch_path;
    bool trace = false, probe = false;

    CLI::App* decide_cmd = app.add_subcommand("decide", "run the zero-row criterion on a document");
    decide_cmd->add_option("--input", input_path, "equation document (JSON)");
    decide_cmd->add_option("--batch", batch_path, "JSON array of documents");
    decide_cmd->add_flag("--trace", trace, "emit the a-matrix, D-matrix, and scaling plan");
    decide_cmd->add_flag("--probe-distinct", probe, "numeric orbit-distinctness probe (needs hints)");

    CLI::App* witness_cmd = app.add_subcommand("witness", "synthesize a certificate (phi, b)");
    witness_cmd->add_option("--input", input_path, "equation document (JSON)")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check an externally supplied certificate");
    verify_cmd->add_option("--input", input_path, "equation document (JSON)")->required();
    verify_cmd->add_option("--witness", witness_path, "witness document (JSON)")->required();

    long long bound = 0;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive certificate search up to a bound");
    oracle_cmd->add_option("--input", input_path, "equation document (JSON)")->required();
    oracle_cmd->add_option("--bound", bound, "max |n_r| to enumerate (default 2t)");

    CLI::App* gm_cmd = app.add_subcommand("gm-group", "structure of a monomial subgroup of the torus");
    gm_cmd->add_option("--input", input_path, "monomial system document (JSON)")->required();

    int kind = 0;
    unsigned t_param = 0;
    long long u_param = 0, v_param = 0, n_param = 0;
    double q_param = 2.0, tolerance = 1e-9;
    int truncation = 40;
    std::size_t samples = 32;
    bool functional = false, negative_control = false;
    CLI::App* theta_cmd = app.add_subcommand("theta-check", "numeric theta-function cross-checks");
    theta_cmd->add_option("--kind", kind, "relation family: 1, 2 or 3");
    theta_cmd->add_flag("--functional", functional, "check theta(qz) = -qz theta(z) instead");
    theta_cmd->add_option("--t", t_param, "order of zeta");
    auto* u_opt = theta_cmd->add_option("--u", u_param, "shift u (kind 2)");
    auto* v_opt = theta_cmd->add_option("--v", v_param, "shift v (kind 2)");
    auto* n_opt = theta_cmd->add_option("--n", n_param, "exponent n (kind 2)");
    theta_cmd->add_option("--q", q_param, "real q with |q| > 1 (default 2)");
    theta_cmd->add_option("--truncation", truncation, "series truncation (default 40)");
    theta_cmd->add_option("--samples", samples, "number of sample points (default 32)");
    theta_cmd->add_option("--tolerance", tolerance, "pass threshold (default 1e-9)");
    theta_cmd->add_flag("--negative-control", negative_control, "perturb an exponent; residual must blow up");
    bool benrelation_probe = false;
    theta_cmd->add_flag("--benrelation-probe", benrelation_probe,
                        "heuristic collocation-rank probe for linear relations among theta powers");

    std::string sigma1_spec;
    unsigned base_order = 1;
    CLI::App* pf_cmd = app.add_subcommand("pseudofield-demo", "difference pseudofield structure reports");
    pf_cmd->add_option("--sigma1", sigma1_spec, "cyclic orders, e.g. 2,2 (default: the x^4 = 1 ring)");
    pf_cmd->add_option("--base-order", base_order, "cyclotomic order of the base field (default 1 = Q)");

    std::vector<const char*> argv;
    argv.push_back("qsigma");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (decide_cmd->parsed()) {
            if (input_path.empty() == batch_path.empty())
                throw std::invalid_argument("decide needs exactly one of --input or --batch");
            if (!batch_path.empty()) {
                json docs = load_json(batch_path);
                if (!docs.is_array()) throw std::invalid_argument("batch file must hold a JSON array");
                json results = json::array();
                for (const json& doc : docs) results.push_back(decide_document(doc, trace, probe));
                out << results.dump(2) << "\n";
            } else {
                out << decide_document(load_json(input_path), trace, probe).dump(2) << "\n";
            }
        } else if (witness_cmd->parsed()) {
            io::ParsedDocument parsed = io::parse_equation_document(load_json(input_path));
            Verdict v = decide(parsed.a);
            if (v.witness)
                out << io::witness_to_json(*v.witness, true).dump(2) << "\n";
            else
                out << json{{"dependent", false}}.dump(2) << "\n";
        } else if (verify_cmd->parsed()) {
            io::ParsedDocument parsed = io::parse_equation_document(load_json(input_path));
            Witness w = io::witness_from_json(load_json(witness_path), parsed.a);
            out << json{{"verified", verify(parsed.a, w)}}.dump(2) << "\n";
        } else if (oracle_cmd->parsed()) {
            io::ParsedDocument parsed = io::parse_equation_document(load_json(input_path));
            Int b = bound > 0 ? Int(static_cast<long>(bound)) : Int(2) * parsed.a.t();
            auto w = brute_force_oracle(parsed.a, b);
            json result{{"found", w.has_value()}, {"bound", io::int_to_json(b)}};
            if (w) result["witness"] = io::witness_to_json(*w, true);
            out << result.dump(2) << "\n";
        } else if (gm_cmd->parsed()) {
            GmMultFunction phi = io::parse_gm_document(load_json(input_path));
            out << io::group_structure_to_json(group_structure(phi)).dump(2) << "\n";
        } else if (theta_cmd->parsed()) {
            ThetaParams params{std::complex<double>(q_param, 0.0), truncation, default_theta_samples(samples)};
            if (benrelation_probe) {
                std::size_t columns = 1 + static_cast<std::size_t>(t_param) * (t_param - 1);
                if (params.samples.size() < columns)
                    params.samples = default_theta_samples(2 * columns);
                std::size_t rank = benrelation_collocation_rank(t_param, params);
                json result{{"probe", "collocation-rank"},
                            {"heuristic", true},
                            {"t", t_param},
                            {"q", q_param},
                            {"columns", columns},
                            {"rank", rank},
                            {"full_rank", rank == columns}};
                out << result.dump(2) << "\n";
            } else if (functional) {
                double residual = functional_eq_residual(params);
                json result{{"functional_residual", residual},
                            {"q", q_param},
                            {"truncation", truncation},
                            {"samples", samples},
                            {"tolerance", tolerance},
                            {"pass", residual < tolerance}};
                out << result.dump(2) << "\n";
            } else {
                std::optional<long> u, v, n;
                if (u_opt->count()) u = u_param;
                if (v_opt->count()) v = v_param;
                if (n_opt->count()) n = n_param;
                out << theta_relation_report(kind, t_param, u, v, n, params, negative_control, tolerance)
                           .dump(2)
                    << "\n";
            }
        } else if (pf_cmd->parsed()) {
            if (sigma1_spec.empty()) {
                out << pseudofield_regression_report().dump(2) << "\n";
            } else {
                std::vector<unsigned> orders;
                std::size_t pos = 0;
                while (pos < sigma1_spec.size()) {
                    std::size_t next = sigma1_spec.find(',', pos);
                    if (next == std::string::npos) next = sigma1_spec.size();
                    orders.push_back(static_cast<unsigned>(std::stoul(sigma1_spec.substr(pos, next - pos))));
                    pos = next + 1;
                }
                out << f_sigma1_report(base_order, orders).dump(2) << "\n";
            }
        }
        return 0;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qsigma::cli
