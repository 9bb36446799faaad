// crnspect: exact analysis of when a reaction network's Jacobian can
// carry a simple eigenvalue zero, plus the supporting symbolic and
// per-instance computations.
//
// Exit codes: analyze encodes its verdict (0 clean, 10 obstructed,
// 11 degenerate, 12 undecided); 2 marks bad input, 3 a blown
// enumeration or term cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "crn/errors.hpp"
#include "crn/mass_action.hpp"
#include "crn/network.hpp"
#include "crn/obstruction.hpp"
#include "crn/oracle.hpp"
#include "crn/report.hpp"
#include "crn/selection.hpp"
#include "crn/stoich.hpp"
#include "crn/sym_matrix.hpp"

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Shared reader for `name = value` files (rates, k, x). Comments with
// '#', blank lines skipped, duplicates rejected.
std::map<std::string, crn::Rat> parse_assignment_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::map<std::string, crn::Rat> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trimmed(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw crn::ParseError("expected 'name = value'", line_no, 1);
        }
        std::string name = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (name.empty()) {
            throw crn::ParseError("missing name before '='", line_no, 1);
        }
        auto q = crn::parse_rational(value);
        if (!q) {
            throw crn::ParseError("bad rational '" + value + "'", line_no,
                                  static_cast<int>(eq) + 2);
        }
        if (!out.emplace(name, *q).second) {
            throw crn::ParseError("duplicate assignment of '" + name + "'",
                                  line_no, 1);
        }
    }
    return out;
}

crn::RateInstance parse_rates_file(const crn::Network& net,
                                   const std::string& path) {
    auto assignments = parse_assignment_file(path);
    auto vars = crn::rate_variables(net);
    crn::RateInstance values(vars.size());
    for (size_t v = 0; v < vars.size(); ++v) {
        std::string name = crn::rate_var_name(net, vars[v]);
        auto it = assignments.find(name);
        if (it == assignments.end()) {
            throw std::runtime_error(path + ": missing value for " + name);
        }
        values[v] = it->second;
        assignments.erase(it);
    }
    if (!assignments.empty()) {
        throw std::runtime_error(path + ": unknown rate variable '" +
                                 assignments.begin()->first + "'");
    }
    return values;
}

std::vector<crn::Rat> vector_by_name(
    const std::vector<std::string>& names,
    std::map<std::string, crn::Rat> assignments, const std::string& path) {
    std::vector<crn::Rat> out(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
        auto it = assignments.find(names[i]);
        if (it == assignments.end()) {
            throw std::runtime_error(path + ": missing value for '" +
                                     names[i] + "'");
        }
        out[i] = it->second;
        assignments.erase(it);
    }
    if (!assignments.empty()) {
        throw std::runtime_error(path + ": unknown name '" +
                                 assignments.begin()->first + "'");
    }
    return out;
}

struct Options {
    std::string net_path;
    bool json = false;
    std::uint64_t seed = 0;
    int samples = 256;
    std::int64_t max_terms = 0;  // 0 keeps the default
    std::int64_t max_enum = 0;
    std::string omit;
    std::string rates_path;
    std::string k_path;
    std::string x_path;
    int probe = 0;

    crn::Limits limits() const {
        crn::Limits l;
        if (max_terms > 0) l.max_terms = max_terms;
        if (max_enum > 0) l.max_enum_nodes = max_enum;
        return l;
    }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("network", opt.net_path, "reaction network file")
        ->required();
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    cmd->add_option("--max-terms", opt.max_terms,
                    "cap on polynomial term counts");
    cmd->add_option("--max-enum", opt.max_enum,
                    "cap on enumeration search nodes");
}

int run_analyze(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    crn::AnalyzeOptions options;
    options.seed = opt.seed;
    options.samples = opt.samples;
    options.limits = opt.limits();
    crn::AnalysisReport rep = crn::analyze(net, options);
    std::cout << (opt.json ? crn::analysis_to_json(net, rep)
                           : crn::analysis_to_text(net, rep));
    return crn::verdict_exit_code(rep.verdict.kind);
}

int run_child_selections(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    auto sel = crn::enumerate_child_selections(net, opt.limits());
    std::cout << (opt.json ? crn::selections_to_json(net, sel)
                           : crn::selections_to_text(net, sel));
    return 0;
}

int run_pcs(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    auto omitted = net.species_index(opt.omit);
    if (!omitted) {
        throw std::runtime_error("unknown species '" + opt.omit + "'");
    }
    auto pcs =
        crn::enumerate_partial_child_selections(net, *omitted, opt.limits());
    std::cout << (opt.json ? crn::pcs_to_json(net, pcs)
                           : crn::pcs_to_text(net, pcs));
    return 0;
}

int run_det(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    crn::MultiPoly det = crn::det_via_child_selections(net, opt.limits());
    std::string s = crn::to_string(det, crn::rate_var_names(net));
    if (opt.json) {
        std::cout << "{\n  \"det\": \"" << s << "\"\n}\n";
    } else {
        std::cout << s << "\n";
    }
    return 0;
}

int run_adjugate(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    auto names = crn::rate_var_names(net);
    crn::SymMatrix adj =
        crn::adjugate_symbolic(crn::sym_jacobian(net), opt.limits());
    if (opt.json) {
        std::ostringstream out;
        out << "{\n  \"adjugate\": [\n";
        for (int i = 0; i < adj.rows(); ++i) {
            out << "    [";
            for (int j = 0; j < adj.cols(); ++j) {
                out << (j ? ", " : "") << '"'
                    << crn::to_string(adj.at(i, j), names) << '"';
            }
            out << (i + 1 < adj.rows() ? "],\n" : "]\n");
        }
        out << "  ],\n  \"trace\": \"" << crn::to_string(adj.trace(), names)
            << "\"\n}\n";
        std::cout << out.str();
    } else {
        for (int i = 0; i < adj.rows(); ++i) {
            for (int j = 0; j < adj.cols(); ++j) {
                std::cout << "adj[" << net.species[i] << ","
                          << net.species[j]
                          << "] = " << crn::to_string(adj.at(i, j), names)
                          << "\n";
            }
        }
        std::cout << "trace = " << crn::to_string(adj.trace(), names) << "\n";
    }
    return 0;
}

int run_oracle(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    crn::RateInstance inst = parse_rates_file(net, opt.rates_path);
    crn::SpectralReport rep = crn::spectral_report(net, inst);
    std::cout << (opt.json ? crn::spectral_to_json(rep)
                           : crn::spectral_to_text(rep));
    return 0;
}

int run_massaction(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    if (opt.probe > 0) {
        crn::ProbeResult probe =
            crn::probe_singular_equilibrium(net, opt.seed, opt.probe);
        std::cout << (opt.json ? crn::probe_to_json(net, probe)
                               : crn::probe_to_text(net, probe));
        return 0;
    }
    if (opt.k_path.empty() || opt.x_path.empty()) {
        throw std::runtime_error("massaction needs --k and --x (or --probe)");
    }
    crn::MassActionInstance inst;
    std::vector<std::string> labels;
    for (const crn::Reaction& rx : net.reactions) labels.push_back(rx.label);
    inst.k = vector_by_name(labels, parse_assignment_file(opt.k_path),
                            opt.k_path);
    inst.x = vector_by_name(net.species, parse_assignment_file(opt.x_path),
                            opt.x_path);
    crn::EquilibriumCheck chk = crn::check_equilibrium(net, inst);
    std::cout << (opt.json ? crn::equilibrium_to_json(chk)
                           : crn::equilibrium_to_text(chk));
    return 0;
}

int run_kernel(const Options& opt) {
    crn::Network net = crn::parse_network_file(opt.net_path);
    auto v = crn::positive_kernel_vector(net);
    std::cout << (opt.json ? crn::kernel_to_json(net, v)
                           : crn::kernel_to_text(net, v));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact saddle-node obstruction analysis for reaction networks"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "parse, enumerate, and classify a network");
    add_common(analyze, opt);
    analyze->add_option("--seed", opt.seed, "RNG seed");
    analyze->add_option("--samples", opt.samples,
                        "singular-sampling budget");

    CLI::App* selections =
        app.add_subcommand("child-selections", "list child selections");
    add_common(selections, opt);

    CLI::App* pcs =
        app.add_subcommand("pcs", "list partial child selections");
    add_common(pcs, opt);
    pcs->add_option("--omit", opt.omit, "species left out")->required();

    CLI::App* det =
        app.add_subcommand("det", "symbolic Jacobian determinant");
    add_common(det, opt);

    CLI::App* adjugate =
        app.add_subcommand("adjugate", "symbolic Jacobian adjugate");
    add_common(adjugate, opt);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "exact spectral report at given rate derivatives");
    add_common(oracle, opt);
    oracle->add_option("--rates", opt.rates_path, "r[label,species] = value file")
        ->required();

    CLI::App* massaction = app.add_subcommand(
        "massaction", "mass-action equilibrium check or singular probe");
    add_common(massaction, opt);
    massaction->add_option("--k", opt.k_path, "rate constants file");
    massaction->add_option("--x", opt.x_path, "concentrations file");
    massaction->add_option("--probe", opt.probe,
                           "hunt a singular equilibrium for N attempts");
    massaction->add_option("--seed", opt.seed, "RNG seed");

    CLI::App* kernel = app.add_subcommand(
        "kernel", "strictly positive kernel vector of S, if any");
    add_common(kernel, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (selections->parsed()) return run_child_selections(opt);
        if (pcs->parsed()) return run_pcs(opt);
        if (det->parsed()) return run_det(opt);
        if (adjugate->parsed()) return run_adjugate(opt);
        if (oracle->parsed()) return run_oracle(opt);
        if (massaction->parsed()) return run_massaction(opt);
        if (kernel->parsed()) return run_kernel(opt);
    } catch (const crn::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
