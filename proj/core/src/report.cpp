#include "crn/report.hpp"

#include <sstream>

#include "json.hpp"

#include "crn/sym_matrix.hpp"

namespace crn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string monomial_string(const Monomial& m,
                            const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.exponents()) {
        if (!out.empty()) out += "*";
        out += names.at(static_cast<size_t>(v));
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

ordered_json rat_list(const std::vector<Rat>& values) {
    ordered_json arr = ordered_json::array();
    for (const Rat& v : values) arr.push_back(to_string(v));
    return arr;
}

ordered_json assignment_json(const Network& net,
                             const std::vector<int>& assignment) {
    ordered_json obj = ordered_json::object();
    for (int m = 0; m < net.num_species(); ++m) {
        if (assignment[m] < 0) continue;
        obj[net.species[m]] = net.reactions[assignment[m]].label;
    }
    return obj;
}

std::string assignment_text(const Network& net,
                            const std::vector<int>& assignment) {
    std::string out = "{";
    bool first = true;
    for (int m = 0; m < net.num_species(); ++m) {
        if (assignment[m] < 0) continue;
        if (!first) out += ", ";
        out += net.species[m] + "->" + net.reactions[assignment[m]].label;
        first = false;
    }
    return out + "}";
}

ordered_json witness_json(const Network& net, const RateInstance& inst) {
    auto names = rate_var_names(net);
    ordered_json obj = ordered_json::object();
    for (size_t v = 0; v < inst.size(); ++v) {
        obj[names[v]] = to_string(inst[v]);
    }
    return obj;
}

ordered_json verdict_json_obj(const Network& net,
                              const ObstructionVerdict& v) {
    auto names = rate_var_names(net);
    ordered_json obj;
    obj["kind"] = verdict_name(v.kind);
    obj["det"] = to_string(v.det, names);
    obj["tr_adj"] = to_string(v.tr_adj, names);
    if (v.certificate) {
        ordered_json cert;
        cert["content"] = monomial_string(v.certificate->content, names);
        cert["factor"] = to_string(v.certificate->factor, names);
        cert["quotient"] = to_string(v.certificate->quotient, names);
        obj["certificate"] = cert;
    } else {
        obj["certificate"] = nullptr;
    }
    obj["witness"] = v.witness ? witness_json(net, *v.witness)
                               : ordered_json(nullptr);
    obj["samples"] = {{"tried", v.evidence.tried},
                      {"singular_found", v.evidence.singular_found}};
    return obj;
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json spectral_json_obj(const SpectralReport& rep) {
    ordered_json obj;
    obj["char_poly"] = rat_list(rep.char_poly);
    obj["algebraic_multiplicity_zero"] = rep.algebraic_multiplicity_zero;
    obj["geometric_multiplicity_zero"] = rep.geometric_multiplicity_zero;
    obj["rank"] = rep.rank;
    obj["determinant"] = to_string(rep.determinant);
    obj["trace_adjugate"] = to_string(rep.adjugate.trace());
    obj["adjugate"] = matrix_json(rep.adjugate);
    return obj;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

int verdict_exit_code(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NonsingularStructural:
        case VerdictKind::SimpleZeroAchievable:
            return 0;
        case VerdictKind::Obstructed:
            return 10;
        case VerdictKind::Degenerate:
            return 11;
        case VerdictKind::Undecided:
            return 12;
    }
    return 12;
}

AnalysisReport analyze(const Network& net, const AnalyzeOptions& options) {
    AnalysisReport rep;
    rep.options = options;
    rep.selections = enumerate_child_selections(net, options.limits);
    rep.kernel = positive_kernel_vector(net);
    rep.verdict = obstruction_verdict(net, options.seed, options.samples,
                                      options.limits);
    return rep;
}

std::string analysis_to_json(const Network& net, const AnalysisReport& rep) {
    ordered_json obj;
    ordered_json summary;
    summary["name"] = net.name;
    summary["species"] = net.species;
    summary["num_species"] = net.num_species();
    summary["num_reactions"] = net.num_reactions();
    summary["num_rate_variables"] =
        static_cast<int>(rate_variables(net).size());
    obj["network"] = summary;

    ordered_json rows = ordered_json::array();
    for (const ChildSelection& cs : rep.selections) {
        rows.push_back({{"assignment", assignment_json(net, cs.assignment)},
                        {"coefficient", to_string(cs.alpha)}});
    }
    obj["child_selections"] = rows;
    obj["kernel"] =
        rep.kernel ? rat_list(*rep.kernel) : ordered_json(nullptr);
    obj["verdict"] = verdict_json_obj(net, rep.verdict);
    obj["options"] = {{"seed", rep.options.seed},
                      {"samples", rep.options.samples},
                      {"max_terms", rep.options.limits.max_terms},
                      {"max_enum", rep.options.limits.max_enum_nodes}};
    return dump(obj);
}

std::string analysis_to_text(const Network& net, const AnalysisReport& rep) {
    auto names = rate_var_names(net);
    std::ostringstream out;
    out << "network: " << (net.name.empty() ? "(unnamed)" : net.name) << "\n";
    out << "species (" << net.num_species() << "): ";
    for (int m = 0; m < net.num_species(); ++m) {
        out << (m ? ", " : "") << net.species[m];
    }
    out << "\nreactions: " << net.num_reactions()
        << ", rate variables: " << names.size() << "\n";
    out << "det      = " << to_string(rep.verdict.det, names) << "\n";
    out << "tr(adj)  = " << to_string(rep.verdict.tr_adj, names) << "\n";
    out << "child selections (" << rep.selections.size() << "):\n";
    for (const ChildSelection& cs : rep.selections) {
        out << "  " << assignment_text(net, cs.assignment)
            << "  alpha = " << to_string(cs.alpha) << "\n";
    }
    if (rep.kernel) {
        out << "positive kernel: ";
        for (size_t j = 0; j < rep.kernel->size(); ++j) {
            out << (j ? ", " : "") << to_string((*rep.kernel)[j]);
        }
        out << "\n";
    } else {
        out << "positive kernel: none\n";
    }
    out << "verdict: " << verdict_name(rep.verdict.kind) << "\n";
    if (rep.verdict.certificate) {
        const Certificate& c = *rep.verdict.certificate;
        out << "certificate: det = " << to_string(c.lead) << " * "
            << monomial_string(c.content, names) << " * ("
            << to_string(c.factor, names) << ")\n";
        out << "             tr(adj) = (" << to_string(c.quotient, names)
            << ") * (" << to_string(c.factor, names) << ")\n";
    }
    if (rep.verdict.witness) {
        out << "witness:";
        for (size_t v = 0; v < rep.verdict.witness->size(); ++v) {
            out << (v ? ", " : " ") << names[v] << " = "
                << to_string((*rep.verdict.witness)[v]);
        }
        out << "\n";
    }
    out << "samples: tried " << rep.verdict.evidence.tried << ", singular "
        << rep.verdict.evidence.singular_found << "\n";
    out << "options: seed " << rep.options.seed << ", samples "
        << rep.options.samples << ", max terms "
        << rep.options.limits.max_terms << ", max enum "
        << rep.options.limits.max_enum_nodes << "\n";
    return out.str();
}

std::string selections_to_json(const Network& net,
                               const std::vector<ChildSelection>& sel) {
    ordered_json rows = ordered_json::array();
    for (const ChildSelection& cs : sel) {
        rows.push_back({{"assignment", assignment_json(net, cs.assignment)},
                        {"coefficient", to_string(cs.alpha)}});
    }
    return dump(rows);
}

std::string selections_to_text(const Network& net,
                               const std::vector<ChildSelection>& sel) {
    std::ostringstream out;
    out << sel.size() << " child selections\n";
    for (const ChildSelection& cs : sel) {
        out << assignment_text(net, cs.assignment)
            << "  alpha = " << to_string(cs.alpha) << "\n";
    }
    return out.str();
}

std::string pcs_to_json(const Network& net,
                        const std::vector<PartialChildSelection>& pcs) {
    ordered_json rows = ordered_json::array();
    for (const PartialChildSelection& p : pcs) {
        rows.push_back({{"omitted", net.species[p.omitted]},
                        {"assignment", assignment_json(net, p.assignment)},
                        {"coefficient", to_string(p.beta)}});
    }
    return dump(rows);
}

std::string pcs_to_text(const Network& net,
                        const std::vector<PartialChildSelection>& pcs) {
    std::ostringstream out;
    out << pcs.size() << " partial child selections\n";
    for (const PartialChildSelection& p : pcs) {
        out << "omit " << net.species[p.omitted] << "  "
            << assignment_text(net, p.assignment)
            << "  beta = " << to_string(p.beta) << "\n";
    }
    return out.str();
}

std::string verdict_to_json(const Network& net, const ObstructionVerdict& v) {
    return dump(verdict_json_obj(net, v));
}

std::string spectral_to_json(const SpectralReport& rep) {
    return dump(spectral_json_obj(rep));
}

std::string spectral_to_text(const SpectralReport& rep) {
    std::ostringstream out;
    out << "char poly coefficients (a0..a" << rep.char_poly.size() - 1
        << "): ";
    for (size_t i = 0; i < rep.char_poly.size(); ++i) {
        out << (i ? ", " : "") << to_string(rep.char_poly[i]);
    }
    out << "\ndeterminant: " << to_string(rep.determinant) << "\n";
    out << "algebraic multiplicity of 0: " << rep.algebraic_multiplicity_zero
        << "\n";
    out << "geometric multiplicity of 0: " << rep.geometric_multiplicity_zero
        << "\n";
    out << "rank: " << rep.rank << "\n";
    out << "adjugate:\n" << rep.adjugate.to_string() << "\n";
    return out.str();
}

std::string equilibrium_to_json(const EquilibriumCheck& chk) {
    ordered_json obj;
    obj["residual"] = rat_list(chk.residual);
    obj["determinant"] = to_string(chk.report.determinant);
    obj["alg_mult"] = chk.report.algebraic_multiplicity_zero;
    obj["geom_mult"] = chk.report.geometric_multiplicity_zero;
    return dump(obj);
}

std::string equilibrium_to_text(const EquilibriumCheck& chk) {
    std::ostringstream out;
    out << "residual: ";
    bool zero = true;
    for (size_t i = 0; i < chk.residual.size(); ++i) {
        out << (i ? ", " : "") << to_string(chk.residual[i]);
        if (chk.residual[i] != 0) zero = false;
    }
    out << (zero ? "  (equilibrium)" : "  (not an equilibrium)") << "\n";
    out << "determinant: " << to_string(chk.report.determinant) << "\n";
    out << "algebraic multiplicity of 0: "
        << chk.report.algebraic_multiplicity_zero << "\n";
    out << "geometric multiplicity of 0: "
        << chk.report.geometric_multiplicity_zero << "\n";
    return out.str();
}

std::string probe_to_json(const Network& net, const ProbeResult& probe) {
    ordered_json obj;
    if (probe.witness) {
        ordered_json k = ordered_json::object();
        for (int j = 0; j < net.num_reactions(); ++j) {
            k[net.reactions[j].label] = to_string(probe.witness->k[j]);
        }
        ordered_json x = ordered_json::object();
        for (int m = 0; m < net.num_species(); ++m) {
            x[net.species[m]] = to_string(probe.witness->x[m]);
        }
        obj["witness"] = {{"k", k}, {"x", x}};
    } else {
        obj["witness"] = nullptr;
    }
    obj["tried"] = probe.tried;
    obj["equilibria_found"] = probe.equilibria_found;
    return dump(obj);
}

std::string probe_to_text(const Network& net, const ProbeResult& probe) {
    std::ostringstream out;
    if (probe.witness) {
        out << "singular equilibrium found\n";
        for (int j = 0; j < net.num_reactions(); ++j) {
            out << "  k[" << net.reactions[j].label
                << "] = " << to_string(probe.witness->k[j]) << "\n";
        }
        for (int m = 0; m < net.num_species(); ++m) {
            out << "  x[" << net.species[m]
                << "] = " << to_string(probe.witness->x[m]) << "\n";
        }
    } else {
        out << "no singular equilibrium found\n";
    }
    out << "tried " << probe.tried << " samples, " << probe.equilibria_found
        << " equilibria\n";
    return out.str();
}

std::string kernel_to_json(const Network& net,
                           const std::optional<std::vector<Rat>>& v) {
    ordered_json obj;
    if (v) {
        ordered_json entries = ordered_json::object();
        for (int j = 0; j < net.num_reactions(); ++j) {
            entries[net.reactions[j].label] = to_string((*v)[j]);
        }
        obj["kernel"] = entries;
    } else {
        obj["kernel"] = nullptr;
    }
    return dump(obj);
}

std::string kernel_to_text(const Network& net,
                           const std::optional<std::vector<Rat>>& v) {
    std::ostringstream out;
    if (v) {
        out << "positive kernel vector:\n";
        for (int j = 0; j < net.num_reactions(); ++j) {
            out << "  v[" << net.reactions[j].label
                << "] = " << to_string((*v)[j]) << "\n";
        }
    } else {
        out << "no strictly positive kernel vector\n";
    }
    return out.str();
}

}  // namespace crn
