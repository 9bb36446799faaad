#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/limits.hpp"
#include "crn/mass_action.hpp"
#include "crn/network.hpp"
#include "crn/obstruction.hpp"
#include "crn/oracle.hpp"
#include "crn/selection.hpp"

namespace crn {

// Shell-facing verdict encoding: 0 clean, 10 obstructed,
// 11 degenerate, 12 undecided.
int verdict_exit_code(VerdictKind kind);

struct AnalyzeOptions {
    uint64_t seed = 0;
    int samples = 256;
    Limits limits;
};

struct AnalysisReport {
    ObstructionVerdict verdict;
    std::vector<ChildSelection> selections;
    std::optional<std::vector<Rat>> kernel;
    AnalyzeOptions options;
};

AnalysisReport analyze(const Network& net, const AnalyzeOptions& options = {});

// Renderers. The JSON forms use a fixed key order so identical
// inputs yield identical bytes.
std::string analysis_to_json(const Network& net, const AnalysisReport& rep);
std::string analysis_to_text(const Network& net, const AnalysisReport& rep);

std::string selections_to_json(const Network& net,
                               const std::vector<ChildSelection>& sel);
std::string selections_to_text(const Network& net,
                               const std::vector<ChildSelection>& sel);

std::string pcs_to_json(const Network& net,
                        const std::vector<PartialChildSelection>& pcs);
std::string pcs_to_text(const Network& net,
                        const std::vector<PartialChildSelection>& pcs);

std::string verdict_to_json(const Network& net, const ObstructionVerdict& v);

std::string spectral_to_json(const SpectralReport& rep);
std::string spectral_to_text(const SpectralReport& rep);

std::string equilibrium_to_json(const EquilibriumCheck& chk);
std::string equilibrium_to_text(const EquilibriumCheck& chk);

std::string probe_to_json(const Network& net, const ProbeResult& probe);
std::string probe_to_text(const Network& net, const ProbeResult& probe);

std::string kernel_to_json(const Network& net,
                           const std::optional<std::vector<Rat>>& v);
std::string kernel_to_text(const Network& net,
                           const std::optional<std::vector<Rat>>& v);

}  // namespace crn
