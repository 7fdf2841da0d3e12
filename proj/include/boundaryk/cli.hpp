#pragma once

// Command implementations behind the `boundaryk` executable. Reports go to
// `out`, diagnostics to `err`; the return value is the process exit code.

#include "boundaryk/ahss.hpp"
#include "boundaryk/classify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boundaryk::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,        // unreadable file, syntax error
    kValidationFailed = 2,  // standing hypotheses violated
    kRefused = 3,           // hypotheses of the K-theory formulas not met
};

struct ComputeOptions {
    bool json = false;
    bool explain = false;
    bool ahss_check = true;
    CohomologySource cohomology = CohomologySource::Lemma;
};

// Everything the compute pipeline produced for one space.
struct PipelineReport {
    SpaceInput space;
    ValidationReport validation;
    std::optional<BundleCohomology> bundle;  // from options.cohomology
    CohomologySource source = CohomologySource::Lemma;
    // Degrees where the lemma and the exact-sequence solution differ.
    std::vector<std::size_t> gysin_disagreements;
    std::optional<BundleCohomology> cross_check;  // the other computation
    std::optional<KTheoryResult> result;
    std::string refusal;
    std::optional<BoundCheck> bound_check;
    // Membership of K0/K1 in the extension-oracle sets; empty when skipped.
    std::optional<bool> oracle_consistent;
    std::string oracle_notice;

    int exit_code() const;
    // True/false when the checks ran, empty when skipped or vacuous.
    std::optional<bool> ahss_ok() const;
};

PipelineReport run_pipeline(const SpaceInput& space, const ComputeOptions& options);

std::string render_text(const PipelineReport& report, const ComputeOptions& options);
nlohmann::json render_json(const PipelineReport& report);

// Final summary line, e.g. "K0 = Z^2, K1 = Z^2, unit: free generator".
std::string summary_line(const KTheoryResult& r);

int cmd_compute(const std::filesystem::path& path, const ComputeOptions& options, std::ostream& out, std::ostream& err);
int cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out, std::ostream& err);
int cmd_corpus(const std::optional<std::string>& name, const ComputeOptions& options, std::ostream& out,
               std::ostream& err);

struct CorpusEntry {
    std::string_view name;
    std::string_view text;
};

// Built-in fixtures, sorted by name.
const std::vector<CorpusEntry>& corpus();
std::optional<std::string_view> corpus_text(std::string_view name);

}  // namespace boundaryk::cli
