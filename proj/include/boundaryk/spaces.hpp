#pragma once

// Input model for a locally symmetric space Gamma\X and its text file format.

#include "boundaryk/abelian.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boundaryk {

// Degree-indexed groups; degrees outside the stored range are trivial.
class GradedGroup {
public:
    GradedGroup() = default;
    explicit GradedGroup(std::vector<FgAbGroup> groups) : groups_(std::move(groups)) {}

    std::size_t length() const { return groups_.size(); }
    const FgAbGroup& at(long degree) const;
    void set(std::size_t degree, FgAbGroup g);
    const std::vector<FgAbGroup>& groups() const { return groups_; }

    std::size_t total_rank() const;
    bool torsion_free() const;

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    std::vector<FgAbGroup> groups_;
};

struct SpaceInput {
    std::string name;
    int dim = 0;   // n = dim X
    int rank = 1;  // real rank of X
    bool compact = true;
    bool orientable = true;
    std::optional<Integer> euler;  // declared when compact
    GradedGroup cohomology;        // degrees 0..dim
    // Attestation that Gamma satisfies Baum-Connes with the needed
    // coefficients; required for rank >= 2.
    bool assume_baum_connes = false;

    friend bool operator==(const SpaceInput&, const SpaceInput&) = default;
};

struct Violation {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

// Checks the standing hypotheses. Violations are listed in a fixed rule order.
ValidationReport validate(const SpaceInput& s);

// Declared chi when compact, alternating rank sum otherwise.
Integer euler_characteristic(const SpaceInput& s);

// Alternating sum of ranks of the stored cohomology.
Integer alternating_rank_sum(const GradedGroup& g);

class SpaceParseError : public std::runtime_error {
public:
    SpaceParseError(std::size_t line, const std::string& message);
    // 0 when the error is not tied to a line (e.g. a missing key).
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

SpaceInput parse_space_file(std::string_view text);
SpaceInput load_space_file(const std::filesystem::path& path);
std::string serialize_space(const SpaceInput& s);

}  // namespace boundaryk
