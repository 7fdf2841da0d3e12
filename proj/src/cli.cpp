#include "boundaryk/cli.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace boundaryk::cli {

namespace {

nlohmann::json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

std::string unit_tag(const UnitClass& u) {
    switch (u.kind) {
        case UnitKind::TrivialClass: return "TRIVIAL_CLASS";
        case UnitKind::FreeGenerator: return "FREE_GENERATOR";
        case UnitKind::TorsionGenerator:
            return "TORSION_GENERATOR(" + (u.order ? u.order->str() : std::string("t")) + ")";
    }
    return "?";
}

std::string join_degrees(const std::vector<long>& degrees) {
    std::string out;
    for (long d : degrees) out += (out.empty() ? "" : ", ") + std::to_string(d);
    return out.empty() ? "none" : out;
}

std::string explain(const PipelineReport& r) {
    std::ostringstream os;
    const long n = r.space.dim;
    const auto tag = r.bundle->case_tag;
    os << "explain:\n";
    os << "  case " << to_string(tag);
    if (r.space.compact)
        os << " (closed, chi = " << euler_characteristic(r.space) << ")\n";
    else
        os << " (noncompact, H" << n << "(B) = 0)\n";
    if (n - 1 > 0) os << "  H^i(E) = H^i(B) for 0 <= i < " << n - 1 << '\n';
    if (r.source == CohomologySource::ExactSequence) {
        os << "  H^" << n - 1 << "(E) = H^" << n - 1 << "(B) + ker(chi: H^0(B) -> H^" << n << "(B)), H^" << n
           << "(E) = coker(chi: H^0(B) -> H^" << n << "(B)) + H^1(B)\n";
    } else switch (tag) {
        case BundleCase::CompactChiZero:
            os << "  H^" << n - 1 << "(E) = H^" << n - 1 << "(B) + Z, H^" << n << "(E) = H^1(B) + Z\n";
            break;
        case BundleCase::CompactChiOne:
            os << "  H^" << n - 1 << "(E) = H^" << n - 1 << "(B), H^" << n << "(E) = H^1(B)\n";
            break;
        case BundleCase::CompactChiOther:
            os << "  H^" << n - 1 << "(E) = H^" << n - 1 << "(B) + Z, H^" << n << "(E) = H^1(B) + Z/|chi|\n";
            break;
        case BundleCase::Noncompact:
            os << "  H^" << n - 1 << "(E) = H^" << n - 1 << "(B) + Z, H^" << n << "(E) = H^1(B)\n";
            break;
    }
    os << "  H^i(E) = H^(i-" << n - 1 << ")(B) for " << n + 1 << " <= i <= " << 2 * n - 1 << '\n';
    std::vector<long> k0_degrees, k1_degrees;
    for (long i = 0; i <= 2 * n - 1; ++i) ((i - n) % 2 == 0 ? k0_degrees : k1_degrees).push_back(i);
    os << "  K0 = sum of H^i(E) over i = n mod 2: degrees " << join_degrees(k0_degrees) << '\n';
    os << "  K1 = sum of H^i(E) over i = n+1 mod 2: degrees " << join_degrees(k1_degrees) << '\n';
    if (r.bundle->fiber_asserted)
        os << "  rank " << r.space.rank << ": fiber is K/M, the sphere-bundle formulas are applied as asserted\n";
    return os.str();
}

}  // namespace

int PipelineReport::exit_code() const {
    if (!validation.ok()) return kValidationFailed;
    if (!result) return kRefused;
    return kOk;
}

std::optional<bool> PipelineReport::ahss_ok() const {
    if (!bound_check || !bound_check->notice.empty()) return std::nullopt;
    if (!bound_check->passed) return false;
    if (oracle_consistent) return *oracle_consistent;
    return true;
}

PipelineReport run_pipeline(const SpaceInput& space, const ComputeOptions& options) {
    PipelineReport r;
    r.space = space;
    r.validation = validate(space);
    if (!r.validation.ok()) return r;

    r.source = options.cohomology;
    r.bundle = bundle_cohomology(space, options.cohomology);
    r.cross_check = bundle_cohomology(space, options.cohomology == CohomologySource::Lemma
                                                 ? CohomologySource::ExactSequence
                                                 : CohomologySource::Lemma);
    r.gysin_disagreements = disagreeing_degrees(*r.bundle, *r.cross_check);
    try {
        r.result = boundary_k_theory(space, options.cohomology);
    } catch (const HypothesisRefused& e) {
        r.refusal = e.what();
        return r;
    }
    if (!options.ahss_check) return r;

    r.bound_check = check_result(*r.result, torsion_bounds(r.bundle->groups), space.dim);
    if (r.result->determinacy.exact) {
        const Parity k0_parity = space.dim % 2 == 0 ? Parity::Even : Parity::Odd;
        const Parity k1_parity = k0_parity == Parity::Even ? Parity::Odd : Parity::Even;
        try {
            const auto k0_set = consistent_k_groups(r.bundle->groups, k0_parity);
            const auto k1_set = consistent_k_groups(r.bundle->groups, k1_parity);
            r.oracle_consistent = std::binary_search(k0_set.begin(), k0_set.end(), r.result->k0) &&
                                  std::binary_search(k1_set.begin(), k1_set.end(), r.result->k1);
        } catch (const OracleRefused& e) {
            r.oracle_notice = e.what();
        }
    }
    return r;
}

std::string summary_line(const KTheoryResult& r) {
    return "K0 = " + k0_string(r) + ", K1 = " + r.k1.to_string() + ", unit: " + to_string(r.unit);
}

std::string render_text(const PipelineReport& r, const ComputeOptions& options) {
    std::ostringstream os;
    const auto& s = r.space;
    os << "space: " << s.name << " (n = " << s.dim << ", rank " << s.rank << ", "
       << (s.compact ? "compact" : "noncompact");
    if (s.compact && s.euler) os << ", chi = " << *s.euler;
    os << ")\n";

    if (r.validation.ok()) {
        os << "validation: ok\n";
    } else {
        os << "validation: " << r.validation.violations.size() << " violation(s)\n";
        for (const auto& v : r.validation.violations) os << "  " << v.rule << ": " << v.detail << '\n';
    }
    for (const auto& w : r.validation.warnings) os << "warning: " << w << '\n';
    if (!r.bundle) return os.str();

    os << "case: " << to_string(r.bundle->case_tag) << (r.bundle->fiber_asserted ? " (fiber K/M, formulas asserted for rank >= 2)" : "")
       << '\n';
    os << "H*(Gamma\\G/M) [" << to_string(r.source) << "]:\n";
    for (std::size_t i = 0; i < r.bundle->groups.length(); ++i)
        os << "  H" << i << " = " << r.bundle->groups.at(static_cast<long>(i)).to_string() << '\n';
    if (r.gysin_disagreements.empty()) {
        os << "gysin cross-check: lemma and exact sequence agree\n";
    } else {
        os << "gysin cross-check: lemma and exact sequence DIFFER";
        for (std::size_t d : r.gysin_disagreements)
            os << "; H" << d << ": " << r.bundle->groups.at(static_cast<long>(d)).to_string() << " vs "
               << r.cross_check->groups.at(static_cast<long>(d)).to_string();
        os << '\n';
    }

    if (!r.result) {
        os << "refused: " << r.refusal << '\n';
        if (options.explain) os << explain(r);
        return os.str();
    }
    const auto& k = *r.result;
    if (!k.determinacy.exact)
        os << "determinacy: TORSION_BOUNDED (K0 = Z^" << k.determinacy.free_rank << " + Z/t, t | "
           << k.determinacy.torsion_divides << ")\n";
    else
        os << "determinacy: EXACT\n";

    if (!r.bound_check) {
        os << "ahss: skipped\n";
    } else if (!r.bound_check->notice.empty()) {
        os << "ahss: " << r.bound_check->notice << '\n';
    } else {
        os << "ahss: torsion bounds " << (r.bound_check->passed ? "ok" : "VIOLATED");
        if (r.oracle_consistent)
            os << ", extension oracle " << (*r.oracle_consistent ? "consistent" : "INCONSISTENT");
        else if (!r.oracle_notice.empty())
            os << ", " << r.oracle_notice;
        os << '\n';
    }
    if (auto chi = recover_euler(k); chi && k.source_rank == 1) os << "recovered |chi| = " << *chi << '\n';
    os << summary_line(k) << '\n';
    if (options.explain) os << explain(r);
    return os.str();
}

nlohmann::json render_json(const PipelineReport& r) {
    using nlohmann::json;
    const auto& s = r.space;
    json j;
    j["name"] = s.name;
    j["n"] = s.dim;
    j["rank"] = s.rank;
    j["compact"] = s.compact;
    j["chi"] = s.compact && s.euler ? integer_json(*s.euler) : json(nullptr);
    json violations = json::array();
    for (const auto& v : r.validation.violations) violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
    j["violations"] = violations;
    j["warnings"] = r.validation.warnings;

    j["case"] = r.bundle ? json(std::string(to_string(r.bundle->case_tag))) : json(nullptr);
    json coh = json::array();
    if (r.bundle)
        for (const auto& g : r.bundle->groups.groups()) coh.push_back(g.to_string());
    j["bundle_cohomology"] = coh;
    j["cohomology_source"] = std::string(to_string(r.source));
    if (r.bundle) j["gysin_agrees"] = r.gysin_disagreements.empty();

    if (r.result) {
        const auto& k = *r.result;
        j["k0"] = k0_string(k);
        j["k1"] = k.k1.to_string();
        j["unit_class"] = unit_tag(k.unit);
        if (k.determinacy.exact)
            j["determinacy"] = "EXACT";
        else
            j["determinacy"] = {{"kind", "TORSION_BOUNDED"},
                                {"free_rank", k.determinacy.free_rank},
                                {"torsion_divides", integer_json(k.determinacy.torsion_divides)}};
    } else {
        j["k0"] = nullptr;
        j["k1"] = nullptr;
        j["unit_class"] = nullptr;
        j["determinacy"] = nullptr;
    }
    if (!r.refusal.empty()) j["refusal"] = r.refusal;
    const auto ok = r.ahss_ok();
    j["ahss_ok"] = ok ? json(*ok) : json(nullptr);
    return j;
}

namespace {

std::optional<SpaceInput> load(const std::filesystem::path& path, std::ostream& err) {
    try {
        return load_space_file(path);
    } catch (const std::exception& e) {
        err << "boundaryk: " << path.string() << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

int emit(const PipelineReport& report, const ComputeOptions& options, std::ostream& out) {
    if (options.json)
        out << render_json(report).dump(2) << '\n';
    else
        out << render_text(report, options);
    return report.exit_code();
}

}  // namespace

int cmd_compute(const std::filesystem::path& path, const ComputeOptions& options, std::ostream& out, std::ostream& err) {
    const auto space = load(path, err);
    if (!space) return kInputError;
    return emit(run_pipeline(*space, options), options, out);
}

int cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out, std::ostream& err) {
    const auto sa = load(a, err);
    const auto sb = load(b, err);
    if (!sa || !sb) return kInputError;

    const ComputeOptions options{false, false, false};
    const PipelineReport ra = run_pipeline(*sa, options);
    const PipelineReport rb = run_pipeline(*sb, options);
    for (const auto* r : {&ra, &rb}) {
        out << r->space.name << ": ";
        if (!r->validation.ok())
            out << "validation failed (" << r->validation.violations.front().rule << ")\n";
        else if (!r->result)
            out << "refused: " << r->refusal << '\n';
        else
            out << summary_line(*r->result) << '\n';
    }
    if (ra.exit_code() != kOk || rb.exit_code() != kOk) return std::max(ra.exit_code(), rb.exit_code());

    const Comparison c = compare(*ra.result, *rb.result);
    out << "verdict: " << to_string(c.verdict) << '\n';
    out << (c.verdict == Verdict::NotIsomorphic ? "witness: " : "note: ") << c.note << '\n';
    return kOk;
}

int cmd_corpus(const std::optional<std::string>& name, const ComputeOptions& options, std::ostream& out,
               std::ostream& err) {
    if (!name) {
        for (const auto& entry : corpus()) out << entry.name << '\n';
        return kOk;
    }
    const auto text = corpus_text(*name);
    if (!text) {
        err << "boundaryk: no built-in space named '" << *name << "'\n";
        return kInputError;
    }
    return emit(run_pipeline(parse_space_file(*text), options), options, out);
}

std::optional<std::string_view> corpus_text(std::string_view name) {
    for (const auto& entry : corpus())
        if (entry.name == name) return entry.text;
    return std::nullopt;
}

}  // namespace boundaryk::cli
