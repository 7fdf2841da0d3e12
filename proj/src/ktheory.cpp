#include "boundaryk/ktheory.hpp"

#include <vector>

namespace boundaryk {

std::pair<FgAbGroup, FgAbGroup> assemble_k(const BundleCohomology& bundle, int n) {
    if (!bundle.exact)
        throw HypothesisRefused("K-theory refused: cohomology of Gamma\\X has torsion, the Chern character "
                                "argument needs torsion-free cohomology");
    std::vector<FgAbGroup> even_shift;
    std::vector<FgAbGroup> odd_shift;
    for (std::size_t i = 0; i < bundle.groups.length(); ++i) {
        const bool k0_degree = (static_cast<long>(i) - n) % 2 == 0;
        (k0_degree ? even_shift : odd_shift).push_back(bundle.groups.at(static_cast<long>(i)));
    }
    return {direct_sum(even_shift), direct_sum(odd_shift)};
}

namespace {

void require_hypotheses(const SpaceInput& s) {
    const auto report = validate(s);
    if (!report.ok())
        throw HypothesisRefused("space '" + s.name + "' fails validation: " + report.violations.front().rule);
    if (!s.orientable) throw HypothesisRefused("K-theory refused: Gamma\\X must be orientable");
    if (!s.cohomology.torsion_free())
        throw HypothesisRefused("K-theory refused: H*(Gamma\\X) must be torsion-free");
}

KTheoryResult base_result(const SpaceInput& s, const BundleCohomology& bundle) {
    KTheoryResult r;
    r.source_rank = s.rank;
    r.compact = s.compact;
    r.euler = s.compact ? s.euler : std::nullopt;
    r.case_tag = bundle.case_tag;
    return r;
}

// Unit class: zero when chi = 1, of order |chi| when closed with chi not in
// {0, 1}, a free generator otherwise.
UnitClass unit_class_for(BundleCase c, const Integer& chi) {
    switch (c) {
        case BundleCase::CompactChiOne: return {UnitKind::TrivialClass, std::nullopt};
        case BundleCase::CompactChiOther: return {UnitKind::TorsionGenerator, abs(chi)};
        case BundleCase::CompactChiZero:
        case BundleCase::Noncompact: break;
    }
    return {UnitKind::FreeGenerator, std::nullopt};
}

}  // namespace

KTheoryResult boundary_k_theory_rank1(const SpaceInput& s, CohomologySource source) {
    if (s.rank != 1) throw HypothesisRefused("rank-1 formula refused: rank(X) = " + std::to_string(s.rank));
    require_hypotheses(s);
    const BundleCohomology bundle = bundle_cohomology(s, source);
    KTheoryResult r = base_result(s, bundle);
    std::tie(r.k0, r.k1) = assemble_k(bundle, s.dim);
    r.unit = unit_class_for(bundle.case_tag, euler_characteristic(s));
    return r;
}

KTheoryResult furstenberg_k_theory(const SpaceInput& s, CohomologySource source) {
    if (s.rank < 2) throw HypothesisRefused("higher-rank formula refused: rank(X) = " + std::to_string(s.rank));
    require_hypotheses(s);
    if (!s.assume_baum_connes)
        throw HypothesisRefused("higher-rank K-theory refused: Baum-Connes for Gamma is not attested "
                                "(set assume_baum_connes = true)");
    const BundleCohomology bundle = bundle_cohomology(s, source);
    KTheoryResult r = base_result(s, bundle);
    auto [k0, k1] = assemble_k(bundle, s.dim);
    r.k1 = std::move(k1);
    if (bundle.case_tag != BundleCase::CompactChiOther) {
        r.k0 = std::move(k0);
        r.unit = unit_class_for(bundle.case_tag, euler_characteristic(s));
        return r;
    }
    // Only an upper bound on the torsion of K0 survives: Z^s + Z/t, t | |chi|,
    // with the unit generating Z/t.
    r.k0 = k0.free_part();
    r.determinacy = {false, k0.rank(), abs(euler_characteristic(s))};
    r.unit = {UnitKind::TorsionGenerator, std::nullopt};
    return r;
}

KTheoryResult boundary_k_theory(const SpaceInput& s, CohomologySource source) {
    return s.rank >= 2 ? furstenberg_k_theory(s, source) : boundary_k_theory_rank1(s, source);
}

std::string to_string(const UnitClass& u) {
    switch (u.kind) {
        case UnitKind::TrivialClass: return "trivial";
        case UnitKind::FreeGenerator: return "free generator";
        case UnitKind::TorsionGenerator:
            return "torsion generator of order " + (u.order ? u.order->str() : std::string("t"));
    }
    return "?";
}

std::string k0_string(const KTheoryResult& r) {
    if (r.determinacy.exact) return r.k0.to_string();
    const std::string free = r.k0.is_trivial() ? std::string() : r.k0.to_string() + " + ";
    return free + "Z/t, t | " + r.determinacy.torsion_divides.str();
}

}  // namespace boundaryk
