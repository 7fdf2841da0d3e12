#include "boundaryk/gysin.hpp"

#include <algorithm>
#include <stdexcept>

namespace boundaryk {

std::string_view to_string(BundleCase c) {
    switch (c) {
        case BundleCase::CompactChiZero: return "COMPACT_CHI_0";
        case BundleCase::CompactChiOne: return "COMPACT_CHI_1";
        case BundleCase::CompactChiOther: return "COMPACT_CHI_OTHER";
        case BundleCase::Noncompact: return "NONCOMPACT";
    }
    return "?";
}

BundleCase bundle_case(const SpaceInput& s) {
    if (!s.compact) return BundleCase::Noncompact;
    const Integer chi = euler_characteristic(s);
    if (chi == 0) return BundleCase::CompactChiZero;
    if (chi == 1) return BundleCase::CompactChiOne;
    return BundleCase::CompactChiOther;
}

namespace {

void require_valid(const SpaceInput& s) {
    const auto report = validate(s);
    if (!report.ok()) {
        throw std::invalid_argument("space '" + s.name + "' fails validation: " + report.violations.front().rule +
                                    " (" + report.violations.front().detail + ")");
    }
}

BundleCohomology make_result(const SpaceInput& s, GradedGroup groups) {
    BundleCohomology out;
    out.groups = std::move(groups);
    out.case_tag = bundle_case(s);
    out.exact = s.cohomology.torsion_free();
    out.fiber_asserted = s.rank >= 2;
    return out;
}

}  // namespace

BundleCohomology closed_form_cohomology(const SpaceInput& s) {
    require_valid(s);
    const long n = s.dim;
    const auto& h = s.cohomology;
    GradedGroup e(std::vector<FgAbGroup>(static_cast<std::size_t>(2 * n)));

    for (long i = 0; i < n - 1; ++i) e.set(static_cast<std::size_t>(i), h.at(i));
    for (long i = n + 1; i <= 2 * n - 1; ++i) e.set(static_cast<std::size_t>(i), h.at(i - n + 1));

    const FgAbGroup z = FgAbGroup::free(1);
    const auto below = static_cast<std::size_t>(n - 1);
    const auto middle = static_cast<std::size_t>(n);
    switch (bundle_case(s)) {
        case BundleCase::CompactChiZero:
            e.set(below, direct_sum(h.at(n - 1), z));
            e.set(middle, direct_sum(h.at(1), z));
            break;
        case BundleCase::CompactChiOne:
            e.set(below, h.at(n - 1));
            e.set(middle, h.at(1));
            break;
        case BundleCase::CompactChiOther:
            e.set(below, direct_sum(h.at(n - 1), z));
            e.set(middle, direct_sum(h.at(1), FgAbGroup::cyclic(abs(euler_characteristic(s)))));
            break;
        case BundleCase::Noncompact:
            e.set(below, direct_sum(h.at(n - 1), z));
            e.set(middle, h.at(1));
            break;
    }
    return make_result(s, std::move(e));
}

namespace {

// Cup product with the Euler class, H^{p}(B) -> H^{p+n}(B). Since H^q(B) = 0
// outside 0..n, only p = 0 can be nonzero: H^0(B) = Z -> H^n(B) sends 1 to
// chi times the orientation class when B is closed, and lands in H^n(B) = 0
// otherwise. Cup products in other degrees have a zero source or target.
GroupHom euler_class_map(const SpaceInput& s, long p) {
    const long n = s.dim;
    GroupHom f{s.cohomology.at(p), s.cohomology.at(p + n), {}};
    f.matrix = IntMatrix(f.target.generator_count(), f.source.generator_count());
    if (p == 0 && s.compact && f.target.generator_count() > 0 && f.source.generator_count() > 0) {
        // Canonical generators: H^0 = Z, H^n = Z (validated).
        f.matrix(0, 0) = euler_characteristic(s);
    }
    return f;
}

}  // namespace

BundleCohomology gysin_solver(const SpaceInput& s) {
    require_valid(s);
    const long n = s.dim;
    GradedGroup e(std::vector<FgAbGroup>(static_cast<std::size_t>(2 * n)));

    for (long i = 0; i <= 2 * n - 1; ++i) {
        // 0 -> coker(e: H^{i-n} -> H^i) -> H^i(E) -> ker(e: H^{i-n+1} -> H^{i+1}) -> 0
        const FgAbGroup left = cokernel(euler_class_map(s, i - n));
        const FgAbGroup right = kernel(euler_class_map(s, i - n + 1));
        // The right-hand term is either a subgroup of H^0 = Z, all of H^1
        // (torsion-free), or nonzero only when the left term vanishes; in
        // every case the sequence splits.
        if (!right.is_free() && !left.is_trivial()) {
            throw std::logic_error("gysin_solver: non-split extension in degree " + std::to_string(i));
        }
        e.set(static_cast<std::size_t>(i), direct_sum(left, right));
    }
    return make_result(s, std::move(e));
}

std::string_view to_string(CohomologySource c) {
    return c == CohomologySource::Lemma ? "lemma" : "les";
}

BundleCohomology bundle_cohomology(const SpaceInput& s, CohomologySource source) {
    return source == CohomologySource::Lemma ? closed_form_cohomology(s) : gysin_solver(s);
}

std::vector<std::size_t> disagreeing_degrees(const BundleCohomology& a, const BundleCohomology& b) {
    std::vector<std::size_t> out;
    const std::size_t top = std::max(a.groups.length(), b.groups.length());
    for (std::size_t i = 0; i < top; ++i)
        if (a.groups.at(static_cast<long>(i)) != b.groups.at(static_cast<long>(i))) out.push_back(i);
    return out;
}

}  // namespace boundaryk
