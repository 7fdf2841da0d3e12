#pragma once

// Cohomology of the unit tangent bundle E = Gamma\G/M over B = Gamma\X.

#include "boundaryk/spaces.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace boundaryk {

enum class BundleCase { CompactChiZero, CompactChiOne, CompactChiOther, Noncompact };

std::string_view to_string(BundleCase c);
BundleCase bundle_case(const SpaceInput& s);

struct BundleCohomology {
    GradedGroup groups;  // degrees 0..2n-1
    BundleCase case_tag = BundleCase::Noncompact;
    // False when H*(B) has torsion: the groups are still right but the
    // K-theory step must refuse.
    bool exact = true;
    // Rank >= 2: the fiber is K/M rather than a sphere and the formulas are
    // taken as asserted, not derived.
    bool fiber_asserted = false;

    friend bool operator==(const BundleCohomology&, const BundleCohomology&) = default;
};

// The case-by-case formulas for closed chi = 0, closed chi = 1, closed
// chi not in {0, 1} and noncompact quotients. In the third case H^{n-1}(E)
// is stated as H^{n-1}(B) + Z; the exact sequence gives H^{n-1}(B) there,
// since multiplication by chi != 0 on Z has zero kernel.
BundleCohomology closed_form_cohomology(const SpaceInput& s);

// Solves the Gysin long exact sequence
//   ... -> H^{i-n}(B) --e--> H^i(B) -> H^i(E) -> H^{i-n+1}(B) --e--> H^{i+1}(B) -> ...
// degree by degree.
BundleCohomology gysin_solver(const SpaceInput& s);

// Which of the two computations feeds the K-theory step.
enum class CohomologySource { Lemma, ExactSequence };

std::string_view to_string(CohomologySource c);
BundleCohomology bundle_cohomology(const SpaceInput& s, CohomologySource source);

// Degrees where the closed form and the exact-sequence solution differ.
std::vector<std::size_t> disagreeing_degrees(const BundleCohomology& a, const BundleCohomology& b);

}  // namespace boundaryk
