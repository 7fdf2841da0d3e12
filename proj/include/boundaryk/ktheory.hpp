#pragma once

// K-theory of the boundary crossed product C(G/P0) x| Gamma, read off from
// the cohomology of Gamma\G/M with a degree shift by n = dim X.

#include "boundaryk/gysin.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace boundaryk {

enum class UnitKind { TrivialClass, FreeGenerator, TorsionGenerator };

struct UnitClass {
    UnitKind kind = UnitKind::FreeGenerator;
    // Order for TorsionGenerator; empty when only t | |chi| is known.
    std::optional<Integer> order;

    friend bool operator==(const UnitClass&, const UnitClass&) = default;
};

struct Determinacy {
    bool exact = true;
    // Meaningful only when !exact: K0 = Z^free_rank + Z/t with t | torsion_divides.
    std::size_t free_rank = 0;
    Integer torsion_divides = 1;

    friend bool operator==(const Determinacy&, const Determinacy&) = default;
};

struct KTheoryResult {
    // When determinacy is torsion-bounded, k0 holds only the free part Z^s.
    FgAbGroup k0;
    FgAbGroup k1;
    UnitClass unit;
    Determinacy determinacy;
    int source_rank = 1;
    bool compact = true;
    std::optional<Integer> euler;
    BundleCase case_tag = BundleCase::Noncompact;

    friend bool operator==(const KTheoryResult&, const KTheoryResult&) = default;
};

// Raised when a space does not meet the hypotheses a computation relies on.
class HypothesisRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// K0 = sum of H^i(E) over i = n mod 2, K1 over i = n+1 mod 2.
std::pair<FgAbGroup, FgAbGroup> assemble_k(const BundleCohomology& bundle, int n);

KTheoryResult boundary_k_theory_rank1(const SpaceInput& s, CohomologySource source = CohomologySource::Lemma);
KTheoryResult furstenberg_k_theory(const SpaceInput& s, CohomologySource source = CohomologySource::Lemma);

// Routes on s.rank.
KTheoryResult boundary_k_theory(const SpaceInput& s, CohomologySource source = CohomologySource::Lemma);

std::string to_string(const UnitClass& u);
// K0 including the symbolic torsion of a bounded result.
std::string k0_string(const KTheoryResult& r);

}  // namespace boundaryk
