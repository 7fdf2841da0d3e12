#pragma once

// Torsion bounds from the Atiyah-Hirzebruch spectral sequence, used to
// cross-check computed K-groups.

#include "boundaryk/ktheory.hpp"

#include <string>
#include <vector>

namespace boundaryk {

// Invariant: a generator bound is 0 exactly when the matching order bound is 1.
struct TorsionBounds {
    Integer even_order = 1;
    Integer odd_order = 1;
    std::size_t even_generators = 0;
    std::size_t odd_generators = 0;

    friend bool operator==(const TorsionBounds&, const TorsionBounds&) = default;
};

TorsionBounds torsion_bounds(const GradedGroup& coh);

struct BoundCheck {
    bool passed = true;
    std::string notice;  // set when the check was vacuous
};

// K0 of the algebra is compared against degrees = n (mod 2), K1 against the rest.
BoundCheck check_result(const KTheoryResult& r, const TorsionBounds& b, int n);

enum class Parity { Even, Odd };

// All groups reachable by folding the extensions
//   0 -> F^{s+1} -> F^s -> H^s -> 0
// from the top degree down over the degrees of the given parity, with no
// differentials. Throws OracleRefused past the extension cap.
std::vector<FgAbGroup> consistent_k_groups(const GradedGroup& coh, Parity parity, const ExtensionCap& cap = {});

}  // namespace boundaryk
