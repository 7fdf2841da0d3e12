#pragma once

// Classification queries on computed K-theory: isomorphism of boundary
// algebras, recovery of |chi|, the UCT KK-group and Kunneth products.

#include "boundaryk/ktheory.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace boundaryk {

enum class Verdict { Isomorphic, NotIsomorphic, Undetermined };

std::string_view to_string(Verdict v);

struct Comparison {
    Verdict verdict = Verdict::Undetermined;
    // Names the difference for NOT_ISOMORPHIC, the reason for UNDETERMINED.
    std::string note;
};

// Kirchberg-Phillips via K-data. ISOMORPHIC requires both sides to be exact,
// closed, rank 1 with chi != 1, matching K-groups and matching unit orders.
// Differing K-groups or unit orders are NOT_ISOMORPHIC regardless.
Comparison compare(const KTheoryResult& a, const KTheoryResult& b);

// |chi| as the torsion order of K0, for exact results whose unit is torsion.
std::optional<Integer> recover_euler(const KTheoryResult& r);

struct KKGroup {
    // Hom(K0, K0') + Ext(K0, K0')
    FgAbGroup headline;
    // Hom(K0,K0') + Hom(K1,K1') + Ext(K0,K1') + Ext(K1,K0')
    FgAbGroup graded;
};

KKGroup kk_group(const KTheoryResult& a, const KTheoryResult& b);

using KPair = std::pair<FgAbGroup, FgAbGroup>;  // (K0, K1)

// Graded Kunneth formula with Tor terms in the opposite parity.
KPair kunneth_k(const KPair& a, const KPair& b);
KPair kunneth_k(const KTheoryResult& a, const KTheoryResult& b);

// Cohomology of a product space:
// H^m(X x Y) = sum_{i+j=m} H^i(X) (x) H^j(Y) + sum_{i+j=m+1} Tor(H^i(X), H^j(Y)).
// Used to build example inputs.
GradedGroup kunneth_cohomology(const GradedGroup& x, const GradedGroup& y);

}  // namespace boundaryk
