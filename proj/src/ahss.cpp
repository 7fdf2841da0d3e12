#include "boundaryk/ahss.hpp"

#include <set>

namespace boundaryk {

TorsionBounds torsion_bounds(const GradedGroup& coh) {
    TorsionBounds b;
    for (std::size_t i = 0; i < coh.length(); ++i) {
        const FgAbGroup& g = coh.at(static_cast<long>(i));
        if (i % 2 == 0) {
            b.even_order *= g.torsion_order();
            b.even_generators += g.torsion_generator_count();
        } else {
            b.odd_order *= g.torsion_order();
            b.odd_generators += g.torsion_generator_count();
        }
    }
    return b;
}

BoundCheck check_result(const KTheoryResult& r, const TorsionBounds& b, int n) {
    if (!r.determinacy.exact) return {true, "torsion-bounded result: bound check is vacuous"};
    const bool n_even = n % 2 == 0;
    const Integer& k0_order = n_even ? b.even_order : b.odd_order;
    const Integer& k1_order = n_even ? b.odd_order : b.even_order;
    const std::size_t k0_gens = n_even ? b.even_generators : b.odd_generators;
    const std::size_t k1_gens = n_even ? b.odd_generators : b.even_generators;
    const bool ok = r.k0.torsion_order() <= k0_order && r.k1.torsion_order() <= k1_order &&
                    r.k0.torsion_generator_count() <= k0_gens && r.k1.torsion_generator_count() <= k1_gens;
    return {ok, {}};
}

std::vector<FgAbGroup> consistent_k_groups(const GradedGroup& coh, Parity parity, const ExtensionCap& cap) {
    const std::size_t first = parity == Parity::Even ? 0 : 1;
    std::vector<std::size_t> degrees;
    for (std::size_t i = first; i < coh.length(); i += 2) degrees.push_back(i);

    std::set<FgAbGroup> filtered{FgAbGroup::trivial()};
    for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) {
        const FgAbGroup& quotient = coh.at(static_cast<long>(*it));
        std::set<FgAbGroup> next;
        for (const auto& sub : filtered)
            for (auto& g : enumerate_extensions(sub, quotient, cap)) next.insert(std::move(g));
        filtered = std::move(next);
    }
    return {filtered.begin(), filtered.end()};
}

}  // namespace boundaryk
