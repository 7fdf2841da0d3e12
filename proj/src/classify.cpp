#include "boundaryk/classify.hpp"

#include <vector>

namespace boundaryk {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Isomorphic: return "ISOMORPHIC";
        case Verdict::NotIsomorphic: return "NOT_ISOMORPHIC";
        case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

namespace {

std::string describe_difference(const char* label, const FgAbGroup& a, const FgAbGroup& b) {
    std::string out = std::string(label) + ": " + a.to_string() + " vs " + b.to_string();
    if (a.rank() != b.rank()) out += " (rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()) + ")";
    if (a.torsion_order() != b.torsion_order())
        out += " (torsion order " + a.torsion_order().str() + " vs " + b.torsion_order().str() + ")";
    return out;
}

// Order of the unit class as an element of K0: 1 for zero, 0 for infinite.
Integer unit_order(const UnitClass& u) {
    switch (u.kind) {
        case UnitKind::TrivialClass: return 1;
        case UnitKind::FreeGenerator: return 0;
        case UnitKind::TorsionGenerator: return u.order.value_or(-1);
    }
    return -1;
}

bool meets_classification_hypotheses(const KTheoryResult& r) {
    return r.determinacy.exact && r.source_rank == 1 && r.compact && r.case_tag != BundleCase::CompactChiOne;
}

}  // namespace

Comparison compare(const KTheoryResult& a, const KTheoryResult& b) {
    if (!a.determinacy.exact || !b.determinacy.exact)
        return {Verdict::Undetermined, "torsion of K0 is only bounded (Z/t, t | |chi|) on at least one side"};

    std::vector<std::string> differences;
    if (a.k0 != b.k0) differences.push_back(describe_difference("K0", a.k0, b.k0));
    if (a.k1 != b.k1) differences.push_back(describe_difference("K1", a.k1, b.k1));
    if (unit_order(a.unit) != unit_order(b.unit))
        differences.push_back("unit: " + to_string(a.unit) + " vs " + to_string(b.unit));
    if (!differences.empty()) {
        std::string note;
        for (const auto& d : differences) note += (note.empty() ? "" : "; ") + d;
        return {Verdict::NotIsomorphic, note};
    }

    if (!meets_classification_hypotheses(a) || !meets_classification_hypotheses(b))
        return {Verdict::Undetermined,
                "K-data agree, but classification by K-groups is only established for closed rank-1 "
                "quotients with chi != 1"};
    return {Verdict::Isomorphic, "K0 = " + a.k0.to_string() + ", K1 = " + a.k1.to_string() + ", unit " + to_string(a.unit)};
}

std::optional<Integer> recover_euler(const KTheoryResult& r) {
    if (!r.determinacy.exact || r.unit.kind != UnitKind::TorsionGenerator) return std::nullopt;
    return r.k0.torsion_order();
}

KKGroup kk_group(const KTheoryResult& a, const KTheoryResult& b) {
    if (!a.determinacy.exact || !b.determinacy.exact)
        throw HypothesisRefused("KK-group refused: K0 torsion is only bounded");
    KKGroup out;
    out.headline = direct_sum(hom(a.k0, b.k0), ext(a.k0, b.k0));
    out.graded = direct_sum({hom(a.k0, b.k0), hom(a.k1, b.k1), ext(a.k0, b.k1), ext(a.k1, b.k0)});
    return out;
}

KPair kunneth_k(const KPair& a, const KPair& b) {
    const auto& [a0, a1] = a;
    const auto& [b0, b1] = b;
    return {direct_sum({tensor(a0, b0), tensor(a1, b1), tor(a0, b1), tor(a1, b0)}),
            direct_sum({tensor(a0, b1), tensor(a1, b0), tor(a0, b0), tor(a1, b1)})};
}

KPair kunneth_k(const KTheoryResult& a, const KTheoryResult& b) {
    if (!a.determinacy.exact || !b.determinacy.exact)
        throw HypothesisRefused("Kunneth refused: K0 torsion is only bounded");
    return kunneth_k(KPair{a.k0, a.k1}, KPair{b.k0, b.k1});
}

GradedGroup kunneth_cohomology(const GradedGroup& x, const GradedGroup& y) {
    if (x.length() == 0 || y.length() == 0) return {};
    const std::size_t top = x.length() + y.length() - 2;
    std::vector<std::vector<FgAbGroup>> parts(top + 1);
    for (std::size_t i = 0; i < x.length(); ++i)
        for (std::size_t j = 0; j < y.length(); ++j) {
            const auto& hx = x.at(static_cast<long>(i));
            const auto& hy = y.at(static_cast<long>(j));
            parts[i + j].push_back(tensor(hx, hy));
            if (i + j >= 1) parts[i + j - 1].push_back(tor(hx, hy));
        }
    std::vector<FgAbGroup> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(direct_sum(p));
    return GradedGroup(std::move(out));
}

}  // namespace boundaryk
