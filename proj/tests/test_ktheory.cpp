#include "boundaryk/ktheory.hpp"

#include "support/printers.hpp"
#include "support/random_spaces.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace boundaryk;

namespace {

FgAbGroup G(const char* text) { return FgAbGroup::parse(text); }

SpaceInput corpus_space(const std::string& name) {
    return load_space_file(std::string(BOUNDARYK_CORPUS_DIR) + "/" + name + ".space");
}

BundleCohomology bundle_of(std::initializer_list<const char*> texts) {
    std::vector<FgAbGroup> groups;
    for (const char* t : texts) groups.push_back(G(t));
    BundleCohomology b;
    b.groups = GradedGroup(groups);
    return b;
}

}  // namespace

TEST_CASE("assembling K-groups shifts degrees by n") {
    auto [k0, k1] = assemble_k(bundle_of({"Z", "Z^5", "Z^4 + Z/2", "Z"}), 2);
    CHECK(k0 == G("Z^5 + Z/2"));
    CHECK(k1 == G("Z^6"));
    std::tie(k0, k1) = assemble_k(bundle_of({"Z", "0", "Z", "Z", "0", "Z"}), 3);
    CHECK(k0 == G("Z^2"));
    CHECK(k1 == G("Z^2"));
    // An odd shift swaps the parities.
    std::tie(k0, k1) = assemble_k(bundle_of({"Z", "Z/3"}), 1);
    CHECK(k0 == G("Z/3"));
    CHECK(k1 == G("Z"));

    BundleCohomology inexact = bundle_of({"Z"});
    inexact.exact = false;
    CHECK_THROWS_AS(assemble_k(inexact, 2), HypothesisRefused);
}

TEST_CASE("genus-2 surface") {
    const auto r = boundary_k_theory(corpus_space("genus2"));
    CHECK(r.k0 == G("Z^5 + Z/2"));
    CHECK(r.k1 == G("Z^6"));
    CHECK(r.unit == UnitClass{UnitKind::TorsionGenerator, Integer(2)});
    CHECK(r.determinacy.exact);
    CHECK(r.case_tag == BundleCase::CompactChiOther);
    CHECK(r.euler == Integer(-2));
    CHECK(to_string(r.unit) == "torsion generator of order 2");

    const auto les = boundary_k_theory(corpus_space("genus2"), CohomologySource::ExactSequence);
    CHECK(les.k0 == G("Z^5 + Z/2"));
    CHECK(les.k1 == G("Z^5"));
    CHECK(les.unit == r.unit);
}

TEST_CASE("unit class trichotomy over the case tags") {
    CHECK(boundary_k_theory(corpus_space("chi1")).unit.kind == UnitKind::TrivialClass);
    CHECK(boundary_k_theory(corpus_space("hs3")).unit.kind == UnitKind::FreeGenerator);
    CHECK(boundary_k_theory(corpus_space("cusped2")).unit.kind == UnitKind::FreeGenerator);
    CHECK(boundary_k_theory(corpus_space("genus3")).unit == UnitClass{UnitKind::TorsionGenerator, Integer(4)});
    CHECK(to_string(UnitClass{UnitKind::TrivialClass, {}}) == "trivial");
    CHECK(to_string(UnitClass{UnitKind::FreeGenerator, {}}) == "free generator");
}

TEST_CASE("higher rank compact quotient is torsion bounded") {
    const auto r = boundary_k_theory(corpus_space("genus2xgenus2"));
    CHECK_FALSE(r.determinacy.exact);
    CHECK(r.determinacy.free_rank == 35);
    CHECK(r.determinacy.torsion_divides == 4);
    CHECK(r.k0 == G("Z^35"));
    CHECK(r.k1 == G("Z^36"));
    CHECK(r.unit == UnitClass{UnitKind::TorsionGenerator, std::nullopt});
    CHECK(r.source_rank == 2);
    CHECK(k0_string(r) == "Z^35 + Z/t, t | 4");
    CHECK(to_string(r.unit) == "torsion generator of order t");
}

TEST_CASE("higher rank noncompact quotient is exact") {
    const auto r = boundary_k_theory(corpus_space("noncompact-rank2"));
    CHECK(r.determinacy.exact);
    CHECK(r.k0 == G("Z^3"));
    CHECK(r.k1 == G("Z^3"));
    CHECK(r.unit.kind == UnitKind::FreeGenerator);
    CHECK(k0_string(r) == "Z^3");
}

TEST_CASE("refusals") {
    SpaceInput s = corpus_space("genus2xgenus2");
    s.assume_baum_connes = false;
    CHECK_THROWS_AS(boundary_k_theory(s), HypothesisRefused);

    s = corpus_space("genus2");
    CHECK_THROWS_AS(furstenberg_k_theory(s), HypothesisRefused);
    s.rank = 2;
    CHECK_THROWS_AS(boundary_k_theory_rank1(s), HypothesisRefused);

    s = corpus_space("genus2");
    s.dim = 4;
    s.cohomology = GradedGroup({G("Z"), G("0"), G("Z/3"), G("0"), G("Z")});
    s.euler = Integer(2);
    REQUIRE(validate(s).ok());
    CHECK_THROWS_AS(boundary_k_theory(s), HypothesisRefused);

    s = corpus_space("genus2");
    s.euler = Integer(0);
    CHECK_THROWS_AS(boundary_k_theory(s), HypothesisRefused);
}

TEST_CASE("rank and parity invariants on random spaces") {
    std::mt19937 rng(gen::kSeed);
    for (int trial = 0; trial < 300; ++trial) {
        const SpaceInput s = gen::random_space(rng, trial % 2 == 0);
        for (auto source : {CohomologySource::Lemma, CohomologySource::ExactSequence}) {
            const auto bundle = bundle_cohomology(s, source);
            const auto r = boundary_k_theory(s, source);
            INFO(serialize_space(s) << to_string(source));
            REQUIRE(r.k0.rank() + r.k1.rank() == bundle.groups.total_rank());
            const Integer signed_diff = Integer(static_cast<long>(r.k0.rank())) - static_cast<long>(r.k1.rank());
            const Integer alt = alternating_rank_sum(bundle.groups);
            REQUIRE(signed_diff == (s.dim % 2 == 0 ? alt : Integer(-alt)));
            REQUIRE(r.k1.is_free());
            const Integer chi = euler_characteristic(s);
            if (r.unit.kind == UnitKind::TorsionGenerator) REQUIRE(r.k0.torsion_order() == abs(chi));
            else REQUIRE(r.k0.is_free());
        }
    }
}
