#include "boundaryk/ahss.hpp"

#include "support/printers.hpp"
#include "support/random_spaces.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace boundaryk;

namespace {

FgAbGroup G(const char* text) { return FgAbGroup::parse(text); }

GradedGroup graded(std::initializer_list<const char*> texts) {
    std::vector<FgAbGroup> out;
    for (const char* t : texts) out.push_back(G(t));
    return GradedGroup(out);
}

SpaceInput corpus_space(const std::string& name) {
    return load_space_file(std::string(BOUNDARYK_CORPUS_DIR) + "/" + name + ".space");
}

bool contains(const std::vector<FgAbGroup>& v, const FgAbGroup& g) { return std::find(v.begin(), v.end(), g) != v.end(); }

}  // namespace

TEST_CASE("torsion bounds by parity") {
    const auto b = torsion_bounds(graded({"0", "Z/2", "Z/4 + Z/2", "0"}));
    CHECK(b.even_order == 8);
    CHECK(b.even_generators == 2);
    CHECK(b.odd_order == 2);
    CHECK(b.odd_generators == 1);

    const auto free = torsion_bounds(graded({"Z", "Z^5", "Z^4", "Z"}));
    CHECK(free == TorsionBounds{});
    CHECK(torsion_bounds(GradedGroup{}) == TorsionBounds{});
}

TEST_CASE("generator bound is zero exactly when the order bound is one") {
    std::mt19937 rng(gen::kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<FgAbGroup> gs;
        for (int i = gen::uniform(rng, 0, 5); i >= 0; --i) gs.push_back(gen::small_group(rng));
        const auto b = torsion_bounds(GradedGroup(gs));
        REQUIRE((b.even_generators == 0) == (b.even_order == 1));
        REQUIRE((b.odd_generators == 0) == (b.odd_order == 1));
    }
}

TEST_CASE("check_result on the genus-2 surface and a corrupted copy") {
    const SpaceInput s = corpus_space("genus2");
    const auto bundle = bundle_cohomology(s, CohomologySource::Lemma);
    const auto bounds = torsion_bounds(bundle.groups);
    auto r = boundary_k_theory(s);
    CHECK(check_result(r, bounds, s.dim).passed);
    CHECK(check_result(r, bounds, s.dim).notice.empty());
    r.k0 = G("Z^5 + Z/4");
    CHECK_FALSE(check_result(r, bounds, s.dim).passed);
    r.k0 = G("Z^5 + Z/2");
    r.k1 = G("Z^6 + Z/2");
    CHECK_FALSE(check_result(r, bounds, s.dim).passed);
}

TEST_CASE("check_result is vacuous for bounded results") {
    const SpaceInput s = corpus_space("genus2xgenus2");
    const auto r = boundary_k_theory(s);
    const auto c = check_result(r, torsion_bounds(bundle_cohomology(s, CohomologySource::Lemma).groups), s.dim);
    CHECK(c.passed);
    CHECK_FALSE(c.notice.empty());
}

TEST_CASE("check_result is monotone in the bounds") {
    std::mt19937 rng(gen::kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const SpaceInput s = gen::random_space(rng, trial % 2 == 0);
        const auto bundle = bundle_cohomology(s, CohomologySource::ExactSequence);
        const auto r = boundary_k_theory(s, CohomologySource::ExactSequence);
        auto b = torsion_bounds(bundle.groups);
        REQUIRE(check_result(r, b, s.dim).passed);
        b.even_order *= gen::uniform(rng, 1, 5);
        b.odd_order *= gen::uniform(rng, 1, 5);
        b.even_generators += static_cast<std::size_t>(gen::uniform(rng, 0, 2));
        b.odd_generators += static_cast<std::size_t>(gen::uniform(rng, 0, 2));
        REQUIRE(check_result(r, b, s.dim).passed);
    }
}

TEST_CASE("consistent K-groups fold extensions down the filtration") {
    CHECK(consistent_k_groups(graded({"Z/2", "0", "Z/2"}), Parity::Even) == std::vector{G("Z/2 + Z/2"), G("Z/4")});
    CHECK(consistent_k_groups(graded({"Z/2", "0", "Z/2"}), Parity::Odd) == std::vector{G("0")});
    CHECK(consistent_k_groups(graded({"Z", "Z^2"}), Parity::Odd) == std::vector{G("Z^2")});
    CHECK(consistent_k_groups(GradedGroup{}, Parity::Even) == std::vector{G("0")});
    // Higher degrees filter deeper: Z on top of Z/2 admits the non-split Z.
    CHECK(consistent_k_groups(graded({"Z/2", "0", "Z"}), Parity::Even) == std::vector{G("Z"), G("Z + Z/2")});
    CHECK(consistent_k_groups(graded({"Z", "0", "Z/2"}), Parity::Even) == std::vector{G("Z + Z/2")});
}

TEST_CASE("consistent K-groups refuse past the cap") {
    CHECK_THROWS_AS(consistent_k_groups(graded({"Z/200", "0", "Z/100"}), Parity::Even), OracleRefused);
}

TEST_CASE("computed K-groups lie in the consistent sets") {
    std::mt19937 rng(gen::kSeed + 2);
    for (int trial = 0; trial < 150; ++trial) {
        const SpaceInput s = gen::random_space(rng, trial % 2 == 0);
        for (auto source : {CohomologySource::Lemma, CohomologySource::ExactSequence}) {
            const auto bundle = bundle_cohomology(s, source);
            const auto r = boundary_k_theory(s, source);
            const Parity k0_parity = s.dim % 2 == 0 ? Parity::Even : Parity::Odd;
            const Parity k1_parity = s.dim % 2 == 0 ? Parity::Odd : Parity::Even;
            REQUIRE(contains(consistent_k_groups(bundle.groups, k0_parity), r.k0));
            REQUIRE(contains(consistent_k_groups(bundle.groups, k1_parity), r.k1));
        }
    }
}
