#include <doctest.h>

#include <random>

#include "rackhom/errors.hpp"
#include "rackhom/rack.hpp"
#include "support.hpp"

using namespace rackhom;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

std::vector<std::vector<Element>> rows_of(const FiniteRack& rack) {
    std::vector<std::vector<Element>> out(rack.size());
    for (std::size_t x = 0; x < rack.size(); ++x) {
        for (std::size_t y = 0; y < rack.size(); ++y) out[x].push_back(rack.act(Element(x), Element(y)));
    }
    return out;
}

}  // namespace

TEST_CASE("validate_rack accepts the one-element rack") {
    const FiniteRack rack = validate_rack(Rows{{0}});
    CHECK(rack.size() == 1);
    CHECK(rack.act(0, 0) == 0);
}

TEST_CASE("validate_rack accepts constant swap rows") {
    const FiniteRack rack = validate_rack(Rows{{1, 0}, {1, 0}});
    const auto phi = as_permutation(rack);
    REQUIRE(phi);
    CHECK(*phi == Permutation{1, 0});
}

TEST_CASE("validate_rack reports the first failing triple") {
    try {
        (void)validate_rack(Rows{{0, 1}, {1, 0}});
        FAIL("expected NotSelfDistributive");
    } catch (const NotSelfDistributive& e) {
        CHECK(e.code() == Errc::NotSelfDistributive);
        // 1 ▷ (0 ▷ 0) = 1 but (1 ▷ 0) ▷ (1 ▷ 0) = 1 ▷ 1 = 0.
        CHECK(e.x() == 1);
        CHECK(e.y() == 0);
        CHECK(e.z() == 0);
    }
}

TEST_CASE("validate_rack rejects malformed tables") {
    CHECK_THROWS_AS((void)validate_rack(Rows{{0, 1}, {0}}), Error);
    try {
        (void)validate_rack(Rows{{0, 2}, {0, 1}});
        FAIL("expected EntryOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EntryOutOfRange);
    }
    try {
        (void)validate_rack(Rows{{0, 1}, {0, 0}});
        FAIL("expected NotBijective");
    } catch (const NotBijective& e) {
        CHECK(e.row() == 1);
    }
    try {
        (void)validate_rack(std::vector<std::vector<std::int64_t>>{});
        FAIL("expected NotSquare");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSquare);
    }
}

TEST_CASE("error messages carry the stable code name") {
    try {
        (void)validate_rack(Rows{{0, 1}, {0, 0}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).rfind("NotBijective: ", 0) == 0);
    }
    CHECK(errc_name(Errc::DegreeTooLarge) == "DegreeTooLarge");
}

TEST_CASE("permutation_rack numbers orbits consecutively") {
    CHECK(rows_of(permutation_rack(PermutationSpec{{1}, 0})) ==
          std::vector<std::vector<Element>>{{0}});
    const FiniteRack cyclic = permutation_rack(PermutationSpec{{3}, 0});
    for (const auto& row : rows_of(cyclic)) CHECK(row == std::vector<Element>{1, 2, 0});
    const FiniteRack mixed = permutation_rack(PermutationSpec{{2, 1}, 0});
    for (const auto& row : rows_of(mixed)) CHECK(row == std::vector<Element>{1, 0, 2});
}

TEST_CASE("permutation_rack refuses free orbits and empty specs") {
    try {
        (void)permutation_rack(PermutationSpec{{2}, 1});
        FAIL("expected InfiniteOrbits");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InfiniteOrbits);
    }
    try {
        (void)permutation_rack(PermutationSpec{});
        FAIL("expected EmptySpec");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptySpec);
    }
}

TEST_CASE("trivial racks project onto the right factor") {
    CHECK(rows_of(trivial_rack(1)) == std::vector<std::vector<Element>>{{0}});
    CHECK(rows_of(trivial_rack(2)) == std::vector<std::vector<Element>>{{0, 1}, {0, 1}});
    for (const auto& row : rows_of(trivial_rack(3))) CHECK(row == std::vector<Element>{0, 1, 2});
    CHECK(*as_permutation(trivial_rack(2)) == Permutation{0, 1});
}

TEST_CASE("dihedral racks") {
    CHECK(rows_of(dihedral_rack(1)) == std::vector<std::vector<Element>>{{0}});
    CHECK(rows_of(dihedral_rack(3))[0] == std::vector<Element>{0, 2, 1});
    CHECK(rows_of(dihedral_rack(4))[1] == std::vector<Element>{2, 1, 0, 3});
    CHECK_FALSE(as_permutation(dihedral_rack(3)).has_value());
    try {
        (void)require_permutation(dihedral_rack(3));
        FAIL("expected NotPermutation");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPermutation);
    }
}

TEST_CASE("as_permutation of a cyclic rack") {
    CHECK(*as_permutation(permutation_rack(PermutationSpec{{3}, 0})) == Permutation{1, 2, 0});
}

TEST_CASE("orbit_decomposition lists cycles from their minimum") {
    const Permutation identity{0, 1, 2};
    CHECK(orbit_decomposition(identity).orbits == std::vector<std::vector<Element>>{{0}, {1}, {2}});
    const Permutation cycle{1, 2, 0};
    CHECK(orbit_decomposition(cycle).orbits == std::vector<std::vector<Element>>{{0, 1, 2}});
    const Permutation mixed{1, 0, 2};
    const auto orbits = orbit_decomposition(mixed);
    CHECK(orbits.orbits == std::vector<std::vector<Element>>{{0, 1}, {2}});
    CHECK(orbits.orbit_of == std::vector<std::size_t>{0, 0, 1});
    const Permutation tangled{3, 4, 0, 2, 1};
    CHECK(orbit_decomposition(tangled).orbits ==
          std::vector<std::vector<Element>>{{0, 3, 2}, {1, 4}});
    CHECK(spec_of(orbit_decomposition(tangled)) == PermutationSpec{{3, 2}, 0});
}

TEST_CASE("spec counts") {
    const PermutationSpec spec{{2, 3}, 2};
    CHECK(spec.orbit_count() == 4);
    CHECK(spec.finite_orbit_count() == 2);
    CHECK(spec.element_count() == 5);
}

TEST_CASE("constructed racks revalidate and keep their orbit sizes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteRack rack = support::random_rack(rng, 6);
        std::vector<std::vector<std::int64_t>> rows(rack.size());
        for (std::size_t x = 0; x < rack.size(); ++x) {
            for (std::size_t y = 0; y < rack.size(); ++y) rows[x].push_back(rack.act(Element(x), Element(y)));
        }
        CHECK(validate_rack(rows) == rack);
    }
    for (const auto& sizes : support::partitions(6, 6)) {
        const PermutationSpec spec{sizes, 0};
        const auto phi = as_permutation(permutation_rack(spec));
        REQUIRE(phi);
        auto got = spec_of(orbit_decomposition(*phi)).finite_orbit_sizes;
        auto want = sizes;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("orbit decompositions partition and follow the permutation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto phi = support::random_permutation(rng, 1 + trial % 8);
        const auto orbits = orbit_decomposition(phi);
        std::vector<int> seen(phi.size(), 0);
        for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
            const auto& cycle = orbits.orbits[o];
            CHECK(cycle.front() == *std::min_element(cycle.begin(), cycle.end()));
            if (o > 0) CHECK(orbits.orbits[o - 1].front() < cycle.front());
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                ++seen[cycle[i]];
                CHECK(orbits.orbit_of[cycle[i]] == o);
                CHECK(phi[cycle[i]] == cycle[(i + 1) % cycle.size()]);
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
    }
}
