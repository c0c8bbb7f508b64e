#include "cpdirac/line_bundle.hpp"

#include "cpdirac/weyl.hpp"
#include "doctest.h"
#include "spectrum_test_util.hpp"

using namespace cpdirac;

TEST_CASE("family eigenvalues") {
    CHECK(family_eigenvalue(3, 0, FamilyIndex::f2(2)) == 24);
    CHECK(family_eigenvalue(1, 0, FamilyIndex::f3(0)) == 4);
    CHECK(family_eigenvalue(3, 0, FamilyIndex::f1(2, 0, 0)) == 16); // (d+1)^2
}

TEST_CASE("family multiplicities") {
    CHECK(family_multiplicity(3, 0, FamilyIndex::f1(2, 0, 0)) == 6);
    CHECK(family_multiplicity(3, 0, FamilyIndex::f2(2)) == 10);
    CHECK(family_multiplicity(1, 0, FamilyIndex::f2(1)) == 2); // empty products at d=1
}

TEST_CASE("family highest weights") {
    CHECK(family_highest_weight(3, 0, FamilyIndex::f2(2)) == Weight{2, 0, 0});
    CHECK(family_highest_weight(3, 0, FamilyIndex::f1(2, 0, 0)) == Weight{1, 1, 0});
    CHECK(family_highest_weight(1, 0, FamilyIndex::f3(0)) == Weight{1});
}

TEST_CASE("index validation names the violated constraint") {
    // no first family at d=1
    CHECK_THROWS_WITH_AS(family_eigenvalue(1, 0, FamilyIndex::f1(1, 0, 2)),
                         doctest::Contains("1 <= r <= d-1"), ValidationError);
    CHECK_THROWS_WITH_AS(family_eigenvalue(3, 0, FamilyIndex::f1(0, 0, 2)),
                         doctest::Contains("1 <= r <= d-1"), ValidationError);
    CHECK_THROWS_WITH_AS(family_eigenvalue(3, 0, FamilyIndex::f1(1, 2, 2)),
                         doctest::Contains("epsilon in {0,1}"), ValidationError);
    // l = 0 < max(0, m+(d+1)/2) = 1 at d=1, m=0
    CHECK_THROWS_WITH_AS(family_eigenvalue(1, 0, FamilyIndex::f2(0)),
                         doctest::Contains("l >= max(0, m+(d+1)/2) = 1"), ValidationError);
    CHECK_THROWS_WITH_AS(family_eigenvalue(3, 5, FamilyIndex::f3(2)),
                         doctest::Contains("l >= max(0, m-(d+1)/2) = 3"), ValidationError);
    CHECK_THROWS_AS(family_eigenvalue(2, 0, FamilyIndex::f2(3)), ValidationError);
    // line-bundle indices carry no s
    CHECK_THROWS_AS(family_eigenvalue(3, 0, FamilyIndex::f2(2).with_s(1)), ValidationError);
}

TEST_CASE("untwisted CP^1 spectrum is the round sphere") {
    const Spectrum spectrum = enumerate_line_bundle(1, 0, 16);
    REQUIRE(spectrum.entries.size() == 2);
    CHECK(spectrum.entries[0].eigenvalue == 4);
    CHECK(spectrum.entries[0].multiplicity == 4);
    CHECK(spectrum.entries[1].eigenvalue == 16);
    CHECK(spectrum.entries[1].multiplicity == 8);

    // contribution order within an entry: (family, r, epsilon, l)
    REQUIRE(spectrum.entries[0].contributions.size() == 2);
    CHECK(spectrum.entries[0].contributions[0].index == FamilyIndex::f2(1));
    CHECK(spectrum.entries[0].contributions[0].multiplicity == 2);
    CHECK(spectrum.entries[0].contributions[1].index == FamilyIndex::f3(0));
    CHECK(spectrum.entries[0].contributions[1].multiplicity == 2);

    // 4k^2 -> 4k up to 400
    const auto big = test::as_map(enumerate_line_bundle(1, 0, 400));
    REQUIRE(big.size() == 10);
    for (Int k = 1; k <= 10; ++k) {
        REQUIRE(big.count(4 * k * k) == 1);
        CHECK(big.at(4 * k * k) == 4 * k);
    }
}

TEST_CASE("no harmonic spinors on untwisted CP^1") {
    CHECK(enumerate_line_bundle(1, 0, 3).entries.empty());
}

TEST_CASE("(d+1)^2 appears for d=3 m=0 with its family-1 contribution") {
    const Spectrum spectrum = enumerate_line_bundle(3, 0, 16);
    const SpectrumEntry* entry = spectrum.find(16);
    REQUIRE(entry != nullptr);
    bool found = false;
    for (const Contribution& c : entry->contributions)
        found = found || c.index == FamilyIndex::f1(2, 0, 0);
    CHECK(found);
    CHECK(entry->multiplicity == 12); // f1(1,1,1) and f1(2,0,0), 6 each
}

TEST_CASE("eigenvalues are nonnegative even integers") {
    for (Int d : {1, 3, 5})
        for (Int m : {-3, 0, 4}) {
            const Spectrum spectrum = enumerate_line_bundle(d, m, 150);
            for (const SpectrumEntry& e : spectrum.entries) {
                CHECK(e.eigenvalue >= 0);
                CHECK(e.eigenvalue % 2 == 0);
            }
        }
}

TEST_CASE("entry multiplicity is the sum of its contributions") {
    const Spectrum spectrum = enumerate_line_bundle(5, 2, 200);
    REQUIRE(!spectrum.entries.empty());
    for (const SpectrumEntry& e : spectrum.entries) {
        BigInt sum = 0;
        for (const Contribution& c : e.contributions)
            sum += c.multiplicity;
        CHECK(sum == e.multiplicity);
    }
}

TEST_CASE("closed-form multiplicity equals the Weyl dimension (spot grid)") {
    for (Int d : {1, 3})
        for (Int m : {-2, 0, 2}) {
            const auto check = [&](const FamilyIndex& idx) {
                CHECK(family_multiplicity(d, m, idx) ==
                      weyl_dim(d, family_highest_weight(d, m, idx)));
            };
            for (Int r = 1; r <= d - 1; ++r)
                for (Int eps = 0; eps <= 1; ++eps) {
                    const Int lmin = line_l_min(d, m, Family::F1, r, eps);
                    for (Int l = lmin; l <= lmin + 4; ++l)
                        check(FamilyIndex::f1(r, eps, l));
                }
            for (Family family : {Family::F2, Family::F3}) {
                const Int lmin = line_l_min(d, m, family);
                for (Int l = lmin; l <= lmin + 4; ++l)
                    check(family == Family::F2 ? FamilyIndex::f2(l) : FamilyIndex::f3(l));
            }
        }
}

TEST_CASE("enumeration is complete up to the cutoff") {
    const Int d = 3, m = 1, cutoff = 60;
    const Spectrum spectrum = enumerate_line_bundle(d, m, cutoff);

    Int listed = 0;
    for (const SpectrumEntry& e : spectrum.entries) {
        CHECK(e.eigenvalue <= cutoff);
        listed += static_cast<Int>(e.contributions.size());
    }

    // brute force over a generous l range
    Int expected = 0;
    const auto probe = [&](const FamilyIndex& idx) {
        if (family_eigenvalue(d, m, idx) > cutoff)
            return;
        ++expected;
        const SpectrumEntry* entry = spectrum.find(family_eigenvalue(d, m, idx));
        REQUIRE(entry != nullptr);
        Int hits = 0;
        for (const Contribution& c : entry->contributions)
            hits += c.index == idx ? 1 : 0;
        CHECK(hits == 1);
    };
    for (Int r = 1; r <= d - 1; ++r)
        for (Int eps = 0; eps <= 1; ++eps)
            for (Int l = line_l_min(d, m, Family::F1, r, eps); l <= 40; ++l)
                probe(FamilyIndex::f1(r, eps, l));
    for (Int l = line_l_min(d, m, Family::F2); l <= 40; ++l)
        probe(FamilyIndex::f2(l));
    for (Int l = line_l_min(d, m, Family::F3); l <= 40; ++l)
        probe(FamilyIndex::f3(l));
    CHECK(listed == expected);
}

TEST_CASE("parallel enumeration matches the serial reference") {
    for (Int m : {-4, 0, 3}) {
        const Spectrum serial = enumerate_line_bundle(5, m, 400, ExecMode::serial);
        const Spectrum parallel = enumerate_line_bundle(5, m, 400, ExecMode::parallel);
        CHECK(test::identical(serial, parallel));
    }
}

TEST_CASE("negative cutoff is rejected") {
    CHECK_THROWS_AS(enumerate_line_bundle(1, 0, -1), ValidationError);
}
