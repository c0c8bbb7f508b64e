#include "cpdirac/normal_bundle.hpp"

#include "cpdirac/line_bundle.hpp"
#include "cpdirac/weyl.hpp"
#include "doctest.h"
#include "spectrum_test_util.hpp"

using namespace cpdirac;

namespace {

std::vector<EmbeddingParams> grid(Int max_n) {
    std::vector<EmbeddingParams> out;
    for (Int d = 1; d <= max_n; d += 2)
        for (Int n = d + 2; n <= max_n; n += 2)
            out.emplace_back(d, n);
    return out;
}

} // namespace

TEST_CASE("embedding parameters are validated") {
    CHECK_THROWS_WITH_AS(EmbeddingParams(2, 5), doctest::Contains("d must be odd"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(EmbeddingParams(1, 4), doctest::Contains("n must be odd"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(EmbeddingParams(5, 3), doctest::Contains("d must be < n"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(EmbeddingParams(-1, 3), doctest::Contains("d must be >= 1"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(EmbeddingParams(1, 1), doctest::Contains("n must be >= 3"),
                         ValidationError);
}

TEST_CASE("normal spinor bundle decomposition") {
    const auto terms13 = decompose_normal_spinor(EmbeddingParams(1, 3));
    REQUIRE(terms13.size() == 3);
    CHECK(terms13[0].power == 1);
    CHECK(terms13[0].multiplicity == 1);
    CHECK(terms13[1].power == 0);
    CHECK(terms13[1].multiplicity == 2);
    CHECK(terms13[2].power == -1);
    CHECK(terms13[2].multiplicity == 1);

    const auto terms35 = decompose_normal_spinor(EmbeddingParams(3, 5));
    REQUIRE(terms35.size() == 3);
    CHECK(terms35[0].power == 1);
    CHECK(terms35[2].power == -1);

    for (const EmbeddingParams& p : grid(11)) {
        BigInt total = 0;
        Int last_power = p.codim() / 2 + 1;
        for (const DecompositionTerm& t : decompose_normal_spinor(p)) {
            CHECK(t.power == last_power - 1); // powers descend by one
            last_power = t.power;
            total += t.multiplicity;
        }
        CHECK(total == BigInt(1) << p.codim()); // rank 2^(n-d)
    }
}

TEST_CASE("normal twist of CP^1 in CP^3, eigenvalues up to 4") {
    const Spectrum spectrum = enumerate_normal(EmbeddingParams(1, 3), 4);
    REQUIRE(spectrum.entries.size() == 2);

    CHECK(spectrum.entries[0].eigenvalue == 0);
    CHECK(spectrum.entries[0].multiplicity == 2);
    REQUIRE(spectrum.entries[0].contributions.size() == 2);
    CHECK(spectrum.entries[0].contributions[0].index == FamilyIndex::f2(0).with_s(2));
    CHECK(spectrum.entries[0].contributions[1].index == FamilyIndex::f3(0).with_s(0));

    CHECK(spectrum.entries[1].eigenvalue == 4);
    CHECK(spectrum.entries[1].multiplicity == 8);
    REQUIRE(spectrum.entries[1].contributions.size() == 2);
    CHECK(spectrum.entries[1].contributions[0].index == FamilyIndex::f2(1).with_s(1));
    CHECK(spectrum.entries[1].contributions[0].multiplicity == 4);
    CHECK(spectrum.entries[1].contributions[1].index == FamilyIndex::f3(0).with_s(1));
    CHECK(spectrum.entries[1].contributions[1].multiplicity == 4);
}

TEST_CASE("d=1 multiplicities of 0 and 4 satisfy the closed-form sum identity") {
    // mult(0) = (n-1)/2 C(n-1,(n-1)/2), mult(4) = 4 C(n-1,(n-1)/2), and their
    // sum is ((n-1)/2 + 4) C(n-1,(n-1)/2).
    for (Int n = 3; n <= 11; n += 2) {
        const Spectrum spectrum = enumerate_normal(EmbeddingParams(1, n), 4);
        const BigInt central = binomial(n - 1, (n - 1) / 2);
        CHECK(spectrum.multiplicity_at(0) == (n - 1) / 2 * central);
        CHECK(spectrum.multiplicity_at(4) == 4 * central);
        CHECK(spectrum.cumulative_multiplicity(4) == ((n - 1) / 2 + 4) * central);
    }
}

TEST_CASE("zero multiplicity identity for d=1") {
    for (Int n = 3; n <= 13; n += 2) {
        const Spectrum spectrum = enumerate_normal(EmbeddingParams(1, n), 0);
        BigInt sum = 0;
        for (Int s = 0; s <= (n - 3) / 2; ++s)
            sum += binomial(n - 1, s) * (n - 1 - 2 * s);
        CHECK(spectrum.multiplicity_at(0) == sum);
        CHECK(spectrum.multiplicity_at(0) == (n - 1) / 2 * binomial(n - 1, (n - 1) / 2));
    }
}

TEST_CASE("lowest eigenvalue closed form") {
    CHECK(lowest_eigenvalue(EmbeddingParams(1, 3)) == 0);
    CHECK(lowest_eigenvalue(EmbeddingParams(3, 5)) == 12);
    CHECK(lowest_eigenvalue(EmbeddingParams(5, 7)) == 32);
}

TEST_CASE("no eigenvalue of the (3,5) twist below 12") {
    CHECK(enumerate_normal(EmbeddingParams(3, 5), 11).entries.empty());
    const Spectrum spectrum = enumerate_normal(EmbeddingParams(3, 5), 12);
    REQUIRE(spectrum.entries.size() == 1);
    CHECK(spectrum.entries[0].eigenvalue == 12);
}

TEST_CASE("zero eigenvalue present whenever d < (n+1)/2") {
    for (const EmbeddingParams& p : {EmbeddingParams(1, 3), EmbeddingParams(3, 9),
                                     EmbeddingParams(1, 11), EmbeddingParams(5, 11)}) {
        REQUIRE(p.d < (p.n + 1) / 2);
        CHECK(enumerate_normal(p, 0).multiplicity_at(0) > 0);
    }
}

TEST_CASE("enumerated minimum matches the closed form (spot checks)") {
    for (const EmbeddingParams& p : {EmbeddingParams(3, 5), EmbeddingParams(1, 9),
                                     EmbeddingParams(7, 9)}) {
        const Spectrum spectrum = enumerate_normal(p, 200);
        REQUIRE(!spectrum.entries.empty());
        CHECK(spectrum.entries[0].eigenvalue == lowest_eigenvalue(p));
    }
}

TEST_CASE("per-family minima") {
    const FamilyMinima minima35 = per_family_minima(EmbeddingParams(3, 5));
    REQUIRE(minima35.f1.has_value());
    CHECK(*minima35.f1 == 12);
    CHECK(minima35.f2 == 12);
    CHECK(minima35.f3 == 12);

    const FamilyMinima minima13 = per_family_minima(EmbeddingParams(1, 3));
    CHECK(!minima13.f1.has_value()); // no first family at d=1
    CHECK(minima13.f2 == 0);
    CHECK(minima13.f3 == 0);

    for (const EmbeddingParams& p : grid(11)) {
        const FamilyMinima minima = per_family_minima(p);
        Int least = std::min(minima.f2, minima.f3);
        if (minima.f1)
            least = std::min(least, *minima.f1);
        CHECK(least == lowest_eigenvalue(p));
    }
}

TEST_CASE("normal index validation names the violated constraint") {
    const EmbeddingParams p(3, 7);
    CHECK_THROWS_WITH_AS(normal_family_eigenvalue(p, FamilyIndex::f2(4)),
                         doctest::Contains("requires s"), ValidationError);
    CHECK_THROWS_WITH_AS(normal_family_eigenvalue(p, FamilyIndex::f2(4).with_s(5)),
                         doctest::Contains("0 <= s <= n-d"), ValidationError);
    CHECK_THROWS_WITH_AS(normal_family_eigenvalue(p, FamilyIndex::f2(3).with_s(0)),
                         doctest::Contains("l >= max(0, (n+1)/2-s) = 4"), ValidationError);
    CHECK_THROWS_WITH_AS(normal_family_eigenvalue(p, FamilyIndex::f1(1, 1, 0).with_s(4)),
                         doctest::Contains("l >= max(epsilon, (n+1)/2-r-s)"), ValidationError);
}

TEST_CASE("normal contributions match the weighted Weyl dimensions") {
    const EmbeddingParams p(3, 5);
    const Spectrum spectrum = enumerate_normal(p, 100);
    REQUIRE(!spectrum.entries.empty());
    for (const SpectrumEntry& e : spectrum.entries)
        for (const Contribution& c : e.contributions) {
            const BigInt dim = weyl_dim(p.d, c.highest_weight);
            CHECK(c.multiplicity == binomial(p.codim(), *c.index.s) * dim);
        }
}

TEST_CASE("normal spectrum equals the weighted merge of line-bundle spectra") {
    for (const EmbeddingParams& p : {EmbeddingParams(3, 7), EmbeddingParams(1, 5)}) {
        const Int cutoff = 100;
        auto merged = std::map<Int, BigInt>{};
        for (Int s = 0; s <= p.codim(); ++s) {
            const BigInt weight = binomial(p.codim(), s);
            const Spectrum part = enumerate_line_bundle(p.d, p.codim() / 2 - s, cutoff);
            for (const SpectrumEntry& e : part.entries)
                merged[e.eigenvalue] += weight * e.multiplicity;
        }
        CHECK(test::as_map(enumerate_normal(p, cutoff)) == merged);
    }
}

TEST_CASE("parallel enumeration matches the serial reference") {
    for (const EmbeddingParams& p : {EmbeddingParams(5, 11), EmbeddingParams(1, 7)}) {
        const Spectrum serial = enumerate_normal(p, 300, ExecMode::serial);
        const Spectrum parallel = enumerate_normal(p, 300, ExecMode::parallel);
        CHECK(test::identical(serial, parallel));
    }
}
