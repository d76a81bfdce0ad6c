#include <doctest.h>

#include <algorithm>
#include <random>

#include "udr/oracle.hpp"

using namespace udr;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("lift enumeration instances") {
    // N(1,2), simple module, F_2[eps]: alpha -> 0 or eps (alpha^2 = 0 free)
    {
        FpRep base = buildRhoTop(UniserialModule::make(NakayamaSpec::make(1, 2), 1, 1), 2);
        auto en = enumerateLifts(base, makeTestRing("dual", 2));
        CHECK(en.lifts.size() == 2);
        CHECK(en.searchSpace == 2);
    }
    // N(1,3), simple module, F_2[eps]: alpha^3 = 0 automatic
    {
        FpRep base = buildRhoTop(UniserialModule::make(NakayamaSpec::make(1, 3), 1, 1), 2);
        auto en = enumerateLifts(base, makeTestRing("dual", 2));
        CHECK(en.lifts.size() == 2);
    }
    // trivial test ring: exactly the base lift
    {
        FpRep base = buildRhoTop(UniserialModule::make(NakayamaSpec::make(2, 5), 1, 2), 2);
        auto en = enumerateLifts(base, makeTestRing("Fp", 2));
        CHECK(en.lifts.size() == 1);
    }
}

TEST_CASE("enumeration cap") {
    FpRep base = buildRhoTop(UniserialModule::make(NakayamaSpec::make(1, 4), 1, 3), 2);
    OracleCaps caps;
    caps.maxCandidates = 100;  // 2^9 needed
    CHECK_THROWS_AS(enumerateLifts(base, makeTestRing("dual", 2), caps), ResourceCapError);
}

TEST_CASE("strict equivalence classes") {
    // 1 x 1 representations: conjugation is trivial, classes = lifts
    {
        FpRep base = buildRhoTop(UniserialModule::make(NakayamaSpec::make(1, 3), 1, 1), 2);
        ArtinTestRing R = makeTestRing("dual", 2);
        auto en = enumerateLifts(base, R);
        auto classes = strictEquivClasses(en, base, R);
        CHECK(classes.size() == en.lifts.size());
        CHECK(classes.size() == 2);
        for (const auto& c : classes) CHECK(c.orbitSize == 1);
    }
    // two lifts differing by an explicit conjugation land in one class
    {
        NakayamaSpec spec = NakayamaSpec::make(1, 4);
        FpRep base = buildRhoTop(UniserialModule::make(spec, 1, 2), 2);
        ArtinTestRing R = makeTestRing("dual", 2);
        auto en = enumerateLifts(base, R);
        auto classes = strictEquivClasses(en, base, R);
        // pick a class with orbit size > 1 and check closure under one
        // hand-built conjugation
        bool sawBigOrbit = false;
        for (const auto& cls : classes)
            if (cls.orbitSize > 1) sawBigOrbit = true;
        CHECK(sawBigOrbit);
        long long total = 0;
        for (const auto& cls : classes) total += cls.orbitSize;
        CHECK(total == static_cast<long long>(en.lifts.size()));
    }
}

TEST_CASE("orbit sizes divide the group order") {
    NakayamaSpec spec = NakayamaSpec::make(2, 5);
    UniserialModule V = UniserialModule::make(spec, 1, 2);
    ArtinTestRing R = makeTestRing("u3", 2);
    FpRep base = buildRhoTop(V, 2);
    auto en = enumerateLifts(base, R);
    auto classes = strictEquivClasses(en, base, R);
    // |G| = p^(k * sum theta_v^2) = 2^(2*2) for the block-diagonal subgroup
    long long g = 16;
    for (const auto& cls : classes) CHECK(g % cls.orbitSize == 0);
}

TEST_CASE("class partition is independent of input order") {
    NakayamaSpec spec = NakayamaSpec::make(2, 4);
    UniserialModule V = UniserialModule::make(spec, 1, 2);
    ArtinTestRing R = makeTestRing("xy2", 2);
    FpRep base = buildRhoTop(V, 2);
    auto en = enumerateLifts(base, R);
    auto classes = strictEquivClasses(en, base, R);
    LiftEnumeration shuffled = en;
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.lifts.begin(), shuffled.lifts.end(), rng);
    auto classes2 = strictEquivClasses(shuffled, base, R);
    REQUIRE(classes.size() == classes2.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(classes[i].representative.key == classes2[i].representative.key);
        CHECK(classes[i].orbitSize == classes2[i].orbitSize);
    }
}

TEST_CASE("representability instances") {
    auto run = [](int e, int ell, int len, const char* ring) {
        UniserialModule V = UniserialModule::make(NakayamaSpec::make(e, ell), 1, len);
        DeformationPresentation pres = udrPresentation(V);
        return checkRepresentability(V, pres, makeTestRing(ring, 2));
    };
    CHECK(run(1, 3, 1, "dual").allPass());   // 2 = 2
    CHECK(run(1, 3, 1, "u3").allPass());     // 4 = 4
    CHECK(run(3, 7, 2, "u3").allPass());     // n = 0: 1 = 1
    CHECK(run(2, 5, 2, "u3").allPass());
    CHECK(run(2, 6, 3, "xy2").allPass());
}

TEST_CASE("a wrong presentation is detected") {
    UniserialModule V = UniserialModule::make(NakayamaSpec::make(1, 3), 1, 1);
    DeformationPresentation pres = udrPresentation(V);
    // claim k[[t]]/(t^2) instead of (t^3)
    pres.generators = buildJIdeal(1, 2).generators;
    pres.mV = 2;
    CHECK_FALSE(checkRepresentability(V, pres, makeTestRing("u3", 2)).allPass());
}

TEST_CASE("tangent dimensions") {
    auto dim = [](int e, int ell, int len, std::uint32_t p) {
        return tangentDimension(UniserialModule::make(NakayamaSpec::make(e, ell), 1, len), p)
            .dimension;
    };
    CHECK(dim(2, 5, 2, 2) == 1);
    CHECK(dim(3, 7, 2, 2) == 0);  // len < e
    CHECK(dim(1, 4, 2, 2) == 2);
    CHECK(dim(1, 4, 2, 3) == 2);  // independent of p
    CHECK(tangentDimensionReport(UniserialModule::make(NakayamaSpec::make(1, 4), 1, 2), 2)
              .allPass());
}

TEST_CASE("tangent dimension is p-independent over the catalog") {
    for (auto [e, ell] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
        NakayamaSpec spec = NakayamaSpec::make(e, ell);
        for (int len = 1; len < ell && len <= 3; ++len) {
            UniserialModule V = UniserialModule::make(spec, 1, len);
            CHECK(tangentDimension(V, 2).dimension == tangentDimension(V, 3).dimension);
        }
    }
}

TEST_CASE("centralizer lifting instances") {
    // 1 x 1 case: everything is central
    CHECK(checkCentralizerLifting(UniserialModule::make(NakayamaSpec::make(1, 3), 1, 1),
                                  makeSmallExtension("u3", "u2", 2))
              .allPass());
    // dual -> Fp: the target centralizer group is trivial
    CHECK(checkCentralizerLifting(UniserialModule::make(NakayamaSpec::make(2, 5), 1, 2),
                                  makeSmallExtension("dual", "Fp", 2))
              .allPass());
    // N(1,4) length-2 module along u3 -> u2
    CHECK(checkCentralizerLifting(UniserialModule::make(NakayamaSpec::make(1, 4), 1, 2),
                                  makeSmallExtension("u3", "u2", 2))
              .allPass());
}

TEST_SUITE_END();
