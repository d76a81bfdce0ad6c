#include <doctest.h>

#include "udr/deformation.hpp"
#include "udr/verify.hpp"

using namespace udr;

TEST_SUITE_BEGIN("deformation");

TEST_CASE("mV branches") {
    CHECK(mVOf(2, 1, 0) == 2);
    CHECK(mVOf(2, 1, 1) == 2);  // boundary i = ell'
    CHECK(mVOf(3, 0, 2) == 2);  // second branch
}

TEST_CASE("presentation instances") {
    auto pres = [](int e, int ell, int top, int len) {
        return udrPresentation(UniserialModule::make(NakayamaSpec::make(e, ell), top, len));
    };
    CHECK(pres(1, 3, 1, 1).ringString() == "k[[t1]]/(t1^3)");
    CHECK(pres(2, 5, 1, 2).ringString() == "k[[t1]]/(t1^2)");
    // derived via the h recursion for (n, m) = (2, 4)
    CHECK(pres(3, 13, 1, 6).ringString() == "k[[t1,t2]]/(t2^2 + t1^2*t2, 2*t1*t2 + t1^3)");
    CHECK(pres(2, 5, 1, 5).ringString() == "k");  // projective
    CHECK(pres(3, 7, 1, 2).ringString() == "k");  // n = 0
    // k-dimensions: n=1 collapses to mV; the trivial cases are 1
    CHECK(pres(1, 3, 1, 1).kDimension == 3);
    CHECK(pres(2, 5, 1, 2).kDimension == 2);
    CHECK(pres(2, 5, 1, 5).kDimension == 1);
    CHECK(pres(3, 13, 1, 6).kDimension == 6);
}

TEST_CASE("presentation invariance under syzygy and rotation") {
    for (int e = 1; e <= 4; ++e)
        for (int ell = 2; ell <= 12; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            PresentationOptions opt{false, 2, 400};
            for (int top = 1; top <= e; ++top)
                for (int len = 1; len < ell; ++len) {
                    UniserialModule V = UniserialModule::make(spec, top, len);
                    DeformationPresentation a = udrPresentation(V, opt);
                    CHECK(a.samePresentation(udrPresentation(syzygy(V), opt)));
                    UniserialModule rot =
                        UniserialModule::make(spec, spec.vertex(top + 1), len);
                    CHECK(a.samePresentation(udrPresentation(rot, opt)));
                }
        }
}

TEST_CASE("number of generators equals the Ext^1 dimension") {
    for (int e = 1; e <= 3; ++e)
        for (int ell = 2; ell <= 9; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            PresentationOptions opt{false, 2, 400};
            for (int len = 1; len < ell; ++len) {
                UniserialModule V = UniserialModule::make(spec, 1, len);
                DeformationPresentation pres = udrPresentation(V, opt);
                CHECK(static_cast<int>(pres.generators.size()) == ext1Dim(V));
            }
        }
}

TEST_CASE("emitted exponents satisfy mV >= 2 with no linear generator terms") {
    // exhaustive scan; the Ext^1 count forces the generators into m^2
    for (int e = 1; e <= 6; ++e)
        for (int ell = 2; ell <= 30; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            for (int len = 1; len <= ell / 2; ++len) {
                int n = len / e;
                if (n < 1) continue;
                int mV = mVOf(spec.mu, spec.ellPrime, len % e);
                CHECK(mV >= 2);
                CHECK(mV >= 2 * n);
            }
        }
    DeformationPresentation pres =
        udrPresentation(UniserialModule::make(NakayamaSpec::make(1, 12), 1, 6),
                        PresentationOptions{false, 2, 400});
    for (const auto& g : pres.generators) CHECK(*g.minDegree() >= 2);
}

TEST_CASE("extension sequences across a small grid") {
    for (int e = 1; e <= 3; ++e)
        for (int ell = 2; ell <= 9; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            for (int lv = 1; lv <= ell / 2; ++lv) {
                int n = lv / e, i = lv % e;
                if (n < 1) continue;
                for (int s = 1; s <= n; ++s) {
                    ExtSequence seq = buildExtSequence(spec, n, i, s, 2);
                    Report rep = verifyExtSequence(seq, spec, n, i);
                    INFO("e=", e, " ell=", ell, " n=", n, " i=", i, " s=", s, ": ",
                         rep.firstFailure());
                    CHECK(rep.allPass());
                    CHECK((seq.eps * seq.eps).isZero());
                }
            }
        }
}

TEST_CASE("dual-number lifts") {
    for (int e = 1; e <= 3; ++e)
        for (int ell = 2; ell <= 9; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            for (int lv = 1; lv <= ell / 2; ++lv) {
                int n = lv / e, i = lv % e;
                if (n < 1) continue;
                for (int s = 1; s <= n; ++s) {
                    DualNumberLift lift = buildDualNumberLift(spec, n, i, s, 2);
                    Report rep = verifyDualNumberLift(lift);
                    INFO("e=", e, " ell=", ell, " n=", n, " i=", i, " s=", s, ": ",
                         rep.firstFailure());
                    CHECK(rep.allPass());
                }
                CHECK(verifyDualLiftsIndependent(spec, n, i, 2).allPass());
            }
        }
}

TEST_CASE("universal lift construction") {
    // e=1, n=2: the single arrow is Id^1 plus the (t2, t1) column
    UniversalLift l1 = buildUniversalLift(NakayamaSpec::make(1, 5), 2, 0);
    CHECK(l1.perturbedArrow == 1);
    CHECK(l1.arrowMat(1).at(0, 1).text() == "t2");
    CHECK(l1.arrowMat(1).at(1, 1).text() == "t1");
    CHECK(l1.arrowMat(1).at(1, 0).text() == "1");
    CHECK(l1.arrowMat(1).at(0, 0).isZero());

    // e=2, n=1, i=0, ell=5: alpha_2 perturbed, alpha_1 untouched
    UniversalLift l2 = buildUniversalLift(NakayamaSpec::make(2, 5), 1, 0);
    CHECK(l2.perturbedArrow == 2);
    CHECK(l2.arrowMat(2).at(0, 1).text() == "t1");
    CHECK(l2.arrowMat(1).at(1, 0).text() == "1");
    CHECK(l2.arrowMat(1).at(0, 1).isZero());
}

TEST_CASE("lift relations and minimality across the small grid") {
    for (int e = 1; e <= 3; ++e)
        for (int ell = 2; ell <= 9; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            for (int lv = 1; lv <= ell / 2; ++lv) {
                int n = lv / e, i = lv % e;
                if (n < 1) continue;
                UniversalLift lift = buildUniversalLift(spec, n, i);
                Report rel = verifyLiftRelations(lift);
                INFO("e=", e, " ell=", ell, " n=", n, " i=", i, ": ", rel.firstFailure());
                CHECK(rel.allPass());
                Report min = verifyMinimality(spec, n, i);
                INFO("minimality: ", min.firstFailure());
                CHECK(min.allPass());
                Report tan = verifyTangentSpecializations(lift, 2);
                CHECK(tan.allPass());
                Report tan3 = verifyTangentSpecializations(lift, 3);
                CHECK(tan3.allPass());
            }
        }
}

TEST_CASE("relations fail against the smaller ideal J_n(mV + 1)") {
    for (auto [e, ell, lv] :
         std::vector<std::array<int, 3>>{{1, 5, 2}, {2, 5, 2}, {1, 4, 2}, {3, 7, 3}}) {
        NakayamaSpec spec = NakayamaSpec::make(e, ell);
        int n = lv / e, i = lv % e;
        UniversalLift lift = buildUniversalLift(spec, n, i);
        Report rep = verifyLiftRelationsModulo(lift, lift.mV + 1);
        INFO("e=", e, " ell=", ell);
        CHECK_FALSE(rep.allPass());
    }
}

TEST_CASE("n = 1 relations reduce to t^mV = 0") {
    UniversalLift lift = buildUniversalLift(NakayamaSpec::make(2, 5), 1, 0);
    PolyMatrix E1 = liftPathProduct(lift, 1);
    PolyMatrix E2 = liftPathProduct(lift, 2);
    // every nonzero entry is a monomial multiple of t^2
    for (const PolyMatrix* E : {&E1, &E2})
        for (const auto& f : E->entries()) {
            if (f.isZero()) continue;
            for (const auto& [m, c] : f.terms()) CHECK(m.exp(1) >= 2);
        }
}

TEST_CASE("centralizer structure") {
    // n=1, i=0, e=2, ell=5: free of rank 1 over k[t]/(t^2)
    UniversalLift lift = buildUniversalLift(NakayamaSpec::make(2, 5), 1, 0);
    CentralizerDescription cd;
    Report rep = centralizerStructure(lift, 2, &cd);
    INFO(rep.firstFailure());
    CHECK(rep.allPass());
    CHECK(cd.thetaOne == 1);
    CHECK(cd.ringDimension == 2);
    CHECK(cd.centralizerDimension == 2);

    // the identity and the scalars t_j I are always in the centralizer:
    // both appear inside the verified pattern family (c = e_1 and c = t_j e_1),
    // and the structure report also pins the dimension count.
    for (auto [e, ell, lv] :
         std::vector<std::array<int, 3>>{{1, 4, 2}, {1, 6, 3}, {2, 6, 2}, {3, 8, 4}}) {
        NakayamaSpec spec = NakayamaSpec::make(e, ell);
        int n = lv / e, i = lv % e;
        UniversalLift l = buildUniversalLift(spec, n, i);
        CentralizerDescription d;
        Report r = centralizerStructure(l, 2, &d);
        INFO("e=", e, " ell=", ell, " n=", n, " i=", i, ": ", r.firstFailure());
        CHECK(r.allPass());
        CHECK(d.centralizerDimension == d.thetaOne * d.ringDimension);
        Report r3 = centralizerStructure(l, 3, &d);
        CHECK(r3.allPass());
    }
}

TEST_CASE("countHoms on presentations") {
    DeformationPresentation pres =
        udrPresentation(UniserialModule::make(NakayamaSpec::make(1, 3), 1, 1));
    CHECK(countHoms(pres, makeTestRing("dual", 2)) == 2);
    CHECK(countHoms(pres, makeTestRing("u3", 2)) == 4);
    // p^n over the dual numbers for emitted presentations
    for (int e = 1; e <= 3; ++e)
        for (int ell = 2; ell <= 9; ++ell) {
            NakayamaSpec spec = NakayamaSpec::make(e, ell);
            for (int len = 1; len < ell; ++len) {
                DeformationPresentation q = udrPresentation(
                    UniserialModule::make(spec, 1, len), PresentationOptions{false, 2, 400});
                for (std::uint32_t p : {2u, 3u}) {
                    long long expect = 1;
                    for (int j = 0; j < q.n; ++j) expect *= p;
                    CHECK(countHoms(q, makeTestRing("dual", p)) == expect);
                }
            }
        }
}

TEST_CASE("power lemma and J-ideal grids") {
    CHECK(verifyPowerLemmaGrid(4, 8).allPass());
    CHECK(verifyJIdealEquality(3, 6).allPass());
}

TEST_SUITE_END();
