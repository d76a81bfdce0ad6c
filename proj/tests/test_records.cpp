#include <doctest.h>

#include "udr/records.hpp"

using namespace udr;

TEST_SUITE_BEGIN("records");

TEST_CASE("Brauer exponent branches") {
    // e=1, m=2, d=0: N(1,3), k[[t]]/(t^3)
    BrauerMV a = brauerMV(1, 2, 0);
    CHECK(a.n == 1);
    CHECK(a.mV == 3);
    // e=3, m=1, d=0: ellV = 1 < e, so n = 0 and R = k
    BrauerMV b = brauerMV(3, 1, 0);
    CHECK(b.n == 0);
    CHECK(b.i == 1);
    // e=2, m=2, d=1: ellV = 2 = 1*2 + 0, branch i in {0,1}
    BrauerMV c = brauerMV(2, 2, 1);
    CHECK(c.n == 1);
    CHECK(c.i == 0);
    CHECK(c.mV == 2);
    // out-of-range distance
    CHECK_THROWS_AS(brauerMV(2, 1, 2), DomainError);
}

TEST_CASE("Brauer corollary agrees with the Nakayama pipeline") {
    for (int e = 1; e <= 4; ++e)
        for (int m = 1; m <= 3; ++m) {
            int ell = m * e + 1;
            for (int d = 0; d + 1 <= ell / 2; ++d) {
                ResultRecord rec = brauerRecord(e, m, d);
                INFO("e=", e, " m=", m, " d=", d);
                CHECK(rec.allChecksPass());
                BrauerMV bmv = brauerMV(e, m, d);
                if (rec.pres.n >= 1) CHECK(rec.pres.mV == bmv.mV);
                CHECK(rec.pres.n == bmv.n);
            }
        }
}

TEST_CASE("tables carry e*ell records with syzygy partners") {
    NakayamaSpec s = NakayamaSpec::make(2, 4);
    auto records = tableRecords(s);
    CHECK(records.size() == 8);
    for (const auto& rec : records) CHECK(rec.allChecksPass());
    // the e=1, ell=3 table: (t^3), (t^3), k
    auto r13 = tableRecords(NakayamaSpec::make(1, 3));
    REQUIRE(r13.size() == 3);
    CHECK(r13[0].pres.ringString() == "k[[t1]]/(t1^3)");
    CHECK(r13[1].pres.ringString() == "k[[t1]]/(t1^3)");
    CHECK(r13[2].pres.ringString() == "k");
}

TEST_CASE("JSON round trip") {
    for (auto [e, ell, top, len] : std::vector<std::array<int, 4>>{
             {2, 5, 1, 2}, {1, 3, 1, 3}, {3, 13, 1, 6}, {3, 7, 2, 2}}) {
        ResultRecord rec = ringRecord(NakayamaSpec::make(e, ell), top, len);
        rec.checks.push_back({"sample-check", true, "detail text", false});
        Json j = rec.toJson();
        ResultRecord back = ResultRecord::fromJson(Json::parse(j.dump()));
        CHECK(back.toJson() == j);
        CHECK(back.pres.samePresentation(rec.pres));
        CHECK(back.pres.kDimension == rec.pres.kDimension);
    }
}

TEST_CASE("JSON schema fields") {
    ResultRecord rec = ringRecord(NakayamaSpec::make(2, 5), 1, 2);
    Json j = rec.toJson();
    CHECK(j.contains("input"));
    CHECK(j.contains("presentation"));
    CHECK(j["presentation"].contains("n"));
    CHECK(j["presentation"].contains("mV"));
    CHECK(j["presentation"].contains("generators"));
    CHECK(j["presentation"].contains("kDimension"));
    CHECK(j.contains("provenance"));
    for (const char* key : {"mu", "ellPrime", "ellV", "i", "dV", "appliedOmega", "rotation"})
        CHECK(j["provenance"].contains(key));
    CHECK(j.contains("checks"));
    CHECK(j.contains("timings"));
    CHECK(j["presentation"]["generators"][0] == "t1^2");
}

TEST_SUITE_END();
