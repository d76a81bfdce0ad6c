#include "udr/records.hpp"

#include <chrono>

namespace udr {

namespace {

double msSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

BrauerMV brauerMV(int e, int m, int dV) {
    if (e < 1 || m < 1) throw DomainError("Brauer tree needs e >= 1 edges and multiplicity m >= 1");
    if (dV < 0) throw DomainError("distance must be >= 0");
    const int ell = m * e + 1;
    const int ellV = dV + 1;
    if (ellV > ell / 2)
        throw DomainError("distance " + std::to_string(dV) +
                          " out of range for N(" + std::to_string(e) + "," +
                          std::to_string(ell) + ")");
    BrauerMV out;
    out.n = ellV / e;
    out.i = ellV % e;
    if (e == 1)
        out.mV = m + 1;
    else if (out.i <= 1)
        out.mV = m;
    else
        out.mV = m - 1;
    return out;
}

bool ResultRecord::allChecksPass() const {
    for (const auto& c : checks)
        if (!c.pass && !c.informational) return false;
    return true;
}

Json ResultRecord::toJson() const {
    Json j;
    j["input"] = input;
    Json p;
    p["n"] = pres.n;
    p["mV"] = pres.mV;
    p["generators"] = pres.generatorStrings();
    p["kDimension"] = pres.kDimension;
    j["presentation"] = p;
    Json prov;
    prov["mu"] = pres.prov.mu;
    prov["ellPrime"] = pres.prov.ellPrime;
    prov["ellV"] = pres.prov.ellV;
    prov["i"] = pres.prov.i;
    prov["dV"] = pres.prov.dV;
    prov["appliedOmega"] = pres.prov.appliedOmega;
    prov["rotation"] = pres.prov.rotation;
    j["provenance"] = prov;
    Json cks = Json::array();
    for (const auto& c : checks) {
        Json ck;
        ck["name"] = c.name;
        ck["pass"] = c.pass;
        ck["detail"] = c.detail;
        if (c.informational) ck["informational"] = true;
        cks.push_back(ck);
    }
    j["checks"] = cks;
    Json t;
    for (const auto& [name, ms] : timingsMs) t[name] = ms;
    j["timings"] = t;
    return j;
}

ResultRecord ResultRecord::fromJson(const Json& j) {
    ResultRecord r;
    r.input = j.at("input");
    const Json& p = j.at("presentation");
    r.pres.n = p.at("n").get<int>();
    r.pres.mV = p.at("mV").get<int>();
    r.pres.kDimension = p.at("kDimension").get<long>();
    const int n = r.pres.n;
    const int D = r.pres.mV + 2;
    for (const auto& g : p.at("generators"))
        r.pres.generators.push_back(
            Poly::parse(g.get<std::string>(), n, D, CoeffMode::ExactInt));
    const Json& prov = j.at("provenance");
    r.pres.prov.mu = prov.at("mu").get<int>();
    r.pres.prov.ellPrime = prov.at("ellPrime").get<int>();
    r.pres.prov.ellV = prov.at("ellV").get<int>();
    r.pres.prov.i = prov.at("i").get<int>();
    r.pres.prov.dV = prov.at("dV").get<int>();
    r.pres.prov.appliedOmega = prov.at("appliedOmega").get<bool>();
    r.pres.prov.rotation = prov.at("rotation").get<int>();
    if (r.input.contains("e")) r.pres.prov.e = r.input.at("e").get<int>();
    if (r.input.contains("ell")) r.pres.prov.ell = r.input.at("ell").get<int>();
    if (r.input.contains("top")) r.pres.prov.top = r.input.at("top").get<int>();
    if (r.input.contains("len")) r.pres.prov.len = r.input.at("len").get<int>();
    for (const auto& ck : j.at("checks")) {
        CheckItem c;
        c.name = ck.at("name").get<std::string>();
        c.pass = ck.at("pass").get<bool>();
        c.detail = ck.at("detail").get<std::string>();
        c.informational = ck.value("informational", false);
        r.checks.push_back(c);
    }
    for (const auto& [k, v] : j.at("timings").items())
        r.timingsMs.emplace_back(k, v.get<double>());
    return r;
}

std::string ResultRecord::toLine() const {
    std::string s;
    if (input.contains("top"))
        s += "top=" + std::to_string(input.at("top").get<int>()) +
             " len=" + std::to_string(input.at("len").get<int>()) + "  ";
    s += "R = " + pres.ringString() + "  (n=" + std::to_string(pres.n) +
         ", mV=" + std::to_string(pres.mV) + ", dim_k=" + std::to_string(pres.kDimension) +
         ")";
    if (input.contains("omegaPartner"))
        s += "  [Omega partner: top=" +
             std::to_string(input.at("omegaPartner").at("top").get<int>()) + " len=" +
             std::to_string(input.at("omegaPartner").at("len").get<int>()) + "]";
    for (const auto& c : checks)
        if (!c.pass && !c.informational) s += "  FAIL:" + c.name;
    return s;
}

ResultRecord ringRecord(const NakayamaSpec& spec, int top, int len,
                        const PresentationOptions& opt) {
    ResultRecord rec;
    rec.input["command"] = "ring";
    rec.input["e"] = spec.e;
    rec.input["ell"] = spec.ell;
    rec.input["top"] = top;
    rec.input["len"] = len;
    auto t0 = std::chrono::steady_clock::now();
    rec.pres = udrPresentation(UniserialModule::make(spec, top, len), opt);
    rec.timingsMs.emplace_back("presentation", msSince(t0));
    return rec;
}

ResultRecord brauerRecord(int edges, int multiplicity, int dV,
                          const PresentationOptions& opt) {
    ResultRecord rec;
    rec.input["command"] = "brauer";
    rec.input["edges"] = edges;
    rec.input["multiplicity"] = multiplicity;
    rec.input["distance"] = dV;
    auto t0 = std::chrono::steady_clock::now();
    BrauerMV bmv = brauerMV(edges, multiplicity, dV);
    BrauerTreeSpec tree{edges, multiplicity};
    NakayamaSpec spec = tree.nakayama();
    rec.input["e"] = spec.e;
    rec.input["ell"] = spec.ell;
    // A module at distance dV in the stable AR quiver: any with
    // ellV = dV + 1; take top 1 and len = ellV.
    UniserialModule V = UniserialModule::make(spec, 1, dV + 1);
    rec.pres = udrPresentation(V, opt);
    rec.timingsMs.emplace_back("presentation", msSince(t0));
    bool branchesAgree = (rec.pres.n == bmv.n) && (rec.pres.prov.i == bmv.i) &&
                         (rec.pres.trivial() || rec.pres.mV == bmv.mV);
    rec.checks.push_back({"brauer-exponent-matches-nakayama", branchesAgree,
                          "corollary mV = " + std::to_string(bmv.mV) + ", theorem mV = " +
                              std::to_string(rec.pres.mV),
                          false});
    return rec;
}

std::vector<ResultRecord> tableRecords(const NakayamaSpec& spec,
                                       const PresentationOptions& opt) {
    std::vector<ResultRecord> out;
    for (int top = 1; top <= spec.e; ++top)
        for (int len = 1; len <= spec.ell; ++len) {
            ResultRecord rec = ringRecord(spec, top, len, opt);
            rec.input["command"] = "table";
            UniserialModule V = UniserialModule::make(spec, top, len);
            if (!V.projective()) {
                UniserialModule om = syzygy(V);
                Json partner;
                partner["top"] = om.top;
                partner["len"] = om.len;
                rec.input["omegaPartner"] = partner;
                DeformationPresentation omPres =
                    udrPresentation(om, PresentationOptions{false, opt.dimFieldPrime,
                                                            opt.weightCap});
                rec.checks.push_back({"omega-partner-same-presentation",
                                      rec.pres.n == omPres.n && rec.pres.mV == omPres.mV &&
                                          rec.pres.generatorStrings() ==
                                              omPres.generatorStrings(),
                                      "", false});
            }
            out.push_back(std::move(rec));
        }
    return out;
}

} // namespace udr
