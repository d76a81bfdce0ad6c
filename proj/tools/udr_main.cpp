// Command-line front end: computes universal deformation ring presentations
// for uniserial modules over self-injective split basic Nakayama algebras,
// batch tables, the Brauer-tree corollary, the symbolic verification grids,
// and the brute-force finite-field oracle.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "udr/oracle.hpp"
#include "udr/records.hpp"
#include "udr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

void printReport(const udr::Report& rep, bool json) {
    if (json) {
        udr::Json j = udr::Json::array();
        for (const auto& item : rep.items) {
            udr::Json c;
            c["name"] = item.name;
            c["pass"] = item.pass;
            c["detail"] = item.detail;
            if (item.informational) c["informational"] = true;
            j.push_back(c);
        }
        udr::Json top;
        top["checks"] = j;
        top["pass"] = rep.allPass();
        std::cout << top.dump(2) << "\n";
    } else {
        for (const auto& item : rep.items) {
            std::cout << (item.pass ? "[ ok ] " : (item.informational ? "[info] " : "[FAIL] "))
                      << item.name;
            if (!item.detail.empty()) std::cout << "  (" << item.detail << ")";
            std::cout << "\n";
        }
        std::cout << (rep.allPass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
}

int emitRecord(const udr::ResultRecord& rec, bool json) {
    if (json)
        std::cout << rec.toJson().dump(2) << "\n";
    else
        std::cout << rec.toLine() << "\n";
    return rec.allChecksPass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal deformation rings of Nakayama algebra modules"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // ring ---------------------------------------------------------------
    auto* ring = app.add_subcommand("ring", "presentation for one module");
    int rE = 0, rEll = 0, rTop = 1, rLen = 0;
    int bEdges = 0, bMult = 0, bDist = -1;
    bool rCheck = false;
    std::uint32_t rP = 2;
    ring->add_option("--e", rE, "number of vertices");
    ring->add_option("--ell", rEll, "Loewy length (>= 2)");
    ring->add_option("--top", rTop, "top vertex (1-based)");
    ring->add_option("--len", rLen, "module length (1..ell)");
    ring->add_option("--brauer-edges", bEdges, "Brauer tree edge count");
    ring->add_option("--multiplicity", bMult, "exceptional multiplicity");
    ring->add_option("--distance", bDist, "distance to the boundary of the stable AR quiver");
    ring->add_flag("--check", rCheck, "verify lift relations and minimality for this module");
    ring->add_option("--p", rP, "characteristic for verification linear algebra");

    // brauer ---------------------------------------------------------------
    auto* brauer = app.add_subcommand("brauer", "Brauer tree front end");
    int beEdges = 1, beMult = 1, beDist = 0;
    brauer->add_option("--edges", beEdges, "edge count")->required();
    brauer->add_option("--multiplicity", beMult, "exceptional multiplicity")->required();
    brauer->add_option("--distance", beDist, "distance to the boundary")->required();

    // table ---------------------------------------------------------------
    auto* table = app.add_subcommand("table", "all e*ell indecomposables");
    int tE = 1, tEll = 2;
    table->add_option("--e", tE, "number of vertices")->required();
    table->add_option("--ell", tEll, "Loewy length")->required();

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "symbolic verification grids");
    std::string grid = "small";
    bool powerLemma = false, perturb = false;
    int nMax = 6, nuMax = 10;
    std::uint32_t vP = 2;
    verify->add_option("--grid", grid, "small (e<=3, ell<=9) or full (e<=4, ell<=12)");
    verify->add_flag("--power-lemma", powerLemma, "matrix power identities only");
    verify->add_option("--n-max", nMax, "power lemma: max n");
    verify->add_option("--nu-max", nuMax, "power lemma: max exponent");
    verify->add_flag("--perturb", perturb, "inject one fault (negative control; must fail)");
    verify->add_option("--p", vP, "characteristic for linear-algebra checks");

    // oracle ---------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force deformation checks over F_p");
    int oE = 1, oEll = 2, oTop = 1, oLen = 1;
    std::uint32_t oP = 2;
    std::string oRing = "dual-numbers";
    bool oTangent = false, oCl = false;
    long long maxCand = 1LL << 24, maxGroup = 1LL << 20;
    oracle->add_option("--e", oE, "number of vertices")->required();
    oracle->add_option("--ell", oEll, "Loewy length")->required();
    oracle->add_option("--top", oTop, "top vertex");
    oracle->add_option("--len", oLen, "module length")->required();
    oracle->add_option("--ring", oRing, "test ring: dual-numbers, u3, xy2, Fp");
    oracle->add_option("--p", oP, "characteristic");
    oracle->add_flag("--tangent", oTangent, "tangent dimension over F_p[eps]");
    oracle->add_flag("--centralizer-lifting", oCl, "centralizer lifting over the small extensions");
    oracle->add_option("--max-candidates", maxCand, "enumeration cap");
    oracle->add_option("--max-group", maxGroup, "conjugation group cap");

    for (auto* sub : {ring, brauer, table, verify, oracle})
        sub->add_flag("--json", json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ring) {
            udr::ResultRecord rec;
            if (bEdges > 0) {
                rec = udr::brauerRecord(bEdges, bMult, bDist);
            } else {
                if (rE < 1 || rEll < 2 || rLen < 1) {
                    std::cerr << "ring needs --e, --ell, --len (or the --brauer-* flags)\n";
                    return kExitUsage;
                }
                udr::NakayamaSpec spec = udr::NakayamaSpec::make(rE, rEll);
                rec = udr::ringRecord(spec, rTop, rLen);
                if (rCheck) {
                    udr::UniserialModule V = udr::UniserialModule::make(spec, rTop, rLen);
                    udr::Report vr = udr::verifyRep(udr::buildRhoTop(V, rP));
                    rec.checks.insert(rec.checks.end(), vr.items.begin(), vr.items.end());
                    if (!V.projective()) {
                        auto norm = udr::normalizeModule(V);
                        if (norm.module.n() >= 1) {
                            udr::UniversalLift lift = udr::buildUniversalLift(
                                spec, norm.module.n(), norm.module.i());
                            udr::Report lr = udr::verifyLiftRelations(lift);
                            udr::Report mr =
                                udr::verifyMinimality(spec, norm.module.n(), norm.module.i());
                            rec.checks.insert(rec.checks.end(), lr.items.begin(), lr.items.end());
                            rec.checks.insert(rec.checks.end(), mr.items.begin(), mr.items.end());
                        }
                    }
                }
            }
            return emitRecord(rec, json);
        }
        if (*brauer) {
            return emitRecord(udr::brauerRecord(beEdges, beMult, beDist), json);
        }
        if (*table) {
            udr::NakayamaSpec spec = udr::NakayamaSpec::make(tE, tEll);
            auto records = udr::tableRecords(spec);
            int exit = kExitOk;
            if (json) {
                udr::Json arr = udr::Json::array();
                for (const auto& rec : records) arr.push_back(rec.toJson());
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << "N(" << tE << "," << tEll << "): " << records.size()
                          << " indecomposable modules\n";
                for (const auto& rec : records) std::cout << rec.toLine() << "\n";
            }
            for (const auto& rec : records)
                if (!rec.allChecksPass()) exit = kExitVerifyFail;
            return exit;
        }
        if (*verify) {
            udr::Report rep;
            if (powerLemma) {
                rep.merge(udr::verifyPowerLemmaGrid(nMax, nuMax));
            } else {
                rep.merge(udr::verifyPowerLemmaGrid(std::min(nMax, 4), std::min(nuMax, 8)));
                rep.merge(udr::verifyJIdealEquality(3, 6));
                udr::GridOptions opt;
                opt.p = vP;
                opt.perturb = perturb;
                if (grid == "small") {
                    opt.eMax = 3;
                    opt.ellMax = 9;
                } else if (grid == "full") {
                    opt.eMax = 4;
                    opt.ellMax = 12;
                } else {
                    std::cerr << "unknown grid '" << grid << "'\n";
                    return kExitUsage;
                }
                rep.merge(udr::verifyCaseGrid(opt));
            }
            printReport(rep, json);
            return rep.allPass() ? kExitOk : kExitVerifyFail;
        }
        if (*oracle) {
            udr::NakayamaSpec spec = udr::NakayamaSpec::make(oE, oEll);
            udr::UniserialModule V = udr::UniserialModule::make(spec, oTop, oLen);
            udr::OracleCaps caps{maxCand, maxGroup};
            udr::Report rep;
            if (oTangent) {
                rep.merge(udr::tangentDimensionReport(V, oP, caps));
            } else if (oCl) {
                for (const auto& ext : udr::smallExtensionCatalog(oP))
                    rep.merge(udr::checkCentralizerLifting(V, ext, caps));
            } else {
                udr::ArtinTestRing R = udr::makeTestRing(oRing, oP);
                udr::DeformationPresentation pres = udr::udrPresentation(V);
                rep.merge(udr::checkRepresentability(V, pres, R, caps));
            }
            printReport(rep, json);
            return rep.allPass() ? kExitOk : kExitVerifyFail;
        }
    } catch (const udr::ResourceCapError& err) {
        std::cerr << "resource cap exceeded: " << err.what() << "\n";
        return kExitResourceCap;
    } catch (const udr::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
