#ifndef UDR_RECORDS_HPP
#define UDR_RECORDS_HPP

#include <json.hpp>

#include "udr/deformation.hpp"

namespace udr {

using Json = nlohmann::ordered_json;

/// A Brauer tree with e edges and exceptional multiplicity m is stably
/// Morita equivalent to N(e, me+1); only (e, m) matter for the
/// presentation, not the tree shape.
struct BrauerTreeSpec {
    int edges = 1;
    int multiplicity = 1;

    NakayamaSpec nakayama() const { return NakayamaSpec::make(edges, multiplicity * edges + 1); }
};

struct BrauerMV {
    int n = 0;
    int i = 0;
    int mV = 0;
};

/// The three-branch exponent of the Brauer corollary:
/// m+1 for e=1; m for e>1, i in {0,1}; m-1 for e>1, 2 <= i <= e-1.
BrauerMV brauerMV(int e, int m, int dV);

/// One CLI result: input echo, presentation, verification flags, timings.
struct ResultRecord {
    Json input;
    DeformationPresentation pres;
    std::vector<CheckItem> checks;
    std::vector<std::pair<std::string, double>> timingsMs;

    bool allChecksPass() const;
    Json toJson() const;
    static ResultRecord fromJson(const Json& j);
    /// One human-readable line (table row).
    std::string toLine() const;
};

/// Presentation record for one module, with timing.
ResultRecord ringRecord(const NakayamaSpec& spec, int top, int len,
                        const PresentationOptions& opt = {});
/// Presentation record routed through the Brauer corollary; cross-checked
/// against the Nakayama pipeline on N(e, me+1).
ResultRecord brauerRecord(int edges, int multiplicity, int dV,
                          const PresentationOptions& opt = {});
/// One record per (top, len) pair, e*ell records; syzygy partners flagged.
std::vector<ResultRecord> tableRecords(const NakayamaSpec& spec,
                                       const PresentationOptions& opt = {});

} // namespace udr

#endif
