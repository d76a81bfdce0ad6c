#ifndef UDR_VERIFY_HPP
#define UDR_VERIFY_HPP

#include "udr/oracle.hpp"
#include "udr/records.hpp"

namespace udr {

/// Closed-form powers and recurrence identities of N_n / Ntilde_n for all
/// 1 <= n <= nMax, 1 <= nu <= nuMax (exact integer arithmetic).
Report verifyPowerLemmaGrid(int nMax, int nuMax);

/// J_n(m) generated by h_{1,m}..h_{n,m} equals the ideal of all n^2 entries
/// of (N_n)^m, for n <= nMax, m <= mMax.
Report verifyJIdealEquality(int nMax, int mMax);

struct GridOptions {
    int eMax = 3;
    int ellMax = 9;
    std::uint32_t p = 2;          // field for the linear-algebra checks
    bool rationalMinimality = true;  // run membership/minimality over Q
    bool spotCheckPrimes = true;     // rerun over F_2 and F_3
    bool centralizers = true;
    bool extSequences = true;
    bool perturb = false;         // fault injection: one arrow entry flipped
};

/// The full per-case verification grid: representations, syzygy and Ext
/// combinatorics, universal-lift relations, minimality, tangent
/// specializations, centralizer structure, presentation invariances, and
/// the Artinian witness for every emitted ideal.
Report verifyCaseGrid(const GridOptions& opt);

} // namespace udr

#endif
