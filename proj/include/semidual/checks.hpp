#pragma once

#include "semidual/homology.hpp"

namespace semidual::artin {

// yes-up-to(i_max) when the homothety is bijective and Ext^i(M,M) = 0 for
// 1 <= i <= i_max; otherwise no, with a witness.
struct SemidualVerdict {
    bool ok = false;
    int i_max = 0;
    int failed_ext = -1; // first nonvanishing Ext index when that is the reason
    std::string witness;
};
SemidualVerdict is_semidualizing(const FiniteModule& M, int i_max = 8);

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};
struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

// The standard consequences of C being semidualizing, with D the Matlis dual
// of the algebra and Cd = Hom(C, D): Ext vanishing against D, Cd again
// semidualizing, biduality and evaluation isomorphisms, Tor vanishing, and
// Cd iso R forcing C iso D.  Failures indicate bugs, not mathematics.
CheckReport dagger_checks(const FiniteModule& C, int i_max = 8, uint64_t seed = 17);

struct ConvolutionReport {
    std::vector<int> betti_D, betti_C, betti_Cd, convolution;
    bool pass = false;
};
ConvolutionReport betti_convolution_check(const FiniteModule& C, int L = 4);

struct BettiIneqReport {
    bool applicable = false;
    bool pass = false;
    int beta0 = 0, beta1 = 0;
    std::string note;
};
// beta_1(C) >= beta_0(C) for certified C not isomorphic to R.
BettiIneqReport beta_inequality_check(const FiniteModule& C, int i_max = 8,
                                      uint64_t seed = 17);

struct CorBettiReport {
    bool applicable = false;
    bool pass = false;
    int beta0_D = 0, beta1_D = 0;
    std::string note;
};
// beta_1(D) >= 2 beta_0(D) when some candidate is certified and lies outside
// the classes of R and D; otherwise not-applicable.
CorBettiReport cor_betti_check(AlgebraPtr A, const std::vector<FiniteModule>& candidates,
                               int i_max = 8, uint64_t seed = 17);

struct SearchClass {
    FiniteModule rep;
    std::string label; // "R", "D", or "other"
    int hits = 0;
};
struct SearchResult {
    std::vector<SearchClass> classes;
    int candidates_tested = 0;
    int length_filtered = 0;
};
// Deterministic seeds {R, D, cyclic quotients} plus random cokernels; filter
// by length, certify, bucket by isomorphism.
SearchResult classification_search(AlgebraPtr A, int trials, int b_max = 2,
                                   int i_max = 8, uint64_t seed = 17);

} // namespace semidual::artin
