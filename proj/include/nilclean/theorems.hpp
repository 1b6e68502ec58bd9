#pragma once

#include <array>
#include <string>

#include "nilclean/constructions.hpp"
#include "nilclean/group.hpp"

namespace nilclean {

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

const char* verdict_name(Verdict v);

// Machine-readable verdict of one theorem check on one instance.
struct TheoremReport {
    std::string theorem_id;  // L25_1, L25_2, L25_3, L26, T41_SUFF, P42_SUFF,
                             // MAIN_IFF, ETA_STRUCT, BUDGET
    std::string instance;    // expression + canonical hash
    std::string claimed;
    std::string observed;
    Verdict verdict = Verdict::NotApplicable;
    std::string witness;     // counterexample data on fail
};

// Data every check needs; computed once per instance.
struct TriAnalysis {
    IndexReport flat;
    IndexReport a;
    IndexReport b;
    GroupType m_type;
};

TriAnalysis analyze(const TriangularSpec& spec);

// "<label> hash=<canonical hash of the flattened ring>".
std::string instance_desc(const TriangularSpec& spec, const std::string& label);

// Lower bounds on Nin of the triangular ring: (1) Nin >= |M|;
// (2) for M cyclic of prime-power order, Nin >= n + ceil(n/2)(|M|-1);
// (3) Nin >= nm + |M| - 1 or Nin >= 2nm. Part (2) is not-applicable when M
// is not a cyclic p-group.
std::array<TheoremReport, 3> check_lemma_bounds(const TriangularSpec& spec,
                                                const TriAnalysis& an,
                                                const std::string& instance = "");

// For M cyclic of order 2^r: Nin(R) = 2^r Nin(A) Nin(B), exact equality.
TheoremReport check_lemma_two_power(const TriangularSpec& spec,
                                    const TriAnalysis& an,
                                    const std::string& instance = "");

// Nin(A) = Nin(B) = 1 and |M| = 2 imply Nin(R) = 2.
TheoremReport check_index2_sufficiency(const TriangularSpec& spec,
                                       const TriAnalysis& an,
                                       const std::string& instance = "");

// Nin(A) = Nin(B) = 1 and |M| = 3 imply Nin(R) = 3.
TheoremReport check_index3_sufficiency(const TriangularSpec& spec,
                                       const TriAnalysis& an,
                                       const std::string& instance = "");

// The five cases of the Nin = 4 characterization, evaluated from computed
// data. Throws TrivialModule when |M| = 1.
struct MainRhs {
    bool case1 = false;   // M ~ C2 and Nin(A)Nin(B) = 2
    bool case2 = false;   // M ~ C4 and Nin(A) = Nin(B) = 1
    bool case3a = false;  // M ~ C2+C2 and Nin(A) = Nin(B) = 1
    bool case3b = false;  // M ~ C2+C2, Nin(A) = 1, Nin(B) = 2, module condition
    bool case3c = false;  // mirror of 3b
    bool rhs = false;
    std::string m_type;
    int nin_a = 0;
    int nin_b = 0;
    std::string evidence;
};

MainRhs main_theorem_rhs(const TriangularSpec& spec, const TriAnalysis& an);

// Nin(flattened) = 4 iff main_theorem_rhs holds.
TheoremReport verify_main_theorem(const TriangularSpec& spec,
                                  const TriAnalysis& an,
                                  const std::string& instance = "");

// The eta set of a triangular element, computed two ways: brute force in the
// flattened ring versus {(e, w, f) : e in eta(a), f in eta(b), ew + wf = w}.
TheoremReport triangular_eta_crosscheck(const TriangularSpec& spec, int flat,
                                        const std::string& instance = "");

// Formula route alone, for the crosscheck's second leg.
std::vector<int> formula_eta(const TriangularSpec& spec, int flat);

// Crosscheck over every element, aggregated into one report.
TheoremReport eta_struct_all(const TriangularSpec& spec,
                             const std::string& instance = "");

// Convenience overloads that compute the analysis internally.
std::array<TheoremReport, 3> check_lemma_bounds(const TriangularSpec& spec);
TheoremReport check_lemma_two_power(const TriangularSpec& spec);
TheoremReport check_index2_sufficiency(const TriangularSpec& spec);
TheoremReport check_index3_sufficiency(const TriangularSpec& spec);
MainRhs main_theorem_rhs(const TriangularSpec& spec);
TheoremReport verify_main_theorem(const TriangularSpec& spec);

}  // namespace nilclean
