#pragma once

#include <vector>

#include "nilclean/group.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

// An A-B-bimodule structure on a finite abelian group M, stored as full
// action tables. Immutable after construction.
struct Bimodule {
    Ring left_ring;    // A
    Ring right_ring;   // B
    FinAbGroup group;  // M

    std::vector<int> laction;  // |A| x |M|, (a, w) -> aw
    std::vector<int> raction;  // |M| x |B|, (w, b) -> wb

    int lmul(int a, int w) const { return laction[a * group.order() + w]; }
    int rmul(int w, int b) const { return raction[w * right_ring.order() + b]; }
};

// The additive group of a ring, as a standalone FinAbGroup.
FinAbGroup additive_group(const Ring& r);

// Exhaustively checks biadditivity, action associativity, compatibility
// (aw)b = a(wb) and unitality. Throws BimoduleAxiomViolation.
Bimodule validate_bimodule(const Ring& a, const Ring& b, const FinAbGroup& m,
                           const std::vector<int>& laction,
                           const std::vector<int>& raction);

// The ring r as an r-r-bimodule via its own multiplication.
Bimodule regular_bimodule(const Ring& r);

// M = additive group of C, with a acting as phi(a)·w and b as w·psi(b).
// phi and psi are index maps A -> C, B -> C; both are verified to be unital
// ring homomorphisms (throws NotARingHom naming "phi" or "psi").
Bimodule hom_induced_bimodule(const Ring& a, const Ring& b, const Ring& c,
                              const std::vector<int>& phi,
                              const std::vector<int>& psi);

inline constexpr long long kDefaultBimoduleBudget = 10'000'000;

// Every A-B-bimodule structure on M, exactly once, in a deterministic order.
// Left actions are found as unital ring homomorphisms A -> End(M,+) by
// backtracking over generator images with additive-closure propagation;
// right actions the same with reversed composition; the compatibility law
// filters the cross product. Throws BudgetExhausted past `budget` nodes.
std::vector<Bimodule> enumerate_bimodules(const Ring& a, const Ring& b,
                                          const FinAbGroup& m,
                                          long long budget = kDefaultBimoduleBudget);

// True iff the subgroup eM(1_B - f) + (1_A - e)Mf of (M,+) is nonzero.
// Throws NotIdempotent unless e, f are idempotent in their rings.
bool module_condition(const Bimodule& bm, int e, int f);

// Independent route: true iff some w in M has ew != wf.
bool module_condition_exists(const Bimodule& bm, int e, int f);

// The fixed set {z in M : ez = zf}; always a subgroup of (M,+).
std::vector<int> module_fixed_set(const Bimodule& bm, int e, int f);

}  // namespace nilclean
