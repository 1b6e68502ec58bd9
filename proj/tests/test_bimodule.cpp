#include <doctest.h>

#include <algorithm>

#include "nilclean/bimodule.hpp"
#include "nilclean/constructions.hpp"
#include "oracles.hpp"

using namespace nilclean;

namespace {

FinAbGroup cyclic_group(int n) { return group_of_type(GroupType{{n}}); }

// Bottom-corner projection UT2(Z2) -> Z2, (s, w, t) -> t.
std::vector<int> bottom_projection() {
    std::vector<int> psi(8);
    for (int i = 0; i < 8; ++i) psi[i] = i % 2;
    return psi;
}

}  // namespace

TEST_CASE("validate_bimodule accepts the regular Z2 structure") {
    Ring z2 = cyclic_ring(2);
    auto bm = validate_bimodule(z2, z2, cyclic_group(2), z2.mul_table(),
                                z2.mul_table());
    CHECK(bm.lmul(1, 1) == 1);
    CHECK(bm.rmul(1, 0) == 0);
}

TEST_CASE("identity/zero action of Z2 on the Klein group is valid") {
    Ring z2 = cyclic_ring(2);
    FinAbGroup m = group_of_type(GroupType{{2, 2}});
    std::vector<int> lact = {0, 0, 0, 0, 0, 1, 2, 3};  // 0w = 0, 1w = w
    std::vector<int> ract = {0, 0, 0, 1, 0, 2, 0, 3};  // w0 = 0, w1 = w
    CHECK_NOTHROW(validate_bimodule(z2, z2, m, lact, ract));
}

TEST_CASE("no Z2-Z2 bimodule structure exists on C4") {
    Ring z2 = cyclic_ring(2);
    FinAbGroup c4 = cyclic_group(4);
    // Oracle: scan every pair of unital tables; all must be rejected.
    int candidates = 0;
    for (int l = 0; l < 4 * 4 * 4 * 4; ++l)
        for (int r = 0; r < 4 * 4 * 4 * 4; ++r) {
            std::vector<int> lact = {l / 64 % 4, l / 16 % 4, l / 4 % 4, l % 4,
                                     0, 1, 2, 3};
            std::vector<int> ract(8);
            for (int w = 0; w < 4; ++w) {
                ract[w * 2 + 0] = (r >> (2 * w)) & 3;
                ract[w * 2 + 1] = w;  // unital right action
            }
            ++candidates;
            CHECK_THROWS_AS(validate_bimodule(z2, z2, c4, lact, ract),
                            BimoduleAxiomViolation);
        }
    CHECK(candidates == 256 * 256);
    CHECK(enumerate_bimodules(z2, z2, c4).empty());
}

TEST_CASE("regular_bimodule") {
    for (int n : {2, 3, 4}) {
        Ring r = cyclic_ring(n);
        auto bm = regular_bimodule(r);
        CHECK(bm.group.order() == n);
        for (int a = 0; a < n; ++a)
            for (int w = 0; w < n; ++w) CHECK(bm.lmul(a, w) == r.mul(a, w));
    }
}

TEST_CASE("hom_induced_bimodule via corner projection") {
    Ring z2 = cyclic_ring(2);
    Ring u = ut2(cyclic_ring(2)).flattened;
    std::vector<int> id = {0, 1};
    const auto psi = bottom_projection();

    // Oracle: exhaustively confirm psi is a unital ring hom over all 8x8 pairs.
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            CHECK(psi[u.add(x, y)] == z2.add(psi[x], psi[y]));
            CHECK(psi[u.mul(x, y)] == z2.mul(psi[x], psi[y]));
        }
    CHECK(psi[u.one()] == z2.one());

    auto bm = hom_induced_bimodule(z2, u, z2, id, psi);
    CHECK(bm.group.order() == 2);
    CHECK(bm.lmul(1, 1) == 1);

    // The middle-entry map is not a hom.
    std::vector<int> mid(8);
    for (int i = 0; i < 8; ++i) mid[i] = (i / 2) % 2;
    CHECK_THROWS_AS(hom_induced_bimodule(z2, u, z2, id, mid), NotARingHom);

    // Identity on both sides gives the regular structure.
    auto reg = hom_induced_bimodule(z2, z2, z2, id, id);
    CHECK(reg.laction == regular_bimodule(z2).laction);
    CHECK(reg.raction == regular_bimodule(z2).raction);
}

TEST_CASE("enumerate_bimodules counts") {
    Ring z2 = cyclic_ring(2);
    CHECK(enumerate_bimodules(z2, z2, cyclic_group(2)).size() == 1);
    CHECK(enumerate_bimodules(z2, z2, group_of_type(GroupType{{2, 2}})).size() == 1);

    Ring u = ut2(cyclic_ring(2)).flattened;
    // Oracle: unital ring homs UT2(Z2) -> Z2 = End(C2), by scanning all
    // 2^8 maps.
    int homs = 0;
    for (int mask = 0; mask < 256; ++mask) {
        auto h = [&](int x) { return (mask >> x) & 1; };
        bool ok = h(u.one()) == 1;
        for (int x = 0; x < 8 && ok; ++x)
            for (int y = 0; y < 8; ++y)
                if (h(u.add(x, y)) != (h(x) ^ h(y)) ||
                    h(u.mul(x, y)) != (h(x) & h(y))) {
                    ok = false;
                    break;
                }
        if (ok) ++homs;
    }
    CHECK(homs == 2);
    CHECK(enumerate_bimodules(u, z2, cyclic_group(2)).size() == 2);
}

TEST_CASE("enumeration output re-validates and respects the action laws") {
    Ring z2 = cyclic_ring(2);
    Ring z4 = cyclic_ring(4);
    for (const auto& bims :
         {enumerate_bimodules(z2, z4, cyclic_group(2)),
          enumerate_bimodules(z4, z4, group_of_type(GroupType{{2, 2}})),
          enumerate_bimodules(ut2(z2).flattened, z2, cyclic_group(2))}) {
        for (const auto& bm : bims) {
            CHECK_NOTHROW(validate_bimodule(bm.left_ring, bm.right_ring, bm.group,
                                            bm.laction, bm.raction));
            for (int w = 0; w < bm.group.order(); ++w) {
                CHECK(bm.lmul(0, w) == 0);
                CHECK(bm.rmul(w, 0) == 0);
            }
        }
    }
}

TEST_CASE("enumeration of (Zn, Zn, Cn) contains the regular bimodule") {
    for (int n : {2, 3, 4}) {
        Ring r = cyclic_ring(n);
        auto bims = enumerate_bimodules(r, r, cyclic_group(n));
        auto reg = regular_bimodule(r);
        bool found = false;
        for (const auto& bm : bims)
            if (bm.laction == reg.laction && bm.raction == reg.raction) found = true;
        CHECK(found);
    }
}

TEST_CASE("no bimodule with a zero-ring corner and |M| > 1") {
    Ring z1 = cyclic_ring(1);
    Ring z2 = cyclic_ring(2);
    CHECK(enumerate_bimodules(z1, z2, cyclic_group(2)).empty());
    CHECK(enumerate_bimodules(z2, z1, cyclic_group(2)).empty());
    CHECK(enumerate_bimodules(z1, z1, cyclic_group(1)).size() == 1);
}

TEST_CASE("budget exhaustion is an error, not a truncation") {
    Ring z2 = cyclic_ring(2);
    CHECK_THROWS_AS(enumerate_bimodules(z2, z2, cyclic_group(2), 0),
                    BudgetExhausted);
}

TEST_CASE("module_condition on the Klein bimodule over Z2") {
    Ring z2 = cyclic_ring(2);
    auto bims = enumerate_bimodules(z2, z2, group_of_type(GroupType{{2, 2}}));
    REQUIRE(bims.size() == 1);
    const auto& bm = bims[0];
    CHECK_FALSE(module_condition(bm, 1, 1));
    CHECK(module_condition(bm, 1, 0));
    CHECK_THROWS_AS(module_condition(regular_bimodule(cyclic_ring(4)), 2, 1),
                    NotIdempotent);
}

TEST_CASE("module_condition: dual-path agreement, duality, fixed subgroup") {
    Ring z2 = cyclic_ring(2);
    Ring u = ut2(z2).flattened;
    std::vector<Bimodule> corpus;
    for (auto& bm : enumerate_bimodules(z2, z2, group_of_type(GroupType{{2, 2}})))
        corpus.push_back(bm);
    for (auto& bm : enumerate_bimodules(u, z2, cyclic_group(2)))
        corpus.push_back(bm);
    for (auto& bm : enumerate_bimodules(z2, u, cyclic_group(2)))
        corpus.push_back(bm);
    corpus.push_back(regular_bimodule(cyclic_ring(4)));

    for (const auto& bm : corpus) {
        const Ring& a = bm.left_ring;
        const Ring& b = bm.right_ring;
        for (int e : a.idempotents())
            for (int f : b.idempotents()) {
                const bool subgroup_route = module_condition(bm, e, f);
                CHECK(subgroup_route == module_condition_exists(bm, e, f));
                // Symmetric under (1-e, 1-f).
                CHECK(subgroup_route ==
                      module_condition(bm, a.sub(a.one(), e), b.sub(b.one(), f)));
                // Fixed set is a subgroup, proper iff the condition holds.
                auto fixed = module_fixed_set(bm, e, f);
                bool proper = is_proper_subgroup(bm.group, fixed);
                CHECK(proper == subgroup_route);
            }
    }
}
