#include <doctest.h>

#include <algorithm>

#include "nilclean/constructions.hpp"
#include "nilclean/dsl.hpp"
#include "oracles.hpp"

using namespace nilclean;

TEST_CASE("cyclic_ring") {
    CHECK(cyclic_ring(2).order() == 2);
    CHECK(cyclic_ring(4).mul(2, 2) == 0);
    CHECK(cyclic_ring(1).one() == 0);
}

TEST_CASE("direct_product") {
    Ring p = direct_product(cyclic_ring(2), cyclic_ring(2));
    CHECK(p.order() == 4);
    CHECK(p.idempotents().size() == 4);
    CHECK(nil_clean_index(p).nin == oracles::nin(p));
    CHECK(nil_clean_index(p).nin == 1);

    // Z1 x r has the same invariants as r.
    Ring r = cyclic_ring(4);
    Ring q = direct_product(cyclic_ring(1), r);
    CHECK(q.order() == r.order());
    CHECK(nil_clean_index(q).nin == nil_clean_index(r).nin);
    CHECK(q.idempotents().size() == r.idempotents().size());
    CHECK(q.nilpotents().size() == r.nilpotents().size());
}

TEST_CASE("triangular constructions validate") {
    CHECK(ut2(cyclic_ring(2)).flattened.order() == 8);
    CHECK(triangular(cyclic_ring(4), regular_bimodule(cyclic_ring(4)),
                     cyclic_ring(4))
              .flattened.order() == 64);
    CHECK(elaborate("Tri(Z2,nat(C2xC2),Z2)").ring.order() == 16);
}

TEST_CASE("codec") {
    TriangularSpec u = ut2(cyclic_ring(2));
    CHECK(u.encode(0, 0, 0) == 0);
    CHECK(u.encode(1, 0, 1) == u.flattened.one());
    for (int a = 0; a < 2; ++a)
        for (int w = 0; w < 2; ++w)
            for (int b = 0; b < 2; ++b) {
                auto t = u.decode(u.encode(a, w, b));
                CHECK(t.a == a);
                CHECK(t.w == w);
                CHECK(t.b == b);
            }
}

TEST_CASE("mismatched bimodule is rejected") {
    CHECK_THROWS_AS(triangular(cyclic_ring(2), regular_bimodule(cyclic_ring(4)),
                               cyclic_ring(2)),
                    MismatchedBimodule);
}

TEST_CASE("breaking a bimodule axiom breaks flattened-ring validation") {
    Bimodule bm = regular_bimodule(cyclic_ring(2));
    bm.laction[1 * 2 + 1] = 0;  // 1*w := 0 destroys unitality
    CHECK_THROWS_AS(triangular(cyclic_ring(2), bm, cyclic_ring(2)), AxiomViolation);

    Bimodule bm2 = regular_bimodule(cyclic_ring(4));
    bm2.laction[2 * 4 + 2] = 1;  // breaks additivity of the action
    CHECK_THROWS_AS(triangular(cyclic_ring(4), bm2, cyclic_ring(4)),
                    AxiomViolation);
}

TEST_CASE("idempotents of the flattened ring match the proof shape") {
    for (const TriangularSpec& spec :
         {ut2(cyclic_ring(2)), ut2(cyclic_ring(3)),
          triangular(cyclic_ring(4), regular_bimodule(cyclic_ring(4)),
                     cyclic_ring(4))}) {
        std::vector<int> expect;
        const Bimodule& bm = spec.bimodule;
        for (int e : spec.a_ring.idempotents())
            for (int f : spec.b_ring.idempotents())
                for (int w = 0; w < bm.group.order(); ++w)
                    if (bm.group.add(bm.lmul(e, w), bm.rmul(w, f)) == w)
                        expect.push_back(spec.encode(e, w, f));
        std::sort(expect.begin(), expect.end());
        CHECK(oracles::idempotents(spec.flattened) == expect);
    }
}

TEST_CASE("nilpotents of the flattened ring are the nilpotent-diagonal triples") {
    for (const TriangularSpec& spec : {ut2(cyclic_ring(2)), ut2(cyclic_ring(3))}) {
        std::vector<int> expect;
        for (int a : spec.a_ring.nilpotents())
            for (int b : spec.b_ring.nilpotents())
                for (int w = 0; w < spec.bimodule.group.order(); ++w)
                    expect.push_back(spec.encode(a, w, b));
        std::sort(expect.begin(), expect.end());
        CHECK(oracles::nilpotents(spec.flattened) == expect);
    }
}

TEST_CASE("unit count of the flattened ring factors") {
    for (const TriangularSpec& spec :
         {ut2(cyclic_ring(2)), ut2(cyclic_ring(3)), ut2(cyclic_ring(4))}) {
        CHECK(oracles::units(spec.flattened).size() ==
              oracles::units(spec.a_ring).size() * spec.bimodule.group.order() *
                  oracles::units(spec.b_ring).size());
    }
}
