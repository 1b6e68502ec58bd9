#include <doctest.h>

#include "nilclean/constructions.hpp"
#include "nilclean/ring.hpp"
#include "oracles.hpp"

using namespace nilclean;

TEST_CASE("validate_ring accepts Z2 from hand-written tables") {
    Ring r = validate_ring(oracles::raw_z2());
    CHECK(r.order() == 2);
    CHECK(r.one() == 1);
}

TEST_CASE("validate_ring accepts the zero ring") {
    RawRing raw{1, {0}, {0}, 0};
    Ring r = validate_ring(raw);
    CHECK(r.order() == 1);
    CHECK(nil_clean_index(r).nin == 1);  // eta(0) = {0}
}

TEST_CASE("corrupted Z4 table fails validation") {
    RawRing raw = oracles::raw_z4();
    raw.mul[2 * 4 + 2] = 1;  // 2*2 := 1
    CHECK_THROWS_AS(validate_ring(raw), AxiomViolation);
}

TEST_CASE("validator rejects add tables whose row 0 is not the identity") {
    RawRing raw = oracles::raw_z2();
    std::swap(raw.add[0], raw.add[1]);
    CHECK_THROWS_AS(validate_ring(raw), AxiomViolation);
}

TEST_CASE("element arithmetic facade") {
    Ring z4 = cyclic_ring(4);
    CHECK(z4.sub(1, 3) == 2);
    CHECK(z4.pow(2, 2) == 0);
    CHECK(z4.pow(3, 0) == z4.one());
    Ring z2 = cyclic_ring(2);
    CHECK(z2.neg(1) == 1);
}

TEST_CASE("idempotents") {
    CHECK(cyclic_ring(4).idempotents() == std::vector<int>{0, 1});

    Ring flat = ut2(cyclic_ring(2)).flattened;
    auto idem = flat.idempotents();
    CHECK(idem == oracles::idempotents(flat));
    CHECK(idem.size() == 6);

    Ring z2xz2 = direct_product(cyclic_ring(2), cyclic_ring(2));
    CHECK(z2xz2.idempotents().size() == 4);
}

TEST_CASE("nilpotents") {
    CHECK(cyclic_ring(4).nilpotents() == std::vector<int>{0, 2});
    CHECK(cyclic_ring(3).nilpotents() == std::vector<int>{0});

    TriangularSpec u = ut2(cyclic_ring(2));
    auto nilp = u.flattened.nilpotents();
    CHECK(nilp == oracles::nilpotents(u.flattened));
    CHECK(nilp == std::vector<int>{u.encode(0, 0, 0), u.encode(0, 1, 0)});
}

TEST_CASE("units") {
    CHECK(cyclic_ring(4).units() == std::vector<int>{1, 3});
    CHECK(cyclic_ring(2).units() == std::vector<int>{1});

    TriangularSpec u = ut2(cyclic_ring(2));
    auto us = u.flattened.units();
    CHECK(us == oracles::units(u.flattened));
    CHECK(us == std::vector<int>{u.encode(1, 0, 1), u.encode(1, 1, 1)});
}

TEST_CASE("eta") {
    Ring z4 = cyclic_ring(4);
    CHECK(eta(z4, 3).members == oracles::eta(z4, 3));
    CHECK(eta(z4, 3).members == std::vector<int>{1});

    Ring z3 = cyclic_ring(3);
    CHECK(eta(z3, 2).members == oracles::eta(z3, 2));
    CHECK(eta(z3, 2).members.empty());

    for (const Ring& r : {z4, z3, ut2(cyclic_ring(2)).flattened}) {
        auto e0 = eta(r, 0).members;
        CHECK(std::find(e0.begin(), e0.end(), 0) != e0.end());
    }
}

TEST_CASE("nil_clean_index") {
    CHECK(nil_clean_index(cyclic_ring(2)).nin == 1);

    Ring u = ut2(cyclic_ring(2)).flattened;
    auto rep = nil_clean_index(u);
    CHECK(rep.nin == 2);
    CHECK(rep.nin == oracles::nin(u));

    auto z4 = nil_clean_index(cyclic_ring(4));
    CHECK(z4.nin == oracles::nin(cyclic_ring(4)));
    CHECK(z4.nin == 1);

    // Histogram is complete and consistent with nin.
    int total = 0;
    for (auto& [k, c] : rep.histogram) total += c;
    CHECK(total == u.order());
    CHECK(rep.histogram.rbegin()->first == rep.nin);
}

TEST_CASE("nil_clean_index witness is the smallest maximizer") {
    Ring u = ut2(cyclic_ring(2)).flattened;
    auto rep = nil_clean_index(u);
    for (int a = 0; a < rep.witness; ++a)
        CHECK(static_cast<int>(oracles::eta(u, a).size()) < rep.nin);
    CHECK(static_cast<int>(oracles::eta(u, rep.witness).size()) == rep.nin);
}

TEST_CASE("is_nil_clean_ring") {
    CHECK(is_nil_clean_ring(cyclic_ring(2)));
    CHECK_FALSE(is_nil_clean_ring(cyclic_ring(3)));
    // Whatever the exhaustive scan says for Z4 is the answer.
    bool oracle = true;
    for (int a = 0; a < 4; ++a)
        if (oracles::eta(cyclic_ring(4), a).empty()) oracle = false;
    CHECK(is_nil_clean_ring(cyclic_ring(4)) == oracle);
    CHECK(oracle);  // 0->{0}, 1->{1}, 2->{0}, 3->{1}
}
