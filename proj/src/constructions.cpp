#include "nilclean/constructions.hpp"

namespace nilclean {

Ring cyclic_ring(int n) {
    RawRing raw;
    raw.order = n;
    raw.add.resize(static_cast<std::size_t>(n) * n);
    raw.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            raw.add[a * n + b] = (a + b) % n;
            raw.mul[a * n + b] = (a * b) % n;
        }
    raw.one = n == 1 ? 0 : 1;
    return validate_ring(raw);
}

Ring direct_product(const Ring& r1, const Ring& r2) {
    const int n1 = r1.order(), n2 = r2.order(), n = n1 * n2;
    RawRing raw;
    raw.order = n;
    raw.add.resize(static_cast<std::size_t>(n) * n);
    raw.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            raw.add[a * n + b] = r1.add(a / n2, b / n2) * n2 + r2.add(a % n2, b % n2);
            raw.mul[a * n + b] = r1.mul(a / n2, b / n2) * n2 + r2.mul(a % n2, b % n2);
        }
    raw.one = r1.one() * n2 + r2.one();
    return validate_ring(raw);
}

namespace {

bool same_ring(const Ring& x, const Ring& y) {
    return x.order() == y.order() && x.one() == y.one() &&
           x.add_table() == y.add_table() && x.mul_table() == y.mul_table();
}

}  // namespace

TriangularSpec triangular(const Ring& a, const Bimodule& bm, const Ring& b) {
    if (!same_ring(bm.left_ring, a)) throw MismatchedBimodule("left ring differs");
    if (!same_ring(bm.right_ring, b)) throw MismatchedBimodule("right ring differs");

    const int na = a.order(), nm = bm.group.order(), nb = b.order();
    const int n = na * nm * nb;
    auto enc = [&](int x, int w, int y) { return (x * nm + w) * nb + y; };

    RawRing raw;
    raw.order = n;
    raw.add.resize(static_cast<std::size_t>(n) * n);
    raw.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int w1 = 0; w1 < nm; ++w1)
            for (int b1 = 0; b1 < nb; ++b1) {
                const int i = enc(a1, w1, b1);
                for (int a2 = 0; a2 < na; ++a2)
                    for (int w2 = 0; w2 < nm; ++w2)
                        for (int b2 = 0; b2 < nb; ++b2) {
                            const int j = enc(a2, w2, b2);
                            raw.add[i * n + j] =
                                enc(a.add(a1, a2), bm.group.add(w1, w2), b.add(b1, b2));
                            raw.mul[i * n + j] =
                                enc(a.mul(a1, a2),
                                    bm.group.add(bm.lmul(a1, w2), bm.rmul(w1, b2)),
                                    b.mul(b1, b2));
                        }
            }
    raw.one = enc(a.one(), 0, b.one());

    TriangularSpec spec;
    spec.a_ring = a;
    spec.bimodule = bm;
    spec.b_ring = b;
    spec.flattened = validate_ring(raw);
    return spec;
}

TriangularSpec ut2(const Ring& r) {
    return triangular(r, regular_bimodule(r), r);
}

}  // namespace nilclean
