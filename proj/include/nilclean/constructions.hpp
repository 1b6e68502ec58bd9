#pragma once

#include "nilclean/bimodule.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

// The formal triangular matrix ring [[A, M], [0, B]], flattened to a plain
// table ring of order |A|*|M|*|B| with the index codec
//   (a, w, b) <-> (a*|M| + w)*|B| + b.
struct TriangularSpec {
    Ring a_ring;
    Bimodule bimodule;
    Ring b_ring;
    Ring flattened;

    int encode(int a, int w, int b) const {
        return (a * bimodule.group.order() + w) * b_ring.order() + b;
    }
    struct Triple {
        int a, w, b;
    };
    Triple decode(int flat) const {
        const int nb = b_ring.order(), nm = bimodule.group.order();
        return Triple{flat / (nm * nb), (flat / nb) % nm, flat % nb};
    }
};

Ring cyclic_ring(int n);

Ring direct_product(const Ring& r1, const Ring& r2);

// Builds the flattened ring with multiplication
//   (a, w, b)(a', w', b') = (aa', aw' + wb', bb')
// and runs validate_ring on it as a self-check.
// Throws MismatchedBimodule when bm's corner rings are not a and b.
TriangularSpec triangular(const Ring& a, const Bimodule& bm, const Ring& b);

// triangular(r, regular_bimodule(r), r): upper triangular 2x2 matrices over r.
TriangularSpec ut2(const Ring& r);

}  // namespace nilclean
