#include "nilclean/bimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace nilclean {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
}

// Smallest additively independent spanning sequence, greedy by index.
// Also fills `span_order`: indices reachable from the generators chosen so far.
std::vector<int> greedy_generators(const FinAbGroup& g) {
    std::vector<char> in_span(g.order(), 0);
    in_span[0] = 1;
    int span_size = 1;
    std::vector<int> gens;
    for (int a = 1; a < g.order() && span_size < g.order(); ++a) {
        if (in_span[a]) continue;
        gens.push_back(a);
        // Close the span under addition with the new generator.
        bool changed = true;
        in_span[a] = 1;
        ++span_size;
        while (changed) {
            changed = false;
            for (int x = 0; x < g.order(); ++x) {
                if (!in_span[x]) continue;
                for (int y = 0; y < g.order(); ++y) {
                    if (!in_span[y]) continue;
                    int s = g.add(x, y);
                    if (!in_span[s]) {
                        in_span[s] = 1;
                        ++span_size;
                        changed = true;
                    }
                }
            }
        }
    }
    return gens;
}

// All additive endomorphisms of (M,+) as value tables, lexicographically
// sorted. Found by assigning generator images and extending additively.
std::vector<std::vector<int>> additive_endomorphisms(const FinAbGroup& m) {
    const int n = m.order();
    const auto gens = greedy_generators(m);
    std::vector<std::vector<int>> out;

    std::vector<int> t(n, -1);
    t[0] = 0;

    // Extends t over the additive span of its defined entries; returns false
    // on a conflict.
    auto close = [&](std::vector<int>& tab) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (tab[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (tab[y] < 0) continue;
                    int s = m.add(x, y);
                    int v = m.add(tab[x], tab[y]);
                    if (tab[s] < 0) {
                        tab[s] = v;
                        changed = true;
                    } else if (tab[s] != v) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t level, const std::vector<int>& tab) -> void {
        if (level == gens.size()) {
            out.push_back(tab);
            return;
        }
        for (int img = 0; img < n; ++img) {
            std::vector<int> next = tab;
            next[gens[level]] = img;
            if (close(next)) self(self, level + 1, next);
        }
    };
    rec(rec, 0, t);
    std::sort(out.begin(), out.end());
    return out;
}

struct EndoAlgebra {
    std::vector<std::vector<int>> endos;  // lex-sorted tables
    std::map<std::vector<int>, int> index;
    int zero = -1, identity = -1;
    const FinAbGroup* m = nullptr;

    explicit EndoAlgebra(const FinAbGroup& grp) : m(&grp) {
        endos = additive_endomorphisms(grp);
        for (std::size_t i = 0; i < endos.size(); ++i)
            index[endos[i]] = static_cast<int>(i);
        std::vector<int> z(grp.order(), 0), id(grp.order());
        std::iota(id.begin(), id.end(), 0);
        zero = index.at(z);
        identity = index.at(id);
    }

    int sum(int i, int j) const {
        std::vector<int> t(m->order());
        for (int w = 0; w < m->order(); ++w)
            t[w] = m->add(endos[i][w], endos[j][w]);
        return index.at(t);
    }

    int compose(int i, int j) const {  // i after j
        std::vector<int> t(m->order());
        for (int w = 0; w < m->order(); ++w) t[w] = endos[i][endos[j][w]];
        return index.at(t);
    }
};

// Unital ring homomorphisms R -> End(M,+) (or into the opposite algebra when
// `reversed`), as complete element-to-endo index maps, deterministic order.
std::vector<std::vector<int>> action_homs(const Ring& r, const EndoAlgebra& alg,
                                          bool reversed, long long budget,
                                          long long& nodes) {
    const int n = r.order();
    const auto gens = greedy_generators(additive_group(r));
    std::vector<std::vector<int>> out;

    auto close = [&](std::vector<int>& phi) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (phi[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (phi[y] < 0) continue;
                    int s = r.add(x, y);
                    int v = alg.sum(phi[x], phi[y]);
                    if (phi[s] < 0) {
                        phi[s] = v;
                        changed = true;
                    } else if (phi[s] != v) {
                        return false;
                    }
                }
            }
        }
        if (phi[r.one()] >= 0 && phi[r.one()] != alg.identity) return false;
        for (int x = 0; x < n; ++x) {
            if (phi[x] < 0) continue;
            for (int y = 0; y < n; ++y) {
                if (phi[y] < 0) continue;
                int p = r.mul(x, y);
                if (phi[p] < 0) continue;
                int expect = reversed ? alg.compose(phi[y], phi[x])
                                      : alg.compose(phi[x], phi[y]);
                if (phi[p] != expect) return false;
            }
        }
        return true;
    };

    std::vector<int> phi(n, -1);
    phi[0] = alg.zero;
    if (!close(phi)) return out;  // order-1 ring: may already be complete
    auto rec = [&](auto&& self, std::size_t level, const std::vector<int>& cur) -> void {
        if (level == gens.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t img = 0; img < alg.endos.size(); ++img) {
            if (++nodes > budget) throw BudgetExhausted(nodes);
            std::vector<int> next = cur;
            next[gens[level]] = static_cast<int>(img);
            if (close(next)) self(self, level + 1, next);
        }
    };
    rec(rec, 0, phi);
    return out;
}

}  // namespace

FinAbGroup additive_group(const Ring& r) {
    return validate_group(r.order(), r.add_table());
}

Bimodule validate_bimodule(const Ring& a, const Ring& b, const FinAbGroup& m,
                           const std::vector<int>& laction,
                           const std::vector<int>& raction) {
    const int na = a.order(), nb = b.order(), nm = m.order();
    if (static_cast<int>(laction.size()) != na * nm)
        throw BimoduleAxiomViolation("shape", "laction size");
    if (static_cast<int>(raction.size()) != nm * nb)
        throw BimoduleAxiomViolation("shape", "raction size");
    for (int v : laction)
        if (v < 0 || v >= nm) throw BimoduleAxiomViolation("shape", "laction entry");
    for (int v : raction)
        if (v < 0 || v >= nm) throw BimoduleAxiomViolation("shape", "raction entry");

    auto l = [&](int x, int w) { return laction[x * nm + w]; };
    auto rr = [&](int w, int y) { return raction[w * nb + y]; };

    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (int w = 0; w < nm; ++w)
                if (l(a.add(x, y), w) != m.add(l(x, w), l(y, w)))
                    throw BimoduleAxiomViolation("left-biadditivity-ring",
                                                 triple_str(x, y, w));
    for (int x = 0; x < na; ++x)
        for (int w = 0; w < nm; ++w)
            for (int w2 = 0; w2 < nm; ++w2)
                if (l(x, m.add(w, w2)) != m.add(l(x, w), l(x, w2)))
                    throw BimoduleAxiomViolation("left-biadditivity-module",
                                                 triple_str(x, w, w2));
    for (int w = 0; w < nm; ++w)
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y)
                if (rr(w, b.add(x, y)) != m.add(rr(w, x), rr(w, y)))
                    throw BimoduleAxiomViolation("right-biadditivity-ring",
                                                 triple_str(w, x, y));
    for (int w = 0; w < nm; ++w)
        for (int w2 = 0; w2 < nm; ++w2)
            for (int x = 0; x < nb; ++x)
                if (rr(m.add(w, w2), x) != m.add(rr(w, x), rr(w2, x)))
                    throw BimoduleAxiomViolation("right-biadditivity-module",
                                                 triple_str(w, w2, x));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            for (int w = 0; w < nm; ++w)
                if (l(a.mul(x, y), w) != l(x, l(y, w)))
                    throw BimoduleAxiomViolation("left-associativity",
                                                 triple_str(x, y, w));
    for (int w = 0; w < nm; ++w)
        for (int x = 0; x < nb; ++x)
            for (int y = 0; y < nb; ++y)
                if (rr(w, b.mul(x, y)) != rr(rr(w, x), y))
                    throw BimoduleAxiomViolation("right-associativity",
                                                 triple_str(w, x, y));
    for (int x = 0; x < na; ++x)
        for (int w = 0; w < nm; ++w)
            for (int y = 0; y < nb; ++y)
                if (rr(l(x, w), y) != l(x, rr(w, y)))
                    throw BimoduleAxiomViolation("compatibility", triple_str(x, w, y));
    for (int w = 0; w < nm; ++w) {
        if (l(a.one(), w) != w)
            throw BimoduleAxiomViolation("left-unitality", pair_str(a.one(), w));
        if (rr(w, b.one()) != w)
            throw BimoduleAxiomViolation("right-unitality", pair_str(w, b.one()));
    }

    Bimodule bm;
    bm.left_ring = a;
    bm.right_ring = b;
    bm.group = m;
    bm.laction = laction;
    bm.raction = raction;
    return bm;
}

Bimodule regular_bimodule(const Ring& r) {
    return validate_bimodule(r, r, additive_group(r), r.mul_table(), r.mul_table());
}

Bimodule hom_induced_bimodule(const Ring& a, const Ring& b, const Ring& c,
                              const std::vector<int>& phi,
                              const std::vector<int>& psi) {
    auto check_hom = [&](const Ring& src, const std::vector<int>& h,
                         const char* which) {
        if (static_cast<int>(h.size()) != src.order())
            throw NotARingHom(which, "size");
        for (int v : h)
            if (v < 0 || v >= c.order()) throw NotARingHom(which, "range");
        for (int x = 0; x < src.order(); ++x)
            for (int y = 0; y < src.order(); ++y) {
                if (h[src.add(x, y)] != c.add(h[x], h[y]))
                    throw NotARingHom(which, "additivity " + pair_str(x, y));
                if (h[src.mul(x, y)] != c.mul(h[x], h[y]))
                    throw NotARingHom(which, "multiplicativity " + pair_str(x, y));
            }
        if (h[src.one()] != c.one()) throw NotARingHom(which, "unitality");
    };
    check_hom(a, phi, "phi");
    check_hom(b, psi, "psi");

    const FinAbGroup m = additive_group(c);
    std::vector<int> lact(static_cast<std::size_t>(a.order()) * m.order());
    std::vector<int> ract(static_cast<std::size_t>(m.order()) * b.order());
    for (int x = 0; x < a.order(); ++x)
        for (int w = 0; w < m.order(); ++w)
            lact[x * m.order() + w] = c.mul(phi[x], w);
    for (int w = 0; w < m.order(); ++w)
        for (int y = 0; y < b.order(); ++y)
            ract[w * b.order() + y] = c.mul(w, psi[y]);
    return validate_bimodule(a, b, m, lact, ract);
}

std::vector<Bimodule> enumerate_bimodules(const Ring& a, const Ring& b,
                                          const FinAbGroup& m, long long budget) {
    long long nodes = 0;
    EndoAlgebra alg(m);
    const auto left = action_homs(a, alg, /*reversed=*/false, budget, nodes);
    const auto right = action_homs(b, alg, /*reversed=*/true, budget, nodes);

    const int na = a.order(), nb = b.order(), nm = m.order();
    std::vector<Bimodule> out;
    for (const auto& lam : left) {
        std::vector<int> lact(static_cast<std::size_t>(na) * nm);
        for (int x = 0; x < na; ++x)
            for (int w = 0; w < nm; ++w)
                lact[x * nm + w] = alg.endos[lam[x]][w];
        for (const auto& rho : right) {
            std::vector<int> ract(static_cast<std::size_t>(nm) * nb);
            for (int w = 0; w < nm; ++w)
                for (int y = 0; y < nb; ++y)
                    ract[w * nb + y] = alg.endos[rho[y]][w];
            // Cross-compatibility (aw)b = a(wb) filters the product.
            bool ok = true;
            for (int x = 0; x < na && ok; ++x)
                for (int w = 0; w < nm && ok; ++w)
                    for (int y = 0; y < nb; ++y) {
                        if (ract[lact[x * nm + w] * nb + y] !=
                            lact[x * nm + ract[w * nb + y]]) {
                            ok = false;
                            break;
                        }
                    }
            if (ok) out.push_back(validate_bimodule(a, b, m, lact, ract));
        }
    }
    return out;
}

bool module_condition(const Bimodule& bm, int e, int f) {
    const Ring& a = bm.left_ring;
    const Ring& b = bm.right_ring;
    if (!a.is_idempotent(e)) throw NotIdempotent("e=" + std::to_string(e));
    if (!b.is_idempotent(f)) throw NotIdempotent("f=" + std::to_string(f));
    const int ec = a.sub(a.one(), e);   // 1_A - e
    const int fc = b.sub(b.one(), f);   // 1_B - f
    // The subgroup eM(1_B-f) + (1_A-e)Mf is nonzero iff some generator is.
    for (int w = 0; w < bm.group.order(); ++w) {
        if (bm.rmul(bm.lmul(e, w), fc) != 0) return true;
        if (bm.rmul(bm.lmul(ec, w), f) != 0) return true;
    }
    return false;
}

bool module_condition_exists(const Bimodule& bm, int e, int f) {
    if (!bm.left_ring.is_idempotent(e)) throw NotIdempotent("e=" + std::to_string(e));
    if (!bm.right_ring.is_idempotent(f)) throw NotIdempotent("f=" + std::to_string(f));
    for (int w = 0; w < bm.group.order(); ++w)
        if (bm.lmul(e, w) != bm.rmul(w, f)) return true;
    return false;
}

std::vector<int> module_fixed_set(const Bimodule& bm, int e, int f) {
    if (!bm.left_ring.is_idempotent(e)) throw NotIdempotent("e=" + std::to_string(e));
    if (!bm.right_ring.is_idempotent(f)) throw NotIdempotent("f=" + std::to_string(f));
    std::vector<int> out;
    for (int z = 0; z < bm.group.order(); ++z)
        if (bm.lmul(e, z) == bm.rmul(z, f)) out.push_back(z);
    return out;
}

}  // namespace nilclean
