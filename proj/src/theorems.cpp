#include "nilclean/theorems.hpp"

#include <algorithm>

#include "nilclean/hash.hpp"

namespace nilclean {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

TriAnalysis analyze(const TriangularSpec& spec) {
    TriAnalysis an;
    an.flat = nil_clean_index(spec.flattened);
    an.a = nil_clean_index(spec.a_ring);
    an.b = nil_clean_index(spec.b_ring);
    an.m_type = classify(spec.bimodule.group);
    return an;
}

std::string instance_desc(const TriangularSpec& spec, const std::string& label) {
    return label + " hash=" + canonical_hash(spec.flattened);
}

namespace {

std::string num(long long v) { return std::to_string(v); }

TheoremReport make(const std::string& id, const std::string& instance,
                   std::string claimed, std::string observed, Verdict v,
                   std::string witness = "") {
    TheoremReport r;
    r.theorem_id = id;
    r.instance = instance;
    r.claimed = std::move(claimed);
    r.observed = std::move(observed);
    r.verdict = v;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

std::array<TheoremReport, 3> check_lemma_bounds(const TriangularSpec& spec,
                                                const TriAnalysis& an,
                                                const std::string& instance) {
    const int n = an.a.nin, m = an.b.nin;
    const int msz = spec.bimodule.group.order();
    const int nin = an.flat.nin;

    std::array<TheoremReport, 3> out;
    out[0] = make("L25_1", instance, "nin >= " + num(msz), "nin=" + num(nin),
                  nin >= msz ? Verdict::Pass : Verdict::Fail);

    if (is_cyclic_p_power(an.m_type)) {
        const int bound = n + (n + 1) / 2 * (msz - 1);
        out[1] = make("L25_2", instance, "nin >= " + num(bound), "nin=" + num(nin),
                      nin >= bound ? Verdict::Pass : Verdict::Fail);
    } else {
        out[1] = make("L25_2", instance, "M cyclic of prime-power order",
                      "M is " + an.m_type.name(), Verdict::NotApplicable);
    }

    const int b1 = n * m + msz - 1, b2 = 2 * n * m;
    out[2] = make("L25_3", instance,
                  "nin >= " + num(b1) + " or nin >= " + num(b2), "nin=" + num(nin),
                  (nin >= b1 || nin >= b2) ? Verdict::Pass : Verdict::Fail);
    return out;
}

TheoremReport check_lemma_two_power(const TriangularSpec& spec,
                                    const TriAnalysis& an,
                                    const std::string& instance) {
    auto pk = is_cyclic_p_power(an.m_type);
    if (!pk || pk->first != 2)
        return make("L26", instance, "M cyclic of order 2^r",
                    "M is " + an.m_type.name(), Verdict::NotApplicable);
    const int predicted = spec.bimodule.group.order() * an.a.nin * an.b.nin;
    return make("L26", instance, "nin = " + num(predicted),
                "nin=" + num(an.flat.nin),
                an.flat.nin == predicted ? Verdict::Pass : Verdict::Fail,
                an.flat.nin == predicted ? "" : "witness a=" + num(an.flat.witness));
}

TheoremReport check_index2_sufficiency(const TriangularSpec& spec,
                                       const TriAnalysis& an,
                                       const std::string& instance) {
    if (an.a.nin != 1 || an.b.nin != 1 || spec.bimodule.group.order() != 2)
        return make("T41_SUFF", instance, "Nin(A)=Nin(B)=1 and |M|=2",
                    "Nin(A)=" + num(an.a.nin) + " Nin(B)=" + num(an.b.nin) +
                        " |M|=" + num(spec.bimodule.group.order()),
                    Verdict::NotApplicable);
    return make("T41_SUFF", instance, "nin = 2", "nin=" + num(an.flat.nin),
                an.flat.nin == 2 ? Verdict::Pass : Verdict::Fail);
}

TheoremReport check_index3_sufficiency(const TriangularSpec& spec,
                                       const TriAnalysis& an,
                                       const std::string& instance) {
    if (an.a.nin != 1 || an.b.nin != 1 || spec.bimodule.group.order() != 3)
        return make("P42_SUFF", instance, "Nin(A)=Nin(B)=1 and |M|=3",
                    "Nin(A)=" + num(an.a.nin) + " Nin(B)=" + num(an.b.nin) +
                        " |M|=" + num(spec.bimodule.group.order()),
                    Verdict::NotApplicable);
    return make("P42_SUFF", instance, "nin = 3", "nin=" + num(an.flat.nin),
                an.flat.nin == 3 ? Verdict::Pass : Verdict::Fail);
}

MainRhs main_theorem_rhs(const TriangularSpec& spec, const TriAnalysis& an) {
    if (spec.bimodule.group.order() == 1) throw TrivialModule();

    MainRhs rhs;
    rhs.m_type = an.m_type.name();
    rhs.nin_a = an.a.nin;
    rhs.nin_b = an.b.nin;

    const auto& f = an.m_type.invariant_factors;
    const bool is_c2 = f == std::vector<int>{2};
    const bool is_c4 = f == std::vector<int>{4};
    const bool is_klein = f == std::vector<int>{2, 2};

    rhs.case1 = is_c2 && rhs.nin_a * rhs.nin_b == 2;
    rhs.case2 = is_c4 && rhs.nin_a == 1 && rhs.nin_b == 1;
    rhs.case3a = is_klein && rhs.nin_a == 1 && rhs.nin_b == 1;

    std::string trace;
    const Bimodule& bm = spec.bimodule;

    if (is_klein && rhs.nin_a == 1 && rhs.nin_b == 2) {
        // For every b in B with |eta(b)| = 2, every f in eta(b) and every
        // idempotent e of A, the module condition must hold.
        bool ok = true;
        for (int b = 0; b < spec.b_ring.order() && ok; ++b) {
            const auto eb = eta(spec.b_ring, b);
            if (eb.size() != 2) continue;
            for (int fidx : eb.members) {
                for (int e : spec.a_ring.idempotents())
                    if (!module_condition(bm, e, fidx)) {
                        ok = false;
                        trace += "3b fails at b=" + num(b) + " f=" + num(fidx) +
                                 " e=" + num(e) + "; ";
                        break;
                    }
                if (!ok) break;
            }
        }
        rhs.case3b = ok;
    }
    if (is_klein && rhs.nin_b == 1 && rhs.nin_a == 2) {
        bool ok = true;
        for (int a = 0; a < spec.a_ring.order() && ok; ++a) {
            const auto ea = eta(spec.a_ring, a);
            if (ea.size() != 2) continue;
            for (int eidx : ea.members) {
                for (int fidx : spec.b_ring.idempotents())
                    if (!module_condition(bm, eidx, fidx)) {
                        ok = false;
                        trace += "3c fails at a=" + num(a) + " e=" + num(eidx) +
                                 " f=" + num(fidx) + "; ";
                        break;
                    }
                if (!ok) break;
            }
        }
        rhs.case3c = ok;
    }

    rhs.rhs = rhs.case1 || rhs.case2 || rhs.case3a || rhs.case3b || rhs.case3c;
    rhs.evidence = "M=" + rhs.m_type + " Nin(A)=" + num(rhs.nin_a) +
                   " Nin(B)=" + num(rhs.nin_b) +
                   (trace.empty() ? "" : " " + trace);
    return rhs;
}

TheoremReport verify_main_theorem(const TriangularSpec& spec,
                                  const TriAnalysis& an,
                                  const std::string& instance) {
    const MainRhs rhs = main_theorem_rhs(spec, an);
    const bool lhs = an.flat.nin == 4;
    std::string claimed = "nin=4 iff rhs";
    std::string observed = "nin=" + num(an.flat.nin) + " rhs=" +
                           (rhs.rhs ? "true" : "false") + " [" + rhs.evidence + "]";
    if (lhs == rhs.rhs) return make("MAIN_IFF", instance, claimed, observed,
                                    Verdict::Pass);
    return make("MAIN_IFF", instance, claimed, observed, Verdict::Fail,
                std::string("side=") + (lhs ? "lhs" : "rhs") +
                    " eta-max element=" + num(an.flat.witness));
}

std::vector<int> formula_eta(const TriangularSpec& spec, int flat) {
    const auto t = spec.decode(flat);
    const Bimodule& bm = spec.bimodule;
    const auto ea = eta(spec.a_ring, t.a);
    const auto eb = eta(spec.b_ring, t.b);
    std::vector<int> out;
    for (int e : ea.members)
        for (int f : eb.members)
            for (int w = 0; w < bm.group.order(); ++w)
                if (bm.group.add(bm.lmul(e, w), bm.rmul(w, f)) == w)
                    out.push_back(spec.encode(e, w, f));
    std::sort(out.begin(), out.end());
    return out;
}

TheoremReport triangular_eta_crosscheck(const TriangularSpec& spec, int flat,
                                        const std::string& instance) {
    const auto brute = eta(spec.flattened, flat).members;
    const auto formula = formula_eta(spec, flat);
    std::string claimed = "eta(" + num(flat) + ") via formula, size " +
                          num(static_cast<long long>(formula.size()));
    std::string observed = "brute-force size " +
                           num(static_cast<long long>(brute.size()));
    if (brute == formula)
        return make("ETA_STRUCT", instance, claimed, observed, Verdict::Pass);
    return make("ETA_STRUCT", instance, claimed, observed, Verdict::Fail,
                "element=" + num(flat));
}

TheoremReport eta_struct_all(const TriangularSpec& spec,
                             const std::string& instance) {
    for (int x = 0; x < spec.flattened.order(); ++x) {
        auto rep = triangular_eta_crosscheck(spec, x, instance);
        if (rep.verdict != Verdict::Pass) return rep;
    }
    return make("ETA_STRUCT", instance,
                "formula eta = brute-force eta for all elements",
                "all " + num(spec.flattened.order()) + " elements agree",
                Verdict::Pass);
}

std::array<TheoremReport, 3> check_lemma_bounds(const TriangularSpec& spec) {
    return check_lemma_bounds(spec, analyze(spec));
}
TheoremReport check_lemma_two_power(const TriangularSpec& spec) {
    return check_lemma_two_power(spec, analyze(spec));
}
TheoremReport check_index2_sufficiency(const TriangularSpec& spec) {
    return check_index2_sufficiency(spec, analyze(spec));
}
TheoremReport check_index3_sufficiency(const TriangularSpec& spec) {
    return check_index3_sufficiency(spec, analyze(spec));
}
MainRhs main_theorem_rhs(const TriangularSpec& spec) {
    return main_theorem_rhs(spec, analyze(spec));
}
TheoremReport verify_main_theorem(const TriangularSpec& spec) {
    return verify_main_theorem(spec, analyze(spec));
}

}  // namespace nilclean
