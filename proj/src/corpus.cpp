#include "nilclean/corpus.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nilclean/hash.hpp"
#include "nilclean/version.hpp"

namespace nilclean {

using nlohmann::json;

std::string report_json(const TheoremReport& rep) {
    json j;
    j["theorem_id"] = rep.theorem_id;
    j["instance"] = rep.instance;
    j["claimed"] = rep.claimed;
    j["observed"] = rep.observed;
    j["verdict"] = verdict_name(rep.verdict);
    j["witness"] = rep.witness;
    return j.dump();
}

TheoremReport report_from_json(const std::string& line) {
    json j = json::parse(line);
    TheoremReport rep;
    rep.theorem_id = j.at("theorem_id").get<std::string>();
    rep.instance = j.at("instance").get<std::string>();
    rep.claimed = j.at("claimed").get<std::string>();
    rep.observed = j.at("observed").get<std::string>();
    rep.witness = j.at("witness").get<std::string>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "pass") rep.verdict = Verdict::Pass;
    else if (v == "fail") rep.verdict = Verdict::Fail;
    else if (v == "skipped") rep.verdict = Verdict::Skipped;
    else rep.verdict = Verdict::NotApplicable;
    return rep;
}

std::string reports_jsonl(const std::vector<TheoremReport>& reps) {
    std::string out;
    for (const auto& r : reps) {
        out += report_json(r);
        out += '\n';
    }
    return out;
}

std::string summary_json(const CorpusSummary& s) {
    json j;
    j["instances"] = s.instances;
    j["checks"] = s.checks;
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["not_applicable"] = s.not_applicable;
    j["skipped"] = s.skipped;
    return j.dump();
}

std::string summary_table(const CorpusResult& r) {
    std::ostringstream ss;
    ss << "instances      " << r.summary.instances << "\n"
       << "checks run     " << r.summary.checks << "\n"
       << "pass           " << r.summary.pass << "\n"
       << "fail           " << r.summary.fail << "\n"
       << "not applicable " << r.summary.not_applicable << "\n"
       << "skipped        " << r.summary.skipped << "\n"
       << "wall seconds   " << r.wall_seconds << "\n";
    return ss.str();
}

const std::string& z2x_ring_file_text() {
    static const std::string text =
        "# Z2[x]/(x^2): indices 0, 1, x, 1+x\n"
        "ring 4\n"
        "one 1\n"
        "add\n"
        "0 1 2 3\n"
        "1 0 3 2\n"
        "2 3 0 1\n"
        "3 2 1 0\n"
        "mul\n"
        "0 0 0 0\n"
        "0 1 2 3\n"
        "0 2 0 2\n"
        "0 3 2 1\n";
    return text;
}

std::vector<NamedRing> default_catalog() {
    std::vector<NamedRing> cat;
    for (const char* e : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2"})
        cat.push_back({e, elaborate(std::string(e)).ring});
    std::istringstream z2x(z2x_ring_file_text());
    cat.push_back({"file(z2x.ring)", validate_ring(load_ring_stream(z2x))});
    cat.push_back({"UT2(Z2)", elaborate(std::string("UT2(Z2)")).ring});
    return cat;
}

std::vector<NamedRing> catalog_from_exprs(const std::vector<std::string>& exprs) {
    std::vector<NamedRing> cat;
    for (const auto& e : exprs) cat.push_back({e, elaborate(e).ring});
    return cat;
}

namespace {

struct Instance {
    std::string label;
    TriangularSpec spec;
};

std::vector<TheoremReport> run_checks(const Instance& inst) {
    const auto an = analyze(inst.spec);
    const std::string desc = instance_desc(inst.spec, inst.label);
    std::vector<TheoremReport> reps;
    for (auto& r : check_lemma_bounds(inst.spec, an, desc)) reps.push_back(r);
    reps.push_back(check_lemma_two_power(inst.spec, an, desc));
    reps.push_back(check_index2_sufficiency(inst.spec, an, desc));
    reps.push_back(check_index3_sufficiency(inst.spec, an, desc));
    reps.push_back(verify_main_theorem(inst.spec, an, desc));
    reps.push_back(eta_struct_all(inst.spec, desc));
    return reps;
}

std::string cache_key(const Instance& inst) {
    return canonical_hash(inst.spec.flattened) + "|" +
           bimodule_hash(inst.spec.bimodule) + "|corpus-checks|" + kToolVersion;
}

}  // namespace

CorpusResult run_corpus(const std::vector<NamedRing>& catalog,
                        const CorpusOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CorpusResult result;

    std::vector<Instance> instances;
    for (const auto& a : catalog)
        for (const auto& b : catalog)
            for (int m_order : opts.m_orders)
                for (const auto& type : abelian_types_of_order(m_order)) {
                    const FinAbGroup m = group_of_type(type);
                    std::vector<Bimodule> bims;
                    try {
                        bims = enumerate_bimodules(a.ring, b.ring, m, opts.budget);
                    } catch (const BudgetExhausted& ex) {
                        TheoremReport rep;
                        rep.theorem_id = "BUDGET";
                        rep.instance = "Tri(" + a.name + ",[" + type.name() + "]," +
                                       b.name + ")";
                        rep.claimed = "bimodule enumeration within budget";
                        rep.observed = ex.what();
                        rep.verdict = Verdict::Skipped;
                        result.reports.push_back(rep);
                        ++result.summary.skipped;
                        continue;
                    }
                    for (std::size_t k = 0; k < bims.size(); ++k) {
                        Instance inst;
                        inst.label = "Tri(" + a.name + ",[" + type.name() + "#" +
                                     std::to_string(k) + "]," + b.name + ")";
                        inst.spec = triangular(a.ring, bims[k], b.ring);
                        instances.push_back(std::move(inst));
                    }
                }

    std::vector<std::vector<TheoremReport>> per_instance(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            const std::string key = cache_key(instances[i]);
            if (opts.cache && opts.resume) {
                if (auto hit = opts.cache->get(key)) {
                    std::vector<TheoremReport> reps;
                    std::istringstream ss(*hit);
                    std::string line;
                    while (std::getline(ss, line))
                        if (!line.empty()) reps.push_back(report_from_json(line));
                    per_instance[i] = std::move(reps);
                    continue;
                }
            }
            per_instance[i] = run_checks(instances[i]);
            if (opts.cache) opts.cache->put(key, reports_jsonl(per_instance[i]));
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    result.summary.instances = static_cast<long long>(instances.size());
    for (auto& reps : per_instance)
        for (auto& rep : reps) {
            ++result.summary.checks;
            switch (rep.verdict) {
                case Verdict::Pass: ++result.summary.pass; break;
                case Verdict::Fail: ++result.summary.fail; break;
                case Verdict::NotApplicable: ++result.summary.not_applicable; break;
                case Verdict::Skipped: ++result.summary.skipped; break;
            }
            result.reports.push_back(std::move(rep));
        }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace nilclean
