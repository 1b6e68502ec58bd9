#pragma once

#include <string>
#include <vector>

#include "nilclean/cache.hpp"
#include "nilclean/dsl.hpp"
#include "nilclean/theorems.hpp"

namespace nilclean {

struct NamedRing {
    std::string name;  // the construction expression
    Ring ring;
};

struct CorpusOptions {
    std::vector<int> m_orders{2, 3, 4};
    long long budget = kDefaultBimoduleBudget;
    int jobs = 1;
    ResultCache* cache = nullptr;
    bool resume = false;
};

struct CorpusSummary {
    long long instances = 0;
    long long checks = 0;
    long long pass = 0;
    long long fail = 0;
    long long not_applicable = 0;
    long long skipped = 0;
};

struct CorpusResult {
    std::vector<TheoremReport> reports;
    CorpusSummary summary;
    double wall_seconds = 0;
};

// One JSON object per report, stable field names, no timestamps.
std::string report_json(const TheoremReport& rep);
TheoremReport report_from_json(const std::string& line);
std::string reports_jsonl(const std::vector<TheoremReport>& reps);

// Deterministic summary rendering (wall time deliberately excluded).
std::string summary_json(const CorpusSummary& s);
std::string summary_table(const CorpusResult& r);

// The default catalog: Z1, Z2, Z3, Z4, Z2xZ2, Z2[x]/(x^2) (loaded through
// the ring-file reader), UT2(Z2).
std::vector<NamedRing> default_catalog();

// The canonical ring-file text of Z2[x]/(x^2); also shipped as data/z2x.ring.
const std::string& z2x_ring_file_text();

std::vector<NamedRing> catalog_from_exprs(const std::vector<std::string>& exprs);

// For every ordered pair (A, B) from the catalog and every abelian group of
// each listed order, enumerates all bimodules and runs every check on each
// triangular instance. Report order is fixed by instance order regardless of
// the job count. Budget exhaustion yields a Skipped report, never a silent
// omission.
CorpusResult run_corpus(const std::vector<NamedRing>& catalog,
                        const CorpusOptions& opts = {});

}  // namespace nilclean
