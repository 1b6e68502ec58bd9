#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilclean/corpus.hpp"
#include "nilclean/hash.hpp"
#include "nilclean/version.hpp"

namespace py = pybind11;
using namespace nilclean;

namespace {

py::dict report_dict(const TheoremReport& r) {
    py::dict d;
    d["theorem_id"] = r.theorem_id;
    d["instance"] = r.instance;
    d["claimed"] = r.claimed;
    d["observed"] = r.observed;
    d["verdict"] = verdict_name(r.verdict);
    d["witness"] = r.witness;
    return d;
}

TriangularSpec tri_from_expr(const std::string& expr) {
    auto el = elaborate(expr);
    if (!el.tri)
        throw ElaborationError("expression is not a triangular ring: " + expr);
    return *el.tri;
}

py::dict py_index(const std::string& expr) {
    auto el = elaborate(expr);
    auto rep = nil_clean_index(el.ring);
    py::dict d;
    d["expr"] = expr;
    d["hash"] = canonical_hash(el.ring);
    d["order"] = el.ring.order();
    d["nin"] = rep.nin;
    d["witness"] = rep.witness;
    py::dict hist;
    for (auto& [k, v] : rep.histogram) hist[py::int_(k)] = v;
    d["histogram"] = hist;
    return d;
}

std::vector<int> py_eta(const std::string& expr, int element) {
    auto el = elaborate(expr);
    if (element < 0 || element >= el.ring.order())
        throw ElaborationError("element out of range");
    return eta(el.ring, element).members;
}

std::string py_classify_group(const std::string& expr) {
    return classify(additive_group(elaborate(expr).ring)).name();
}

py::list py_verify(const std::string& theorem, const std::string& expr) {
    auto spec = tri_from_expr(expr);
    auto an = analyze(spec);
    const std::string desc = instance_desc(spec, expr);
    std::vector<TheoremReport> reps;
    if (theorem == "l25") {
        for (auto& r : check_lemma_bounds(spec, an, desc)) reps.push_back(r);
    } else if (theorem == "l26") {
        reps.push_back(check_lemma_two_power(spec, an, desc));
    } else if (theorem == "t41") {
        reps.push_back(check_index2_sufficiency(spec, an, desc));
    } else if (theorem == "p42") {
        reps.push_back(check_index3_sufficiency(spec, an, desc));
    } else if (theorem == "main") {
        reps.push_back(verify_main_theorem(spec, an, desc));
    } else if (theorem == "eta") {
        reps.push_back(eta_struct_all(spec, desc));
    } else {
        throw ElaborationError("unknown theorem id: " + theorem);
    }
    py::list out;
    for (const auto& r : reps) out.append(report_dict(r));
    return out;
}

py::dict py_corpus(const std::vector<std::string>& catalog,
                   const std::vector<int>& m_orders, int jobs) {
    auto cat = catalog.empty() ? default_catalog() : catalog_from_exprs(catalog);
    CorpusOptions opts;
    if (!m_orders.empty()) opts.m_orders = m_orders;
    opts.jobs = jobs;
    auto result = run_corpus(cat, opts);
    py::dict d;
    d["instances"] = result.summary.instances;
    d["checks"] = result.summary.checks;
    d["pass"] = result.summary.pass;
    d["fail"] = result.summary.fail;
    d["not_applicable"] = result.summary.not_applicable;
    d["skipped"] = result.summary.skipped;
    py::list reps;
    for (const auto& r : result.reports) reps.append(report_dict(r));
    d["reports"] = reps;
    return d;
}

int py_enum_bimodules(const std::string& a_expr, const std::string& b_expr,
                      const std::string& m_type, long long budget) {
    auto ast = parse("Tri(" + a_expr + ",nat(" + m_type + ")," + b_expr + ")");
    return static_cast<int>(
        enumerate_bimodules(elaborate(a_expr).ring, elaborate(b_expr).ring,
                            group_of_type(ast.mspec.group_type), budget)
            .size());
}

}  // namespace

PYBIND11_MODULE(_nilclean, m) {
    m.doc() = "nil clean index computations for finite rings";
    m.attr("__version__") = kToolVersion;

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "NilcleanError");
    py::register_exception<FormatError>(m, "NilcleanFormatError");
    py::register_exception<ElaborationError>(m, "ElaborationError");
    py::register_exception<ParseError>(m, "NilcleanParseError");

    m.def("index", &py_index, py::arg("expr"),
          "Nil clean index report of the ring given by a construction "
          "expression.");
    m.def("eta", &py_eta, py::arg("expr"), py::arg("element"),
          "Idempotents e with element - e nilpotent, as flat indices.");
    m.def(
        "idempotents",
        [](const std::string& e) { return elaborate(e).ring.idempotents(); },
        py::arg("expr"));
    m.def(
        "nilpotents",
        [](const std::string& e) { return elaborate(e).ring.nilpotents(); },
        py::arg("expr"));
    m.def(
        "units", [](const std::string& e) { return elaborate(e).ring.units(); },
        py::arg("expr"));
    m.def("classify_group", &py_classify_group, py::arg("expr"),
          "Isomorphism type of the additive group, e.g. 'C2xC2'.");
    m.def("verify", &py_verify, py::arg("theorem"), py::arg("expr"),
          "Run one theorem check (l25, l26, t41, p42, main, eta) on a "
          "triangular expression; returns a list of report dicts.");
    m.def("corpus", &py_corpus, py::arg("catalog") = std::vector<std::string>{},
          py::arg("m_orders") = std::vector<int>{}, py::arg("jobs") = 1,
          "Exhaustive verification sweep; empty catalog means the default "
          "one.");
    m.def("enum_bimodules", &py_enum_bimodules, py::arg("a"), py::arg("b"),
          py::arg("m"), py::arg("budget") = kDefaultBimoduleBudget,
          "Number of bimodule structures on the named abelian group.");
    m.def("canonical_hash",
          [](const std::string& e) { return canonical_hash(elaborate(e).ring); },
          py::arg("expr"));
}
