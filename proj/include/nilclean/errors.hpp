#pragma once

#include <stdexcept>
#include <string>

namespace nilclean {

// Base class for all library errors so callers can map them to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ring table failed one of the axiom families. `axiom` names the family,
// `witness` the first offending tuple in scan order.
struct AxiomViolation : Error {
    std::string axiom;
    std::string witness;
    AxiomViolation(std::string ax, std::string wit)
        : Error("axiom violation: " + ax + " at " + wit),
          axiom(std::move(ax)), witness(std::move(wit)) {}
};

struct BimoduleAxiomViolation : Error {
    std::string axiom;
    std::string witness;
    BimoduleAxiomViolation(std::string ax, std::string wit)
        : Error("bimodule axiom violation: " + ax + " at " + wit),
          axiom(std::move(ax)), witness(std::move(wit)) {}
};

struct NotARingHom : Error {
    std::string which;
    std::string witness;
    NotARingHom(std::string w, std::string wit)
        : Error("not a ring homomorphism (" + w + ") at " + wit),
          which(std::move(w)), witness(std::move(wit)) {}
};

struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& wit)
        : Error("subset is not a subgroup: " + wit) {}
};

struct NotClassified : Error {
    explicit NotClassified(int order)
        : Error("group order " + std::to_string(order) +
                " exceeds the classification bound") {}
};

struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& wit)
        : Error("element is not idempotent: " + wit) {}
};

struct TrivialModule : Error {
    TrivialModule() : Error("bimodule is trivial (|M| = 1)") {}
};

struct MismatchedBimodule : Error {
    explicit MismatchedBimodule(const std::string& why)
        : Error("bimodule does not match the corner rings: " + why) {}
};

struct BudgetExhausted : Error {
    long long nodes;
    explicit BudgetExhausted(long long n)
        : Error("search budget exhausted after " + std::to_string(n) + " nodes"),
          nodes(n) {}
};

struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t off, std::string exp)
        : Error("parse error at offset " + std::to_string(off) +
                ": expected " + exp),
          offset(off), expected(std::move(exp)) {}
};

struct ElaborationError : Error {
    using Error::Error;
};

struct FormatError : Error {
    int line;
    FormatError(int ln, const std::string& reason)
        : Error("format error at line " + std::to_string(ln) + ": " + reason),
          line(ln) {}
};

}  // namespace nilclean
