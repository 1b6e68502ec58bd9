#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "nilclean/constructions.hpp"
#include "nilclean/group.hpp"

namespace nilclean {

// Bimodule position of a Tri(...) expression.
struct MSpecAst {
    enum class Kind { Reg, Nat, File };
    Kind kind = Kind::Reg;
    GroupType group_type;  // Nat
    std::string path;      // File
};

// Construction expression:
//   expr  := term ( "x" term )*            (left-associative product)
//   term  := "Z" INT | "UT2(" expr ")" | "Tri(" expr "," mspec "," expr ")"
//          | "file(" PATH ")"
//   mspec := "reg" | "nat(" grouptype ")" | "file(" PATH ")"
struct ConstructionAst {
    enum class Kind { Cyclic, Product, Ut2, Tri, File };
    Kind kind = Kind::Cyclic;
    int n = 0;                                      // Cyclic
    std::shared_ptr<ConstructionAst> left, right;   // Product
    std::shared_ptr<ConstructionAst> inner;         // Ut2
    std::shared_ptr<ConstructionAst> a_expr, b_expr;  // Tri
    MSpecAst mspec;                                 // Tri
    std::string path;                               // File
};

// Throws ParseError with a byte offset. Whitespace between tokens is ignored;
// whitespace inside a token ("Z 4") is an error.
ConstructionAst parse(const std::string& expr);

// Canonical text; parse(render(ast)) reproduces the AST.
std::string render(const ConstructionAst& ast);

struct Elaborated {
    Ring ring;
    std::optional<TriangularSpec> tri;  // set for Ut2 / Tri roots
};

// Builds the ring (validating every intermediate). Throws ElaborationError
// for Reg with A != B and for Nat when the bimodule structure is not unique.
Elaborated elaborate(const ConstructionAst& ast,
                     long long budget = kDefaultBimoduleBudget);

Elaborated elaborate(const std::string& expr,
                     long long budget = kDefaultBimoduleBudget);

// --- table files -----------------------------------------------------------

struct RawBimodule {
    int a_order = 0, m_order = 0, b_order = 0;
    std::vector<int> add;      // |M| x |M|
    std::vector<int> laction;  // |A| x |M|
    std::vector<int> raction;  // |M| x |B|
};

// Line-oriented format (see docs/formats.md); throws FormatError with the
// offending line number. Loaders return raw tables; validation is separate.
RawRing load_ring_stream(std::istream& in);
RawRing load_ring_file(const std::string& path);
RawBimodule load_bimodule_stream(std::istream& in);
RawBimodule load_bimodule_file(const std::string& path);

std::string format_ring_file(const Ring& r);
std::string format_bimodule_file(const Bimodule& bm);

}  // namespace nilclean
