#include "nilclean/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nilclean {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ConstructionAst parse_all() {
        auto ast = expr();
        ws();
        if (pos_ != s_.size()) throw ParseError(pos_, "end of input");
        return ast;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    // Matches a literal at the current position (no internal whitespace).
    bool try_lit(const char* lit) {
        std::size_t len = std::char_traits<char>::length(lit);
        if (s_.compare(pos_, len, lit) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    void expect(char c) {
        ws();
        if (!peek_is(c)) throw ParseError(pos_, std::string("'") + c + "'");
        ++pos_;
    }

    // Digits must immediately follow the previous token character.
    int integer() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(pos_, "digits");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) throw ParseError(pos_, "a smaller integer");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    std::string path_until_paren() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
        if (pos_ == s_.size()) throw ParseError(pos_, "')'");
        std::string p = s_.substr(start, pos_ - start);
        ++pos_;
        if (p.empty()) throw ParseError(start, "a path");
        return p;
    }

    ConstructionAst expr() {
        ConstructionAst lhs = term();
        while (true) {
            ws();
            if (!peek_is('x')) break;
            ++pos_;
            ConstructionAst rhs = term();
            ConstructionAst prod;
            prod.kind = ConstructionAst::Kind::Product;
            prod.left = std::make_shared<ConstructionAst>(std::move(lhs));
            prod.right = std::make_shared<ConstructionAst>(std::move(rhs));
            lhs = std::move(prod);
        }
        return lhs;
    }

    ConstructionAst term() {
        ws();
        ConstructionAst ast;
        if (try_lit("UT2(")) {
            ast.kind = ConstructionAst::Kind::Ut2;
            ast.inner = std::make_shared<ConstructionAst>(expr());
            expect(')');
            return ast;
        }
        if (try_lit("Tri(")) {
            ast.kind = ConstructionAst::Kind::Tri;
            ast.a_expr = std::make_shared<ConstructionAst>(expr());
            expect(',');
            ast.mspec = mspec();
            expect(',');
            ast.b_expr = std::make_shared<ConstructionAst>(expr());
            expect(')');
            return ast;
        }
        if (try_lit("file(")) {
            ast.kind = ConstructionAst::Kind::File;
            ast.path = path_until_paren();
            return ast;
        }
        if (try_lit("Z")) {
            ast.kind = ConstructionAst::Kind::Cyclic;
            ast.n = integer();
            if (ast.n < 1) throw ParseError(pos_, "a positive order");
            return ast;
        }
        throw ParseError(pos_, "a term (Z<n>, UT2(...), Tri(...), file(...))");
    }

    MSpecAst mspec() {
        ws();
        MSpecAst m;
        if (try_lit("reg")) {
            m.kind = MSpecAst::Kind::Reg;
            return m;
        }
        if (try_lit("nat(")) {
            m.kind = MSpecAst::Kind::Nat;
            m.group_type = grouptype();
            expect(')');
            return m;
        }
        if (try_lit("file(")) {
            m.kind = MSpecAst::Kind::File;
            m.path = path_until_paren();
            return m;
        }
        throw ParseError(pos_, "reg, nat(...) or file(...)");
    }

    GroupType grouptype() {
        ws();
        if (!try_lit("C")) throw ParseError(pos_, "'C'");
        GroupType t;
        int d = integer();
        if (d < 1) throw ParseError(pos_, "a positive order");
        if (d > 1) t.invariant_factors.push_back(d);
        while (pos_ + 1 < s_.size() && s_[pos_] == 'x' && s_[pos_ + 1] == 'C') {
            pos_ += 2;
            d = integer();
            if (d < 1) throw ParseError(pos_, "a positive order");
            if (d > 1) t.invariant_factors.push_back(d);
        }
        return t;
    }
};

std::string render_mspec(const MSpecAst& m) {
    switch (m.kind) {
        case MSpecAst::Kind::Reg: return "reg";
        case MSpecAst::Kind::Nat: return "nat(" + m.group_type.name() + ")";
        case MSpecAst::Kind::File: return "file(" + m.path + ")";
    }
    return "";
}

}  // namespace

ConstructionAst parse(const std::string& expr) { return Parser(expr).parse_all(); }

std::string render(const ConstructionAst& ast) {
    switch (ast.kind) {
        case ConstructionAst::Kind::Cyclic:
            return "Z" + std::to_string(ast.n);
        case ConstructionAst::Kind::Product:
            return render(*ast.left) + "x" + render(*ast.right);
        case ConstructionAst::Kind::Ut2:
            return "UT2(" + render(*ast.inner) + ")";
        case ConstructionAst::Kind::Tri:
            return "Tri(" + render(*ast.a_expr) + "," + render_mspec(ast.mspec) +
                   "," + render(*ast.b_expr) + ")";
        case ConstructionAst::Kind::File:
            return "file(" + ast.path + ")";
    }
    return "";
}

Elaborated elaborate(const ConstructionAst& ast, long long budget) {
    Elaborated out;
    switch (ast.kind) {
        case ConstructionAst::Kind::Cyclic:
            out.ring = cyclic_ring(ast.n);
            return out;
        case ConstructionAst::Kind::Product:
            out.ring = direct_product(elaborate(*ast.left, budget).ring,
                                      elaborate(*ast.right, budget).ring);
            return out;
        case ConstructionAst::Kind::Ut2: {
            out.tri = ut2(elaborate(*ast.inner, budget).ring);
            out.ring = out.tri->flattened;
            return out;
        }
        case ConstructionAst::Kind::File:
            out.ring = validate_ring(load_ring_file(ast.path));
            return out;
        case ConstructionAst::Kind::Tri: {
            const Ring a = elaborate(*ast.a_expr, budget).ring;
            const Ring b = elaborate(*ast.b_expr, budget).ring;
            Bimodule bm;
            switch (ast.mspec.kind) {
                case MSpecAst::Kind::Reg: {
                    if (render(*ast.a_expr) != render(*ast.b_expr))
                        throw ElaborationError("reg requires A = B, got " +
                                               render(*ast.a_expr) + " and " +
                                               render(*ast.b_expr));
                    bm = regular_bimodule(a);
                    break;
                }
                case MSpecAst::Kind::Nat: {
                    const FinAbGroup m = group_of_type(ast.mspec.group_type);
                    auto all = enumerate_bimodules(a, b, m, budget);
                    if (all.empty())
                        throw ElaborationError("nat(" + ast.mspec.group_type.name() +
                                               "): no bimodule structure exists");
                    if (all.size() > 1)
                        throw ElaborationError(
                            "nat(" + ast.mspec.group_type.name() + "): ambiguous, " +
                            std::to_string(all.size()) + " structures exist");
                    bm = all.front();
                    break;
                }
                case MSpecAst::Kind::File: {
                    const RawBimodule raw = load_bimodule_file(ast.mspec.path);
                    if (raw.a_order != a.order() || raw.b_order != b.order())
                        throw ElaborationError(
                            "bimodule file corner orders do not match A, B");
                    const FinAbGroup m = validate_group(raw.m_order, raw.add);
                    bm = validate_bimodule(a, b, m, raw.laction, raw.raction);
                    break;
                }
            }
            out.tri = triangular(a, bm, b);
            out.ring = out.tri->flattened;
            return out;
        }
    }
    throw ElaborationError("unreachable");
}

Elaborated elaborate(const std::string& expr, long long budget) {
    return elaborate(parse(expr), budget);
}

// --- table files -----------------------------------------------------------

namespace {

// Logical lines with their 1-based numbers; comment and blank lines dropped.
struct Lines {
    std::vector<std::pair<int, std::string>> items;
    std::size_t next = 0;

    std::pair<int, std::string> take(const char* what) {
        if (next >= items.size())
            throw FormatError(items.empty() ? 1 : items.back().first,
                              std::string("unexpected end of file, wanted ") + what);
        return items[next++];
    }
};

Lines split_lines(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.empty() || text.back() != '\n')
        throw FormatError(static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1,
                          "missing trailing newline");
    Lines out;
    int line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (line.empty() || line[0] == '#') continue;
        out.items.emplace_back(line_no, std::move(line));
    }
    return out;
}

std::vector<int> parse_row(const std::pair<int, std::string>& ln, int count, int range) {
    std::istringstream ss(ln.second);
    std::vector<int> row;
    int v;
    while (ss >> v) {
        if (v < 0 || v >= range)
            throw FormatError(ln.first, "entry " + std::to_string(v) +
                                            " out of range [0, " +
                                            std::to_string(range) + ")");
        row.push_back(v);
    }
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw FormatError(ln.first, "non-numeric token '" + rest + "'");
    if (static_cast<int>(row.size()) != count)
        throw FormatError(ln.first, "expected " + std::to_string(count) +
                                        " entries, got " +
                                        std::to_string(row.size()));
    return row;
}

void expect_header(Lines& lines, const std::string& word) {
    auto ln = lines.take(word.c_str());
    if (ln.second != word)
        throw FormatError(ln.first, "expected '" + word + "', got '" + ln.second + "'");
}

std::vector<int> read_table(Lines& lines, const std::string& header, int rows,
                            int cols, int range) {
    expect_header(lines, header);
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        auto row = parse_row(lines.take("table row"), cols, range);
        table.insert(table.end(), row.begin(), row.end());
    }
    return table;
}

}  // namespace

RawRing load_ring_stream(std::istream& in) {
    Lines lines = split_lines(in);
    auto header = lines.take("'ring <n>'");
    std::istringstream hs(header.second);
    std::string kw;
    int n = 0;
    if (!(hs >> kw >> n) || kw != "ring" || n < 1)
        throw FormatError(header.first, "expected 'ring <n>'");
    auto one_line = lines.take("'one <idx>'");
    std::istringstream os(one_line.second);
    int one = -1;
    if (!(os >> kw >> one) || kw != "one" || one < 0 || one >= n)
        throw FormatError(one_line.first, "expected 'one <idx>' with idx in range");
    RawRing raw;
    raw.order = n;
    raw.one = one;
    raw.add = read_table(lines, "add", n, n, n);
    raw.mul = read_table(lines, "mul", n, n, n);
    if (lines.next != lines.items.size())
        throw FormatError(lines.items[lines.next].first, "trailing content");
    return raw;
}

RawRing load_ring_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(0, "cannot open " + path);
    return load_ring_stream(in);
}

RawBimodule load_bimodule_stream(std::istream& in) {
    Lines lines = split_lines(in);
    auto header = lines.take("'bimodule <|A|> <|M|> <|B|>'");
    std::istringstream hs(header.second);
    std::string kw;
    RawBimodule raw;
    if (!(hs >> kw >> raw.a_order >> raw.m_order >> raw.b_order) ||
        kw != "bimodule" || raw.a_order < 1 || raw.m_order < 1 || raw.b_order < 1)
        throw FormatError(header.first, "expected 'bimodule <|A|> <|M|> <|B|>'");
    raw.add = read_table(lines, "add", raw.m_order, raw.m_order, raw.m_order);
    raw.laction = read_table(lines, "laction", raw.a_order, raw.m_order, raw.m_order);
    raw.raction = read_table(lines, "raction", raw.m_order, raw.b_order, raw.m_order);
    if (lines.next != lines.items.size())
        throw FormatError(lines.items[lines.next].first, "trailing content");
    return raw;
}

RawBimodule load_bimodule_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(0, "cannot open " + path);
    return load_bimodule_stream(in);
}

namespace {

void append_table(std::string& out, const std::vector<int>& t, int rows, int cols) {
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j) out += ' ';
            out += std::to_string(t[i * cols + j]);
        }
        out += '\n';
    }
}

}  // namespace

std::string format_ring_file(const Ring& r) {
    std::string out = "ring " + std::to_string(r.order()) + "\n";
    out += "one " + std::to_string(r.one()) + "\n";
    out += "add\n";
    append_table(out, r.add_table(), r.order(), r.order());
    out += "mul\n";
    append_table(out, r.mul_table(), r.order(), r.order());
    return out;
}

std::string format_bimodule_file(const Bimodule& bm) {
    const int na = bm.left_ring.order(), nm = bm.group.order(),
              nb = bm.right_ring.order();
    std::string out = "bimodule " + std::to_string(na) + " " + std::to_string(nm) +
                      " " + std::to_string(nb) + "\n";
    out += "add\n";
    append_table(out, bm.group.add_table(), nm, nm);
    out += "laction\n";
    append_table(out, bm.laction, na, nm);
    out += "raction\n";
    append_table(out, bm.raction, nm, nb);
    return out;
}

}  // namespace nilclean
