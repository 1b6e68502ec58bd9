#include "nilclean/ring.hpp"

#include <algorithm>
#include <string>

namespace nilclean {

namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
}

void check_shape(const RawRing& raw) {
    const int n = raw.order;
    if (n < 1) throw AxiomViolation("shape", "order " + std::to_string(n));
    auto check_table = [&](const std::vector<int>& t, const char* name) {
        if (static_cast<int>(t.size()) != n * n)
            throw AxiomViolation("shape", std::string(name) + " size");
        for (int v : t)
            if (v < 0 || v >= n)
                throw AxiomViolation("shape",
                                     std::string(name) + " entry " + std::to_string(v));
    };
    check_table(raw.add, "add");
    check_table(raw.mul, "mul");
    if (raw.one < 0 || raw.one >= n)
        throw AxiomViolation("shape", "one " + std::to_string(raw.one));
}

}  // namespace

Ring validate_ring(const RawRing& raw) {
    check_shape(raw);
    const int n = raw.order;
    auto add = [&](int a, int b) { return raw.add[a * n + b]; };
    auto mul = [&](int a, int b) { return raw.mul[a * n + b]; };

    // Additive group: identity row/column 0, associativity, inverses.
    for (int a = 0; a < n; ++a) {
        if (add(0, a) != a)
            throw AxiomViolation("additive-identity", triple(0, a, add(0, a)));
        if (add(a, 0) != a)
            throw AxiomViolation("additive-identity", triple(a, 0, add(a, 0)));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw AxiomViolation("additive-associativity", triple(a, b, c));
    std::vector<int> neg(n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            int s = add(a, b);
            if (seen[s])
                throw AxiomViolation("additive-inverses",
                                     "row " + std::to_string(a) + " not a permutation");
            seen[s] = 1;
            if (s == 0) neg[a] = b;
        }
        if (neg[a] < 0)
            throw AxiomViolation("additive-inverses",
                                 "row " + std::to_string(a) + " misses 0");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add(a, b) != add(b, a))
                throw AxiomViolation("additive-commutativity", triple(a, b, -1));

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw AxiomViolation("mul-associativity", triple(a, b, c));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw AxiomViolation("left-distributivity", triple(a, b, c));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                    throw AxiomViolation("right-distributivity", triple(a, b, c));
    for (int a = 0; a < n; ++a) {
        if (mul(raw.one, a) != a)
            throw AxiomViolation("unity", triple(raw.one, a, mul(raw.one, a)));
        if (mul(a, raw.one) != a)
            throw AxiomViolation("unity", triple(a, raw.one, mul(a, raw.one)));
    }

    Ring r;
    r.n_ = n;
    r.one_ = raw.one;
    r.add_ = raw.add;
    r.mul_ = raw.mul;
    r.neg_ = std::move(neg);
    return r;
}

int Ring::pow(int a, int k) const {
    int acc = one_;
    for (int i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

std::vector<int> Ring::idempotents() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (mul(a, a) == a) out.push_back(a);
    return out;
}

bool Ring::is_nilpotent(int a) const {
    // The forward orbit a, a^2, ... of length <= n either hits 0 or cycles.
    int p = a;
    for (int k = 1; k <= n_; ++k) {
        if (p == 0) return true;
        p = mul(p, a);
    }
    return p == 0;
}

std::vector<int> Ring::nilpotents() const {
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (is_nilpotent(a)) out.push_back(a);
    return out;
}

std::vector<int> Ring::units() const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (mul(u, v) == one_ && mul(v, u) == one_) {
                out.push_back(u);
                break;
            }
    return out;
}

EtaSet eta(const Ring& r, int a) {
    EtaSet s;
    s.element = a;
    for (int e : r.idempotents())
        if (r.is_nilpotent(r.sub(a, e))) s.members.push_back(e);
    return s;
}

IndexReport nil_clean_index(const Ring& r) {
    IndexReport rep;
    const auto idem = r.idempotents();
    rep.nin = -1;
    for (int a = 0; a < r.order(); ++a) {
        int count = 0;
        for (int e : idem)
            if (r.is_nilpotent(r.sub(a, e))) ++count;
        ++rep.histogram[count];
        if (count > rep.nin) {
            rep.nin = count;
            rep.witness = a;
        }
    }
    return rep;
}

bool is_nil_clean_ring(const Ring& r) {
    const auto rep = nil_clean_index(r);
    auto it = rep.histogram.find(0);
    return it == rep.histogram.end() || it->second == 0;
}

}  // namespace nilclean
