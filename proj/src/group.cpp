#include "nilclean/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nilclean {

namespace {

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Partitions of n into descending parts, lexicographically descending.
void partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

FinAbGroup validate_group(int order, const std::vector<int>& add) {
    const int n = order;
    if (n < 1) throw AxiomViolation("shape", "order " + std::to_string(n));
    if (static_cast<int>(add.size()) != n * n)
        throw AxiomViolation("shape", "add size");
    for (int v : add)
        if (v < 0 || v >= n) throw AxiomViolation("shape", "add entry");
    auto at = [&](int a, int b) { return add[a * n + b]; };
    for (int a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw AxiomViolation("additive-identity", pair_str(0, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw AxiomViolation("additive-associativity",
                                         pair_str(a, b) + "+" + std::to_string(c));
    std::vector<int> neg(n, -1);
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            int s = at(a, b);
            if (seen[s])
                throw AxiomViolation("additive-inverses", "row " + std::to_string(a));
            seen[s] = 1;
            if (s == 0) neg[a] = b;
        }
        if (neg[a] < 0)
            throw AxiomViolation("additive-inverses", "row " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at(a, b) != at(b, a))
                throw AxiomViolation("additive-commutativity", pair_str(a, b));

    FinAbGroup g;
    g.n_ = n;
    g.add_ = add;
    g.neg_ = std::move(neg);
    return g;
}

std::string GroupType::name() const {
    if (invariant_factors.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(invariant_factors[i]);
    }
    return s;
}

int GroupType::order() const {
    int p = 1;
    for (int d : invariant_factors) p *= d;
    return p;
}

std::vector<int> element_orders(const FinAbGroup& g) {
    std::vector<int> orders;
    orders.reserve(g.order());
    for (int a = 0; a < g.order(); ++a) {
        int acc = a, k = 1;
        while (acc != 0) {
            acc = g.add(acc, a);
            ++k;
        }
        orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<GroupType> abelian_types_of_order(int order) {
    // Prime factorization, then one exponent partition per prime.
    std::map<int, int> factor;
    int m = order;
    for (int p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++factor[p];
            m /= p;
        }
    if (m > 1) ++factor[m];

    std::vector<std::vector<std::vector<int>>> per_prime;  // partitions per prime
    std::vector<int> primes;
    for (auto& [p, e] : factor) {
        primes.push_back(p);
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(e, e, cur, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<GroupType> out;
    std::vector<std::size_t> pick(primes.size(), 0);
    while (true) {
        // Align the chosen partitions (descending) and multiply columnwise.
        std::size_t k = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            k = std::max(k, per_prime[i][pick[i]].size());
        if (primes.empty()) k = 0;
        std::vector<int> factors;  // descending, then reversed
        for (std::size_t j = 0; j < k; ++j) {
            long long d = 1;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                const auto& part = per_prime[i][pick[i]];
                int e = j < part.size() ? part[j] : 0;
                for (int t = 0; t < e; ++t) d *= primes[i];
            }
            factors.push_back(static_cast<int>(d));
        }
        std::reverse(factors.begin(), factors.end());
        out.push_back(GroupType{std::move(factors)});

        std::size_t i = 0;
        for (; i < primes.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == primes.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const GroupType& a, const GroupType& b) {
        return a.invariant_factors < b.invariant_factors;
    });
    return out;
}

FinAbGroup group_of_type(const GroupType& t) {
    const int n = t.order();
    const auto& f = t.invariant_factors;
    std::vector<int> add(static_cast<std::size_t>(n) * n);
    auto digits = [&](int a) {
        std::vector<int> d(f.size());
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
            d[i] = a % f[i];
            a /= f[i];
        }
        return d;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto da = digits(a), db = digits(b);
            int s = 0;
            for (std::size_t i = 0; i < f.size(); ++i)
                s = s * f[i] + (da[i] + db[i]) % f[i];
            add[a * n + b] = s;
        }
    return validate_group(n, add);
}

GroupType classify(const FinAbGroup& g, int bound) {
    if (g.order() > bound) throw NotClassified(g.order());
    const auto orders = element_orders(g);
    for (const auto& t : abelian_types_of_order(g.order()))
        if (element_orders(group_of_type(t)) == orders) return t;
    // Unreachable for a valid abelian group: order statistics always match
    // exactly one type.
    throw NotClassified(g.order());
}

std::optional<std::pair<int, int>> is_cyclic_p_power(const GroupType& t) {
    if (t.invariant_factors.size() != 1) return std::nullopt;
    int d = t.invariant_factors[0];
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        int k = 0, m = d;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m == 1) return std::make_pair(p, k);
        return std::nullopt;
    }
    return std::nullopt;
}

bool is_proper_subgroup(const FinAbGroup& g, const std::vector<int>& subset) {
    std::vector<char> in(g.order(), 0);
    for (int a : subset) {
        if (a < 0 || a >= g.order()) throw NotASubgroup("index out of range");
        in[a] = 1;
    }
    if (!in[0]) throw NotASubgroup("missing 0");
    for (int a = 0; a < g.order(); ++a) {
        if (!in[a]) continue;
        if (!in[g.neg(a)]) throw NotASubgroup("not closed under negation at " +
                                              std::to_string(a));
        for (int b = 0; b < g.order(); ++b)
            if (in[b] && !in[g.add(a, b)])
                throw NotASubgroup("not closed under addition at " + pair_str(a, b));
    }
    int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
    return count != g.order();
}

FinAbGroup direct_sum(const FinAbGroup& g1, const FinAbGroup& g2) {
    const int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
    std::vector<int> add(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            add[a * n + b] = g1.add(a / n2, b / n2) * n2 + g2.add(a % n2, b % n2);
    return validate_group(n, add);
}

}  // namespace nilclean
