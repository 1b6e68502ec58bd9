#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclean/errors.hpp"

namespace nilclean {

// A finite abelian group given by its addition table; index 0 is the identity.
class FinAbGroup {
public:
    int order() const { return n_; }
    int add(int a, int b) const { return add_[a * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    const std::vector<int>& add_table() const { return add_; }

private:
    friend FinAbGroup validate_group(int order, const std::vector<int>& add);
    int n_ = 0;
    std::vector<int> add_, neg_;
};

FinAbGroup validate_group(int order, const std::vector<int>& add);

// Isomorphism type as an invariant-factor chain d1 | d2 | ... | dk.
struct GroupType {
    std::vector<int> invariant_factors;  // each >= 2; empty for the trivial group
    bool operator==(const GroupType&) const = default;
    // "C2", "C4", "C2xC2", ... ("C1" for the trivial group).
    std::string name() const;
    int order() const;
};

// Multiset (sorted) of element orders under repeated addition.
std::vector<int> element_orders(const FinAbGroup& g);

// Classifies by matching element-order statistics against the table of all
// abelian types of this order. Throws NotClassified above the bound.
GroupType classify(const FinAbGroup& g, int bound = 64);

// All abelian isomorphism types of a given order, deterministic order.
std::vector<GroupType> abelian_types_of_order(int order);

// Canonical group of a given type: direct sum of cyclic groups of the
// invariant factors, mixed-radix index encoding (first factor most significant).
FinAbGroup group_of_type(const GroupType& t);

// Some(p, k) iff the type is cyclic of prime-power order p^k (k >= 1).
std::optional<std::pair<int, int>> is_cyclic_p_power(const GroupType& t);

// True iff `subset` is a subgroup strictly smaller than g.
// Throws NotASubgroup when closure under add/neg fails or 0 is missing.
bool is_proper_subgroup(const FinAbGroup& g, const std::vector<int>& subset);

// Direct sum with index (i, j) -> i * |g2| + j.
FinAbGroup direct_sum(const FinAbGroup& g1, const FinAbGroup& g2);

}  // namespace nilclean
