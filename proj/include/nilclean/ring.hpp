#pragma once

#include <map>
#include <vector>

#include "nilclean/errors.hpp"

namespace nilclean {

// Raw Cayley tables before validation. Tables are row-major, indices 0..n-1.
struct RawRing {
    int order = 0;
    std::vector<int> add;  // order x order
    std::vector<int> mul;  // order x order
    int one = 0;
};

// A finite unital ring given by validated addition/multiplication tables.
// Index 0 is the additive identity. Immutable after construction.
class Ring {
public:
    int order() const { return n_; }
    int one() const { return one_; }

    int add(int a, int b) const { return add_[a * n_ + b]; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, int k) const;

    const std::vector<int>& add_table() const { return add_; }
    const std::vector<int>& mul_table() const { return mul_; }

    std::vector<int> idempotents() const;
    std::vector<int> nilpotents() const;
    std::vector<int> units() const;
    bool is_idempotent(int a) const { return mul(a, a) == a; }
    bool is_nilpotent(int a) const;

private:
    friend Ring validate_ring(const RawRing& raw);
    int n_ = 0;
    int one_ = 0;
    std::vector<int> add_, mul_, neg_;
};

// Checks all eight axiom families exhaustively (O(n^3)) in a fixed order:
// additive group, commutativity, mul associativity, left distributivity,
// right distributivity, unity. Throws AxiomViolation on the first failure.
Ring validate_ring(const RawRing& raw);

// eta(a) = { e idempotent : a - e nilpotent }, sorted ascending.
struct EtaSet {
    int element = 0;
    std::vector<int> members;
    int size() const { return static_cast<int>(members.size()); }
};

EtaSet eta(const Ring& r, int a);

// Nin(R) with the smallest witness and the full |eta| histogram.
struct IndexReport {
    int nin = 0;
    int witness = 0;
    std::map<int, int> histogram;  // |eta(a)| -> count
};

IndexReport nil_clean_index(const Ring& r);

bool is_nil_clean_ring(const Ring& r);

}  // namespace nilclean
