#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilclean/bimodule.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

// FNV-1a over a stream of 64-bit little-endian integers.
class Fnv1a {
public:
    void feed(std::int64_t v) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= static_cast<std::uint8_t>(v >> (8 * i));
            h_ *= 0x100000001b3ull;
        }
    }
    void feed(const std::vector<int>& vs) {
        for (int v : vs) feed(static_cast<std::int64_t>(v));
    }
    std::uint64_t value() const { return h_; }
    std::string hex() const;

private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

// 16 hex chars over (order, one, add row-major, mul row-major).
std::string canonical_hash(const Ring& r);

// Content hash of a bimodule (corner orders, M addition, both actions).
std::string bimodule_hash(const Bimodule& bm);

std::string string_hash(const std::string& s);

}  // namespace nilclean
