#include "nilclean/hash.hpp"

namespace nilclean {

std::string Fnv1a::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i)
        s[15 - i] = digits[(h_ >> (4 * i)) & 0xf];
    return s;
}

std::string canonical_hash(const Ring& r) {
    Fnv1a h;
    h.feed(r.order());
    h.feed(r.one());
    h.feed(r.add_table());
    h.feed(r.mul_table());
    return h.hex();
}

std::string bimodule_hash(const Bimodule& bm) {
    Fnv1a h;
    h.feed(bm.left_ring.order());
    h.feed(bm.group.order());
    h.feed(bm.right_ring.order());
    h.feed(bm.group.add_table());
    h.feed(bm.laction);
    h.feed(bm.raction);
    return h.hex();
}

std::string string_hash(const std::string& s) {
    Fnv1a h;
    for (unsigned char c : s) h.feed(static_cast<std::int64_t>(c));
    return h.hex();
}

}  // namespace nilclean
