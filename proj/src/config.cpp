#include "crcodes/config.hpp"

#include <cstdlib>
#include <limits>

#include "crcodes/errors.hpp"

namespace crc {

Guards& default_guards() {
    static Guards g;
    return g;
}

namespace {
void read_env(const char* name, std::uint64_t& slot) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0') slot = x;
}
}  // namespace

void apply_env_overrides(Guards& g) {
    read_env("CRCODES_MAX_VECTORS", g.max_vectors);
    read_env("CRCODES_MAX_SYNDROMES", g.max_syndromes);
    read_env("CRCODES_MAX_CODEWORDS", g.max_codewords);
    read_env("CRCODES_MAX_DESIGN_OPS", g.max_design_ops);
    read_env("CRCODES_MAX_PAIR_OPS", g.max_pair_ops);
}

void require_within(const std::string& guard, std::uint64_t need, std::uint64_t limit) {
    if (need > limit) {
        throw ResourceError(guard, "resource guard '" + guard + "' exceeded: need " +
                                       (need == std::numeric_limits<std::uint64_t>::max()
                                            ? std::string("overflow")
                                            : std::to_string(need)) +
                                       ", limit " + std::to_string(limit));
    }
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        r = sat_mul(r, q);
        if (r == std::numeric_limits<std::uint64_t>::max()) break;
    }
    return r;
}

}  // namespace crc
