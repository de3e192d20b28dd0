#pragma once

#include <cstdint>
#include <string>

namespace crc {

// Resource guards for exhaustive scans. Limits are counts, not bytes.
struct Guards {
    std::uint64_t max_vectors = std::uint64_t{1} << 24;    // q^n for full-space scans
    std::uint64_t max_syndromes = std::uint64_t{1} << 25;  // q^(n-k) for coset-leader search
    std::uint64_t max_codewords = std::uint64_t{1} << 24;  // codeword enumeration
    std::uint64_t max_design_ops = 100'000'000;            // design counting operations
    std::uint64_t max_pair_ops = std::uint64_t{1} << 34;   // pairwise distance work
};

// Process-wide defaults; the CLI applies flags and environment overrides here.
Guards& default_guards();

// Reads CRCODES_MAX_VECTORS, CRCODES_MAX_SYNDROMES, CRCODES_MAX_CODEWORDS,
// CRCODES_MAX_DESIGN_OPS, CRCODES_MAX_PAIR_OPS.
void apply_env_overrides(Guards& g);

// Throws ResourceError when need > limit.
void require_within(const std::string& guard, std::uint64_t need, std::uint64_t limit);

// q^n, saturating at UINT64_MAX.
std::uint64_t sat_pow(std::uint64_t q, std::uint64_t n);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);

}  // namespace crc
