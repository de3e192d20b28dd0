#pragma once

#include <cstdint>
#include <vector>

#include "crcodes/code.hpp"

namespace crc {

// GF(q)^R viewed as Z_p^D (D = r*R). A syndrome index is the base-p number
// whose digits are the field-element digits of the syndrome, component 0 lowest.
class SyndromeSpace {
public:
    SyndromeSpace(Field f, int R);

    const Field& field() const { return f_; }
    int R() const { return R_; }
    int D() const { return D_; }
    int p() const { return p_; }
    std::uint64_t size() const { return N_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) return a ^ b;
        return add_general(a, b);
    }
    std::uint64_t neg(std::uint64_t a) const;
    int digit(std::uint64_t s, int k) const;

    std::uint64_t index_of(const Word& syndrome) const;
    Word syndrome_of(std::uint64_t idx) const;

private:
    std::uint64_t add_general(std::uint64_t a, std::uint64_t b) const;
    Field f_;
    int R_, D_, p_;
    std::uint64_t N_;
    std::vector<std::uint64_t> pw_;  // p^k
};

// Syndrome indices of gamma*h_i for every column i and nonzero gamma, in
// (i, gamma) order: entry i*(q-1) + (gamma-1).
std::vector<std::uint64_t> column_syndromes(const Code& c, const SyndromeSpace& sp);

}  // namespace crc
