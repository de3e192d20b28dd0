#pragma once

#include <vector>

#include "crcodes/code.hpp"

namespace testutil {

using namespace crc;

// Parity-check matrix whose columns are all points of PG(m-1, q), first nonzero entry 1.
inline Matrix projective_columns(int q, int m) {
    auto f = gf(q);
    std::vector<Word> cols;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    for (std::uint64_t x = 1; x < total; ++x) {
        Word w(m);
        std::uint64_t y = x;
        for (int i = 0; i < m; ++i) {
            w[i] = static_cast<Elem>(y % q);
            y /= q;
        }
        int lead = -1;
        for (int i = m - 1; i >= 0; --i)
            if (w[i]) {
                lead = i;
                break;
            }
        if (w[lead] == 1) cols.push_back(w);
    }
    Matrix H(f, m, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < m; ++i) H.at(i, static_cast<int>(j)) = cols[j][i];
    return H;
}

inline Code hamming(int q, int m) { return Code::from_parity_check(projective_columns(q, m)); }

// Cyclic code from its generator polynomial (coefficients low to high).
inline Code cyclic(int q, int n, const std::vector<int>& g) {
    auto f = gf(q);
    int deg = static_cast<int>(g.size()) - 1;
    Matrix G(f, n - deg, n);
    for (int i = 0; i < n - deg; ++i)
        for (int j = 0; j <= deg; ++j) G.at(i, i + j) = f->from_int(g[j]);
    return Code::from_generator(G);
}

inline Code binary_golay() { return cyclic(2, 23, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}); }
inline Code ternary_golay() { return cyclic(3, 11, {2, 0, 1, 2, 1, 1}); }

}  // namespace testutil
