#include "crcodes/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crcodes/errors.hpp"
#include "crcodes/field.hpp"

namespace crc {

namespace {

int ipow(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Matrix from_columns(const Field& f, int rows, const std::vector<Word>& cols) {
    Matrix H(f, rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) H.at(i, static_cast<int>(j)) = cols[j][i];
    return H;
}

Matrix ones_row(const Field& f, int n) {
    Matrix r(f, 1, n);
    for (int j = 0; j < n; ++j) r.at(0, j) = 1;
    return r;
}

}  // namespace

Matrix hamming_parity(int q, int m) {
    if (m < 1) throw DomainError("Hamming redundancy must be >= 1");
    auto f = gf(q);
    std::uint64_t total = sat_pow(q, m);
    require_within("max_syndromes", total, default_guards().max_syndromes);
    std::vector<Word> cols;
    for (std::uint64_t x = 1; x < total; ++x) {
        Word w(m);
        std::uint64_t y = x;
        for (int i = 0; i < m; ++i) {
            w[i] = static_cast<Elem>(y % q);
            y /= q;
        }
        int lead = m - 1;
        while (w[lead] == 0) --lead;
        if (w[lead] == 1) cols.push_back(std::move(w));
    }
    return from_columns(f, m, cols);
}

Code hamming_code(int q, int m) { return Code::from_parity_check(hamming_parity(q, m)); }

Code half_hamming_code(int m, int i1, int i2) {
    if (m < 2) throw DomainError("half_hamming_code: m must be >= 2");
    Matrix H = hamming_parity(2, m);
    Matrix v(gf(2), 1, H.cols);
    for (int j = 0; j < H.cols; ++j) {
        int w = 0;
        for (int i = 0; i < m; ++i) w += H.at(i, j);
        v.at(0, j) = (w % 4 == i1 || w % 4 == i2) ? 1 : 0;
    }
    return Code::from_parity_check(stack(H, v));
}

std::vector<Word> subfield_coordinates(const Field& big, const Field& small) {
    SubfieldMap map(small, big);
    int q = small->q(), Q = big->q();
    int k = 0;
    for (int x = 1; x < Q; x *= q) ++k;
    if (ipow(q, k) != Q) throw DomainError("subfield_coordinates: sizes do not match");
    std::vector<Elem> basis(k);
    for (int i = 0; i < k; ++i) basis[i] = big->exp(i);
    std::vector<Word> table(Q);
    std::vector<char> seen(Q, 0);
    for (int idx = 0; idx < Q; ++idx) {
        Word c(k);
        int y = idx;
        Elem x = 0;
        for (int i = 0; i < k; ++i) {
            c[i] = static_cast<Elem>(y % q);
            y /= q;
            x = big->add(x, big->mul(map(c[i]), basis[i]));
        }
        if (seen[x]) throw InternalError("subfield basis is dependent");
        seen[x] = 1;
        table[x] = std::move(c);
    }
    return table;
}

Matrix cyclic_hamming_parity(int q, int k) {
    if (k < 2) throw DomainError("cyclic Hamming code needs k >= 2");
    int Q = ipow(q, k);
    if (Q > 256) throw DomainError("cyclic Hamming code: q^k exceeds 256");
    int n = (Q - 1) / (q - 1);
    if (std::gcd(n, q - 1) != 1) throw DomainError("cyclic Hamming code needs gcd(n, q-1) = 1");
    auto big = gf(Q);
    auto small = gf(q);
    auto coords = subfield_coordinates(big, small);
    Elem beta = big->exp(q - 1);
    std::vector<Word> cols;
    for (int j = 0; j < n; ++j) cols.push_back(coords[big->pow(beta, j)]);
    return from_columns(small, k, cols);
}

Matrix shift_columns(const Matrix& H, int i) {
    Matrix S(H.f, H.rows, H.cols);
    int n = H.cols;
    int s = ((i % n) + n) % n;
    for (int r = 0; r < H.rows; ++r)
        for (int j = 0; j < n; ++j) S.at(r, (j + s) % n) = H.at(r, j);
    return S;
}

Matrix zero_matrix(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }

Matrix hconcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DomainError("hconcat of nothing");
    int rows = blocks[0].rows, cols = 0;
    for (const auto& b : blocks) {
        if (b.rows != rows) throw DomainError("hconcat: row counts differ");
        cols += b.cols;
    }
    Matrix M(blocks[0].f, rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b.cols; ++j) M.at(i, off + j) = b.at(i, j);
        off += b.cols;
    }
    return M;
}

Matrix block_matrix(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty()) throw DomainError("block_matrix of nothing");
    Matrix M = hconcat(grid[0]);
    for (std::size_t r = 1; r < grid.size(); ++r) {
        Matrix row = hconcat(grid[r]);
        if (row.cols != M.cols) throw DomainError("block_matrix: column counts differ");
        M = stack(M, row);
    }
    return M;
}

Code cyclic_code(const Poly& g, int n) {
    int deg = g.degree();
    if (deg < 0 || deg > n) throw DomainError("cyclic_code: bad generator degree");
    Matrix G(g.f, n - deg, n);
    for (int i = 0; i < n - deg; ++i)
        for (int j = 0; j <= deg; ++j) G.at(i, i + j) = g.c[j];
    return Code::from_generator(G);
}

Poly zeros_generator(int q, int m, const std::vector<int>& zeros) {
    int Q = ipow(q, m);
    if (Q > 256) throw DomainError("zeros_generator: q^m exceeds 256");
    int n = Q - 1;
    auto ext = gf(Q);
    auto base = gf(q);
    Poly g = poly_from(base, {1});
    std::set<int> used;
    for (int e : zeros) {
        auto coset = cyclotomic_coset(((e % n) + n) % n, n, q);
        int rep = *std::min_element(coset.begin(), coset.end());
        if (!used.insert(rep).second) continue;
        g = poly_mul(g, minimal_polynomial(ext, n, rep, base));
    }
    return g;
}

Code binary_golay() {
    return cyclic_code(poly_from(gf(2), {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}), 23);
}

Code ternary_golay() { return cyclic_code(poly_from(gf(3), {2, 0, 1, 2, 1, 1}), 11); }

Code zero_sum_subcode(const Code& c) { return add_parity_rows(c, ones_row(c.field(), c.n())); }

Matrix oval_parity(int q, bool nucleus) {
    auto f = gf(q);
    if (nucleus && f->p() != 2) throw DomainError("a hyperoval needs even q");
    std::vector<Word> cols;
    for (int t = 0; t < q; ++t) {
        Elem x = static_cast<Elem>(t);
        cols.push_back({1, x, f->mul(x, x)});
    }
    cols.push_back({0, 0, 1});
    if (nucleus) cols.push_back({0, 1, 0});
    return from_columns(f, 3, cols);
}

Matrix exterior_lines_parity(int q) {
    auto f = gf(q);
    if (f->p() != 2 || q < 4) throw DomainError("exterior lines need q = 2^r >= 4");
    Matrix O = oval_parity(q, true);
    Matrix L = hamming_parity(q, 3);
    std::vector<Word> cols;
    for (int j = 0; j < L.cols; ++j) {
        bool meets = false;
        for (int p = 0; p < O.cols && !meets; ++p) {
            Elem s = 0;
            for (int i = 0; i < 3; ++i) s = f->add(s, f->mul(L.at(i, j), O.at(i, p)));
            meets = s == 0;
        }
        if (!meets) cols.push_back(L.column(j));
    }
    return from_columns(f, 3, cols);
}

Matrix binomial_parity(int m, int l) {
    if (m < 1 || m > 20 || l < 0 || l > m) throw DomainError("binomial_parity: bad (m, l)");
    std::vector<Word> cols;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != l) continue;
        Word w(m);
        for (int i = 0; i < m; ++i) w[i] = (mask >> i) & 1;
        cols.push_back(std::move(w));
    }
    return from_columns(gf(2), m, cols);
}

Matrix difference_parity(int q, int m) {
    auto f = gf(q);
    std::uint64_t total = sat_pow(q, m);
    require_within("max_vectors", total, default_guards().max_vectors);
    std::vector<Word> cols;
    for (std::uint64_t x = 0; x < total; ++x) {
        Word w(m + 1);
        w[0] = 1;
        std::uint64_t y = x;
        for (int i = 0; i < m; ++i) {
            w[i + 1] = static_cast<Elem>(y % q);
            y /= q;
        }
        cols.push_back(std::move(w));
    }
    return from_columns(f, m + 1, cols);
}

Code hadamard_11() {
    const int p = 11, N = 12;
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (int x = 1; x < p; ++x) chi[(x * x) % p] = 1;
    // Paley type I: H = I + S with S skew-symmetric.
    std::vector<std::vector<int>> H(N, std::vector<int>(N, 0));
    for (int j = 1; j < N; ++j) {
        H[0][j] = 1;
        H[j][0] = -1;
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) H[i + 1][j + 1] = chi[((j - i) % p + p) % p];
    for (int i = 0; i < N; ++i) H[i][i] += 1;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int dot = 0;
            for (int k = 0; k < N; ++k) dot += H[i][k] * H[j][k];
            if (dot != (i == j ? N : 0)) throw InternalError("Paley matrix is not Hadamard");
        }
    std::vector<Word> words;
    for (int i = 0; i < N; ++i) {
        int sign = H[i][0];
        Word w(N - 1), v(N - 1);
        for (int j = 1; j < N; ++j) {
            w[j - 1] = H[i][j] * sign < 0 ? 1 : 0;
            v[j - 1] = 1 - w[j - 1];
        }
        words.push_back(w);
        words.push_back(v);
    }
    return Code::from_codewords(gf(2), N - 1, std::move(words));
}

Code nordstrom_robinson() {
    Code g24 = extend(binary_golay());
    auto words = g24.codewords();
    const Word* octad = nullptr;
    for (const auto& w : words)
        if (weight(w) == 8) {
            octad = &w;
            break;
        }
    std::vector<int> O, R;
    for (int j = 0; j < 24; ++j) ((*octad)[j] ? O : R).push_back(j);
    std::vector<Word> out;
    for (const auto& w : words) {
        int head = 0;
        for (int k = 0; k < 7; ++k) head += w[O[k]];
        if (head > 1 || w[O[7]] != head) continue;
        Word v;
        for (int j : R) v.push_back(w[j]);
        out.push_back(std::move(v));
    }
    return Code::from_codewords(gf(2), 16, std::move(out));
}

}  // namespace crc
