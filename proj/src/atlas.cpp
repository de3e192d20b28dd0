#include "crcodes/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "crcodes/constructions.hpp"
#include "crcodes/errors.hpp"
#include "crcodes/graph.hpp"
#include "crcodes/lloyd.hpp"
#include "json.hpp"

namespace crc::atlas {

namespace {

using I64 = std::int64_t;

I64 ipow(I64 b, int e) {
    I64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

I64 choose2(I64 x) { return x * (x - 1) / 2; }

IntersectionArray ia(int n, int q, std::vector<I64> b, std::vector<I64> c) {
    IntersectionArray a;
    a.n = n;
    a.q = q;
    a.b = std::move(b);
    a.c = std::move(c);
    return a;
}

Expectation cr(IntersectionArray a, int d = 0) {
    Expectation e;
    e.ia = std::move(a);
    e.d = d;
    return e;
}

void need(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

// Desk-scale ceiling: syndrome count times length.
constexpr std::uint64_t kFeasibleWork = std::uint64_t{1} << 26;

void feasible(int q, int n, int redundancy) {
    std::uint64_t work = sat_mul(sat_pow(q, redundancy), static_cast<std::uint64_t>(n));
    if (work > kFeasibleWork)
        throw ResourceError("feasibility", "catalog ceiling: q^(n-k) * n = " + std::to_string(work) + " exceeds " +
                                               std::to_string(kFeasibleWork));
}

void field_ok(I64 Q) {
    if (Q > 256) throw ResourceError("feasibility", "field order " + std::to_string(Q) + " exceeds 256");
    prime_power(static_cast<int>(Q));
}

int hamming_length(int q, int m) { return static_cast<int>((ipow(q, m) - 1) / (q - 1)); }

void hamming_ok(int q, int m) {
    field_ok(q);
    need(m >= 2, "Hamming redundancy m must be >= 2");
    feasible(q, hamming_length(q, m), m);
}

Matrix ones(const Field& f, int n) {
    Matrix r(f, 1, n);
    for (int j = 0; j < n; ++j) r.at(0, j) = 1;
    return r;
}

std::vector<Word> pair_words(int len, int q = 2) {
    std::vector<Word> S;
    for (int a = 0; a < q; ++a) S.push_back(Word(len, static_cast<Elem>(a)));
    return S;
}

// Lift / Kronecker intersection numbers with rho = min(A, B).
IntersectionArray lift_ia(int n, int qcode, int q, int A, int B) {
    int rho = std::min(A, B);
    std::vector<I64> b, c;
    for (int i = 0; i < rho; ++i) b.push_back((ipow(q, A) - ipow(q, i)) * (ipow(q, B) - ipow(q, i)) / (q - 1));
    for (int i = 1; i <= rho; ++i) c.push_back(ipow(q, i - 1) * (ipow(q, i) - 1) / (q - 1));
    return ia(n, qcode, b, c);
}

Matrix repetition_parity(const Field& f, int nb) {
    Matrix R(f, nb - 1, nb);
    for (int i = 0; i + 1 < nb; ++i) {
        R.at(i, i) = 1;
        R.at(i, i + 1) = f->neg(1);
    }
    return R;
}

Matrix k_block(int shift) {
    Matrix K = matrix_from_rows(gf(2), {{1, 0, 1}, {0, 1, 1}});
    return shift_columns(K, shift);
}

const int kDifference23[6][6] = {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 2, 2, 1}, {0, 1, 0, 1, 2, 2},
                                 {0, 2, 1, 0, 1, 2}, {0, 2, 2, 1, 0, 1}, {0, 1, 2, 2, 1, 0}};

Matrix difference_k_parity(bool drop_first) {
    std::vector<std::vector<Matrix>> grid;
    for (int r = 0; r < 6; ++r) {
        std::vector<Matrix> row;
        for (int c = drop_first ? 1 : 0; c < 6; ++c) row.push_back(k_block(kDifference23[r][c]));
        grid.push_back(row);
    }
    return block_matrix(grid);
}

void half_ok(const Params& p, const std::vector<std::pair<int, int>>& allowed) {
    int m = p.at("m");
    need(m >= 4 && m % 2 == 0, "m must be even and >= 4");
    feasible(2, (1 << m) - 1, m + 1);
    std::pair<int, int> s{std::min(p.at("i1"), p.at("i2")), std::max(p.at("i1"), p.at("i2"))};
    need(std::find(allowed.begin(), allowed.end(), s) != allowed.end(), "unsupported {i1, i2} pair for this family");
}

// C^(i) of the nested family: H_m (columns alpha^j) with i independent rows of
// the binary image of alpha^(jr), r = 2^u + 1.
Code nested_code(int m, int i) {
    int u = m / 2;
    int n = (1 << m) - 1, r = (1 << u) + 1;
    auto big = gf(1 << m);
    Matrix H(gf(2), m, n), E(gf(2), m, n);
    for (int j = 0; j < n; ++j) {
        Elem a = big->exp(j), b = big->exp(static_cast<long long>(j) * r);
        for (int k = 0; k < m; ++k) {
            H.at(k, j) = static_cast<Elem>(big->digit(a, k));
            E.at(k, j) = static_cast<Elem>(big->digit(b, k));
        }
    }
    rref(E);
    if (E.rows != u) throw InternalError("nested family: subfield image has the wrong rank");
    Matrix P = H;
    for (int k = 0; k < i; ++k) {
        Matrix row(gf(2), 1, n);
        for (int j = 0; j < n; ++j) row.at(0, j) = E.at(k, j);
        P = stack(P, row);
    }
    return Code::from_parity_check(P);
}

void nested_ok(const Params& p) {
    int m = p.at("m"), i = p.at("i");
    need(m >= 4 && m % 2 == 0, "m must be even and >= 4");
    need(i >= 0 && i <= m / 2, "i must lie in 0..m/2");
    field_ok(ipow(2, m));
    feasible(2, (1 << m), m + i + 1);
}

IntersectionArray nested_ia(int m, int i, bool extended) {
    I64 N = ipow(2, m);
    if (i == 0)
        return extended ? ia(static_cast<int>(N), 2, {N, N - 1}, {1, N}) : ia(static_cast<int>(N - 1), 2, {N - 1}, {1});
    I64 mid = N - ipow(2, m - i), back = ipow(2, m - i);
    if (extended) return ia(static_cast<int>(N), 2, {N, N - 1, mid, 1}, {1, back, N - 1, N});
    return ia(static_cast<int>(N - 1), 2, {N - 1, mid, 1}, {1, back, N - 1});
}

Matrix concat33(int q, int k, int c) {
    Matrix H = cyclic_hamming_parity(q, k);
    std::vector<Matrix> top, bottom;
    for (int i = 1; i <= c; ++i) {
        top.push_back(H);
        bottom.push_back(shift_columns(H, i));
    }
    return block_matrix({top, bottom});
}

Matrix concat34(int q, int k, int c) {
    Matrix H = cyclic_hamming_parity(q, k);
    Matrix Z = zero_matrix(H.f, H.rows, H.cols);
    std::vector<Matrix> top{H, Z, H}, bottom{Z, H, H};
    for (int i = 1; i <= c; ++i) {
        top.push_back(H);
        bottom.push_back(shift_columns(H, i));
    }
    return block_matrix({top, bottom});
}

void cyclic_hamming_ok(int q, int k) {
    field_ok(ipow(q, k));
    need(k >= 2, "k must be >= 2");
    int n = hamming_length(q, k);
    need(std::gcd(n, q - 1) == 1, "cyclic Hamming code needs gcd(n, q-1) = 1");
}

Matrix latin_d1(int q) {
    auto f = gf(q);
    for (int a = 2; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (f->add(f->add(static_cast<Elem>(a), static_cast<Elem>(b)), 1) == 0) {
                Matrix D(f, 2, 4);
                D.at(0, 0) = D.at(0, 1) = D.at(0, 2) = D.at(0, 3) = 1;
                D.at(1, 1) = 1;
                D.at(1, 2) = static_cast<Elem>(a);
                D.at(1, 3) = static_cast<Elem>(b);
                return D;
            }
    throw DomainError("no pair xi_i != xi_j outside {0, 1} with xi_i + xi_j + 1 = 0 in GF(" + std::to_string(q) + ")");
}

Matrix rho1_parity(int q, int m, int l, int u) {
    Matrix H = hamming_parity(q, m);
    std::vector<Matrix> blocks(l, H);
    if (u > 0) blocks.push_back(zero_matrix(H.f, H.rows, u));
    return hconcat(blocks);
}

void rho1_ok(const Params& p) {
    int q = p.at("q"), m = p.at("m"), l = p.at("l"), u = p.at("u");
    hamming_ok(q, m);
    need(l >= 1 && u >= 0, "need l >= 1 and u >= 0");
    feasible(q, hamming_length(q, m) * l + u, m);
}

Expectation rho1_expect(const Params& p) {
    int q = p.at("q"), m = p.at("m"), l = p.at("l"), u = p.at("u");
    int nm = hamming_length(q, m);
    int d = u > 0 ? 1 : (l >= 2 ? 2 : 3);
    return cr(ia(nm * l + u, q, {static_cast<I64>(q - 1) * l * nm}, {l}), d);
}

Code two_zero_cyclic(int m, int l) { return cyclic_code(zeros_generator(2, m, {1, l}), (1 << m) - 1); }

// Walsh spectrum of x^l over GF(2^m) restricted to {0, +-2^((m+1)/2)}.
bool almost_bent_power(int m, int l) {
    auto f = gf(1 << m);
    int Q = 1 << m;
    std::vector<int> tr(Q), tfx(Q);
    for (int y = 0; y < Q; ++y) {
        Elem t = 0, z = static_cast<Elem>(y);
        for (int i = 0; i < m; ++i) {
            t = f->add(t, z);
            z = f->mul(z, z);
        }
        tr[y] = t;
    }
    auto trace = [&](Elem y) { return tr[y]; };
    I64 bound = I64{1} << ((m + 1) / 2);
    for (int b = 1; b < Q; ++b) {
        for (int x = 0; x < Q; ++x) tfx[x] = trace(f->mul(static_cast<Elem>(b), f->pow(static_cast<Elem>(x), l)));
        for (int a = 0; a < Q; ++a) {
            I64 s = 0;
            for (int x = 0; x < Q; ++x) s += ((tfx[x] ^ trace(f->mul(static_cast<Elem>(a), static_cast<Elem>(x)))) ? -1 : 1);
            if (s != 0 && s != bound && s != -bound) return false;
        }
    }
    return true;
}

void two_zero_ok(const Params& p) {
    int m = p.at("m");
    need(m >= 3 && m % 2 == 1, "m must be odd and >= 3");
    field_ok(ipow(2, m));
    feasible(2, (1 << m), 2 * m + 1);
    int l = p.at("l");
    need(l > 0 && l % ((1 << m) - 1) != 0, "exponent l must be a nonzero residue");
    auto coset = cyclotomic_coset(l % ((1 << m) - 1), (1 << m) - 1, 2);
    need(std::find(coset.begin(), coset.end(), 1) == coset.end(), "exponent l lies in the cyclotomic coset of 1");
    need(almost_bent_power(m, l), "x^" + std::to_string(l) + " is not almost bent over GF(2^" + std::to_string(m) + ")");
}

IntersectionArray two_zero_ia(int m, bool extended) {
    I64 n = ipow(2, m) - 1;
    if (extended) return ia(static_cast<int>(n + 1), 2, {n + 1, n, n - 1, (n + 3) / 2}, {1, 2, (n - 1) / 2, n + 1});
    return ia(static_cast<int>(n), 2, {n, n - 1, (n + 3) / 2}, {1, 2, (n - 1) / 2});
}

Params P(std::initializer_list<std::pair<const std::string, int>> l) { return Params(l); }

std::vector<Family> make_catalog() {
    std::vector<Family> cat;
    auto add = [&](Family f) { cat.push_back(std::move(f)); };
    auto no_validate = [](const Params&) {};

    // ---------------------------------------------------------------- perfect codes
    add({"F.1", "q-ary Hamming code", {{"q", 2}, {"m", 3}}, Provenance::Paper, false, false, "",
         "q^m * n <= 2^26",
         [](const Params& p) { hamming_ok(p.at("q"), p.at("m")); },
         [](const Params& p) { return hamming_code(p.at("q"), p.at("m")); },
         [](const Params& p) {
             int q = p.at("q"), n = hamming_length(q, p.at("m"));
             return cr(ia(n, q, {static_cast<I64>(q - 1) * n}, {1}), 3);
         },
         {P({{"q", 2}, {"m", 3}}), P({{"q", 2}, {"m", 4}}), P({{"q", 2}, {"m", 5}}), P({{"q", 3}, {"m", 2}}),
          P({{"q", 3}, {"m", 3}}), P({{"q", 4}, {"m", 2}}), P({{"q", 4}, {"m", 3}}), P({{"q", 5}, {"m", 2}}),
          P({{"q", 7}, {"m", 2}}), P({{"q", 8}, {"m", 2}})}});

    add({"F.2", "extended perfect code (binary extended Hamming, or the hyperoval code for even q, m = 2)",
         {{"q", 2}, {"m", 3}}, Provenance::Derived, false, false,
         "printed c_2 = 4 holds only for n = 3; the array used has c_2 = n+1", "q = 2, or q = 2^r with m = 2",
         [](const Params& p) {
             int q = p.at("q"), m = p.at("m");
             hamming_ok(q, m);
             need(q == 2 || (q % 2 == 0 && m == 2), "extended perfect linear codes exist for q = 2 or q = 2^r, m = 2");
         },
         [](const Params& p) {
             if (p.at("q") == 2) return extend(hamming_code(2, p.at("m")));
             return Code::from_parity_check(oval_parity(p.at("q"), true));
         },
         [](const Params& p) {
             int q = p.at("q"), n = hamming_length(q, p.at("m"));
             return cr(ia(n + 1, q, {static_cast<I64>(q - 1) * (n + 1), static_cast<I64>(q - 1) * n}, {1, n + 1}), 4);
         },
         {P({{"q", 2}, {"m", 3}}), P({{"q", 2}, {"m", 4}}), P({{"q", 2}, {"m", 5}}), P({{"q", 4}, {"m", 2}}),
          P({{"q", 8}, {"m", 2}})}});

    add({"F.3", "punctured Hamming code", {{"q", 2}, {"m", 3}}, Provenance::Paper, false, false, "", "as F.1",
         [](const Params& p) {
             hamming_ok(p.at("q"), p.at("m"));
             need(hamming_length(p.at("q"), p.at("m")) >= 3, "length must be >= 3");
         },
         [](const Params& p) { return puncture(hamming_code(p.at("q"), p.at("m")), 0); },
         [](const Params& p) {
             int q = p.at("q"), n = hamming_length(q, p.at("m"));
             return cr(ia(n - 1, q, {static_cast<I64>(q - 1) * (n - 1)}, {q}), 2);
         },
         {P({{"q", 2}, {"m", 3}}), P({{"q", 2}, {"m", 4}}), P({{"q", 3}, {"m", 2}}), P({{"q", 3}, {"m", 3}}),
          P({{"q", 4}, {"m", 2}}), P({{"q", 5}, {"m", 2}})}});

    add({"F.4", "even half of a binary Hamming code", {{"m", 4}}, Provenance::Paper, false, false,
         "binary member only; q-ary qualifying subcodes are not given constructively", "m <= 20",
         [](const Params& p) { hamming_ok(2, p.at("m")); need(p.at("m") >= 3, "m must be >= 3"); },
         [](const Params& p) { return zero_sum_subcode(hamming_code(2, p.at("m"))); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 1;
             return cr(ia(static_cast<int>(n), 2, {n, n - 1, 1}, {1, n - 1, n}), 4);
         },
         {P({{"m", 3}}), P({{"m", 4}}), P({{"m", 5}})}});

    add({"F.5", "conic code [q+1, q-2, 4]_q, q = 2^r", {{"q", 4}}, Provenance::Paper, false, false,
         "odd q: every point off a conic lies on a secant, so rho = 2 and the code is not CR",
         "q = 2^r, 4 <= q <= 256",
         [](const Params& p) {
             int q = p.at("q");
             field_ok(q);
             need(q >= 4 && q % 2 == 0, "q must be 2^r >= 4 (for odd q the conic code has covering radius 2)");
             feasible(q, q + 1, 3);
         },
         [](const Params& p) { return Code::from_parity_check(oval_parity(p.at("q"), false)); },
         [](const Params& p) {
             I64 q = p.at("q");
             return cr(ia(static_cast<int>(q + 1), static_cast<int>(q), {q * q - 1, q * (q - 1), 1}, {1, q, q * q - 1}), 4);
         },
         {P({{"q", 4}}), P({{"q", 8}}), P({{"q", 16}})}});

    add({"F.6", "shortened Hamming code", {{"q", 2}, {"m", 3}}, Provenance::Paper, false, false, "", "as F.1",
         [](const Params& p) { hamming_ok(p.at("q"), p.at("m")); },
         [](const Params& p) { return shorten(hamming_code(p.at("q"), p.at("m")), 0); },
         [](const Params& p) {
             int q = p.at("q"), n = hamming_length(q, p.at("m")) - 1;
             return cr(ia(n, q, {static_cast<I64>(q - 1) * n, q - 1}, {1, static_cast<I64>(q - 1) * n}), 3);
         },
         {P({{"q", 2}, {"m", 3}}), P({{"q", 2}, {"m", 4}}), P({{"q", 3}, {"m", 2}}), P({{"q", 3}, {"m", 3}}),
          P({{"q", 4}, {"m", 2}})}});

    // ---------------------------------------------------------------- halves of Hamming codes
    add({"F.7", "self-complementary half of a Hamming code (extra row by column weight mod 4)",
         {{"m", 4}, {"i1", 1}, {"i2", 2}}, Provenance::Paper, false, false, "", "m even, 4 <= m <= 10",
         [](const Params& p) { half_ok(p, {{1, 2}, {2, 3}}); },
         [](const Params& p) { return half_hamming_code(p.at("m"), p.at("i1"), p.at("i2")); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 1;
             return cr(ia(static_cast<int>(n), 2, {n, (n + 1) / 2, 1}, {1, (n + 1) / 2, n}), 3);
         },
         {P({{"m", 4}, {"i1", 1}, {"i2", 2}}), P({{"m", 4}, {"i1", 2}, {"i2", 3}}),
          P({{"m", 6}, {"i1", 1}, {"i2", 2}}), P({{"m", 6}, {"i1", 2}, {"i2", 3}})}});

    add({"F.8", "non-self-complementary half of a Hamming code", {{"m", 4}, {"i1", 0}, {"i2", 1}},
         Provenance::Paper, false, false, "", "m even, 4 <= m <= 10",
         [](const Params& p) { half_ok(p, {{0, 1}, {0, 3}}); },
         [](const Params& p) { return half_hamming_code(p.at("m"), p.at("i1"), p.at("i2")); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 1;
             return cr(ia(static_cast<int>(n), 2, {n, (n - 3) / 2, 1}, {1, (n - 3) / 2, n}), 3);
         },
         {P({{"m", 4}, {"i1", 0}, {"i2", 1}}), P({{"m", 4}, {"i1", 0}, {"i2", 3}}),
          P({{"m", 6}, {"i1", 0}, {"i2", 1}}), P({{"m", 6}, {"i1", 0}, {"i2", 3}})}});

    add({"F.9", "extension of the self-complementary half", {{"m", 4}, {"i1", 1}, {"i2", 2}}, Provenance::Paper,
         false, false, "", "m even, 4 <= m <= 10",
         [](const Params& p) { half_ok(p, {{1, 2}, {2, 3}}); },
         [](const Params& p) { return extend(half_hamming_code(p.at("m"), p.at("i1"), p.at("i2"))); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 1;
             return cr(ia(static_cast<int>(n + 1), 2, {n + 1, n, (n + 1) / 2, 1}, {1, (n + 1) / 2, n, n + 1}), 4);
         },
         {P({{"m", 4}, {"i1", 1}, {"i2", 2}}), P({{"m", 4}, {"i1", 2}, {"i2", 3}}),
          P({{"m", 6}, {"i1", 1}, {"i2", 2}})}});

    // ---------------------------------------------------------------- shortenings
    add({"F.10", "{00,11}-shortened binary extended Hamming code", {{"m", 4}}, Provenance::Paper, false, false, "",
         "m <= 20",
         [](const Params& p) { hamming_ok(2, p.at("m")); need(p.at("m") >= 3, "m must be >= 3"); },
         [](const Params& p) { return s_shorten(extend(hamming_code(2, p.at("m"))), pair_words(2), {0, 1}); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 2;
             return cr(ia(static_cast<int>(n), 2, {n, n - 2, 2}, {2, n - 2, n}), 2);
         },
         {P({{"m", 3}}), P({{"m", 4}}), P({{"m", 5}})}});

    add({"F.11", "{000,111}-shortened binary extended Hamming code", {{"m", 4}}, Provenance::Paper, false, false, "",
         "m <= 20",
         [](const Params& p) { hamming_ok(2, p.at("m")); need(p.at("m") >= 3, "m must be >= 3"); },
         [](const Params& p) { return s_shorten(extend(hamming_code(2, p.at("m"))), pair_words(3), {0, 1, 2}); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 3;
             return cr(ia(static_cast<int>(n), 2, {n - 1, 3}, {1, n - 1}), 1);
         },
         {P({{"m", 3}}), P({{"m", 4}}), P({{"m", 5}})}});

    add({"F.12", "{00,11}-shortened binary Hamming code", {{"m", 4}}, Provenance::Paper, false, false, "", "m <= 20",
         [](const Params& p) { hamming_ok(2, p.at("m")); need(p.at("m") >= 3, "m must be >= 3"); },
         [](const Params& p) { return s_shorten(hamming_code(2, p.at("m")), pair_words(2), {0, 1}); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m")) - 1;
             return cr(ia(static_cast<int>(n - 2), 2, {n - 3, 2}, {2, n - 3}), 1);
         },
         {P({{"m", 3}}), P({{"m", 4}}), P({{"m", 5}})}});

    add({"F.13", "{(a,a)}-shortened hyperoval code", {{"q", 4}}, Provenance::Derived, false, false,
         "printed {q(q-1), (q-1)(q-2); 2, q} fails the cell-size identity for q >= 8; b_1 = (q-2)(q+2)/2, c_2 = q(q-2)/2",
         "q = 2^r, 4 <= q <= 256",
         [](const Params& p) {
             int q = p.at("q");
             field_ok(q);
             need(q >= 4 && q % 2 == 0, "q must be 2^r >= 4");
             feasible(q, q + 2, 3);
         },
         [](const Params& p) {
             int q = p.at("q");
             return s_shorten(Code::from_parity_check(oval_parity(q, true)), pair_words(2, q), {0, 1});
         },
         [](const Params& p) {
             I64 q = p.at("q");
             return cr(ia(static_cast<int>(q), static_cast<int>(q), {q * (q - 1), (q - 2) * (q + 2) / 2}, {2, q * (q - 2) / 2}),
                       2);
         },
         {P({{"q", 4}}), P({{"q", 8}}), P({{"q", 16}})}});

    // ---------------------------------------------------------------- Golay family
    auto fixed = [&](std::string id, std::string title, std::function<Code()> b, IntersectionArray a, int d,
                     Provenance prov = Provenance::Paper, std::string note = "") {
        add({std::move(id), std::move(title), {}, prov, false, false, std::move(note), "fixed",
             [](const Params&) {}, [b](const Params&) { return b(); },
             [a, d](const Params&) { return cr(a, d); }, {Params{}}});
    };
    auto G = [] { return binary_golay(); };
    auto T = [] { return ternary_golay(); };
    fixed("S.1", "binary Golay code [23,12,7]", G, ia(23, 2, {23, 22, 21}, {1, 2, 3}), 7);
    fixed("S.2", "punctured binary Golay code [22,12,6]", [G] { return puncture(G(), 0); },
          ia(22, 2, {22, 21, 20}, {1, 2, 6}), 6);
    fixed("S.3", "extended binary Golay code [24,12,8]", [G] { return extend(G()); },
          ia(24, 2, {24, 23, 22, 21}, {1, 2, 3, 24}), 8);
    fixed("S.4", "double punctured binary Golay code [21,12,5]", [G] { return puncture(G(), std::vector<int>{0, 1}); },
          ia(21, 2, {21, 20, 16}, {1, 2, 12}), 5);
    fixed("S.5", "even half of the binary Golay code [23,11,8]", [G] { return zero_sum_subcode(G()); },
          ia(23, 2, {23, 22, 21, 20, 3, 2, 1}, {1, 2, 3, 20, 21, 22, 23}), 8);
    fixed("S.6", "punctured even half of the binary Golay code [22,11,7]",
          [G] { return puncture(zero_sum_subcode(G()), 0); }, ia(22, 2, {22, 21, 20, 3, 2, 1}, {1, 2, 3, 20, 21, 22}),
          7);
    fixed("S.7", "{00,11}-shortened extended Golay code [22,11,6]",
          [G] { return s_shorten(extend(G()), pair_words(2), {0, 1}); },
          ia(22, 2, {22, 21, 20, 16, 6, 2, 1}, {1, 2, 6, 16, 20, 21, 22}), 6);
    fixed("S.8", "{000,111}-shortened extended Golay code [21,10,5]",
          [G] { return s_shorten(extend(G()), pair_words(3), {0, 1, 2}); },
          ia(21, 2, {21, 20, 16, 9, 2, 1}, {1, 2, 3, 16, 20, 21}), 5);
    fixed("S.9", "{00,11}-shortened binary Golay code [21,11,5]",
          [G] { return s_shorten(G(), pair_words(2), {0, 1}); },
          ia(21, 2, {21, 20, 16, 6, 2, 1}, {1, 2, 6, 16, 20, 21}), 5);
    fixed("S.10", "ternary Golay code [11,6,5]_3", T, ia(11, 3, {22, 20}, {1, 2}), 5);
    fixed("S.11", "punctured ternary Golay code [10,6,4]_3", [T] { return puncture(T(), 0); },
          ia(10, 3, {20, 18}, {1, 6}), 4);
    fixed("S.12", "extended ternary Golay code [12,6,6]_3", [T] { return extend(T()); },
          ia(12, 3, {24, 22, 20}, {1, 2, 12}), 6);
    fixed("S.13", "zero-sum third of the ternary Golay code [11,5,6]_3", [T] { return zero_sum_subcode(T()); },
          ia(11, 3, {22, 20, 18, 2, 1}, {1, 2, 9, 20, 22}), 6);
    fixed("S.14", "punctured zero-sum third of the ternary Golay code [10,5,5]_3",
          [T] { return puncture(zero_sum_subcode(T()), 0); }, ia(10, 3, {20, 18, 4, 1}, {1, 2, 18, 20}), 5);

    // ---------------------------------------------------------------- nested family
    add({"F.14", "nested subcode C^(i) of a Hamming code (m = 2u)", {{"m", 4}, {"i", 1}}, Provenance::Paper, false,
         false, "i = 0 is the Hamming code itself", "m even, 4 <= m <= 8",
         nested_ok, [](const Params& p) { return nested_code(p.at("m"), p.at("i")); },
         [](const Params& p) { return cr(nested_ia(p.at("m"), p.at("i"), false), 3); },
         {P({{"m", 4}, {"i", 0}}), P({{"m", 4}, {"i", 1}}), P({{"m", 4}, {"i", 2}}), P({{"m", 6}, {"i", 1}}),
          P({{"m", 6}, {"i", 2}}), P({{"m", 6}, {"i", 3}})}});

    add({"F.15", "extended nested subcode C^(i)*", {{"m", 4}, {"i", 1}}, Provenance::Paper, false, false, "",
         "m even, 4 <= m <= 8", nested_ok,
         [](const Params& p) { return extend(nested_code(p.at("m"), p.at("i"))); },
         [](const Params& p) { return cr(nested_ia(p.at("m"), p.at("i"), true), 4); },
         {P({{"m", 4}, {"i", 1}}), P({{"m", 4}, {"i", 2}}), P({{"m", 6}, {"i", 2}})}});

    // ---------------------------------------------------------------- Preparata (external) and BCH
    add({"F.16", "Preparata-like code (user-supplied codewords)", {{"m", 2}}, Provenance::Derived, true, false,
         "nonlinear; verified on a supplied file; printed c_3 = 3 fails the cell-size identity, c_3 = n", "supplied code only",
         [](const Params& p) { need(p.at("m") >= 2, "m must be >= 2"); }, nullptr,
         [](const Params& p) {
             I64 n = ipow(2, 2 * p.at("m")) - 1;
             return cr(ia(static_cast<int>(n), 2, {n, n - 1, 1}, {1, 2, n}), 5);
         },
         {P({{"m", 2}})}});
    add({"F.17", "extended Preparata-like code (user-supplied codewords)", {{"m", 2}}, Provenance::Derived, true,
         false, "nonlinear; verified on a supplied file; printed c_3 = 3 fails the cell-size identity, c_3 = n", "supplied code only",
         [](const Params& p) { need(p.at("m") >= 2, "m must be >= 2"); }, nullptr,
         [](const Params& p) {
             I64 n = ipow(2, 2 * p.at("m")) - 1;
             return cr(ia(static_cast<int>(n + 1), 2, {n + 1, n, n - 1, 1}, {1, 2, n, n + 1}), 6);
         },
         {P({{"m", 2}})}});

    auto bch_ok = [](const Params& p) {
        int m = p.at("m");
        need(m >= 2, "m must be >= 2");
        int M = 2 * m + 1;
        feasible(2, 1 << std::min(M, 30), 2 * M + 1);
        field_ok(ipow(2, M));
    };
    add({"F.18", "primitive binary BCH code with zeros {1, 3}, n = 2^(2m+1) - 1", {{"m", 2}}, Provenance::Paper,
         false, false, "", "m <= 3", bch_ok,
         [](const Params& p) { return two_zero_cyclic(2 * p.at("m") + 1, 3); },
         [](const Params& p) { return cr(two_zero_ia(2 * p.at("m") + 1, false), 5); },
         {P({{"m", 2}}), P({{"m", 3}})}});
    add({"F.19", "extended primitive BCH code", {{"m", 2}}, Provenance::Paper, false, false, "", "m <= 3", bch_ok,
         [](const Params& p) { return extend(two_zero_cyclic(2 * p.at("m") + 1, 3)); },
         [](const Params& p) { return cr(two_zero_ia(2 * p.at("m") + 1, true), 6); },
         {P({{"m", 2}}), P({{"m", 3}})}});

    // ---------------------------------------------------------------- lifting and Kronecker products
    auto lift_ok = [](const Params& p) {
        int q = p.at("q"), m = p.at("m"), r = p.at("r");
        hamming_ok(q, m);
        need(r >= 1, "r must be >= 1");
        field_ok(ipow(q, r));
        feasible(static_cast<int>(ipow(q, r)), hamming_length(q, m), m);
    };
    auto lift_build = [](const Params& p) { return lift(hamming_parity(p.at("q"), p.at("m")), p.at("r")); };
    auto lift_expect = [](const Params& p) {
        int q = p.at("q"), m = p.at("m"), r = p.at("r");
        return cr(lift_ia(hamming_length(q, m), static_cast<int>(ipow(q, r)), q, r, m), 3);
    };
    add({"F.20", "Hamming parity-check matrix over GF(q) read over GF(q^r)", {{"q", 2}, {"m", 3}, {"r", 2}},
         Provenance::Paper, false, false, "", "q^r <= 256, q^(rm) * n <= 2^26", lift_ok, lift_build, lift_expect,
         {P({{"q", 2}, {"m", 2}, {"r", 2}}), P({{"q", 2}, {"m", 3}, {"r", 2}}), P({{"q", 2}, {"m", 2}, {"r", 3}}),
          P({{"q", 2}, {"m", 3}, {"r", 3}}), P({{"q", 3}, {"m", 2}, {"r", 2}}), P({{"q", 2}, {"m", 4}, {"r", 2}})}});

    add({"F.21", "Kronecker product of Hamming matrices over GF(q^u) and GF(q)",
         {{"q", 2}, {"u", 1}, {"ma", 2}, {"mb", 2}}, Provenance::Paper, false, false, "",
         "q^u <= 256, (q^u)^(ma mb) * n <= 2^26",
         [](const Params& p) {
             int q = p.at("q"), u = p.at("u"), ma = p.at("ma"), mb = p.at("mb");
             need(u >= 1, "u must be >= 1");
             int Q = static_cast<int>(ipow(q, u));
             field_ok(Q);
             hamming_ok(Q, ma);
             hamming_ok(q, mb);
             feasible(Q, hamming_length(Q, ma) * hamming_length(q, mb), ma * mb);
         },
         [](const Params& p) {
             int q = p.at("q"), Q = static_cast<int>(ipow(q, p.at("u")));
             return Code::from_parity_check(
                 kronecker_parity(hamming_parity(Q, p.at("ma")), hamming_parity(q, p.at("mb"))));
         },
         [](const Params& p) {
             int q = p.at("q"), u = p.at("u"), ma = p.at("ma"), mb = p.at("mb");
             int Q = static_cast<int>(ipow(q, u));
             return cr(lift_ia(hamming_length(Q, ma) * hamming_length(q, mb), Q, q, u * ma, mb), 3);
         },
         {P({{"q", 2}, {"u", 1}, {"ma", 2}, {"mb", 2}}), P({{"q", 2}, {"u", 1}, {"ma", 2}, {"mb", 3}}),
          P({{"q", 2}, {"u", 1}, {"ma", 3}, {"mb", 3}}), P({{"q", 2}, {"u", 2}, {"ma", 2}, {"mb", 2}}),
          P({{"q", 3}, {"u", 1}, {"ma", 2}, {"mb", 2}})}});

    // Five codes sharing one array: b, a, u over base field q, rho = min(ua, b).
    struct Kron {
        const char* id;
        const char* title;
        std::function<Code(int, int, int, int)> build;
        std::function<std::pair<int, int>(int, int, int, int)> field_len;  // (alphabet, n)
        std::function<int(int, int, int, int)> redundancy;
    };
    std::vector<Kron> krons = {
        {"F.22", "C_{ua}(H^q_b): Hamming matrix over GF(q) read over GF(q^(ua))",
         [](int q, int b, int a, int u) { return lift(hamming_parity(q, b), u * a); },
         [](int q, int b, int a, int u) {
             return std::pair<int, int>{static_cast<int>(ipow(q, u * a)), hamming_length(q, b)};
         },
         [](int, int b, int, int) { return b; }},
        {"F.23", "C_b(H^q_{ua}): Hamming matrix over GF(q) read over GF(q^b)",
         [](int q, int b, int a, int u) { return lift(hamming_parity(q, u * a), b); },
         [](int q, int b, int a, int u) {
             return std::pair<int, int>{static_cast<int>(ipow(q, b)), hamming_length(q, u * a)};
         },
         [](int, int, int a, int u) { return u * a; }},
        {"F.24", "H^q_b (x) H^q_{ua} over GF(q)",
         [](int q, int b, int a, int u) {
             return Code::from_parity_check(kronecker_parity(hamming_parity(q, b), hamming_parity(q, u * a)));
         },
         [](int q, int b, int a, int u) {
             return std::pair<int, int>{q, hamming_length(q, b) * hamming_length(q, u * a)};
         },
         [](int, int b, int a, int u) { return b * u * a; }},
        {"F.25", "H^q_b (x) H^(q^a)_u over GF(q^a)",
         [](int q, int b, int a, int u) {
             int Q = static_cast<int>(ipow(q, a));
             return Code::from_parity_check(kronecker_parity(hamming_parity(q, b), hamming_parity(Q, u)));
         },
         [](int q, int b, int a, int u) {
             int Q = static_cast<int>(ipow(q, a));
             return std::pair<int, int>{Q, hamming_length(q, b) * hamming_length(Q, u)};
         },
         [](int, int b, int, int u) { return b * u; }},
        {"F.26", "H^q_b (x) H^(q^u)_a over GF(q^u)",
         [](int q, int b, int a, int u) {
             int Q = static_cast<int>(ipow(q, u));
             return Code::from_parity_check(kronecker_parity(hamming_parity(q, b), hamming_parity(Q, a)));
         },
         [](int q, int b, int a, int u) {
             int Q = static_cast<int>(ipow(q, u));
             return std::pair<int, int>{Q, hamming_length(q, b) * hamming_length(Q, a)};
         },
         [](int, int b, int a, int) { return b * a; }},
    };
    for (const auto& k : krons) {
        add({k.id, k.title, {{"q", 2}, {"b", 2}, {"a", 2}, {"u", 2}}, Provenance::Paper, false, false, "",
             "alphabet <= 256, alphabet^(n-k) * n <= 2^26",
             [k](const Params& p) {
                 int q = p.at("q"), b = p.at("b"), a = p.at("a"), u = p.at("u");
                 field_ok(q);
                 need(b >= 2 && a >= 1 && u >= 1 && u * a >= 2, "need b >= 2, a, u >= 1 and ua >= 2");
                 field_ok(ipow(q, std::max({u * a, b, a, u})));
                 auto [Q, n] = k.field_len(q, b, a, u);
                 feasible(Q, n, k.redundancy(q, b, a, u));
             },
             [k](const Params& p) { return k.build(p.at("q"), p.at("b"), p.at("a"), p.at("u")); },
             [k](const Params& p) {
                 int q = p.at("q"), b = p.at("b"), a = p.at("a"), u = p.at("u");
                 auto [Q, n] = k.field_len(q, b, a, u);
                 return cr(lift_ia(n, Q, q, u * a, b), 3);
             },
             {P({{"q", 2}, {"b", 2}, {"a", 2}, {"u", 2}}), P({{"q", 2}, {"b", 2}, {"a", 3}, {"u", 2}})}});
    }

    // ---------------------------------------------------------------- binomial codes
    add({"F.27", "binomial code C^(m,2): columns of weight 2", {{"m", 5}}, Provenance::Paper, false, false, "",
         "4 <= m <= 20",
         [](const Params& p) { need(p.at("m") >= 4 && p.at("m") <= 20, "m must lie in 4..20"); },
         [](const Params& p) { return Code::from_parity_check(binomial_parity(p.at("m"), 2)); },
         [](const Params& p) {
             I64 m = p.at("m");
             int rho = static_cast<int>(m / 2);
             std::vector<I64> b, c;
             for (int i = 0; i < rho; ++i) b.push_back(choose2(m - 2 * i));
             for (int i = 1; i <= rho; ++i) c.push_back(choose2(2 * i));
             return cr(ia(static_cast<int>(choose2(m)), 2, b, c), 3);
         },
         {P({{"m", 4}}), P({{"m", 5}}), P({{"m", 6}}), P({{"m", 7}}), P({{"m", 8}})}});

    add({"F.28", "binomial code C^(m,2) joined with its covering set", {{"m", 8}}, Provenance::Paper, false, false,
         "", "m even, 6 <= m <= 20",
         [](const Params& p) {
             int m = p.at("m");
             need(m >= 6 && m % 2 == 0 && m <= 20, "m must be even in 6..20");
         },
         [](const Params& p) { return union_with_cover(Code::from_parity_check(binomial_parity(p.at("m"), 2))); },
         [](const Params& p) {
             I64 m = p.at("m");
             int rho = m % 4 == 0 ? static_cast<int>(m / 4) : static_cast<int>((m - 2) / 4);
             std::vector<I64> b, c;
             for (int i = 0; i < rho; ++i) b.push_back(choose2(m - 2 * i));
             for (int i = 1; i <= rho; ++i) c.push_back(choose2(2 * i));
             if (m % 4 == 0) c.back() = 2 * choose2(2 * rho);
             return cr(ia(static_cast<int>(choose2(m)), 2, b, c), 3);
         },
         {P({{"m", 6}}), P({{"m", 8}}), P({{"m", 10}}), P({{"m", 12}})}});

    fixed("S.15", "binomial code C^(5,3) [10,5,4]",
          [] { return Code::from_parity_check(binomial_parity(5, 3)); }, ia(10, 2, {10, 9, 4}, {1, 6, 10}), 4);
    fixed("S.16", "binomial code C^(6,4) [15,10,3]",
          [] { return Code::from_parity_check(binomial_parity(6, 4)); }, ia(15, 2, {15, 8, 1}, {1, 8, 15}), 3);
    fixed("S.17", "binomial code C^(7,4) [35,29,3]",
          [] { return Code::from_parity_check(binomial_parity(7, 4)); }, ia(35, 2, {35, 16}, {1, 20}), 3);

    // ---------------------------------------------------------------- direct sums and Latin squares
    add({"F.29", "direct sum of u copies of a Hamming code", {{"q", 2}, {"m", 3}, {"u", 2}}, Provenance::Paper,
         false, false, "", "q^(um) * un <= 2^26",
         [](const Params& p) {
             int q = p.at("q"), m = p.at("m"), u = p.at("u");
             hamming_ok(q, m);
             need(u >= 1, "u must be >= 1");
             feasible(q, u * hamming_length(q, m), u * m);
         },
         [](const Params& p) {
             Code h = hamming_code(p.at("q"), p.at("m"));
             return direct_sum(std::vector<Code>(p.at("u"), h));
         },
         [](const Params& p) {
             int q = p.at("q"), u = p.at("u"), n = hamming_length(q, p.at("m"));
             I64 b0 = static_cast<I64>(q - 1) * n;
             std::vector<I64> b, c;
             for (int i = 0; i < u; ++i) b.push_back((u - i) * b0);
             for (int i = 1; i <= u; ++i) c.push_back(i);
             return cr(ia(u * n, q, b, c), 3);
         },
         {P({{"q", 2}, {"m", 3}, {"u", 2}}), P({{"q", 2}, {"m", 3}, {"u", 3}}), P({{"q", 3}, {"m", 2}, {"u", 3}}),
          P({{"q", 4}, {"m", 2}, {"u", 2}})}});

    add({"F.30", "one Latin square code [3,2,2]_q", {{"q", 3}}, Provenance::Paper, false, false, "", "q <= 256",
         [](const Params& p) { field_ok(p.at("q")); },
         [](const Params& p) { return Code::from_parity_check(ones(gf(p.at("q")), 3)); },
         [](const Params& p) {
             int q = p.at("q");
             return cr(ia(3, q, {3 * (q - 1)}, {3}), 2);
         },
         {P({{"q", 2}}), P({{"q", 3}}), P({{"q", 4}}), P({{"q", 5}}), P({{"q", 7}})}});

    add({"F.31", "two Latin squares code [4,2,3]_q", {{"q", 4}}, Provenance::Paper, false, false,
         "q = 3 gives the perfect ternary Hamming code, so q >= 4", "4 <= q <= 256",
         [](const Params& p) {
             field_ok(p.at("q"));
             need(p.at("q") >= 4, "q must be >= 4");
         },
         [](const Params& p) {
             auto f = gf(p.at("q"));
             Matrix H(f, 2, 4);
             H.at(0, 0) = H.at(0, 1) = H.at(0, 2) = 1;
             H.at(1, 1) = 1;
             H.at(1, 2) = f->alpha();
             H.at(1, 3) = 1;
             return Code::from_parity_check(H);
         },
         [](const Params& p) {
             I64 q = p.at("q");
             return cr(ia(4, static_cast<int>(q), {4 * (q - 1), 3 * (q - 3)}, {1, 12}), 3);
         },
         {P({{"q", 4}}), P({{"q", 5}}), P({{"q", 7}}), P({{"q", 8}}), P({{"q", 9}})}});

    fixed("S.18", "three Latin squares code [5,2,4]_4 (conic)",
          [] { return Code::from_parity_check(oval_parity(4, false)); }, ia(5, 4, {15, 12, 1}, {1, 4, 15}), 4,
          Provenance::Derived, "printed b_2 = 3 violates the cell-size identity; b_2 = 1");
    add({"S.19", "four Latin squares code [6,2,5]_5: equidistant, not completely regular", {}, Provenance::Derived,
         false, true,
         "printed as CR with {24, 20, 13; 1, 2, 6}, which fails the cell-size identity; the unique code has three "
         "outer profiles in its covering-radius cell",
         "fixed", no_validate,
         [](const Params&) {
             return Code::from_generator(matrix_from_rows(gf(5), {{1, 1, 1, 1, 1, 0}, {0, 1, 2, 3, 4, 1}}));
         },
         [](const Params&) {
             Expectation e;
             e.completely_regular = false;
             e.up_wide = false;
             e.d = 5;
             return e;
         },
         {Params{}}});
    fixed("S.20", "Hadamard (11,24,5) code", [] { return hadamard_11(); }, ia(11, 2, {11, 10, 3}, {1, 2, 9}), 5);
    fixed("S.21", "extended Hadamard (12,24,6) code", [] { return extend(hadamard_11()); },
          ia(12, 2, {12, 11, 10, 3}, {1, 2, 9, 12}), 6);

    add({"F.32", "all binary words of weight g and length 2g", {{"g", 3}}, Provenance::Derived, false, false,
         "printed array lists 2g values of b; the distance partition gives b_i = g - i for i >= 1", "1 <= g <= 10",
         [](const Params& p) { need(p.at("g") >= 1 && p.at("g") <= 10, "g must lie in 1..10"); },
         [](const Params& p) {
             int g = p.at("g"), n = 2 * g;
             std::vector<Word> words;
             for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                 if (__builtin_popcount(mask) != g) continue;
                 Word w(n);
                 for (int i = 0; i < n; ++i) w[i] = (mask >> i) & 1;
                 words.push_back(std::move(w));
             }
             return Code::from_codewords(gf(2), n, std::move(words));
         },
         [](const Params& p) {
             int g = p.at("g");
             std::vector<I64> b{2 * g}, c;
             for (int i = 1; i < g; ++i) b.push_back(g - i);
             for (int i = 1; i <= g; ++i) c.push_back(g + i);
             return cr(ia(2 * g, 2, b, c), 2);
         },
         {P({{"g", 1}}), P({{"g", 2}}), P({{"g", 3}}), P({{"g", 4}}), P({{"g", 5}}), P({{"g", 6}})}});

    // ---------------------------------------------------------------- concatenations
    add({"F.33", "concatenated cyclic Hamming matrices [H ... H; H_1 ... H_c]", {{"q", 2}, {"k", 3}, {"c", 2}},
         Provenance::Paper, false, false, "", "q^(2k) * nc <= 2^26",
         [](const Params& p) {
             int q = p.at("q"), k = p.at("k"), c = p.at("c");
             cyclic_hamming_ok(q, k);
             int n = hamming_length(q, k);
             need(c >= 2 && c <= n, "c must lie in 2..n");
             feasible(q, n * c, 2 * k);
         },
         [](const Params& p) { return Code::from_parity_check(concat33(p.at("q"), p.at("k"), p.at("c"))); },
         [](const Params& p) {
             I64 q = p.at("q"), c = p.at("c"), n = hamming_length(p.at("q"), p.at("k"));
             return cr(ia(static_cast<int>(n * c), static_cast<int>(q), {(q - 1) * n * c, ((q - 1) * n - c + 2) * (c - 1)},
                          {1, c * (c - 1)}),
                       3);
         },
         {P({{"q", 2}, {"k", 3}, {"c", 2}}), P({{"q", 2}, {"k", 3}, {"c", 3}}), P({{"q", 2}, {"k", 3}, {"c", 4}}),
          P({{"q", 2}, {"k", 3}, {"c", 7}}), P({{"q", 2}, {"k", 4}, {"c", 3}}), P({{"q", 3}, {"k", 3}, {"c", 2}}),
          P({{"q", 4}, {"k", 2}, {"c", 2}})}});

    auto c34_ok = [](const Params& p) {
        int q = p.at("q"), k = p.at("k"), c = p.at("c");
        cyclic_hamming_ok(q, k);
        int n = hamming_length(q, k);
        need(c >= 1 && c <= n - 1, "c must lie in 1..n-1");
        feasible(q, n * (c + 3) + 1, 2 * k + 1);
    };
    add({"F.34", "concatenation H^(k,c) = [H 0 H H..H; 0 H H H_1..H_c]", {{"q", 2}, {"k", 3}, {"c", 2}},
         Provenance::Paper, false, false, "", "q^(2k) * (c+3)n <= 2^26", c34_ok,
         [](const Params& p) { return Code::from_parity_check(concat34(p.at("q"), p.at("k"), p.at("c"))); },
         [](const Params& p) {
             I64 q = p.at("q"), c = p.at("c"), n = hamming_length(p.at("q"), p.at("k"));
             I64 len = (c + 3) * n;
             return cr(ia(static_cast<int>(len), static_cast<int>(q), {(c + 3) * (q - 1) * n, (c + 2) * ((q - 1) * n - 1 - c)},
                          {1, (c + 2) * (c + 3)}),
                       3);
         },
         {P({{"q", 2}, {"k", 3}, {"c", 1}}), P({{"q", 2}, {"k", 3}, {"c", 2}}), P({{"q", 2}, {"k", 3}, {"c", 3}}),
          P({{"q", 2}, {"k", 3}, {"c", 4}}), P({{"q", 4}, {"k", 2}, {"c", 1}}), P({{"q", 3}, {"k", 3}, {"c", 1}})}});

    add({"F.35", "extension of H^(k,c) for c = 2^(k-1) - 2 or 2^k - 2", {{"k", 3}, {"c", 2}}, Provenance::Paper,
         false, false, "", "binary, 2^(2k+1) * (c+3)n <= 2^26",
         [c34_ok](const Params& p) {
             int k = p.at("k"), c = p.at("c");
             c34_ok(Params{{"q", 2}, {"k", k}, {"c", c}});
             need(c == (1 << (k - 1)) - 2 || c == (1 << k) - 2, "c must be 2^(k-1) - 2 or 2^k - 2");
         },
         [](const Params& p) { return extend(Code::from_parity_check(concat34(2, p.at("k"), p.at("c")))); },
         [](const Params& p) {
             int k = p.at("k");
             I64 c = p.at("c"), n = ipow(2, k) - 1;
             I64 N = (c + 3) * n + 1;
             if (c == (1 << k) - 2) return cr(ia(static_cast<int>(N), 2, {N, N - 1}, {1, N}), 4);
             return cr(ia(static_cast<int>(N), 2, {N, N - 1, ipow(2, 2 * k - 2)}, {1, (c + 2) * (c + 3), N}), 4);
         },
         {P({{"k", 3}, {"c", 2}}), P({{"k", 3}, {"c", 6}}), P({{"k", 4}, {"c", 6}})}});

    fixed("S.22", "binary [15,9,3] code from the K block matrix",
          [] {
              Matrix K = k_block(0), Z = zero_matrix(gf(2), 2, 3);
              return Code::from_parity_check(block_matrix(
                  {{K, Z, Z, K, K}, {Z, K, Z, K, k_block(1)}, {Z, Z, K, K, k_block(2)}}));
          },
          ia(15, 2, {15, 12, 1}, {1, 4, 15}), 3);
    fixed("S.23", "extension of the [15,9,3] K-matrix code",
          [] {
              Matrix K = k_block(0), Z = zero_matrix(gf(2), 2, 3);
              return extend(Code::from_parity_check(block_matrix(
                  {{K, Z, Z, K, K}, {Z, K, Z, K, k_block(1)}, {Z, Z, K, K, k_block(2)}})));
          },
          ia(16, 2, {16, 15, 12, 1}, {1, 4, 15, 16}), 4);
    fixed("S.24", "binary [18,12,3] code from the difference matrix D(2,3) with K blocks",
          [] { return Code::from_parity_check(difference_k_parity(false)); }, ia(18, 2, {18, 15}, {1, 6}), 3);
    fixed("S.25", "binary [15,9,3] code from D(2,3) without its zero column",
          [] { return Code::from_parity_check(difference_k_parity(true)); }, ia(15, 2, {15, 12, 1}, {1, 4, 15}), 3);

    // ---------------------------------------------------------------- covering radius one
    add({"F.36", "covering radius one: Hamming matrix repeated l times plus u zero columns",
         {{"q", 2}, {"m", 3}, {"l", 2}, {"u", 1}}, Provenance::Paper, false, false, "", "q^m * n <= 2^26", rho1_ok,
         [](const Params& p) {
             return Code::from_parity_check(rho1_parity(p.at("q"), p.at("m"), p.at("l"), p.at("u")));
         },
         rho1_expect,
         {P({{"q", 2}, {"m", 3}, {"l", 2}, {"u", 1}}), P({{"q", 2}, {"m", 2}, {"l", 1}, {"u", 2}}),
          P({{"q", 4}, {"m", 2}, {"l", 2}, {"u", 1}})}});
    add({"F.37", "covering radius one with d = 3: the Hamming code", {{"q", 2}, {"m", 3}}, Provenance::Paper, false,
         false, "", "as F.1", [](const Params& p) { hamming_ok(p.at("q"), p.at("m")); },
         [](const Params& p) { return Code::from_parity_check(rho1_parity(p.at("q"), p.at("m"), 1, 0)); },
         [](const Params& p) { return rho1_expect(Params{{"q", p.at("q")}, {"m", p.at("m")}, {"l", 1}, {"u", 0}}); },
         {P({{"q", 3}, {"m", 2}}), P({{"q", 2}, {"m", 4}})}});
    add({"F.38", "covering radius one with d = 2: repeated Hamming matrix", {{"q", 3}, {"m", 2}, {"l", 3}},
         Provenance::Paper, false, false, "", "q^m * n <= 2^26",
         [](const Params& p) {
             need(p.at("l") >= 2, "l must be >= 2");
             rho1_ok(Params{{"q", p.at("q")}, {"m", p.at("m")}, {"l", p.at("l")}, {"u", 0}});
         },
         [](const Params& p) { return Code::from_parity_check(rho1_parity(p.at("q"), p.at("m"), p.at("l"), 0)); },
         [](const Params& p) {
             return rho1_expect(Params{{"q", p.at("q")}, {"m", p.at("m")}, {"l", p.at("l")}, {"u", 0}});
         },
         {P({{"q", 3}, {"m", 2}, {"l", 3}}), P({{"q", 2}, {"m", 3}, {"l", 2}})}});
    add({"F.39", "covering radius one with d = 1: zero columns appended", {{"q", 2}, {"m", 3}, {"l", 1}, {"u", 2}},
         Provenance::Paper, false, false, "", "q^m * n <= 2^26",
         [](const Params& p) {
             need(p.at("u") >= 1, "u must be >= 1");
             rho1_ok(p);
         },
         [](const Params& p) {
             return Code::from_parity_check(rho1_parity(p.at("q"), p.at("m"), p.at("l"), p.at("u")));
         },
         rho1_expect, {P({{"q", 2}, {"m", 3}, {"l", 1}, {"u", 2}}), P({{"q", 3}, {"m", 2}, {"l", 2}, {"u", 1}})}});

    // ---------------------------------------------------------------- covering radius two, self-complementary duals
    add({"F.40", "binary extended Hamming code", {{"m", 3}}, Provenance::Paper, false, false, "", "m <= 20",
         [](const Params& p) { hamming_ok(2, p.at("m")); },
         [](const Params& p) { return extend(hamming_code(2, p.at("m"))); },
         [](const Params& p) {
             I64 n = ipow(2, p.at("m"));
             return cr(ia(static_cast<int>(n), 2, {n, n - 1}, {1, n}), 4);
         },
         {P({{"m", 2}}), P({{"m", 3}}), P({{"m", 4}}), P({{"m", 5}})}});

    add({"F.41", "hyperoval code [q+2, q-1, 4]_q", {{"q", 4}}, Provenance::Paper, false, false, "",
         "q = 2^r, 4 <= q <= 256",
         [](const Params& p) {
             int q = p.at("q");
             field_ok(q);
             need(q >= 4 && q % 2 == 0, "q must be 2^r >= 4");
             feasible(q, q + 2, 3);
         },
         [](const Params& p) { return Code::from_parity_check(oval_parity(p.at("q"), true)); },
         [](const Params& p) {
             I64 q = p.at("q");
             return cr(ia(static_cast<int>(q + 2), static_cast<int>(q), {(q + 2) * (q - 1), q * q - 1}, {1, q + 2}), 4);
         },
         {P({{"q", 4}}), P({{"q", 8}}), P({{"q", 16}})}});

    add({"F.42", "dual of the difference matrix code D_m", {{"q", 3}, {"m", 1}}, Provenance::Paper, false, false,
         "", "q >= 3, q^(m+1) * q^m <= 2^26",
         [](const Params& p) {
             int q = p.at("q"), m = p.at("m");
             field_ok(q);
             need(q >= 3 && m >= 1, "need q >= 3 and m >= 1");
             feasible(q, static_cast<int>(std::min<I64>(ipow(q, m), 1 << 26)), m + 1);
         },
         [](const Params& p) { return Code::from_parity_check(difference_parity(p.at("q"), p.at("m"))); },
         [](const Params& p) {
             I64 q = p.at("q"), n = ipow(q, p.at("m"));
             return cr(ia(static_cast<int>(n), static_cast<int>(q), {n * (q - 1), n - 1}, {1, n * (q - 1)}), 3);
         },
         {P({{"q", 3}, {"m", 1}}), P({{"q", 3}, {"m", 2}}), P({{"q", 4}, {"m", 1}}), P({{"q", 4}, {"m", 2}}),
          P({{"q", 5}, {"m", 1}}), P({{"q", 7}, {"m", 1}})}});

    add({"F.43", "dual of a Latin-square code: D_1 with q - n columns removed", {{"q", 5}, {"n", 4}},
         Provenance::Paper, false, false, "", "3 <= n <= q <= 256",
         [](const Params& p) {
             int q = p.at("q"), n = p.at("n");
             field_ok(q);
             need(q >= 3 && n >= 3 && n <= q, "need 3 <= n <= q");
         },
         [](const Params& p) {
             int q = p.at("q"), n = p.at("n");
             Matrix D = difference_parity(q, 1);
             std::vector<int> drop;
             for (int j = n; j < q; ++j) drop.push_back(j);
             return Code::from_parity_check(delete_columns(D, drop));
         },
         [](const Params& p) {
             I64 q = p.at("q"), n = p.at("n");
             return cr(ia(static_cast<int>(n), static_cast<int>(q), {n * (q - 1), (q - n + 1) * (n - 1)}, {1, n * (n - 1)}), 3);
         },
         {P({{"q", 4}, {"n", 3}}), P({{"q", 5}, {"n", 3}}), P({{"q", 5}, {"n", 4}}), P({{"q", 7}, {"n", 4}}),
          P({{"q", 7}, {"n", 5}}), P({{"q", 8}, {"n", 5}}), P({{"q", 9}, {"n", 6}})}});

    add({"F.44", "lines of PG(2,q) exterior to a hyperoval, q = 2^r", {{"q", 4}}, Provenance::Paper, false, false,
         "d = 3 for q >= 8: q/2 >= 3 exterior lines meet at each point off the hyperoval", "q = 2^r, 4 <= q <= 32",
         [](const Params& p) {
             int q = p.at("q");
             field_ok(q);
             need(q >= 4 && q % 2 == 0, "q must be 2^r >= 4");
             feasible(q, q * (q - 1) / 2, 3);
         },
         [](const Params& p) { return Code::from_parity_check(exterior_lines_parity(p.at("q"))); },
         [](const Params& p) {
             I64 q = p.at("q"), n = q * (q - 1) / 2;
             return cr(ia(static_cast<int>(n), static_cast<int>(q), {(q - 1) * n, (q - 2) * (q + 1) * (q + 2) / 4},
                          {1, q * (q - 1) * (q - 2) / 4}),
                       q == 4 ? 4 : 3);
         },
         {P({{"q", 4}}), P({{"q", 8}})}});

    auto tf2_ok = [](const Params& p) {
        int q = p.at("q"), h = p.at("h");
        field_ok(q);
        need(q >= 4 && q % 2 == 0 && h > 1 && h < q && q % h == 0, "need q = 2^r >= 4 and 1 < h < q with h | q");
    };
    add({"F.45", "maximal-arc code of degree h (user-supplied codewords)", {{"q", 8}, {"h", 4}}, Provenance::Paper,
         true, false, "needs a maximal arc; verified on a supplied file", "supplied code only", tf2_ok, nullptr,
         [](const Params& p) {
             I64 q = p.at("q"), h = p.at("h"), n = 1 + (q + 1) * (h - 1);
             return cr(ia(static_cast<int>(n), static_cast<int>(q), {(q - 1) * n, (q + 1) * (h - 1) * (q - h + 1)},
                          {1, (h - 1) * n}),
                       4);
         },
         {P({{"q", 8}, {"h", 4}})}});
    add({"F.46", "dual maximal-arc code (user-supplied codewords)", {{"q", 8}, {"h", 4}}, Provenance::Paper, true,
         false, "needs a maximal arc; verified on a supplied file", "supplied code only", tf2_ok, nullptr,
         [](const Params& p) {
             I64 q = p.at("q"), h = p.at("h"), n = q * (q - h + 1) / h;
             return cr(ia(static_cast<int>(n), static_cast<int>(q),
                          {(q - 1) * n, (q + 1) * (q - h) * (q * (h - 1) + h) / (h * h)},
                          {1, q * (q - h) * (q - h + 1) / (h * h)}),
                       4);
         },
         {P({{"q", 8}, {"h", 4}})}});

    add({"F.47", "lifted Hamming code (self-dual exactly for the ternary [4,2,3])", {{"q", 3}, {"m", 2}, {"r", 2}},
         Provenance::Paper, false, false, "", "as F.20", lift_ok, lift_build, lift_expect,
         {P({{"q", 3}, {"m", 2}, {"r", 2}}), P({{"q", 3}, {"m", 2}, {"r", 4}})}});

    auto d1_ok = [](const Params& p) {
        int q = p.at("q");
        field_ok(q);
        need(q >= 4, "q must be >= 4");
        latin_d1(q);
    };
    auto d1_expect = [](const Params& p) {
        I64 q = p.at("q");
        return cr(ia(4, static_cast<int>(q), {4 * (q - 1), 3 * (q - 3)}, {1, 12}), 3);
    };
    add({"F.48", "self-complementary [4,2,3]_q code from D_1 with xi_i + xi_j + 1 = 0", {{"q", 4}},
         Provenance::Paper, false, false, "GF(5) has no admissible pair", "4 <= q <= 256", d1_ok,
         [](const Params& p) { return Code::from_parity_check(latin_d1(p.at("q"))); }, d1_expect,
         {P({{"q", 4}}), P({{"q", 7}}), P({{"q", 8}}), P({{"q", 9}}), P({{"q", 11}})}});
    add({"F.49", "self-dual [4,2,3]_q code from D_1, q = 2^r", {{"q", 4}}, Provenance::Paper, false, false, "",
         "q = 2^r, 4 <= q <= 256",
         [d1_ok](const Params& p) {
             need(p.at("q") % 2 == 0, "q must be a power of two");
             d1_ok(p);
         },
         [](const Params& p) { return Code::from_parity_check(latin_d1(p.at("q"))); }, d1_expect,
         {P({{"q", 4}}), P({{"q", 8}}), P({{"q", 16}})}});

    // ---------------------------------------------------------------- two-zero cyclic codes
    add({"F.51", "cyclic code with zeros {1, l} for an almost bent power exponent", {{"m", 5}, {"l", 5}},
         Provenance::Paper, false, false, "", "m odd, m <= 7", two_zero_ok,
         [](const Params& p) { return two_zero_cyclic(p.at("m"), p.at("l")); },
         [](const Params& p) { return cr(two_zero_ia(p.at("m"), false), 5); }, {P({{"m", 5}, {"l", 5}})}});
    add({"F.52", "binary primitive cyclic code with generator m_1 m_l (Gold, Kasami, Welch, Niho, inverse, Dobbertin)",
         {{"m", 5}, {"l", 3}}, Provenance::Paper, false, false, "", "m odd, m <= 7", two_zero_ok,
         [](const Params& p) { return two_zero_cyclic(p.at("m"), p.at("l")); },
         [](const Params& p) { return cr(two_zero_ia(p.at("m"), false), 5); },
         {P({{"m", 5}, {"l", 3}}), P({{"m", 5}, {"l", 5}}), P({{"m", 5}, {"l", 7}}), P({{"m", 5}, {"l", 13}}),
          P({{"m", 7}, {"l", 5}}), P({{"m", 7}, {"l", 9}}), P({{"m", 7}, {"l", 13}}), P({{"m", 7}, {"l", 11}})}});
    add({"F.53", "extension of a two-zero cyclic code", {{"m", 5}, {"l", 3}}, Provenance::Paper, false, false, "",
         "m odd, m <= 7", two_zero_ok, [](const Params& p) { return extend(two_zero_cyclic(p.at("m"), p.at("l"))); },
         [](const Params& p) { return cr(two_zero_ia(p.at("m"), true), 6); },
         {P({{"m", 5}, {"l", 3}}), P({{"m", 5}, {"l", 5}}), P({{"m", 5}, {"l", 13}}), P({{"m", 7}, {"l", 5}})}});

    // ---------------------------------------------------------------- negative controls
    add({"N.1", "Hamming (x) repetition parity check: uniformly packed, not completely regular",
         {{"q", 2}, {"u", 1}, {"m", 2}, {"nb", 4}}, Provenance::Paper, false, true, "", "(q^u)^(m(nb-1)) * n <= 2^26",
         [](const Params& p) {
             int q = p.at("q"), u = p.at("u"), m = p.at("m"), nb = p.at("nb");
             int Q = static_cast<int>(ipow(q, u));
             field_ok(Q);
             hamming_ok(Q, m);
             int na = hamming_length(Q, m);
             need(nb >= 4 && nb <= (Q - 1) * na + 1, "need 4 <= nb <= (q^u - 1) n_a + 1");
             feasible(Q, na * nb, m * (nb - 1));
         },
         [](const Params& p) {
             int q = p.at("q"), Q = static_cast<int>(ipow(q, p.at("u")));
             return Code::from_parity_check(
                 kronecker_parity(hamming_parity(Q, p.at("m")), repetition_parity(gf(q), p.at("nb"))));
         },
         [](const Params&) {
             Expectation e;
             e.completely_regular = false;
             e.up_wide = true;
             e.d = 3;
             return e;
         },
         {P({{"q", 2}, {"u", 1}, {"m", 2}, {"nb", 4}}), P({{"q", 2}, {"u", 1}, {"m", 3}, {"nb", 4}})}});
    add({"N.2", "extended double punctured Golay code: not uniformly packed", {}, Provenance::Paper, false, true, "",
         "fixed", no_validate, [](const Params&) { return extend(puncture(binary_golay(), std::vector<int>{0, 1})); },
         [](const Params&) {
             Expectation e;
             e.completely_regular = false;
             e.up_wide = false;
             e.d = 6;
             return e;
         },
         {Params{}}});
    add({"N.3", "lifted binary extended Hamming code: uniformly packed, not completely regular",
         {{"m", 3}, {"r", 2}}, Provenance::Paper, false, true, "", "2^(r(m+1)) * 2^m <= 2^26",
         [](const Params& p) {
             int m = p.at("m"), r = p.at("r");
             hamming_ok(2, m);
             need(r >= 2, "r must be >= 2");
             field_ok(ipow(2, r));
             feasible(static_cast<int>(ipow(2, r)), 1 << m, m + 1);
         },
         [](const Params& p) { return lift(extend(hamming_code(2, p.at("m"))).parity(), p.at("r")); },
         [](const Params&) {
             Expectation e;
             e.completely_regular = false;
             e.up_wide = true;
             e.d = 4;
             return e;
         },
         {P({{"m", 3}, {"r", 2}}), P({{"m", 2}, {"r", 2}}), P({{"m", 3}, {"r", 3}})}});
    add({"N.4", "two-zero cyclic code for an APN exponent that is not almost bent: d = 5, not CR",
         {{"m", 5}, {"l", 15}}, Provenance::Derived, false, true,
         "the inverse exponent 2^(m-1) - 1 (and the Dobbertin exponent for m = 5, in the same cyclotomic coset) gives "
         "d = 5 but no three-valued Walsh spectrum",
         "m odd, m <= 7",
         [](const Params& p) {
             int m = p.at("m");
             need(m >= 3 && m % 2 == 1 && m <= 7, "m must be odd in 3..7");
         },
         [](const Params& p) { return two_zero_cyclic(p.at("m"), p.at("l")); },
         [](const Params&) {
             Expectation e;
             e.completely_regular = false;
             e.d = 5;
             return e;
         },
         {P({{"m", 5}, {"l", 15}}), P({{"m", 5}, {"l", 27}}), P({{"m", 7}, {"l", 63}})}});
    return cat;
}

std::string params_string(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ",";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::Paper ? "PAPER" : "DERIVED"; }

std::string Instance::key() const {
    std::string s = family->id;
    if (!params.empty()) s += "[" + params_string(params) + "]";
    return s;
}

const std::vector<Family>& catalog() {
    static const std::vector<Family> cat = make_catalog();
    return cat;
}

const Family& family(const std::string& id) {
    for (const auto& f : catalog())
        if (f.id == id) return f;
    throw CatalogError("unknown catalog id '" + id + "'");
}

Params resolve(const Family& f, const Params& given) {
    Params out;
    for (const auto& [k, v] : f.schema) out[k] = v;
    for (const auto& [k, v] : given) {
        if (!out.count(k)) throw DomainError(f.id + " has no parameter '" + k + "'");
        out[k] = v;
    }
    return out;
}

Built build(const std::string& id, const Params& params) {
    const Family& f = family(id);
    Params p = resolve(f, params);
    f.validate(p);
    if (!f.build) throw CatalogError(id + " is EXTERNAL: supply the code from a file");
    return Built{f.build(p), f.expect(p), f.provenance};
}

IntersectionArray expected_ia(const std::string& id, const Params& params) {
    const Family& f = family(id);
    Params p = resolve(f, params);
    f.validate(p);
    auto e = f.expect(p);
    if (!e.ia) throw CatalogError(id + " is a negative control and expects no intersection array");
    return *e.ia;
}

std::vector<Instance> list(const Filter& filter) {
    std::vector<Instance> out;
    for (const auto& f : catalog()) {
        if (f.external && !filter.include_external) continue;
        if (f.negative && !filter.include_negative) continue;
        if (!filter.id_prefix.empty() && f.id.rfind(filter.id_prefix, 0) != 0) continue;
        for (const auto& p : f.pinned) {
            Params rp = resolve(f, p);
            auto e = f.expect(rp);
            if (filter.rho && (!e.ia || e.ia->rho() != *filter.rho)) continue;
            if (filter.q && (!e.ia || e.ia->q != *filter.q)) continue;
            out.push_back({&f, rp});
        }
    }
    return out;
}

EntryResult check(const std::string& key, const std::string& id, const Code& c, const Expectation& e) {
    EntryResult r;
    r.key = key;
    r.id = id;
    r.expected = e.ia;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Classification cl = classify(c);
        r.n = cl.n;
        r.q = cl.q;
        r.d = cl.d;
        r.rho = cl.rho;
        r.e = cl.e;
        r.s = cl.s;
        r.b = cl.b;
        r.rank_b = cl.rank_b;
        r.size = crc::to_string(cl.size);
        r.cr = cl.completely_regular;
        r.up_wide = cl.up_wide;
        r.computed = cl.ia;
        r.d_match = e.d == 0 || e.d == cl.d;
        if (e.completely_regular) {
            r.ia_match = cl.ia && e.ia && cl.ia->b == e.ia->b && cl.ia->c == e.ia->c && cl.ia->n == e.ia->n &&
                         cl.ia->q == e.ia->q;
            if (cl.ia) {
                r.eigen_pass = eigenvalue_membership_test(*cl.ia, true).pass;
                if (cl.beta) {
                    r.roots_pass = lloyd_roots(cl.n, cl.q, *cl.beta).pass;
                    r.cardinality_pass = cardinality_identity(c, *cl.beta);
                }
            }
            if (c.is_linear() && cl.ia) {
                CosetGraph g = build_coset_graph(c);
                GraphIA gia = coset_graph_ia(g);
                bool same = gia.regular && gia.ia && gia.ia->b == cl.ia->b && gia.ia->c == cl.ia->c;
                auto part = distance_partition(c, PartitionMode::Syndrome);
                auto eq = equitable_counts(c, part);
                same = same && eq.observed == multigraph_layer_counts(g);
                r.graph_match = same;
            }
            r.ok = r.cr && r.ia_match && r.d_match && r.eigen_pass && r.roots_pass && r.cardinality_pass &&
                   r.graph_match.value_or(true);
        } else {
            r.ok = !r.cr && r.d_match && (!e.up_wide || *e.up_wide == r.up_wide);
        }
    } catch (const std::exception& ex) {
        r.ok = false;
        r.error = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RegressReport regress(const std::vector<Instance>& instances, unsigned threads) {
    RegressReport rep;
    rep.entries.resize(instances.size());
    auto t0 = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
            const auto& inst = instances[i];
            EntryResult& r = rep.entries[i];
            if (!inst.family->build) {
                r.key = inst.key();
                r.id = inst.family->id;
                r.skipped = true;
                r.expected = inst.family->expect(inst.params).ia;
                continue;
            }
            auto tb = std::chrono::steady_clock::now();
            try {
                inst.family->validate(inst.params);
                Code c = inst.family->build(inst.params);
                r = check(inst.key(), inst.family->id, c, inst.family->expect(inst.params));
            } catch (const std::exception& ex) {
                r.key = inst.key();
                r.id = inst.family->id;
                r.ok = false;
                r.error = ex.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - tb).count();
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, instances.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : rep.entries) {
        if (r.skipped)
            ++rep.skipped;
        else if (r.ok)
            ++rep.passed;
        else
            ++rep.failed;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

nlohmann::ordered_json entry_to_json(const EntryResult& e) {
    nlohmann::ordered_json j;
    j["key"] = e.key;
    j["id"] = e.id;
    j["status"] = e.skipped ? "skipped" : (e.ok ? "pass" : "fail");
    if (!e.error.empty()) j["error"] = e.error;
    if (e.skipped) {
        if (e.expected) j["expected_ia"] = e.expected->to_string();
        return j;
    }
    j["n"] = e.n;
    j["q"] = e.q;
    j["size"] = e.size;
    j["d"] = e.d;
    j["rho"] = e.rho;
    j["e"] = e.e;
    j["s"] = e.s;
    j["b"] = e.b;
    j["rank_B"] = e.rank_b;
    j["completely_regular"] = e.cr;
    j["up_wide"] = e.up_wide;
    j["computed_ia"] = e.computed ? nlohmann::ordered_json(e.computed->to_string()) : nlohmann::ordered_json();
    j["expected_ia"] = e.expected ? nlohmann::ordered_json(e.expected->to_string()) : nlohmann::ordered_json();
    j["ia_match"] = e.ia_match;
    j["d_match"] = e.d_match;
    j["eigenvalue_test"] = e.eigen_pass;
    j["lloyd_roots"] = e.roots_pass;
    j["cardinality_identity"] = e.cardinality_pass;
    j["graph_match"] = e.graph_match ? nlohmann::ordered_json(*e.graph_match) : nlohmann::ordered_json();
    return j;
}

}  // namespace

std::string entry_json(const EntryResult& e) { return entry_to_json(e).dump(2); }

std::string report_json(const RegressReport& r) {
    nlohmann::ordered_json j;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped"] = r.skipped;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) j["entries"].push_back(entry_to_json(e));
    return j.dump(2);
}

std::string manifest_json() {
    nlohmann::ordered_json j;
    j["families"] = nlohmann::ordered_json::array();
    for (const auto& f : catalog()) {
        nlohmann::ordered_json fj;
        fj["id"] = f.id;
        fj["title"] = f.title;
        nlohmann::ordered_json schema = nlohmann::ordered_json::object();
        for (const auto& [k, v] : f.schema) schema[k] = v;
        fj["params"] = schema;
        fj["provenance"] = to_string(f.provenance);
        fj["external"] = f.external;
        fj["negative_control"] = f.negative;
        fj["feasibility"] = f.feasibility;
        if (!f.note.empty()) fj["note"] = f.note;
        fj["instances"] = nlohmann::ordered_json::array();
        for (const auto& p : f.pinned) {
            Params rp = resolve(f, p);
            auto e = f.expect(rp);
            nlohmann::ordered_json ij;
            ij["key"] = Instance{&f, rp}.key();
            ij["expected_ia"] = e.ia ? nlohmann::ordered_json(e.ia->to_string()) : nlohmann::ordered_json();
            ij["completely_regular"] = e.completely_regular;
            if (e.up_wide) ij["up_wide"] = *e.up_wide;
            if (e.d) ij["d"] = e.d;
            fj["instances"].push_back(ij);
        }
        j["families"].push_back(fj);
    }
    return j.dump(2);
}

}  // namespace crc::atlas
