#include "crcodes/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include "json.hpp"
#include <sstream>
#include <unordered_map>

#include "crcodes/errors.hpp"
#include "crcodes/syndrome.hpp"

namespace crc {

namespace {

constexpr std::uint8_t kUnseen = 0xff;

// Digits of a vector index (base q, coordinate 0 lowest).
struct VectorSpace {
    int q, n;
    std::uint64_t N;
    std::vector<std::uint64_t> pw;
    VectorSpace(int q_, int n_) : q(q_), n(n_) {
        pw.assign(n + 1, 1);
        for (int j = 1; j <= n; ++j) pw[j] = pw[j - 1] * q;
        N = pw[n];
    }
    std::uint64_t index_of(const Word& w) const {
        std::uint64_t x = 0;
        for (int j = n - 1; j >= 0; --j) x = x * q + w[j];
        return x;
    }
    template <class F>
    void for_each_neighbour(std::uint64_t x, F&& fn) const {
        for (int j = 0; j < n; ++j) {
            std::uint64_t d = (x / pw[j]) % q;
            std::uint64_t base = x - d * pw[j];
            for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(q); ++v)
                if (v != d) fn(base + v * pw[j]);
        }
    }
};

// Packs words into 64-bit lanes when n * bits fits, for fast distance counting.
struct Packer {
    int bits = 0, n = 0;
    bool ok = false;
    std::uint64_t low = 0;  // lowest bit of every lane
    Packer(int q, int n_) : n(n_) {
        bits = 1;
        while ((1 << bits) < q) ++bits;
        ok = n * bits <= 64;
        if (ok)
            for (int j = 0; j < n; ++j) low |= std::uint64_t{1} << (j * bits);
    }
    std::uint64_t pack(const Word& w) const {
        std::uint64_t x = 0;
        for (int j = 0; j < n; ++j) x |= static_cast<std::uint64_t>(w[j]) << (j * bits);
        return x;
    }
    int dist(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t z = a ^ b;
        if (bits == 1) return __builtin_popcountll(z);
        std::uint64_t m = z;
        for (int s = 1; s < bits; ++s) m |= z >> s;
        return __builtin_popcountll(m & low);
    }
};

}  // namespace

std::vector<BigInt> DistancePartition::vector_sizes() const {
    std::vector<BigInt> out;
    for (auto s : sizes) out.push_back(mode == PartitionMode::Syndrome ? BigInt(s) * code_size : BigInt(s));
    return out;
}

DistancePartition distance_partition(const Code& c, PartitionMode mode, const Guards& g) {
    if (mode == PartitionMode::Auto) mode = c.is_linear() ? PartitionMode::Syndrome : PartitionMode::Vector;
    DistancePartition part;
    part.mode = mode;
    part.code_size = c.size();

    if (mode == PartitionMode::Syndrome) {
        if (!c.is_linear()) throw DomainError("syndrome mode needs a linear code");
        require_within("max_syndromes", sat_pow(c.q(), c.redundancy()), g.max_syndromes);
        SyndromeSpace sp(c.field(), c.redundancy());
        auto gens = column_syndromes(c, sp);
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        if (!gens.empty() && gens[0] == 0) gens.erase(gens.begin());
        part.label.assign(sp.size(), kUnseen);
        std::vector<std::uint64_t> frontier{0}, next;
        part.label[0] = 0;
        int layer = 0;
        while (!frontier.empty()) {
            part.sizes.push_back(frontier.size());
            next.clear();
            for (auto s : frontier)
                for (auto gsyn : gens) {
                    auto t = sp.add(s, gsyn);
                    if (part.label[t] == kUnseen) {
                        part.label[t] = static_cast<std::uint8_t>(layer + 1);
                        next.push_back(t);
                    }
                }
            frontier.swap(next);
            ++layer;
            if (layer >= 255) throw ResourceError("max_syndromes", "covering radius exceeds label range");
        }
        part.rho = layer - 1;
        return part;
    }

    require_within("max_vectors", sat_pow(c.q(), c.n()), g.max_vectors);
    VectorSpace vs(c.q(), c.n());
    part.label.assign(vs.N, kUnseen);
    std::vector<std::uint64_t> frontier, next;
    for (const auto& w : c.codewords(g)) {
        auto x = vs.index_of(w);
        if (part.label[x] == kUnseen) {
            part.label[x] = 0;
            frontier.push_back(x);
        }
    }
    int layer = 0;
    while (!frontier.empty()) {
        part.sizes.push_back(frontier.size());
        next.clear();
        for (auto x : frontier)
            vs.for_each_neighbour(x, [&](std::uint64_t y) {
                if (part.label[y] == kUnseen) {
                    part.label[y] = static_cast<std::uint8_t>(layer + 1);
                    next.push_back(y);
                }
            });
        frontier.swap(next);
        ++layer;
    }
    part.rho = layer - 1;
    return part;
}

EquitableCounts equitable_counts(const Code& c, const DistancePartition& part, const Guards& g) {
    EquitableCounts out;
    out.observed.resize(part.rho + 1);
    std::vector<std::array<std::int64_t, 3>> last(part.rho + 1, {-1, -1, -1});
    auto record = [&](int l, const std::array<std::int64_t, 3>& t) {
        if (t != last[l]) {
            out.observed[l].insert(t);
            last[l] = t;
        }
    };
    if (part.mode == PartitionMode::Syndrome) {
        SyndromeSpace sp(c.field(), c.redundancy());
        auto gens = column_syndromes(c, sp);  // with multiplicity, including zero columns
        for (std::uint64_t s = 0; s < sp.size(); ++s) {
            int l = part.label[s];
            std::array<std::int64_t, 3> t{0, 0, 0};
            for (auto gsyn : gens) {
                int m = part.label[sp.add(s, gsyn)];
                if (m == l - 1) ++t[0];
                else if (m == l) ++t[1];
                else if (m == l + 1) ++t[2];
                else throw InternalError("syndrome transition jumps more than one cell");
            }
            record(l, t);
        }
    } else {
        (void)g;
        VectorSpace vs(c.q(), c.n());
        for (std::uint64_t x = 0; x < vs.N; ++x) {
            int l = part.label[x];
            std::array<std::int64_t, 3> t{0, 0, 0};
            vs.for_each_neighbour(x, [&](std::uint64_t y) {
                int m = part.label[y];
                if (m == l - 1) ++t[0];
                else if (m == l) ++t[1];
                else if (m == l + 1) ++t[2];
                else throw InternalError("neighbour jumps more than one cell");
            });
            record(l, t);
        }
    }
    out.equitable = true;
    for (const auto& s : out.observed)
        if (s.size() != 1) out.equitable = false;
    return out;
}

// ------------------------------------------------------------- outer profile

namespace {

// Exact Fourier transform over Z_p^D: returns F(s) = sum_v g(v) w^{<s,v>} for
// every s, where the sum is known to be rational.
std::vector<std::int64_t> character_transform(std::vector<std::int64_t> g, const SyndromeSpace& sp) {
    const std::uint64_t N = sp.size();
    const int p = sp.p();
    if (p == 2) {
        for (std::uint64_t h = 1; h < N; h <<= 1)
            for (std::uint64_t i = 0; i < N; i += h << 1)
                for (std::uint64_t j = i; j < i + h; ++j) {
                    auto a = g[j], b = g[j + h];
                    g[j] = a + b;
                    g[j + h] = a - b;
                }
        return g;
    }
    // Group-ring coefficients of w^t, t = 0..p-1.
    std::vector<std::int64_t> z(N * p, 0);
    for (std::uint64_t v = 0; v < N; ++v) z[v * p] = g[v];
    std::vector<std::int64_t> tmp(static_cast<std::size_t>(p) * p);
    std::uint64_t stride = 1;
    for (int k = 0; k < sp.D(); ++k) {
        for (std::uint64_t base = 0; base < N; ++base) {
            if ((base / stride) % p != 0) continue;
            std::fill(tmp.begin(), tmp.end(), 0);
            for (int a = 0; a < p; ++a)
                for (int d = 0; d < p; ++d) {
                    const std::int64_t* src = &z[(base + d * stride) * p];
                    int shift = (a * d) % p;
                    for (int t = 0; t < p; ++t) tmp[a * p + (t + shift) % p] += src[t];
                }
            for (int a = 0; a < p; ++a)
                for (int t = 0; t < p; ++t) z[(base + a * stride) * p + t] = tmp[a * p + t];
        }
        stride *= p;
    }
    std::vector<std::int64_t> out(N);
    for (std::uint64_t s = 0; s < N; ++s) {
        const std::int64_t* c = &z[s * p];
        for (int t = 2; t < p; ++t)
            if (c[t] != c[1]) throw InternalError("character sum is not rational");
        out[s] = c[0] - c[1];
    }
    return out;
}

OuterProfile profile_dual(const Code& c, const Guards& g) {
    const auto& f = *c.field();
    const int n = c.n(), R = c.redundancy();
    require_within("max_syndromes", sat_pow(c.q(), R), g.max_syndromes);
    SyndromeSpace sp(c.field(), R);
    const std::uint64_t N = sp.size();
    const Matrix& H = c.parity();

    // psi(gamma e_j) as a syndrome index: digit (j,k) = Tr(gamma * e_k).
    std::vector<std::vector<std::uint64_t>> psi(R, std::vector<std::uint64_t>(f.q(), 0));
    std::vector<Elem> basis(f.r());
    {
        int pk = 1;
        for (int k = 0; k < f.r(); ++k) {
            basis[k] = static_cast<Elem>(pk);
            pk *= f.p();
        }
    }
    for (int j = 0; j < R; ++j)
        for (int gam = 0; gam < f.q(); ++gam) {
            Word syn(R, 0);
            Elem e = 0;
            int pk = 1;
            for (int k = 0; k < f.r(); ++k) {
                e = static_cast<Elem>(e + f.trace(f.mul(static_cast<Elem>(gam), basis[k])) * pk);
                pk *= f.p();
            }
            syn[j] = e;
            psi[j][gam] = sp.index_of(syn);
        }

    // Enumerate the dual code u*H with its psi index.
    std::vector<std::uint16_t> wt(N);
    std::vector<std::uint64_t> where(N);
    {
        std::vector<Word> word(R + 1, Word(n, 0));
        std::vector<std::uint64_t> idx(R + 1, 0);
        std::uint64_t out = 0;
        std::function<void(int)> rec = [&](int level) {
            if (level == R) {
                wt[out] = static_cast<std::uint16_t>(weight(word[R]));
                where[out] = idx[R];
                ++out;
                return;
            }
            for (int gam = 0; gam < f.q(); ++gam) {
                if (gam == 0) {
                    word[level + 1] = word[level];
                } else {
                    for (int t = 0; t < n; ++t)
                        word[level + 1][t] = f.add(word[level][t], f.mul(static_cast<Elem>(gam), H.at(level, t)));
                }
                idx[level + 1] = sp.add(idx[level], psi[level][gam]);
                rec(level + 1);
            }
        };
        rec(0);
    }
    std::vector<int> weights;
    {
        std::vector<char> present(n + 1, 0);
        for (auto w : wt) present[w] = 1;
        for (int w = 0; w <= n; ++w)
            if (present[w]) weights.push_back(w);
    }

    // Refine syndrome classes by the transform of each weight layer.
    std::vector<std::uint32_t> cls(N, 0);
    std::vector<std::vector<std::int64_t>> class_t(1);
    for (int w : weights) {
        std::vector<std::int64_t> gvec(N, 0);
        for (std::uint64_t u = 0; u < N; ++u)
            if (wt[u] == w) gvec[where[u]] += 1;
        auto T = character_transform(std::move(gvec), sp);
        std::map<std::pair<std::uint32_t, std::int64_t>, std::uint32_t> remap;
        std::vector<std::vector<std::int64_t>> next_t;
        for (std::uint64_t s = 0; s < N; ++s) {
            auto key = std::make_pair(cls[s], T[s]);
            auto it = remap.find(key);
            if (it == remap.end()) {
                it = remap.emplace(key, static_cast<std::uint32_t>(next_t.size())).first;
                auto v = class_t[cls[s]];
                v.push_back(T[s]);
                next_t.push_back(std::move(v));
            }
            cls[s] = it->second;
        }
        class_t.swap(next_t);
    }

    std::vector<std::uint64_t> count(class_t.size(), 0), rep(class_t.size(), 0);
    for (std::uint64_t s = N; s-- > 0;) {
        ++count[cls[s]];
        rep[cls[s]] = s;
    }
    // Krawtchouk table K[i][w].
    std::vector<std::vector<BigInt>> K(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int w : weights) K[i].push_back(krawtchouk(n, c.q(), i, w));

    OuterProfile prof;
    prof.via_dual = true;
    BigInt Nbig = N, csize = c.size();
    for (std::size_t k = 0; k < class_t.size(); ++k) {
        ProfileRow row;
        row.B.assign(n + 1, 0);
        row.label = -1;
        for (int i = 0; i <= n; ++i) {
            BigInt acc = 0;
            for (std::size_t wi = 0; wi < weights.size(); ++wi) acc += K[i][wi] * class_t[k][wi];
            if (acc % Nbig != 0) throw InternalError("coset weight distribution is not integral");
            row.B[i] = acc / Nbig;
            if (row.label < 0 && row.B[i] != 0) row.label = i;
        }
        row.multiplicity = BigInt(count[k]) * csize;
        row.representative = rep[k];
        prof.rows.push_back(std::move(row));
    }
    return prof;
}

OuterProfile profile_direct(const Code& c, const Guards& g) {
    const int n = c.n(), q = c.q();
    require_within("max_vectors", sat_pow(q, n), g.max_vectors);
    auto words = c.codewords(g);
    VectorSpace vs(q, n);
    require_within("max_pair_ops", sat_mul(vs.N, words.size()), g.max_pair_ops);
    Packer pk(q, n);
    std::vector<std::uint64_t> packed;
    if (pk.ok)
        for (const auto& w : words) packed.push_back(pk.pack(w));

    std::map<std::vector<std::uint32_t>, std::pair<std::uint64_t, std::uint64_t>> rows;  // B -> (count, rep)
    std::vector<std::uint32_t> B(n + 1);
    Word x(n, 0);
    for (std::uint64_t idx = 0; idx < vs.N; ++idx) {
        std::fill(B.begin(), B.end(), 0);
        if (pk.ok) {
            std::uint64_t xp = pk.pack(x);
            for (auto w : packed) ++B[pk.dist(xp, w)];
        } else {
            for (const auto& w : words) ++B[distance(x, w)];
        }
        auto it = rows.find(B);
        if (it == rows.end()) rows.emplace(B, std::make_pair(std::uint64_t{1}, idx));
        else ++it->second.first;
        for (int j = 0; j < n; ++j) {
            if (++x[j] < q) break;
            x[j] = 0;
        }
    }
    OuterProfile prof;
    for (const auto& [b, cr] : rows) {
        ProfileRow row;
        row.label = -1;
        for (int i = 0; i <= n; ++i) {
            row.B.push_back(b[i]);
            if (row.label < 0 && b[i]) row.label = i;
        }
        row.multiplicity = cr.first;
        row.representative = cr.second;
        prof.rows.push_back(std::move(row));
    }
    return prof;
}

}  // namespace

OuterProfile outer_profile(const Code& c, ProfileRoute route, const Guards& g) {
    if (route == ProfileRoute::Auto) route = c.is_linear() ? ProfileRoute::Dual : ProfileRoute::Direct;
    if (route == ProfileRoute::Dual && !c.is_linear()) throw DomainError("dual route needs a linear code");
    OuterProfile prof = route == ProfileRoute::Dual ? profile_dual(c, g) : profile_direct(c, g);
    std::sort(prof.rows.begin(), prof.rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.B < b.B;
    });
    return prof;
}

// ------------------------------------------------------------- intersection arrays

IntersectionArray IntersectionArray::reversed() const {
    IntersectionArray r;
    r.n = n;
    r.q = q;
    int rh = rho();
    for (int l = 0; l < rh; ++l) r.b.push_back(c_at(rh - l));
    for (int l = 1; l <= rh; ++l) r.c.push_back(b_at(rh - l));
    return r;
}

std::string IntersectionArray::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << b[i];
    os << "; ";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
    os << "}";
    return os.str();
}

bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.n == y.n && x.q == y.q && x.b == y.b && x.c == y.c;
}

IntersectionArray parse_ia(const std::string& s, int n, int q) {
    std::string t;
    for (char ch : s)
        if (ch != '{' && ch != '}' && ch != ' ') t += ch;
    auto semi = t.find(';');
    if (semi == std::string::npos) throw FormatError("intersection array needs ';'");
    auto parse_list = [](const std::string& part) {
        std::vector<std::int64_t> v;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                std::size_t used = 0;
                long long x = std::stoll(item, &used);
                if (used != item.size()) throw FormatError("bad integer '" + item + "'");
                v.push_back(x);
            } catch (const std::logic_error&) {
                throw FormatError("bad integer '" + item + "'");
            }
        }
        return v;
    };
    IntersectionArray ia;
    ia.n = n;
    ia.q = q;
    ia.b = parse_list(t.substr(0, semi));
    ia.c = parse_list(t.substr(semi + 1));
    if (ia.b.size() != ia.c.size()) throw FormatError("intersection array halves differ in length");
    return ia;
}

// ------------------------------------------------------------- distributions

std::vector<Rational> distance_distribution(const Code& c, const Guards& g) {
    std::vector<Rational> A(c.n() + 1, 0);
    if (c.is_linear()) {
        const auto& wd = c.weight_distribution(g);
        for (int i = 0; i <= c.n(); ++i) A[i] = wd.A[i];
        return A;
    }
    auto words = c.codewords(g);
    std::uint64_t m = words.size();
    require_within("max_pair_ops", sat_mul(sat_mul(m, m), c.n()), g.max_pair_ops);
    Packer pk(c.q(), c.n());
    std::vector<std::uint64_t> cnt(c.n() + 1, 0);
    if (pk.ok) {
        std::vector<std::uint64_t> packed;
        for (const auto& w : words) packed.push_back(pk.pack(w));
        for (auto a : packed)
            for (auto b : packed) ++cnt[pk.dist(a, b)];
    } else {
        for (const auto& a : words)
            for (const auto& b : words) ++cnt[distance(a, b)];
    }
    for (int i = 0; i <= c.n(); ++i) A[i] = Rational(BigInt(cnt[i]), BigInt(m));
    return A;
}

std::vector<Rational> dual_distance_distribution(const Code& c, const Guards& g) {
    auto A = distance_distribution(c, g);
    Rational size = Rational(c.size());
    std::vector<Rational> B(c.n() + 1, 0);
    for (int k = 0; k <= c.n(); ++k) {
        Rational s = 0;
        for (int i = 0; i <= c.n(); ++i)
            if (A[i] != 0) s += A[i] * Rational(krawtchouk(c.n(), c.q(), k, i));
        B[k] = s / size;
    }
    return B;
}

int external_distance(const Code& c, const Guards& g) {
    auto B = dual_distance_distribution(c, g);
    int s = 0;
    for (std::size_t k = 1; k < B.size(); ++k)
        if (B[k] != 0) ++s;
    return s;
}

bool is_distance_invariant(const Code& c, const Guards& g) {
    if (c.is_linear()) return true;
    auto words = c.codewords(g);
    std::uint64_t m = words.size();
    require_within("max_pair_ops", sat_mul(sat_mul(m, m), c.n()), g.max_pair_ops);
    std::vector<std::uint64_t> ref;
    for (const auto& a : words) {
        std::vector<std::uint64_t> cnt(c.n() + 1, 0);
        for (const auto& b : words) ++cnt[distance(a, b)];
        if (ref.empty()) ref = cnt;
        else if (cnt != ref) return false;
    }
    return true;
}

int t_regularity_degree(const OuterProfile& prof, int rho) {
    for (int t = 0; t <= rho; ++t) {
        int rows = 0;
        for (const auto& r : prof.rows) rows += r.label == t;
        if (rows != 1) return t - 1;
    }
    return rho;
}

int t_regularity_degree(const Code& c, const Guards& g) {
    return t_regularity_degree(outer_profile(c, ProfileRoute::Auto, g), c.covering_radius(g));
}

// ------------------------------------------------------------- CR test

namespace {

CRVerdict verdict_from(const Code& c, const DistancePartition& part, const EquitableCounts& eq, const OuterProfile& prof) {
    CRVerdict v;
    v.rho = part.rho;
    v.outer_test = prof.b() == part.rho;
    v.equitable_test = eq.equitable;
    if (v.outer_test != v.equitable_test)
        throw InternalError("CR verdicts disagree: outer-profile test says " + std::string(v.outer_test ? "CR" : "not CR") +
                            ", equitable-partition test says " + (v.equitable_test ? "CR" : "not CR"));
    // Row labels must agree with the partition.
    for (const auto& r : prof.rows) {
        bool syn_rep = prof.via_dual;
        if ((syn_rep && part.mode == PartitionMode::Syndrome) || (!syn_rep && part.mode == PartitionMode::Vector)) {
            if (part.label[r.representative] != r.label)
                throw InternalError("outer-profile row label disagrees with the distance partition");
        }
    }
    v.completely_regular = v.outer_test;
    if (v.completely_regular) {
        IntersectionArray ia;
        ia.n = c.n();
        ia.q = c.q();
        for (int l = 0; l <= part.rho; ++l) {
            const auto& t = *eq.observed[l].begin();
            if (l < part.rho) ia.b.push_back(t[2]);
            if (l > 0) ia.c.push_back(t[0]);
        }
        v.ia = ia;
    }
    return v;
}

}  // namespace

CRVerdict is_completely_regular(const Code& c, const Guards& g) {
    auto part = distance_partition(c, PartitionMode::Auto, g);
    auto eq = equitable_counts(c, part, g);
    auto prof = outer_profile(c, ProfileRoute::Auto, g);
    return verdict_from(c, part, eq, prof);
}

// ------------------------------------------------------------- packing parameters

std::optional<PackingParameters> packing_parameters(const OuterProfile& prof, int rho) {
    int m = static_cast<int>(prof.rows.size()), k = rho + 1;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = prof.rows[i].B[j];
        a[i][k] = 1;
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int col = 0; col < k && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][col];
        for (int j = col; j <= k; ++j) a[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j <= k; ++j) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(col);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (a[i][k] != 0) return std::nullopt;
    // Free variables (if any) are set to zero.
    PackingParameters beta(k, 0);
    for (int i = 0; i < r; ++i) beta[pivcol[i]] = a[i][k];
    return beta;
}

std::optional<PackingParameters> packing_parameters(const Code& c, const Guards& g) {
    return packing_parameters(outer_profile(c, ProfileRoute::Auto, g), c.covering_radius(g));
}

std::vector<Rational> kappa(const PackingParameters& beta, int n, int q) {
    std::vector<Rational> k;
    for (std::size_t i = 0; i < beta.size(); ++i)
        k.push_back(beta[i] * Rational(big_pow(q - 1, static_cast<long long>(i)) * binomial(n, static_cast<long long>(i))));
    return k;
}

int rational_rank(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    int m = static_cast<int>(a.size()), n = static_cast<int>(a[0].size()), rk = 0;
    for (int col = 0; col < n && rk < m; ++col) {
        int piv = -1;
        for (int i = rk; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rk]);
        for (int i = rk + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rk][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

// ------------------------------------------------------------- classification

Classification classify(const Code& c, const Guards& g) {
    Classification cl;
    cl.n = c.n();
    cl.q = c.q();
    cl.size = c.size();
    cl.d = c.minimum_distance(g);
    cl.e = (cl.d - 1) / 2;

    auto part = distance_partition(c, PartitionMode::Auto, g);
    auto eq = equitable_counts(c, part, g);
    auto prof = outer_profile(c, ProfileRoute::Auto, g);
    auto v = verdict_from(c, part, eq, prof);

    cl.rho = part.rho;
    cl.completely_regular = v.completely_regular;
    cl.ia = v.ia;
    cl.b = prof.b();
    cl.s = external_distance(c, g);
    cl.distance_invariant = is_distance_invariant(c, g);
    cl.t_regular_degree = t_regularity_degree(prof, cl.rho);
    cl.cell_sizes = part.vector_sizes();
    {
        std::vector<std::vector<BigInt>> rows;
        for (const auto& r : prof.rows) rows.push_back(r.B);
        cl.rank_b = rational_rank(rows);
    }
    cl.beta = packing_parameters(prof, cl.rho);
    cl.up_wide = cl.beta.has_value();
    cl.perfect = cl.rho == cl.e;
    cl.quasi_perfect = cl.rho == cl.e + 1;

    auto constant_over = [&](int label, auto value) -> std::optional<BigInt> {
        std::optional<BigInt> val;
        for (const auto& r : prof.rows) {
            if (r.label != label) continue;
            BigInt x = value(r);
            if (val && *val != x) return std::nullopt;
            val = x;
        }
        return val;
    };
    int e = cl.e;
    auto at = [&](const ProfileRow& r, int i) { return i <= cl.n ? r.B[i] : BigInt(0); };
    if (cl.quasi_perfect) {
        auto lam = constant_over(e, [&](const ProfileRow& r) { return at(r, e + 1); });
        auto mu = constant_over(e + 1, [&](const ProfileRow& r) { return at(r, e + 1); });
        cl.up_gvt = lam && mu && *mu > 0;
    }
    if (c.is_binary() && cl.d % 2 == 1 && cl.rho <= e + 1) {
        auto s1 = constant_over(e, [&](const ProfileRow& r) { return at(r, e) + at(r, e + 1); });
        bool ok = s1.has_value();
        if (ok && cl.rho == e + 1) {
            auto s2 = constant_over(e + 1, [&](const ProfileRow& r) { return at(r, e) + at(r, e + 1); });
            ok = s2 && *s2 == *s1;
        }
        cl.up_narrow = ok;
    }

    auto fail = [&](const std::string& what) {
        throw InternalError("classification invariant violated for " + c.describe() + ": " + what);
    };
    if (!(cl.e <= cl.rho && cl.rho <= cl.s && cl.s <= cl.b)) fail("e <= rho <= s <= b");
    if (cl.rank_b != cl.s + 1) fail("rank(B) = s + 1");
    if (cl.completely_regular && cl.rho != cl.s) fail("CR implies rho = s");
    if (cl.up_wide != (cl.rho == cl.s)) fail("UP-wide iff rho = s");
    if (cl.perfect != (cl.e == cl.s)) fail("perfect iff e = s");
    if (cl.up_gvt != (cl.s == cl.e + 1 && cl.rho == cl.e + 1)) fail("UP (GvT) iff s = e + 1");
    if (cl.completely_regular != (cl.t_regular_degree == cl.rho)) fail("CR iff rho-regular");
    if (cl.up_wide) {
        auto kap = kappa(*cl.beta, cl.n, cl.q);
        Rational total = 0;
        for (int i = 0; i <= cl.rho; ++i) total += kap[i];
        if (total * Rational(cl.size) != Rational(big_pow(cl.q, cl.n))) fail("cardinality identity");
    }
    return cl;
}

std::string classification_json(const Classification& cl) {
    nlohmann::ordered_json j;
    j["n"] = cl.n;
    j["q"] = cl.q;
    j["size"] = to_string(cl.size);
    j["e"] = cl.e;
    j["d"] = cl.d;
    j["rho"] = cl.rho;
    j["s"] = cl.s;
    j["b"] = cl.b;
    j["rank_B"] = cl.rank_b;
    j["distance_invariant"] = cl.distance_invariant;
    j["perfect"] = cl.perfect;
    j["quasi_perfect"] = cl.quasi_perfect;
    j["up_narrow"] = cl.up_narrow;
    j["up_gvt"] = cl.up_gvt;
    j["up_wide"] = cl.up_wide;
    j["completely_regular"] = cl.completely_regular;
    j["t_regular_degree"] = cl.t_regular_degree;
    if (cl.ia) j["ia"] = {cl.ia->b, cl.ia->c};
    else j["ia"] = nullptr;
    if (cl.beta) {
        std::vector<std::string> b;
        for (const auto& x : *cl.beta) b.push_back(to_string(x));
        j["beta"] = b;
    } else {
        j["beta"] = nullptr;
    }
    std::vector<std::string> cells;
    for (const auto& k : cl.cell_sizes) cells.push_back(to_string(k));
    j["cell_sizes"] = cells;
    return j.dump();
}

// ------------------------------------------------------------- extension

ExtensionCriterion up_extension_criterion(const PackingParameters& beta, int n, int q) {
    if (q != 2) throw DomainError("the extension criterion is stated for binary codes");
    if (beta.empty()) throw DomainError("empty packing parameters");
    int rho = static_cast<int>(beta.size()) - 1;
    auto B = [&](int i) -> Rational { return (i < 0 || i > rho) ? Rational(0) : beta[i]; };
    ExtensionCriterion out;
    for (int i = 0; i <= (rho - 1) / 2; ++i)
        if (rho >= 1 && B(rho - 2 * i) != B(rho - 2 * i - 1)) return out;
    out.stays_up = true;
    PackingParameters gamma(rho + 2, 0);
    for (int i = 0; i <= rho / 2; ++i) gamma[rho - 2 * i] = B(rho - 2 * i);
    for (int i = 0; i <= (rho + 1) / 2; ++i) {
        int idx = rho - 2 * i + 1;
        gamma[idx] = (Rational(rho + 1 - 2 * i) * B(rho - 2 * i) + Rational(n - rho + 2 * i) * B(rho - 2 * i + 2)) /
                     Rational(n + 1);
    }
    out.gamma = gamma;
    return out;
}

bool self_complementary_extension_block(const Code& c) {
    if (!c.is_binary()) throw DomainError("self-complementary extension block needs a binary code");
    return c.n() % 2 == 0 && is_self_complementary(c);
}

}  // namespace crc
