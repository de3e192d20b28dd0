#include "crcodes/code.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "crcodes/errors.hpp"
#include "crcodes/spectra.hpp"

namespace crc {

namespace detail {
struct CodeCache {
    std::mutex mu;
    std::optional<WeightDistribution> wd;
    std::optional<int> d;
    std::optional<int> rho;
};
}  // namespace detail

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& a : A) s += a;
    return s;
}

int weight(const Word& w) {
    int t = 0;
    for (Elem e : w) t += e != 0;
    return t;
}

int distance(const Word& a, const Word& b) {
    int t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] != b[i];
    return t;
}

namespace {

// Depth-first enumeration of the row space of G (rows assumed independent).
void for_each_word(const Matrix& G, const std::function<void(const Word&)>& fn) {
    const auto& f = *G.f;
    int k = G.rows, n = G.cols;
    std::vector<Word> stack(k + 1, Word(n, 0));
    std::function<void(int)> rec = [&](int level) {
        if (level == k) {
            fn(stack[k]);
            return;
        }
        for (int g = 0; g < f.q(); ++g) {
            Word& out = stack[level + 1];
            const Word& in = stack[level];
            if (g == 0) {
                out = in;
            } else {
                for (int j = 0; j < n; ++j) out[j] = f.add(in[j], f.mul(static_cast<Elem>(g), G.at(level, j)));
            }
            rec(level + 1);
        }
    };
    rec(0);
}

void check_words(const GaloisField& f, int n, const std::vector<Word>& words) {
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != n) throw FormatError("codeword length differs from n");
        for (Elem e : w)
            if (e >= f.q()) throw DomainError("codeword entry is not a field element");
    }
}

}  // namespace

Code Code::from_generator(const Matrix& G) {
    if (!G.f) throw DomainError("generator matrix without field");
    Code c;
    c.f_ = G.f;
    c.n_ = G.cols;
    c.kind_ = CodeKind::Linear;
    c.G_ = G;
    rref(c.G_);
    c.H_ = nullspace(c.G_);
    rref(c.H_);
    c.cache_ = std::make_shared<detail::CodeCache>();
    return c;
}

Code Code::from_parity_check(const Matrix& H, int n) {
    if (!H.f) throw DomainError("parity matrix without field");
    if (n < 0) n = H.cols;
    if (H.rows > 0 && H.cols != n) throw FormatError("parity matrix width differs from n");
    Code c;
    c.f_ = H.f;
    c.n_ = n;
    c.kind_ = CodeKind::Linear;
    c.H_ = H.rows > 0 ? H : Matrix(H.f, 0, n);
    int before = c.H_.rows;
    rref(c.H_);
    c.dropped_rows_ = before - c.H_.rows;
    c.G_ = nullspace(c.H_);
    rref(c.G_);
    c.cache_ = std::make_shared<detail::CodeCache>();
    return c;
}

Code Code::from_codewords(Field f, int n, std::vector<Word> words) {
    if (words.empty()) throw DomainError("empty code");
    check_words(*f, n, words);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Code c;
    c.f_ = std::move(f);
    c.n_ = n;
    c.kind_ = CodeKind::Explicit;
    c.words_ = std::move(words);
    c.cache_ = std::make_shared<detail::CodeCache>();
    return c;
}

Code Code::with_collapse_flag(bool flag) const {
    Code c = *this;
    c.collapsed_ = flag;
    return c;
}

int Code::dimension() const {
    if (!is_linear()) throw DomainError("dimension of a non-linear code");
    return G_.rows;
}

const Matrix& Code::generator() const {
    if (!is_linear()) throw DomainError("generator matrix of a non-linear code");
    return G_;
}

const Matrix& Code::parity() const {
    if (!is_linear()) throw DomainError("parity matrix of a non-linear code");
    return H_;
}

BigInt Code::size() const {
    if (is_linear()) return big_pow(q(), G_.rows);
    return BigInt(words_.size());
}

std::vector<Word> Code::codewords(const Guards& g) const {
    if (!is_linear()) return words_;
    require_within("max_codewords", sat_pow(q(), G_.rows), g.max_codewords);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(sat_pow(q(), G_.rows)));
    for_each_word(G_, [&](const Word& w) { out.push_back(w); });
    return out;
}

bool Code::contains(const Word& w) const {
    if (static_cast<int>(w.size()) != n_) return false;
    if (is_linear()) {
        for (Elem e : apply_transpose(H_, w))
            if (e) return false;
        return true;
    }
    return std::binary_search(words_.begin(), words_.end(), w);
}

Code Code::as_explicit(const Guards& g) const {
    if (!is_linear()) return *this;
    return from_codewords(f_, n_, codewords(g));
}

const WeightDistribution& Code::weight_distribution(const Guards& g) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->wd) return *cache_->wd;
    WeightDistribution wd;
    wd.A.assign(n_ + 1, 0);
    if (!is_linear()) {
        for (const auto& w : words_) wd.A[weight(w)] += 1;
    } else if (sat_pow(q(), G_.rows) <= g.max_codewords) {
        std::vector<std::uint64_t> cnt(n_ + 1, 0);
        for_each_word(G_, [&](const Word& w) { ++cnt[weight(w)]; });
        for (int i = 0; i <= n_; ++i) wd.A[i] = cnt[i];
    } else if (sat_pow(q(), H_.rows) <= g.max_codewords) {
        std::vector<std::uint64_t> cnt(n_ + 1, 0);
        for_each_word(H_, [&](const Word& w) { ++cnt[weight(w)]; });
        BigInt dual_size = big_pow(q(), H_.rows);
        for (int i = 0; i <= n_; ++i) {
            BigInt s = 0;
            for (int w = 0; w <= n_; ++w)
                if (cnt[w]) s += BigInt(cnt[w]) * krawtchouk(n_, q(), i, w);
            if (s % dual_size != 0) throw InternalError("MacWilliams transform produced a non-integer");
            wd.A[i] = s / dual_size;
        }
    } else {
        require_within("max_codewords", std::min(sat_pow(q(), G_.rows), sat_pow(q(), H_.rows)), g.max_codewords);
    }
    cache_->wd = std::move(wd);
    return *cache_->wd;
}

int Code::minimum_distance(const Guards& g) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->d) return *cache_->d;
    }
    int d = 0;
    if (is_linear()) {
        if (G_.rows == 0) throw DomainError("minimum distance of the zero code is undefined");
        const auto& wd = weight_distribution(g);
        for (int i = 1; i <= n_; ++i)
            if (wd.A[i] != 0) {
                d = i;
                break;
            }
    } else {
        if (words_.size() < 2) throw DomainError("minimum distance needs at least two codewords");
        std::uint64_t m = words_.size();
        require_within("max_pair_ops", sat_mul(sat_mul(m, m), n_), g.max_pair_ops);
        d = n_ + 1;
        for (std::size_t a = 0; a < words_.size(); ++a)
            for (std::size_t b = a + 1; b < words_.size(); ++b) d = std::min(d, distance(words_[a], words_[b]));
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->d = d;
    return d;
}

int Code::covering_radius(const Guards& g) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->rho) return *cache_->rho;
    }
    int rho = distance_partition(*this, PartitionMode::Auto, g).rho;
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->rho = rho;
    return rho;
}

std::string Code::describe() const {
    std::ostringstream os;
    if (is_linear()) os << "[" << n_ << "," << G_.rows << "]_" << q();
    else os << "(" << n_ << "," << words_.size() << ")_" << q();
    return os.str();
}

bool same_code(const Code& a, const Code& b) {
    if (a.q() != b.q() || a.n() != b.n()) return false;
    if (a.is_linear() && b.is_linear()) return a.generator() == b.generator();
    if (a.size() != b.size()) return false;
    const Code& probe = a.is_linear() ? b : a;
    const Code& other = a.is_linear() ? a : b;
    for (const auto& w : probe.codewords())
        if (!other.contains(w)) return false;
    return true;
}

// ------------------------------------------------------------- transforms

Code extend(const Code& c) {
    const auto& f = *c.field();
    auto ext = [&](const Word& w) {
        Word out = w;
        Elem s = 0;
        for (Elem e : w) s = f.add(s, e);
        out.push_back(f.neg(s));
        return out;
    };
    if (c.is_linear()) {
        const Matrix& G = c.generator();
        std::vector<Word> rows;
        for (int i = 0; i < G.rows; ++i) rows.push_back(ext(G.row(i)));
        if (rows.empty()) return Code::from_generator(Matrix(c.field(), 0, c.n() + 1));
        return Code::from_generator(matrix_from_words(c.field(), c.n() + 1, rows));
    }
    std::vector<Word> words;
    for (const auto& w : c.codewords()) words.push_back(ext(w));
    return Code::from_codewords(c.field(), c.n() + 1, std::move(words));
}

Code puncture(const Code& c, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (int p : positions)
        if (p < 0 || p >= c.n()) throw DomainError("puncture position out of range");
    if (static_cast<int>(positions.size()) >= c.n()) throw DomainError("puncturing every coordinate");
    int n2 = c.n() - static_cast<int>(positions.size());
    if (c.is_linear()) {
        Matrix G = delete_columns(c.generator(), positions);
        Code out = Code::from_generator(G);
        return out.with_collapse_flag(out.dimension() < c.dimension());
    }
    std::vector<char> drop(c.n(), 0);
    for (int p : positions) drop[p] = 1;
    std::vector<Word> words;
    for (const auto& w : c.codewords()) {
        Word v;
        v.reserve(n2);
        for (int j = 0; j < c.n(); ++j)
            if (!drop[j]) v.push_back(w[j]);
        words.push_back(std::move(v));
    }
    std::size_t before = words.size();
    Code out = Code::from_codewords(c.field(), n2, std::move(words));
    return out.with_collapse_flag(out.size() < BigInt(before));
}

Code puncture(const Code& c, int i) { return puncture(c, std::vector<int>{i}); }

Code shorten(const Code& c, int i) {
    if (i < 0 || i >= c.n()) throw DomainError("shorten position out of range");
    if (c.is_linear()) return Code::from_parity_check(delete_columns(c.parity(), {i}), c.n() - 1);
    std::vector<Word> words;
    for (const auto& w : c.codewords())
        if (w[i] == 0) {
            Word v = w;
            v.erase(v.begin() + i);
            words.push_back(std::move(v));
        }
    if (words.empty()) throw DomainError("shortening produced the empty code");
    return Code::from_codewords(c.field(), c.n() - 1, std::move(words));
}

namespace {

bool is_subspace(const GaloisField& f, const std::vector<Word>& S) {
    std::set<Word> set(S.begin(), S.end());
    if (set.empty()) return false;
    Word zero(S[0].size(), 0);
    if (!set.count(zero)) return false;
    for (const auto& a : set) {
        for (int g = 2; g < f.q(); ++g) {
            Word v(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) v[j] = f.mul(static_cast<Elem>(g), a[j]);
            if (!set.count(v)) return false;
        }
        for (const auto& b : set) {
            Word v(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) v[j] = f.add(a[j], b[j]);
            if (!set.count(v)) return false;
        }
    }
    return true;
}

}  // namespace

Code s_shorten(const Code& c, const std::vector<Word>& S, const std::vector<int>& positions) {
    if (S.empty()) throw DomainError("s_shorten needs a nonempty vector set");
    int j = static_cast<int>(positions.size());
    for (const auto& x : S)
        if (static_cast<int>(x.size()) != j) throw DomainError("s_shorten: vectors in S must have length equal to the window");
    std::set<int> uniq(positions.begin(), positions.end());
    if (static_cast<int>(uniq.size()) != j) throw DomainError("s_shorten: repeated position");
    for (int p : positions)
        if (p < 0 || p >= c.n()) throw DomainError("s_shorten position out of range");
    if (j >= c.n()) throw DomainError("s_shorten window covers the whole code");
    const auto& f = *c.field();

    if (c.is_linear() && is_subspace(f, S)) {
        Matrix span = matrix_from_words(c.field(), j, S);
        Matrix A = nullspace(span);  // window restriction lies in span(S) iff A x = 0
        Matrix placed(c.field(), A.rows, c.n());
        for (int r = 0; r < A.rows; ++r)
            for (int k = 0; k < j; ++k) placed.at(r, positions[k]) = A.at(r, k);
        Code sub = Code::from_parity_check(stack(c.parity(), placed), c.n());
        if (sub.dimension() == 0) throw DomainError("s_shorten produced the zero code");
        Matrix G = delete_columns(sub.generator(), positions);
        return Code::from_generator(G);
    }

    std::set<Word> Sset(S.begin(), S.end());
    std::vector<char> drop(c.n(), 0);
    for (int p : positions) drop[p] = 1;
    std::vector<Word> words;
    for (const auto& w : c.codewords()) {
        Word window(j);
        for (int k = 0; k < j; ++k) window[k] = w[positions[k]];
        if (!Sset.count(window)) continue;
        Word v;
        for (int t = 0; t < c.n(); ++t)
            if (!drop[t]) v.push_back(w[t]);
        words.push_back(std::move(v));
    }
    if (words.empty()) throw DomainError("s_shorten produced the empty code");
    return Code::from_codewords(c.field(), c.n() - j, std::move(words));
}

Code tau_transform(const Code& c, int i) {
    if (!c.is_binary()) throw DomainError("tau transform is defined for binary codes only");
    if (i < 0 || i >= c.n()) throw DomainError("tau position out of range");
    auto tau = [&](const Word& w) {
        Word v = w;
        Elem p = 0;
        for (Elem e : w) p ^= e;
        v[i] = p;
        return v;
    };
    if (c.is_linear()) {
        const Matrix& G = c.generator();
        std::vector<Word> rows;
        for (int r = 0; r < G.rows; ++r) rows.push_back(tau(G.row(r)));
        return Code::from_generator(matrix_from_words(c.field(), c.n(), rows));
    }
    std::vector<Word> words;
    for (const auto& w : c.codewords()) words.push_back(tau(w));
    return Code::from_codewords(c.field(), c.n(), std::move(words));
}

Code direct_sum(const std::vector<Code>& codes) {
    if (codes.empty()) throw DomainError("direct sum of no codes");
    for (const auto& c : codes)
        if (c.q() != codes[0].q()) throw DomainError("direct sum over different fields");
    if (codes.size() == 1) return codes[0];
    int n = 0;
    bool all_linear = true;
    for (const auto& c : codes) {
        n += c.n();
        all_linear = all_linear && c.is_linear();
    }
    if (all_linear) {
        int k = 0;
        for (const auto& c : codes) k += c.dimension();
        Matrix G(codes[0].field(), k, n);
        int r0 = 0, c0 = 0;
        for (const auto& c : codes) {
            const Matrix& g = c.generator();
            for (int i = 0; i < g.rows; ++i)
                for (int j = 0; j < g.cols; ++j) G.at(r0 + i, c0 + j) = g.at(i, j);
            r0 += g.rows;
            c0 += g.cols;
        }
        return Code::from_generator(G);
    }
    std::uint64_t total = 1;
    for (const auto& c : codes) total = sat_mul(total, static_cast<std::uint64_t>(c.size()));
    require_within("max_codewords", total, default_guards().max_codewords);
    std::vector<Word> acc{Word{}};
    for (const auto& c : codes) {
        auto words = c.codewords();
        std::vector<Word> next;
        next.reserve(acc.size() * words.size());
        for (const auto& a : acc)
            for (const auto& w : words) {
                Word v = a;
                v.insert(v.end(), w.begin(), w.end());
                next.push_back(std::move(v));
            }
        acc = std::move(next);
    }
    return Code::from_codewords(codes[0].field(), n, std::move(acc));
}

Code lift(const Matrix& H, int r) {
    if (r < 1) throw DomainError("lift degree must be >= 1");
    int q = H.f->q();
    int Q = 1;
    for (int i = 0; i < r; ++i) {
        Q *= q;
        if (Q > 256) throw DomainError("lifted field order exceeds 256");
    }
    SubfieldMap map(H.f, gf(Q));
    return Code::from_parity_check(embed(H, map), H.cols);
}

Matrix kronecker_parity(const Matrix& Ha, const Matrix& Hb) {
    const auto& fa = *Ha.f;
    const auto& fb = *Hb.f;
    if (fa.q() == fb.q()) return kronecker(Ha, Hb);
    if (is_subfield(fa, fb)) return kronecker(embed(Ha, SubfieldMap(Ha.f, Hb.f)), Hb);
    if (is_subfield(fb, fa)) return kronecker(Ha, embed(Hb, SubfieldMap(Hb.f, Ha.f)));
    throw DomainError("kronecker_parity: GF(" + std::to_string(fa.q()) + ") and GF(" + std::to_string(fb.q()) +
                      ") are incomparable; neither is a subfield of the other");
}

Code dual(const Code& c) {
    if (!c.is_linear()) throw DomainError("dual of a non-linear code; use the MacWilliams route");
    if (c.redundancy() == 0) return Code::from_generator(Matrix(c.field(), 0, c.n()));
    return Code::from_generator(c.parity());
}

bool is_self_complementary(const Code& c) {
    if (!c.is_binary()) throw DomainError("self-complementarity is defined for binary codes");
    Word one(c.n(), 1);
    if (!c.contains(one)) return false;
    if (c.is_linear()) return true;
    for (const auto& w : c.codewords()) {
        Word v = w;
        for (auto& e : v) e ^= 1;
        if (!c.contains(v)) return false;
    }
    return true;
}

Code union_with_cover(const Code& c) {
    if (!c.is_binary()) throw DomainError("union with the covering cell needs a binary code");
    if (is_self_complementary(c))
        throw DomainError("union with the covering cell requires a non-self-complementary code");
    if (!is_completely_regular(c).completely_regular)
        throw DomainError("union with the covering cell requires a completely regular code");
    if (c.is_linear()) {
        Matrix one(c.field(), 1, c.n());
        for (int j = 0; j < c.n(); ++j) one.at(0, j) = 1;
        return Code::from_generator(stack(c.generator(), one));
    }
    auto words = c.codewords();
    std::size_t m = words.size();
    for (std::size_t i = 0; i < m; ++i) {
        Word v = words[i];
        for (auto& e : v) e ^= 1;
        words.push_back(std::move(v));
    }
    return Code::from_codewords(c.field(), c.n(), std::move(words));
}

Code add_parity_rows(const Code& c, const Matrix& rows) {
    if (!c.is_linear()) throw DomainError("parity rows on a non-linear code");
    return Code::from_parity_check(stack(c.parity(), rows), c.n());
}

std::optional<Code> linearize(const Code& c) {
    if (c.is_linear()) return c;
    const auto& f = *c.field();
    Word zero(c.n(), 0);
    if (!c.contains(zero)) return std::nullopt;
    // Incremental echelon basis.
    std::vector<Word> basis;
    std::vector<int> pivot;
    for (const auto& w0 : c.codewords()) {
        Word w = w0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem x = w[pivot[b]];
            if (!x) continue;
            for (int j = 0; j < c.n(); ++j) w[j] = f.sub(w[j], f.mul(x, basis[b][j]));
        }
        int p = -1;
        for (int j = 0; j < c.n(); ++j)
            if (w[j]) {
                p = j;
                break;
            }
        if (p < 0) continue;
        Elem inv = f.inv(w[p]);
        for (auto& e : w) e = f.mul(e, inv);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem x = basis[b][p];
            if (!x) continue;
            for (int j = 0; j < c.n(); ++j) basis[b][j] = f.sub(basis[b][j], f.mul(x, w[j]));
        }
        basis.push_back(std::move(w));
        pivot.push_back(p);
        if (big_pow(f.q(), static_cast<long long>(basis.size())) > c.size()) return std::nullopt;
    }
    if (big_pow(f.q(), static_cast<long long>(basis.size())) != c.size()) return std::nullopt;
    return Code::from_generator(matrix_from_words(c.field(), c.n(), basis));
}

}  // namespace crc
