#include "crcodes/design.hpp"

#include <algorithm>

#include "crcodes/errors.hpp"
#include "json.hpp"

namespace crc {

std::optional<std::vector<BigInt>> design_lambdas(int v, int k, int t, const BigInt& lambda, int q) {
    std::vector<BigInt> out;
    for (int i = 0; i <= t; ++i) {
        BigInt num = lambda * big_pow(q - 1, t - i) * binomial(v - i, t - i);
        BigInt den = binomial(k - i, t - i);
        if (den == 0 || num % den != 0) return std::nullopt;
        out.push_back(num / den);
    }
    return out;
}

std::vector<Word> weight_layer(const Code& c, int w, const Guards& g) {
    auto words = c.codewords(g);
    std::vector<Word> out;
    if (words.empty()) return out;
    const auto& f = *c.field();
    Word shift = words[0];
    bool translate = !c.is_linear() && weight(shift) != 0;
    if (!c.is_linear()) {
        // prefer an actual zero codeword when present
        for (const auto& x : words)
            if (weight(x) == 0) translate = false;
    }
    for (auto x : words) {
        if (translate)
            for (int j = 0; j < c.n(); ++j) x[j] = f.sub(x[j], shift[j]);
        if (weight(x) == w) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Colex rank of a sorted index set.
std::uint64_t colex_rank(const std::vector<int>& s, const std::vector<std::vector<std::uint64_t>>& C) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < s.size(); ++j) r += C[s[j]][j + 1];
    return r;
}

template <class F>
void for_each_subset(const std::vector<int>& items, int t, F&& fn) {
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    std::vector<int> pick(t);
    int m = static_cast<int>(items.size());
    if (t > m) return;
    while (true) {
        for (int i = 0; i < t; ++i) pick[i] = items[idx[i]];
        fn(pick);
        int i = t - 1;
        while (i >= 0 && idx[i] == m - t + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<BigInt> constant_of(const std::vector<std::uint64_t>& counts) {
    if (counts.empty()) return std::nullopt;
    for (auto x : counts)
        if (x != counts[0]) return std::nullopt;
    if (counts[0] == 0) return std::nullopt;
    return BigInt(counts[0]);
}

}  // namespace

std::optional<DesignWitness> verify_design(const Code& c, int w, int t, const Guards& g) {
    if (t < 0 || t > w) throw DomainError("design strength t must satisfy 0 <= t <= w");
    if (w > c.n()) throw DomainError("weight exceeds length");
    auto layer = weight_layer(c, w, g);
    if (layer.empty()) throw DomainError("no codewords of weight " + std::to_string(w));
    const int n = c.n(), q = c.q();

    std::optional<BigInt> lambda;
    if (t == 0) {
        lambda = BigInt(layer.size());
    } else if (q == 2) {
        std::uint64_t cells = static_cast<std::uint64_t>(binomial(n, t));
        std::uint64_t per = static_cast<std::uint64_t>(binomial(w, t));
        require_within("max_design_ops", sat_mul(layer.size(), per) + cells, g.max_design_ops);
        std::vector<std::vector<std::uint64_t>> C(n + 1, std::vector<std::uint64_t>(t + 1, 0));
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= t; ++b) C[a][b] = static_cast<std::uint64_t>(binomial(a, b));
        std::vector<std::uint64_t> counts(cells, 0);
        std::vector<int> supp;
        for (const auto& x : layer) {
            supp.clear();
            for (int j = 0; j < n; ++j)
                if (x[j]) supp.push_back(j);
            for_each_subset(supp, t, [&](const std::vector<int>& s) { ++counts[colex_rank(s, C)]; });
        }
        lambda = constant_of(counts);
    } else {
        BigInt ny = big_pow(q - 1, t) * binomial(n, t);
        require_within("max_design_ops", sat_mul(static_cast<std::uint64_t>(std::min<BigInt>(ny, BigInt(UINT64_MAX))), layer.size()),
                       g.max_design_ops);
        std::vector<int> all(n);
        for (int j = 0; j < n; ++j) all[j] = j;
        std::optional<std::uint64_t> common;
        bool uniform = true;
        Word y(n, 0);
        for_each_subset(all, t, [&](const std::vector<int>& s) {
            if (!uniform) return;
            // every nonzero assignment on s
            std::vector<Elem> val(t, 1);
            while (true) {
                for (int i = 0; i < t; ++i) y[s[i]] = val[i];
                std::uint64_t cnt = 0;
                for (const auto& x : layer)
                    if (distance(x, y) == w - t) ++cnt;
                if (!common) common = cnt;
                else if (*common != cnt) uniform = false;
                int i = 0;
                while (i < t && ++val[i] == q) val[i++] = 1;
                if (i == t || !uniform) break;
            }
            for (int i = 0; i < t; ++i) y[s[i]] = 0;
        });
        if (uniform && common && *common > 0) lambda = BigInt(*common);
    }
    if (!lambda) return std::nullopt;

    DesignWitness dw;
    dw.v = n;
    dw.k = w;
    dw.t = t;
    dw.q = q;
    dw.qary = q > 2;
    dw.lambda = *lambda;
    auto lams = design_lambdas(n, w, t, *lambda, q);
    if (!lams) throw InternalError("design lambda_i not integral");
    dw.blocks = (*lams)[0];
    if (dw.blocks != BigInt(layer.size())) throw InternalError("design block count disagrees with lambda_0");
    if (t == 0) return dw;
    dw.replication = (*lams)[1];
    if (dw.blocks * w != BigInt(n) * (q - 1) * dw.replication)
        throw InternalError("design violates b k = v (q-1) r");
    return dw;
}

std::pair<int, BigInt> max_design_strength(const Code& c, int w, const Guards& g) {
    int best = 0;
    BigInt lam = verify_design(c, w, 0, g)->lambda;
    for (int t = 1; t <= w; ++t) {
        auto d = verify_design(c, w, t, g);
        if (!d) break;
        best = t;
        lam = d->lambda;
    }
    return {best, lam};
}

bool weight_recursion_check(const std::vector<BigInt>& A, int from) {
    int n = static_cast<int>(A.size()) - 1;
    auto at = [&](int i) { return i >= 0 && i <= n ? A[i] : BigInt(0); };
    for (int w = from; w <= n; ++w) {
        if (w % 2 == 0) continue;
        if (BigInt(n - w) * at(w) != BigInt(w + 1) * at(w + 1)) return false;
    }
    return true;
}

bool weight_recursion_check(const Code& c, const Guards& g) {
    if (!c.is_binary()) throw DomainError("weight recursion is stated for binary codes");
    std::vector<BigInt> A(c.n() + 1, 0);
    if (c.is_linear()) {
        A = c.weight_distribution(g).A;
    } else {
        for (int w = 0; w <= c.n(); ++w) A[w] = BigInt(weight_layer(c, w, g).size());
    }
    int d = c.minimum_distance(g);
    return weight_recursion_check(A, 2 * ((d - 1) / 2) + 1);
}

std::vector<BigInt> perfect_weight_distribution(int n) {
    if (n < 1 || ((n + 1) & n) != 0) throw DomainError("length must be 2^m - 1");
    std::vector<Rational> A(n + 1, 0);
    A[0] = 1;
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1) A[i] = Rational(binomial(n, i)) / (n - i + 1) - A[i - 1];
        else A[i] = Rational(n - i + 1, i) * A[i - 1];
    }
    std::vector<BigInt> out;
    for (const auto& a : A) {
        if (!is_integer(a)) throw InternalError("perfect weight recursion produced a fraction");
        out.push_back(numerator(a));
    }
    return out;
}

std::string design_json(const DesignWitness& w) {
    nlohmann::ordered_json j;
    j["v"] = w.v;
    j["k"] = w.k;
    j["t"] = w.t;
    j["lambda"] = to_string(w.lambda);
    j["b"] = to_string(w.blocks);
    j["r"] = to_string(w.replication);
    j["qary"] = w.qary;
    return j.dump();
}

}  // namespace crc
