#include "crcodes/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "crcodes/errors.hpp"

namespace crc {

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

Rational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t) {
        if (t.empty()) throw FormatError("empty integer in rational");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw FormatError("malformed rational");
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') throw FormatError("malformed rational '" + std::string(t) + "'");
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in rational");
    return Rational(num, den);
}

BigInt big_pow(long long base, long long e) {
    BigInt r = 1, b = base;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

// ---------------------------------------------------------------- moduli

std::pair<int, int> prime_power(int q) {
    if (q < 2 || q > 256) throw DomainError("field order must satisfy 2 <= q <= 256, got " + std::to_string(q));
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int r = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++r;
    }
    if (t != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    return {p, r};
}

namespace {

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    for (int g = 2; g < p; ++g) {
        int x = 1, ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) return g;
    }
    throw InternalError("no primitive root");
}

}  // namespace

std::vector<int> pinned_modulus(int p, int r) {
    if (r == 1) {
        int g = smallest_primitive_root(p);
        return {(p - g) % p, 1};
    }
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    auto it = table.find({p, r});
    if (it == table.end()) throw DomainError("no pinned modulus for GF(" + std::to_string(p) + "^" + std::to_string(r) + ")");
    return it->second;
}

// ---------------------------------------------------------------- field

GaloisField::GaloisField(int p, int r, std::vector<int> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < r; ++i) q_ *= p;
    if (q_ > 256) throw DomainError("field order exceeds 256");
    if (static_cast<int>(modulus_.size()) != r + 1 || modulus_.back() != 1)
        throw DomainError("modulus must be monic of degree r");

    auto digits = [&](int a) {
        std::vector<int> d(r, 0);
        for (int k = 0; k < r; ++k) {
            d[k] = a % p;
            a /= p;
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int a = 0;
        for (int k = r - 1; k >= 0; --k) a = a * p + d[k];
        return a;
    };

    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<int> dn(r);
        for (int k = 0; k < r; ++k) dn[k] = (p - da[k]) % p;
        neg_[a] = static_cast<Elem>(index(dn));
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<int> ds(r);
            for (int k = 0; k < r; ++k) ds[k] = (da[k] + db[k]) % p;
            add_[a * q_ + b] = static_cast<Elem>(index(ds));
        }
    }

    // Powers of the root of the modulus.
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    std::vector<int> cur(r, 0);
    cur[0] = 1;
    std::vector<int> root(r, 0);
    if (r == 1) {
        root[0] = (p - modulus_[0]) % p;
    } else {
        root[1] = 1;
    }
    auto times_root = [&](const std::vector<int>& v) {
        if (r == 1) return std::vector<int>{v[0] * root[0] % p};
        std::vector<int> w(r + 1, 0);
        for (int k = 0; k < r; ++k) w[k + 1] = v[k];
        int top = w[r];
        for (int k = 0; k < r; ++k) w[k] = ((w[k] - top * modulus_[k]) % p + p) % p;
        w.resize(r);
        return w;
    };
    for (int k = 0; k < q_ - 1; ++k) {
        int idx = index(cur);
        if (log_[idx] != -1 || idx == 0)
            throw InternalError("modulus for GF(" + std::to_string(q_) + ") is not primitive");
        log_[idx] = k;
        exp_[k] = static_cast<Elem>(idx);
        cur = times_root(cur);
    }
    if (index(cur) != 1) throw InternalError("modulus is not primitive");
    for (int k = 0; k < q_ - 1; ++k) exp_[k + q_ - 1] = exp_[k];

    mul_.assign(q_ * q_, 0);
    inv_.assign(q_, 0);
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) mul_[a * q_ + b] = exp_[log_[a] + log_[b]];
        inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    trace_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Elem t = 0, x = static_cast<Elem>(a);
        for (int k = 0; k < r; ++k) {
            t = add(t, x);
            x = pow(x, p);
        }
        if (t >= p) throw InternalError("trace left the prime field");
        trace_[a] = t;
    }
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return inv_[a];
}

Elem GaloisField::exp(long long k) const {
    long long m = q_ - 1;
    k %= m;
    if (k < 0) k += m;
    return exp_[k];
}

int GaloisField::log(Elem a) const {
    if (a == 0) throw DomainError("log of zero");
    return log_[a];
}

Elem GaloisField::pow(Elem a, long long e) const {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw DomainError("negative power of zero");
        return 0;
    }
    return exp(static_cast<long long>(log_[a]) * (e % (q_ - 1)));
}

Elem GaloisField::from_int(long long v) const {
    long long m = ((v % p_) + p_) % p_;
    return static_cast<Elem>(m);
}

int GaloisField::digit(Elem a, int k) const {
    int x = a;
    for (int i = 0; i < k; ++i) x /= p_;
    return x % p_;
}

std::string GaloisField::format(Elem a) const {
    if (r_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    return "a^" + std::to_string(log_[a]);
}

Field gf_checked(int p, int r, const std::vector<int>& modulus) {
    if (modulus != pinned_modulus(p, r))
        throw DomainError("modulus differs from the pinned modulus for GF(" + std::to_string(p) + "^" +
                          std::to_string(r) + ")");
    int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    return gf(q);
}

Field gf(int q) {
    static std::mutex mu;
    static std::map<int, Field> cache;
    auto [p, r] = prime_power(q);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const GaloisField>(p, r, pinned_modulus(p, r));
    cache.emplace(q, f);
    return f;
}

// ---------------------------------------------------------------- subfields

bool is_subfield(const GaloisField& small, const GaloisField& big) {
    return small.p() == big.p() && big.r() % small.r() == 0;
}

SubfieldMap::SubfieldMap(Field small, Field big) : small_(std::move(small)), big_(std::move(big)) {
    if (!is_subfield(*small_, *big_))
        throw DomainError("GF(" + std::to_string(small_->q()) + ") is not a subfield of GF(" +
                          std::to_string(big_->q()) + ")");
    const auto& mod = small_->modulus();
    auto is_root = [&](Elem x) {
        Elem acc = 0;
        for (int k = static_cast<int>(mod.size()) - 1; k >= 0; --k)
            acc = big_->add(big_->mul(acc, x), big_->from_int(mod[k]));
        return acc == 0;
    };
    Elem g = big_->exp((big_->q() - 1) / (small_->q() - 1));
    if (!is_root(g)) {
        g = 0;
        for (int x = 1; x < big_->q(); ++x)
            if (is_root(static_cast<Elem>(x))) {
                g = static_cast<Elem>(x);
                break;
            }
        if (g == 0) throw InternalError("no root of the subfield modulus");
    }
    // Map the small field's primitive element to g; every nonzero element is a power.
    image_.assign(small_->q(), 0);
    pre_.assign(big_->q(), -1);
    pre_[0] = 0;
    Elem small_alpha = small_->alpha();
    for (int k = 0; k < small_->q() - 1; ++k) {
        Elem s = small_->pow(small_alpha, k);
        Elem b = big_->pow(g, k);
        image_[s] = b;
        pre_[b] = s;
    }
    // Additivity check on the prime-field constants.
    for (int a = 0; a < small_->p(); ++a)
        if (image_[a] != big_->from_int(a)) throw InternalError("subfield map is not the identity on GF(p)");
}

Elem SubfieldMap::preimage(Elem b) const {
    if (pre_[b] < 0) throw DomainError("element is not in the subfield");
    return static_cast<Elem>(pre_[b]);
}

// ---------------------------------------------------------------- polynomials

namespace {
void trim(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}
}  // namespace

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (int k = degree(); k >= 0; --k) acc = f->add(f->mul(acc, x), c[k]);
    return acc;
}

std::string Poly::to_string(char var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::string coef = f->format(c[k]);
        if (k == 0) {
            os << coef;
        } else {
            if (c[k] != 1) os << coef << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_from(Field f, const std::vector<int>& coeffs) {
    Poly a{f, {}};
    for (int v : coeffs) a.c.push_back(f->from_int(v));
    trim(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r{a.f, {}};
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = a.f->add(r.c[i + j], a.f->mul(a.c[i], b.c[j]));
    trim(r);
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r{a.f, std::vector<Elem>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = a.f->add(x, y);
    }
    trim(r);
    return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const auto& f = a.f;
    rem = a;
    quot = Poly{f, {}};
    if (a.degree() < b.degree()) return;
    quot.c.assign(a.degree() - b.degree() + 1, 0);
    Elem lead_inv = f->inv(b.c.back());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Elem coef = f->mul(rem.c.back(), lead_inv);
        quot.c[shift] = coef;
        for (int k = 0; k <= b.degree(); ++k) rem.c[k + shift] = f->sub(rem.c[k + shift], f->mul(coef, b.c[k]));
        trim(rem);
    }
    trim(quot);
}

bool operator==(const Poly& a, const Poly& b) { return a.f->q() == b.f->q() && a.c == b.c; }

std::vector<int> cyclotomic_coset(int ell, int n, int q) {
    if (n <= 0) throw DomainError("cyclotomic coset needs n > 0");
    std::vector<int> out;
    long long x = ((ell % n) + n) % n;
    long long start = x;
    do {
        out.push_back(static_cast<int>(x));
        x = x * q % n;
    } while (x != start);
    return out;
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, int q) {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int ell = 0; ell < n; ++ell) {
        if (seen[ell]) continue;
        auto c = cyclotomic_coset(ell, n, q);
        for (int x : c) seen[x] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

Poly minimal_polynomial(const Field& ext, int n, int e, const Field& base) {
    if (n <= 0 || (ext->q() - 1) % n != 0)
        throw DomainError("n = " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(ext->q() - 1));
    SubfieldMap emb(base, ext);
    Elem beta = ext->exp((ext->q() - 1) / n);
    Poly acc{ext, {1}};
    for (int j : cyclotomic_coset(e, n, base->q())) {
        Poly lin{ext, {ext->neg(ext->pow(beta, j)), 1}};
        acc = poly_mul(acc, lin);
    }
    Poly out{base, {}};
    for (Elem c : acc.c) out.c.push_back(emb.preimage(c));
    return out;
}

// ---------------------------------------------------------------- combinatorics

Rational binomial(const Rational& a, long long i) {
    if (i < 0) return 0;
    Rational num = 1;
    BigInt den = 1;
    for (long long k = 0; k < i; ++k) {
        num *= (a - k);
        den *= (k + 1);
    }
    return num / Rational(den);
}

BigInt binomial(long long a, long long i) {
    if (i < 0) return 0;
    if (a >= 0 && i > a) return 0;
    BigInt num = 1, den = 1;
    for (long long k = 0; k < i; ++k) {
        num *= (a - k);
        den *= (k + 1);
    }
    return num / den;
}

Rational krawtchouk(long long n, long long q, long long r, const Rational& xi) {
    Rational s = 0;
    for (long long j = 0; j <= r; ++j) {
        Rational term = binomial(Rational(n) - xi, j) * binomial(xi, r - j) * Rational(big_pow(q - 1, j));
        if ((r - j) % 2) s -= term;
        else s += term;
    }
    return s;
}

BigInt krawtchouk(long long n, long long q, long long r, long long xi) {
    BigInt s = 0;
    for (long long j = 0; j <= r; ++j) {
        BigInt term = binomial(n - xi, j) * binomial(xi, r - j) * big_pow(q - 1, j);
        if ((r - j) % 2) s -= term;
        else s += term;
    }
    return s;
}

}  // namespace crc
