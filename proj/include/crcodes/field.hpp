#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace crc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);
Rational parse_rational(std::string_view s);
bool is_integer(const Rational& x);

// Field elements are indices 0..q-1: the base-p digits of the polynomial-basis
// coefficient vector, low degree first. 0 and 1 are the additive and
// multiplicative identities.
using Elem = std::uint8_t;

class GaloisField {
public:
    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }
    // Monic modulus, coefficients low to high (length r+1). For r == 1 this is x - g.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    // Primitive element (root of the modulus).
    Elem alpha() const { return exp_[1]; }
    Elem exp(long long k) const;
    int log(Elem a) const;  // a != 0

    // Absolute trace into the prime field, returned as 0..p-1.
    int trace(Elem a) const { return trace_[a]; }
    // Prime-field element (integer value mod p) as a field element.
    Elem from_int(long long v) const;

    // Base-p digit k of the index of a (coefficient of alpha^k).
    int digit(Elem a, int k) const;

    std::string format(Elem a) const;

    // Construct directly; prefer gf(q) which caches.
    GaloisField(int p, int r, std::vector<int> modulus);

private:
    int p_, r_, q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<Elem> exp_;
    std::vector<int> log_;
    std::vector<int> trace_;
};

using Field = std::shared_ptr<const GaloisField>;

// Cached field of order q (q <= 256, prime power). Throws DomainError otherwise.
Field gf(int q);
// Field from (p, r, modulus). The modulus must equal the pinned one for p^r.
Field gf_checked(int p, int r, const std::vector<int>& modulus);
// Pinned modulus for p^r, low to high.
std::vector<int> pinned_modulus(int p, int r);
// (p, r) with p^r == q, or throws DomainError.
std::pair<int, int> prime_power(int q);

// Embedding of a subfield GF(p^a) into GF(p^b), a | b. The small field's
// generator maps to alpha_big^((q_big-1)/(q_small-1)) when that is a root of the
// small modulus, otherwise to the smallest-index root.
class SubfieldMap {
public:
    SubfieldMap(Field small, Field big);
    Elem operator()(Elem a) const { return image_[a]; }
    const Field& small() const { return small_; }
    const Field& big() const { return big_; }
    // Inverse on the image; throws DomainError for elements outside the subfield.
    Elem preimage(Elem b) const;

private:
    Field small_, big_;
    std::vector<Elem> image_;
    std::vector<int> pre_;
};

bool is_subfield(const GaloisField& small, const GaloisField& big);

// Dense polynomial over a field, coefficients low to high, no trailing zeros.
struct Poly {
    Field f;
    std::vector<Elem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    Elem eval(Elem x) const;
    std::string to_string(char var = 'x') const;
};

Poly poly_from(Field f, const std::vector<int>& coeffs);  // integers reduced mod p
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
bool operator==(const Poly& a, const Poly& b);

// {ell * q^j mod n}, in generation order starting at ell mod n.
std::vector<int> cyclotomic_coset(int ell, int n, int q);
// Partition of Z_n into q-cyclotomic cosets, each led by its smallest member.
std::vector<std::vector<int>> cyclotomic_cosets(int n, int q);

// Minimal polynomial over `base` of beta^e, beta = alpha^((q-1)/n) a primitive
// n-th root of unity in `ext`. Coefficients are returned in `base`.
Poly minimal_polynomial(const Field& ext, int n, int e, const Field& base);

// Generalized binomial a(a-1)...(a-i+1)/i!, zero for i < 0.
Rational binomial(const Rational& a, long long i);
BigInt binomial(long long a, long long i);

// Krawtchouk polynomial P_r(n, xi) = sum_j (-1)^(r-j) (q-1)^j C(n-xi, j) C(xi, r-j).
Rational krawtchouk(long long n, long long q, long long r, const Rational& xi);
BigInt krawtchouk(long long n, long long q, long long r, long long xi);

BigInt big_pow(long long base, long long e);

}  // namespace crc
