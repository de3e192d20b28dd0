#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crcodes/spectra.hpp"

namespace crc {

// Tridiagonal (rho+1)x(rho+1) matrix with rows (c_l, a_l, b_l).
struct IntersectionMatrix {
    std::vector<std::vector<std::int64_t>> A;
    int size() const { return static_cast<int>(A.size()); }
};

IntersectionMatrix intersection_matrix(const IntersectionArray& ia);

// det(x I - A), coefficients low to high, exact.
std::vector<BigInt> characteristic_polynomial(const IntersectionArray& ia);

struct EigenvalueReport {
    bool pass = false;
    bool strict = true;
    // (j, (q-1)n - q j) for every root found, repeated by multiplicity.
    std::vector<std::pair<int, std::int64_t>> eigenvalues;
    int found = 0;   // roots among the Hamming-scheme spectrum, with multiplicity
    int needed = 0;  // rho+1 in strict mode, rho in lax mode
};

// Strict mode needs all rho+1 eigenvalues in the spectrum {(q-1)n - qj}; lax mode needs rho of them.
EigenvalueReport eigenvalue_membership_test(const IntersectionArray& ia, bool strict = true);

// L(xi) = sum_r beta_r P_r(n, xi).
Rational lloyd_polynomial(int n, int q, const PackingParameters& beta, const Rational& xi);

struct LloydReport {
    bool pass = false;
    std::vector<int> roots;
};

// Exact evaluation at xi = 0..n; passes iff exactly rho = |beta|-1 integer roots.
LloydReport lloyd_roots(int n, int q, const PackingParameters& beta);

// |C| * sum_i beta_i (q-1)^i C(n,i) == q^n.
bool cardinality_identity(const BigInt& size, int n, int q, const PackingParameters& beta);
bool cardinality_identity(const Code& c, const PackingParameters& beta);

struct BoundCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

// Binary rho = 1 necessary conditions for IA {b; c} at length n (a = n - b),
// with lower/upper bounds on the least admissible a.
struct Rho1Report {
    int b = 0, c = 0, n = 0, a = 0;
    bool pass = false;
    std::vector<BoundCheck> checks;
    std::optional<int> a_star_lower;
    std::optional<int> a_star_upper;
};

Rho1Report rho1_bounds(int b, int c, int n);
// Best upper bound on a*(b,c) from the recursive constructions; nullopt if none applies.
std::optional<int> a_star_upper(int b, int c);
// Lower bound on a*(b,c); 0 when no bound applies.
int a_star_lower(int b, int c);

// Structural sanity of an IA: positive b_l (l < rho) and c_l, b_0 <= n(q-1), a_l >= 0.
bool design_existence_guard(const IntersectionArray& ia);

}  // namespace crc
