#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crcodes/code.hpp"

namespace crc {

struct DesignWitness {
    int v = 0, k = 0, t = 0;
    BigInt lambda;
    bool qary = false;
    int q = 2;
    BigInt blocks;       // b = lambda_0
    BigInt replication;  // r = lambda_1
};

// lambda_i = lambda (q-1)^(t-i) C(v-i, t-i) / C(k-i, t-i) for 0 <= i <= t; nullopt
// if some lambda_i is not integral.
std::optional<std::vector<BigInt>> design_lambdas(int v, int k, int t, const BigInt& lambda, int q = 2);

// Codewords of weight w after translating so that the first codeword is zero.
std::vector<Word> weight_layer(const Code& c, int w, const Guards& g = default_guards());

// Checks whether C_w is a t-(n, w, lambda)_q design. Binary codes count
// block supports; q-ary codes count, for every weight-t vector y, the words x
// in C_w with d(x, y) = w - t.
std::optional<DesignWitness> verify_design(const Code& c, int w, int t, const Guards& g = default_guards());

// Largest t with C_w a t-design, and its lambda.
std::pair<int, BigInt> max_design_strength(const Code& c, int w, const Guards& g = default_guards());

// (n - w) A_w == (w + 1) A_{w+1} for every odd w >= d (binary).
bool weight_recursion_check(const Code& c, const Guards& g = default_guards());
bool weight_recursion_check(const std::vector<BigInt>& A, int from);

// Weight distribution of a binary 1-perfect code of length n = 2^m - 1 containing 0.
std::vector<BigInt> perfect_weight_distribution(int n);

std::string design_json(const DesignWitness& w);

}  // namespace crc
