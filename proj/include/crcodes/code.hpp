#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/config.hpp"
#include "crcodes/matrix.hpp"

namespace crc {

enum class CodeKind { Linear, Explicit };

struct WeightDistribution {
    std::vector<BigInt> A;  // A[0..n]
    BigInt total() const;
};

namespace detail {
struct CodeCache;
}

// A code of length n over GF(q): a linear subspace (G and reduced H kept in
// sync) or an explicit sorted codeword set. Immutable after construction.
class Code {
public:
    static Code from_generator(const Matrix& G);
    static Code from_parity_check(const Matrix& H, int n = -1);
    static Code from_codewords(Field f, int n, std::vector<Word> words);

    const Field& field() const { return f_; }
    int q() const { return f_->q(); }
    int n() const { return n_; }
    CodeKind kind() const { return kind_; }
    bool is_linear() const { return kind_ == CodeKind::Linear; }
    bool is_binary() const { return f_->q() == 2; }

    // Linear only.
    int dimension() const;
    const Matrix& generator() const;
    const Matrix& parity() const;
    int redundancy() const { return parity().rows; }
    // Number of parity rows dropped as linearly dependent at construction.
    int dropped_rows() const { return dropped_rows_; }

    // Set by puncturing when distinct codewords merged.
    bool collapsed() const { return collapsed_; }

    BigInt size() const;
    // Enumerates all codewords (sorted for explicit codes, message order for linear).
    std::vector<Word> codewords(const Guards& g = default_guards()) const;
    bool contains(const Word& w) const;

    // Explicit view of the same set; linear codes are enumerated.
    Code as_explicit(const Guards& g = default_guards()) const;

    const WeightDistribution& weight_distribution(const Guards& g = default_guards()) const;
    int minimum_distance(const Guards& g = default_guards()) const;
    int covering_radius(const Guards& g = default_guards()) const;

    std::string describe() const;  // "[n,k,d]_q" style when cheap

    Code with_collapse_flag(bool c) const;

private:
    Code() = default;
    Field f_;
    int n_ = 0;
    CodeKind kind_ = CodeKind::Explicit;
    Matrix G_, H_;
    std::vector<Word> words_;
    int dropped_rows_ = 0;
    bool collapsed_ = false;
    std::shared_ptr<detail::CodeCache> cache_;
};

// Set equality (linear codes compare reduced generators).
bool same_code(const Code& a, const Code& b);

int weight(const Word& w);
int distance(const Word& a, const Word& b);

// ------------------------------------------------------------- transforms

// Appends the symbol making the coordinate sum zero.
Code extend(const Code& c);
Code puncture(const Code& c, int i);
Code puncture(const Code& c, std::vector<int> positions);
Code shorten(const Code& c, int i);
// Keeps codewords whose restriction to `positions` lies in S, then deletes those positions.
Code s_shorten(const Code& c, const std::vector<Word>& S, const std::vector<int>& positions);
// Binary only: coordinate i replaced by the parity of the whole word.
Code tau_transform(const Code& c, int i);
Code direct_sum(const std::vector<Code>& codes);
// Parity-check matrix over GF(q) embedded into GF(q^r).
Code lift(const Matrix& H, int r);
// Kronecker product over the larger of the two fields; incomparable fields are rejected.
Matrix kronecker_parity(const Matrix& Ha, const Matrix& Hb);
Code dual(const Code& c);
bool is_self_complementary(const Code& c);
// Binary CR non-self-complementary code C -> C u (C + 1). CR status is verified.
Code union_with_cover(const Code& c);
// Linear code with extra parity rows appended.
Code add_parity_rows(const Code& c, const Matrix& rows);
// Tries to express an explicit code as a linear one (same set).
std::optional<Code> linearize(const Code& c);

}  // namespace crc
