#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crcodes/code.hpp"

namespace crc {

enum class PartitionMode { Auto, Syndrome, Vector };

// Distance partition. In syndrome mode the cells are cosets (one index per
// syndrome); in vector mode they are vectors of GF(q)^n.
struct DistancePartition {
    PartitionMode mode = PartitionMode::Auto;
    int rho = 0;
    std::vector<std::uint8_t> label;
    std::vector<std::uint64_t> sizes;  // indices per cell
    BigInt code_size;
    // Cell sizes counted in vectors: sizes * |C| in syndrome mode.
    std::vector<BigInt> vector_sizes() const;
};

DistancePartition distance_partition(const Code& c, PartitionMode mode = PartitionMode::Auto,
                                     const Guards& g = default_guards());

// Neighbour counts into cells l-1, l, l+1 for every element of every cell.
struct EquitableCounts {
    bool equitable = false;
    std::vector<std::set<std::array<std::int64_t, 3>>> observed;  // per cell: {(c, a, b)}
};

EquitableCounts equitable_counts(const Code& c, const DistancePartition& part, const Guards& g = default_guards());

struct ProfileRow {
    std::vector<BigInt> B;  // B_{x,0..n}
    int label = 0;
    BigInt multiplicity;     // number of vectors x with this row
    std::uint64_t representative = 0;  // a syndrome (dual route) or vector index with this row
};

enum class ProfileRoute { Auto, Dual, Direct };

struct OuterProfile {
    std::vector<ProfileRow> rows;  // distinct rows, sorted by (label, B)
    bool via_dual = false;
    int b() const { return static_cast<int>(rows.size()) - 1; }
};

OuterProfile outer_profile(const Code& c, ProfileRoute route = ProfileRoute::Auto, const Guards& g = default_guards());

struct IntersectionArray {
    int n = 0;
    int q = 2;
    std::vector<std::int64_t> b;  // b_0..b_{rho-1}
    std::vector<std::int64_t> c;  // c_1..c_rho
    int rho() const { return static_cast<int>(b.size()); }
    std::int64_t b_at(int l) const { return l < rho() ? b[l] : 0; }
    std::int64_t c_at(int l) const { return l == 0 ? 0 : c[l - 1]; }
    std::int64_t a_at(int l) const { return static_cast<std::int64_t>(n) * (q - 1) - b_at(l) - c_at(l); }
    IntersectionArray reversed() const;
    std::string to_string() const;  // "{b0, b1; c1, c2}"
};

bool operator==(const IntersectionArray& x, const IntersectionArray& y);
// Parses "{b0,...;c1,...}" (braces optional).
IntersectionArray parse_ia(const std::string& s, int n, int q);

// Distance distribution A_i = (1/|C|) #{(x,y) in C^2 : d(x,y)=i}.
std::vector<Rational> distance_distribution(const Code& c, const Guards& g = default_guards());
// MacWilliams transform of the distance distribution.
std::vector<Rational> dual_distance_distribution(const Code& c, const Guards& g = default_guards());
int external_distance(const Code& c, const Guards& g = default_guards());
bool is_distance_invariant(const Code& c, const Guards& g = default_guards());

// Largest t <= rho with identical rows inside each cell l <= t; -1 if cell 0 is not uniform.
int t_regularity_degree(const OuterProfile& prof, int rho);
int t_regularity_degree(const Code& c, const Guards& g = default_guards());

struct CRVerdict {
    bool completely_regular = false;
    std::optional<IntersectionArray> ia;
    int rho = 0;
    bool outer_test = false;      // b == rho
    bool equitable_test = false;  // equitable distance partition
};

CRVerdict is_completely_regular(const Code& c, const Guards& g = default_guards());

using PackingParameters = std::vector<Rational>;
std::optional<PackingParameters> packing_parameters(const OuterProfile& prof, int rho);
std::optional<PackingParameters> packing_parameters(const Code& c, const Guards& g = default_guards());
// kappa_i = beta_i (q-1)^i C(n,i)
std::vector<Rational> kappa(const PackingParameters& beta, int n, int q);

struct Classification {
    int n = 0, q = 2;
    BigInt size;
    int e = 0, d = 0, rho = 0, s = 0, b = 0;
    int rank_b = 0;
    bool distance_invariant = true;
    bool perfect = false;
    bool quasi_perfect = false;
    bool up_narrow = false;
    bool up_gvt = false;
    bool up_wide = false;
    bool completely_regular = false;
    int t_regular_degree = -1;
    std::optional<IntersectionArray> ia;
    std::optional<PackingParameters> beta;
    std::vector<BigInt> cell_sizes;  // in vectors
};

// Computes every parameter and flag, asserting the chain e <= rho <= s <= b,
// rank(B) = s+1, CR => rho = s, UP-wide <=> rho = s, perfect <=> e = s,
// and sum kappa_i = q^n / |C| when UP-wide. Violations throw InternalError.
Classification classify(const Code& c, const Guards& g = default_guards());
std::string classification_json(const Classification& cl);

struct ExtensionCriterion {
    bool stays_up = false;
    std::optional<PackingParameters> gamma;  // gamma_0..gamma_{rho+1}
};

// Binary UP code with parameters beta (rho = beta.size()-1) of length n.
ExtensionCriterion up_extension_criterion(const PackingParameters& beta, int n, int q = 2);

// Even length, self-complementary binary CR code: the extension is not UP-wide.
bool self_complementary_extension_block(const Code& c);

// Exact rank over Q of integer rows.
int rational_rank(const std::vector<std::vector<BigInt>>& rows);

}  // namespace crc
