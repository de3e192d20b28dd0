#include <set>

#include "crcodes/atlas.hpp"
#include "crcodes/constructions.hpp"
#include "crcodes/errors.hpp"
#include "crcodes/syndrome.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace crc;
namespace at = crc::atlas;

namespace {

Code built(const std::string& id, const at::Params& p = {}) { return at::build(id, p).code; }

Code half(int m, int i1, int i2) { return half_hamming_code(m, i1, i2); }

}  // namespace

TEST_CASE("catalog ids are unique and every pinned instance validates") {
    std::set<std::string> ids;
    int pinned = 0;
    for (const auto& f : at::catalog()) {
        CHECK(ids.insert(f.id).second);
        CHECK_FALSE(f.pinned.empty());
        for (const auto& p : f.pinned) {
            CHECK_NOTHROW(f.validate(at::resolve(f, p)));
            ++pinned;
        }
        if (f.external) CHECK_FALSE(static_cast<bool>(f.build));
    }
    CHECK(ids.size() >= 60);
    CHECK(pinned >= 200);
}

TEST_CASE("catalog lookups and parameter errors") {
    CHECK_THROWS_AS(at::family("F.999"), CatalogError);
    CHECK_THROWS_AS(at::build("F.1", {{"k", 3}}), DomainError);
    CHECK_THROWS_AS(at::build("F.16"), CatalogError);
    CHECK_THROWS_AS(at::expected_ia("N.1"), CatalogError);
    CHECK_THROWS_AS(at::build("F.5", {{"q", 5}}), DomainError);
    CHECK_THROWS_AS(at::build("F.48", {{"q", 5}}), DomainError);
    CHECK_THROWS_AS(at::build("F.52", {{"m", 5}, {"l", 15}}), DomainError);
    CHECK_THROWS_AS(at::build("F.52", {{"m", 5}, {"l", 1}}), DomainError);
}

TEST_CASE("feasibility ceiling is a resource error") {
    CHECK_NOTHROW(at::build("F.18", {{"m", 3}}));
    CHECK_THROWS_AS(at::build("F.18", {{"m", 4}}), ResourceError);
    CHECK_THROWS_AS(at::build("F.18", {{"m", 5}}), ResourceError);
    try {
        at::build("F.18", {{"m", 5}});
    } catch (const ResourceError& e) {
        CHECK(e.guard == "feasibility");
    }
    CHECK_THROWS_AS(at::build("F.1", {{"q", 2}, {"m", 30}}), ResourceError);
}

TEST_CASE("kronecker product over incomparable fields is rejected") {
    CHECK_THROWS_AS(kronecker_parity(hamming_parity(4, 2), hamming_parity(8, 2)), DomainError);
}

TEST_CASE("half Hamming rows by weight class") {
    for (int m : {4, 6}) {
        Code h = hamming_code(2, m);
        // {1,3}: the extra row is the sum of all rows.
        CHECK(same_code(half(m, 1, 3), h));
        // {0,2}: the extra row adds the all-ones check.
        CHECK(same_code(half(m, 0, 2), zero_sum_subcode(h)));
        CHECK(is_self_complementary(half(m, 1, 2)));
        CHECK_FALSE(is_self_complementary(built("F.8", {{"m", m}, {"i1", 0}, {"i2", 1}})));
    }
}

TEST_CASE("nested subcodes joined with their covering cell give the Hamming code") {
    for (auto [m, i] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {6, 1}, {6, 2}, {6, 3}}) {
        Code c = built("F.14", {{"m", m}, {"i", i}});
        Code h = built("F.14", {{"m", m}, {"i", 0}});
        REQUIRE(c.dimension() == h.dimension() - i);
        auto part = distance_partition(c, PartitionMode::Syndrome);
        REQUIRE(part.rho == 3);
        // Syndromes of the Hamming codewords relative to C span 2^i cosets.
        Matrix P = c.parity();
        SyndromeSpace sp(c.field(), P.rows);
        std::set<std::uint64_t> cosets{0};
        Matrix G = h.generator();
        for (int r = 0; r < G.rows; ++r) {
            Word s(P.rows, 0);
            for (int k = 0; k < P.rows; ++k)
                for (int j = 0; j < P.cols; ++j) s[k] ^= P.at(k, j) & G.at(r, j);
            std::uint64_t idx = sp.index_of(s);
            std::set<std::uint64_t> next = cosets;
            for (auto x : cosets) next.insert(sp.add(x, idx));
            cosets = next;
        }
        CHECK(cosets.size() == (std::size_t{1} << i));
        for (auto x : cosets)
            if (x) CHECK(part.label[x] == 3);
        CHECK(part.sizes[3] == (std::uint64_t{1} << i) - 1);
    }
}

TEST_CASE("extension of the BCH entry matches the extended entry") {
    for (int m : {2, 3}) {
        Code bch = built("F.18", {{"m", m}});
        CHECK(same_code(extend(bch), built("F.19", {{"m", m}})));
        auto cl = classify(extend(bch));
        REQUIRE(cl.ia);
        auto want = at::expected_ia("F.19", {{"m", m}});
        CHECK(cl.ia->b == want.b);
        CHECK(cl.ia->c == want.c);
    }
}

TEST_CASE("self-dual lifted and Latin-square codes") {
    Code t = built("F.47", {{"q", 3}, {"m", 2}, {"r", 2}});
    CHECK(same_code(dual(t), t));
    Code b = built("F.20", {{"q", 2}, {"m", 2}, {"r", 2}});
    CHECK_FALSE(same_code(dual(b), b));
    for (int q : {4, 8, 16}) {
        Code c = built("F.49", {{"q", q}});
        CHECK(same_code(dual(c), c));
    }
    for (int q : {7, 9}) {
        Code c = built("F.48", {{"q", q}});
        CHECK_FALSE(same_code(dual(c), c));
    }
}

TEST_CASE("Nordstrom-Robinson verifies the external Preparata entries") {
    Code nr = nordstrom_robinson();
    CHECK(nr.size() == BigInt(256));
    CHECK(nr.minimum_distance() == 6);
    CHECK_FALSE(nr.is_linear());
    const auto& f17 = at::family("F.17");
    const auto& f16 = at::family("F.16");
    auto r17 = at::check("F.17[m=2]", "F.17", nr, f17.expect(at::resolve(f17, {})));
    CHECK(r17.ok);
    CHECK_FALSE(r17.graph_match.has_value());
    auto r16 = at::check("F.16[m=2]", "F.16", puncture(nr, 15), f16.expect(at::resolve(f16, {})));
    CHECK(r16.ok);
    CHECK(r16.computed->to_string() == "{15, 14, 1; 1, 2, 15}");
}

TEST_CASE("Paley Hadamard code") {
    Code h = hadamard_11();
    CHECK(h.size() == BigInt(24));
    CHECK(h.minimum_distance() == 5);
    CHECK_FALSE(h.is_linear());
    CHECK(extend(h).minimum_distance() == 6);
}

TEST_CASE("K-block sporadic codes have the expected shapes") {
    struct Shape {
        const char* id;
        int n, k;
    };
    for (auto s : {Shape{"S.22", 15, 9}, Shape{"S.23", 16, 9}, Shape{"S.24", 18, 12}, Shape{"S.25", 15, 9}}) {
        Code c = built(s.id);
        CHECK(c.n() == s.n);
        CHECK(c.dimension() == s.k);
        CHECK(c.minimum_distance() == (s.n == 16 ? 4 : 3));
    }
}

TEST_CASE("regress keeps input order with several workers and flags mismatches") {
    at::Filter f;
    f.id_prefix = "F.3";
    auto inst = at::list(f);
    REQUIRE(inst.size() >= 10);
    auto rep = at::regress(inst, 3);
    REQUIRE(rep.entries.size() == inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        CHECK(rep.entries[i].key == inst[i].key());
        CHECK_MESSAGE(rep.entries[i].ok, (rep.entries[i].key + " " + rep.entries[i].error));
    }
    CHECK(rep.ok());

    // A mutated expectation must fail.
    auto e = at::family("F.1").expect({{"q", 2}, {"m", 3}});
    e.ia->b[0] += 1;
    auto r = at::check("F.1*", "F.1", hamming_code(2, 3), e);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.ia_match);
    CHECK(r.cr);
}

TEST_CASE("negative controls") {
    for (const char* id : {"N.1", "N.2", "N.3", "S.19"}) {
        at::Filter f;
        f.id_prefix = id;
        auto rep = at::regress(at::list(f), 1);
        for (const auto& e : rep.entries) {
            CHECK_MESSAGE(e.ok, e.key);
            CHECK_FALSE(e.cr);
        }
    }
    auto n1 = at::build("N.1");
    CHECK(n1.code.n() == 12);
    CHECK(n1.code.dimension() == 6);
    CHECK(classify(n1.code).up_wide);
    CHECK_FALSE(classify(built("N.2")).up_wide);
}

TEST_CASE("filters and manifest") {
    at::Filter f;
    f.rho = 1;
    for (const auto& i : at::list(f)) CHECK(i.family->expect(i.params).ia->rho() == 1);
    f = {};
    f.q = 3;
    CHECK_FALSE(at::list(f).empty());
    f = {};
    f.include_external = false;
    f.include_negative = false;
    for (const auto& i : at::list(f)) {
        CHECK_FALSE(i.family->external);
        CHECK_FALSE(i.family->negative);
    }

    auto j = nlohmann::json::parse(at::manifest_json());
    CHECK(j["families"].size() == at::catalog().size());
    for (const auto& fam : j["families"]) {
        CHECK(fam.contains("params"));
        std::string prov = fam["provenance"];
        CHECK((prov == "PAPER" || prov == "DERIVED"));
    }
    CHECK(at::manifest_json() == at::manifest_json());
}
