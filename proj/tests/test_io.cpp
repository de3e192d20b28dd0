#include "crcodes/errors.hpp"
#include "crcodes/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crc;
using namespace testutil;

TEST_CASE("linear and explicit codes round trip") {
    for (const auto& c : {hamming(4, 2), binary_golay(), hamming(2, 3).as_explicit()}) {
        auto back = code_from_json(code_to_json(c));
        CHECK(back.kind() == c.kind());
        CHECK(same_code(back, c));
    }
}

TEST_CASE("parity-only files are accepted") {
    auto c = code_from_json(R"({"q":2,"n":7,"kind":"linear","parity":[[1,0,1,0,1,0,1],[0,1,1,0,0,1,1],[0,0,0,1,1,1,1]]})");
    CHECK(c.dimension() == 4);
    CHECK(c.minimum_distance() == 3);
    auto dep = code_from_json(R"({"q":2,"n":3,"kind":"linear","parity":[[1,1,0],[0,1,1],[1,0,1]]})");
    CHECK(dep.redundancy() == 2);
    CHECK(dep.dropped_rows() == 1);
}

TEST_CASE("malformed files") {
    try {
        code_from_json("{\n  \"q\": 2,\n  \"n\": ,\n}");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(code_from_json(R"({"q":2,"n":3,"kind":"linear","generator":[[1,1],[0,1,1]]})"), FormatError);
    CHECK_THROWS_AS(code_from_json(R"({"q":6,"n":3,"kind":"linear","generator":[[1,1,1]]})"), DomainError);
    CHECK_THROWS_AS(code_from_json(R"({"q":2,"n":3,"kind":"linear","generator":[[1,2,1]]})"), DomainError);
    CHECK_THROWS_AS(code_from_json(R"({"q":4,"p":2,"r":2,"modulus":[1,0,1],"n":3,"kind":"linear","generator":[[1,2,1]]})"),
                    DomainError);
    CHECK_THROWS_AS(code_from_json(R"({"q":2,"n":3,"kind":"sparse"})"), FormatError);
}
