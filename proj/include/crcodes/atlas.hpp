#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/code.hpp"
#include "crcodes/spectra.hpp"

namespace crc::atlas {

using Params = std::map<std::string, int>;

enum class Provenance { Paper, Derived };
std::string to_string(Provenance p);

// What regression expects of an entry.
struct Expectation {
    bool completely_regular = true;
    std::optional<IntersectionArray> ia;  // CR entries
    std::optional<bool> up_wide;          // negative controls
    int d = 0;                            // 0 when not pinned
};

struct Family {
    std::string id;     // catalog label, e.g. "F.7", "S.5", "N.1"
    std::string title;
    std::vector<std::pair<std::string, int>> schema;  // parameter names with defaults
    Provenance provenance = Provenance::Paper;
    bool external = false;  // verified on a user-supplied code, no builder
    bool negative = false;  // control expected to fail complete regularity
    std::string note;
    std::string feasibility;  // human-readable ceiling
    std::function<void(const Params&)> validate;  // DomainError / ResourceError
    std::function<Code(const Params&)> build;
    std::function<Expectation(const Params&)> expect;
    std::vector<Params> pinned;  // regression instances
};

struct Instance {
    const Family* family = nullptr;
    Params params;
    std::string key() const;  // "F.7[i1=1,i2=2,m=4]"
};

const std::vector<Family>& catalog();
// CatalogError for unknown ids.
const Family& family(const std::string& id);

// Fills defaults and rejects unknown parameter names (DomainError).
Params resolve(const Family& f, const Params& given);

struct Built {
    Code code;
    Expectation expected;
    Provenance provenance;
};

// Resource errors when the parameters exceed the feasibility ceiling.
Built build(const std::string& id, const Params& params = {});
// CatalogError when the entry expects no array (negative controls).
IntersectionArray expected_ia(const std::string& id, const Params& params = {});

struct Filter {
    std::optional<int> rho;
    std::optional<int> q;
    bool include_external = true;
    bool include_negative = true;
    std::string id_prefix;
};
// Pinned instances matching the filter, in catalog order. External entries
// (no builder) are listed with their expected arrays but never built.
std::vector<Instance> list(const Filter& filter = {});

struct EntryResult {
    std::string key;
    std::string id;
    bool ok = false;
    bool skipped = false;  // external entries without a supplied code
    std::string error;
    int n = 0, q = 0, d = 0, rho = 0;
    int e = 0, s = 0, b = 0, rank_b = 0;  // parameter chain
    std::string size;
    bool cr = false;
    bool up_wide = false;
    std::optional<IntersectionArray> computed, expected;
    bool ia_match = false;
    bool d_match = true;
    bool eigen_pass = false, roots_pass = false, cardinality_pass = false;
    std::optional<bool> graph_match;  // linear CR codes only
    double seconds = 0;
};

struct RegressReport {
    std::vector<EntryResult> entries;
    int passed = 0, failed = 0, skipped = 0;
    double seconds = 0;
    bool ok() const { return failed == 0; }
};

// Checks one code against an expectation (used for external entries and by regress).
EntryResult check(const std::string& key, const std::string& id, const Code& c, const Expectation& e);
// Runs the instances on `threads` workers (0 = hardware concurrency). Results keep input order.
RegressReport regress(const std::vector<Instance>& instances, unsigned threads = 0);

std::string manifest_json();
std::string report_json(const RegressReport& r);
std::string entry_json(const EntryResult& e);

}  // namespace crc::atlas
