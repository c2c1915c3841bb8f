#pragma once

// JSON report assembly for the CLI subcommands. All output is deterministic
// for a fixed config and seed: ordered keys, integers only, no timestamps.

#include <json.hpp>

#include "symgeo/amalgam.hpp"
#include "symgeo/cover.hpp"
#include "symgeo/homotopy.hpp"

namespace symgeo {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    int n = 4;
    int p = 2;
    std::uint64_t seed = 0;
    std::uint32_t max_cosets = 200000;        // fundamental-group enumerations
    std::uint32_t amalgam_cosets = 100000;    // completion certificates
    std::uint64_t max_group = 2000000;        // group closure ceiling
    std::uint64_t triangle_cap = 5000000;     // relator budget for full presentations
    std::string out_dir = "reports";
    bool dot = false;

    void validate() const;
    Json to_json() const;
};

// one verified statement; status is "pass", "fail" or "unknown"
// ("unknown" = a declared resource limit, never a wrong answer)
struct Check {
    std::string id;
    std::string claim;
    std::string status;
    std::string mode;  // "exhaustive" | "sampled" | "computed"
    Json details;
};

class Report {
public:
    explicit Report(const RunConfig& cfg, const std::string& suite);

    void add(const std::string& id, const std::string& claim, bool pass,
             const std::string& mode = "exhaustive", Json details = Json::object());
    void add_unknown(const std::string& id, const std::string& claim, const std::string& why,
                     const std::string& mode = "computed");
    void attach(const std::string& key, Json payload);  // extra structured data

    int fails() const { return fails_; }
    int unknowns() const { return unknowns_; }
    Json finish() const;

private:
    Json j_;
    int passes_ = 0, fails_ = 0, unknowns_ = 0;
};

Json suite_gamma(const RunConfig& cfg);
Json suite_pi(const RunConfig& cfg);
Json suite_cover(const RunConfig& cfg);
Json suite_pi1(const RunConfig& cfg);
Json suite_groups(const RunConfig& cfg);
Json suite_amalgam(const RunConfig& cfg);
Json suite_all(const RunConfig& cfg);

// exit code 0 when nothing failed (unknowns allowed)
int report_exit_code(const Json& report);

Json certificate_to_json(const CompletionCertificate& cert);

// randomized enumerator cross-validation: presentations of random small
// matrix groups, enumerated index vs brute-force order/index oracles
Json enumerator_cross_validation(std::uint64_t seed, int rounds, std::uint32_t cap, bool& all_ok);

}  // namespace symgeo
