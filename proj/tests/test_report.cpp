#include <doctest.h>

#include <sstream>

#include "gsp4/checks.hpp"
#include "gsp4/cli.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/report.hpp"

using namespace gsp4;

namespace {

int run(std::vector<const char*> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "gsp4verify");
    std::ostringstream out, err;
    const int rc = run_command(static_cast<int>(args.size()), args.data(), out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

}  // namespace

TEST_CASE("json schema") {
    VerificationReport r;
    r.check = "demo";
    r.witness("x", "1");
    r.witness("y", "2", "1e-30");
    r.cite("weights");
    r.set(true);
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check", "status", "witnesses", "citations", "seed", "elapsedMs"});
    CHECK(j["seed"].is_null());
    CHECK(j["status"] == "pass");
    CHECK(j["citations"][0] == citation("weights"));
    CHECK_FALSE(to_json(r, false).contains("elapsedMs"));
    CHECK(to_json(r, false).dump() == to_json(r, false).dump());
}

TEST_CASE("formats") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), InputError);
    VerificationReport r;
    r.check = "demo";
    CHECK_THROWS_AS(render(r, Format::Csv), InputError);
    CHECK_THROWS(r.cite("no-such-key"));
    for (const auto& [key, quote] : citation_table()) CHECK_FALSE(quote.empty());
}

TEST_CASE("command exit codes") {
    std::string out;
    CHECK(run({"--format", "json", "branch", "--k", "7", "--kp", "4", "--p", "6", "--q", "3"}, &out) == 0);
    CHECK(out.find("\"pass\"") != std::string::npos);
    CHECK(run({"local", "unramified-verify", "--order", "8"}) == 0);
    CHECK(run({"trace", "--k", "7", "--kp", "4"}) == 1);
    CHECK(run({"trace", "--k", "7", "--kp", "4", "--bogus"}) == 2);
    CHECK(run({"packet", "--k", "2", "--kp", "5"}) == 2);
    CHECK(run({"--format", "yaml", "packet", "--k", "5", "--kp", "2"}) == 2);
    CHECK(run({"--precision-digits", "5", "packet", "--k", "5", "--kp", "2"}) == 2);
    CHECK(run({"--format", "csv", "branch", "--k", "7", "--kp", "4"}, &out) == 0);
    CHECK(out.find(',') != std::string::npos);
}

TEST_CASE("report builders") {
    CHECK(check_pairing_survival(7, 4).passed());
    CHECK(check_bessel(2).passed());
    CHECK_FALSE(check_pairing_coeffs().passed());
}
