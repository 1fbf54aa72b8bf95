#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gsp4 {

enum class Status { Pass, Fail, Skipped };
enum class Format { Json, Text, Csv };

std::string to_string(Status s);
Format parse_format(const std::string& s);  // InputError on anything else

struct Witness {
    std::string description;
    std::string value;
    std::optional<std::string> error;  // numeric error estimate, when relevant
};

struct VerificationReport {
    std::string check;
    Status status = Status::Skipped;
    std::vector<Witness> witnesses;
    std::vector<std::string> citations;
    std::optional<std::uint64_t> seed;
    std::int64_t elapsed_ms = 0;
    // Optional tabular payload used by csv output; not part of the JSON schema.
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void witness(std::string description, std::string value);
    void witness(std::string description, std::string value, std::string error);
    void cite(const std::string& key);
    void set(bool ok) { status = ok ? Status::Pass : Status::Fail; }
    bool passed() const { return status == Status::Pass; }
};

// Anchor quotes keyed by a short handle; cite() accepts only keys from this table.
const std::vector<std::pair<std::string, std::string>>& citation_table();
const std::string& citation(const std::string& key);

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_elapsed = true);
std::string render(const VerificationReport& r, Format f);
std::string render(const std::vector<VerificationReport>& rs, Format f);

}  // namespace gsp4
