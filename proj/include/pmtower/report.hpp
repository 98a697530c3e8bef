#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace pmtower {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, assumed, skipped };

constexpr std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::assumed: return "assumed";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

/// One named diagnostic with machine-readable evidence.
struct Check {
    std::string name;
    Status status = Status::skipped;
    Json evidence = Json::object();
};

inline Json to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["status"] = std::string(to_string(c.status));
    j["evidence"] = c.evidence;
    return j;
}

}  // namespace pmtower
