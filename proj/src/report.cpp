#include "gring/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace gring {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
        case CheckStatus::warn: return "warn";
    }
    return "?";
}

static CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skip") return CheckStatus::skip;
    if (s == "warn") return CheckStatus::warn;
    throw std::runtime_error("unknown check status: " + s);
}

void Report::add(std::string id, std::string description, bool ok,
                 std::string detail, std::string ref) {
    add_status(std::move(id), std::move(description),
               ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail), std::move(ref));
}

void Report::add_status(std::string id, std::string description, CheckStatus st,
                        std::string detail, std::string ref) {
    checks.push_back({std::move(id), std::move(description), st, std::move(detail), std::move(ref)});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

void Report::print_table(std::ostream& os) const {
    os << "== " << suite << " ==\n";
    for (const auto& c : checks) {
        os << "  [" << to_string(c.status) << "] " << c.id << ": " << c.description;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << '\n';
    }
    os << "  summary: " << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail)
       << " fail, " << count(CheckStatus::warn) << " warn, " << count(CheckStatus::skip)
       << " skip\n";
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"id", c.id},
                               {"description", c.description},
                               {"status", to_string(c.status)},
                               {"detail", c.detail},
                               {"ref", c.ref}});
    }
    j["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"warn", count(CheckStatus::warn)},
                    {"skip", count(CheckStatus::skip)}};
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks")) {
        r.checks.push_back({c.at("id").get<std::string>(),
                            c.at("description").get<std::string>(),
                            status_from_string(c.at("status").get<std::string>()),
                            c.at("detail").get<std::string>(),
                            c.at("ref").get<std::string>()});
    }
    return r;
}

} // namespace gring
