#pragma once
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gring {

enum class CheckStatus { pass, fail, skip, warn };

const char* to_string(CheckStatus s);

struct CheckEntry {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::string ref; // internal reference label for traceability
};

struct Report {
    std::string suite;
    std::vector<CheckEntry> checks;

    void add(std::string id, std::string description, bool ok,
             std::string detail = "", std::string ref = "");
    void add_status(std::string id, std::string description, CheckStatus st,
                    std::string detail = "", std::string ref = "");
    void merge(const Report& other);

    std::size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::fail) == 0; }
    int exit_code() const { return ok() ? 0 : 1; }

    void print_table(std::ostream& os) const;

    std::string to_json() const;
    static Report from_json(const std::string& text);
};

} // namespace gring
