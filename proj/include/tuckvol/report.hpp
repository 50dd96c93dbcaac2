#pragma once

#include <string>
#include <vector>

namespace tuckvol {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skip";
    }
    return "?";
}

// One named check with its outcome. `detail` carries the witness for a
// failure (what was expected, what was seen) or the reason a check was
// skipped (hypothesis not met), and may be empty on success.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;

    static CheckResult passed(std::string name, std::string detail = {}) {
        return {std::move(name), CheckStatus::pass, std::move(detail)};
    }
    static CheckResult failed(std::string name, std::string detail) {
        return {std::move(name), CheckStatus::fail, std::move(detail)};
    }
    static CheckResult skip(std::string name, std::string detail) {
        return {std::move(name), CheckStatus::skipped, std::move(detail)};
    }
};

// Outcome of structural validation: either clean or a list of violations,
// each naming the offending entity.
struct ValidityReport {
    std::vector<std::string> errors;

    bool ok() const { return errors.empty(); }
    void add(std::string message) { errors.push_back(std::move(message)); }
};

}  // namespace tuckvol
