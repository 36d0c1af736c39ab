#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace committee_lab {

// Error carrying a short machine-readable code. The experiment harness
// turns these into "error:<code>" result rows instead of aborting a sweep.
class coded_error : public std::runtime_error {
public:
    coded_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid configuration: bad sizes, committee size out of range, malformed spec.
struct config_error : coded_error {
    explicit config_error(const std::string& what) : coded_error("config", what) {}
};

// API misuse: out-of-range index, required input missing.
struct usage_error : coded_error {
    explicit usage_error(const std::string& what) : coded_error("usage", what) {}
};

// STV cannot seat k candidates because k * droop_quota(n, k) exceeds n.
struct quota_exhausted : coded_error {
    explicit quota_exhausted(const std::string& what) : coded_error("quota_exhausted", what) {}
};

// An exact solver refused to run: the search space exceeds its budget.
struct budget_exceeded : coded_error {
    explicit budget_exceeded(const std::string& what) : coded_error("budget_exceeded", what) {}
};

}  // namespace committee_lab
