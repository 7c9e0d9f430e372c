#pragma once

#include <string>
#include <vector>

namespace focktiles {

struct SuiteResult {
    std::string name;
    bool pass = false;
    long long checks = 0;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;  // first failure, or a summary of what was covered
};

// "AC-1" .. "AC-9"
std::vector<std::string> suite_names();
// runs one acceptance suite; std::invalid_argument for an unknown name
SuiteResult run_suite(const std::string& name);
// "AC-n PASS (...)" / "AC-n FAIL (...)"
std::string format_result(const SuiteResult& r);

}  // namespace focktiles
