#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qah {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string detail;  // summary, or the first counterexample on failure
};

struct SuiteOptions {
    int n = 2;
    std::uint64_t seed = 20240601;
    int samples = 1000;  // geometry samples per cell or per signature
};

using Report = std::vector<CheckResult>;

Report verify_boundary(const SuiteOptions& o);
Report verify_signs(const SuiteOptions& o);
Report verify_cube(const SuiteOptions& o);
Report verify_generators(const SuiteOptions& o);
Report verify_geometry(const SuiteOptions& o);
Report verify_intersection(const SuiteOptions& o);

const std::vector<std::string>& suite_names();  // without "all"
Report run_suite(const std::string& suite, const SuiteOptions& o);

bool all_passed(const Report& r);
std::string format_report(const Report& r);

}  // namespace qah
