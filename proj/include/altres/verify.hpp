#pragma once

#include <string>
#include <vector>

namespace altres {

struct VerifyBounds {
    int max_n = 0;            // 0: suite default
    std::vector<int> primes;  // empty: suite default
    int threads = 1;
};

struct VerifyReport {
    std::string suite;
    std::string property;
    int max_n = 0;
    std::vector<int> primes;
    long long checked = 0;
    std::vector<std::string> failures;
    // Items failing the property that an explicit exception list covers.
    std::vector<std::string> exempt;
    // Observations that are not failures.
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

struct SuiteInfo {
    std::string name;
    std::string property;
    int default_max_n;
    int limit_max_n;
    std::vector<int> default_primes;
    bool any_prime = false;  // otherwise primes must come from default_primes
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& suite_info(const std::string& name);  // throws std::invalid_argument
VerifyReport run_suite(const std::string& name, const VerifyBounds& bounds);

}  // namespace altres
