#ifndef BMAC_VERIFY_HPP
#define BMAC_VERIFY_HPP

#include <string>
#include <vector>

namespace bmac {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_n = 3;
    int m = -1;  // -1: suite default
    int N = -1;
    unsigned long seed = 20240901;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);
std::string report_to_json(const std::vector<SuiteReport>& reports);

}  // namespace bmac

#endif
