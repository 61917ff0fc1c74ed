#pragma once

#include <string>
#include <vector>

namespace elliptic {

struct SuiteReport {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustive desk-scale sweeps. Each returns one failure line per bad case.
SuiteReport verify_pi1_suite(int max = 6);
// Coprime (m, n) must act freely; the other pairs must produce a witness that
// really is fixed. Also checks the group generated by F(i, i).
SuiteReport verify_free_action_suite(int max = 6);
SuiteReport verify_longitude_suite(long max = 40);
SuiteReport verify_bilongitude_suite(long max = 500);
SuiteReport verify_euler_suite(long max = 100);

}  // namespace elliptic
