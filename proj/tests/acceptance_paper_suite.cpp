// Acceptance runner: executes the thirteen bundled verification suites and
// prints one pass/fail line per suite. Exit status 0 only when all pass.

#include <iostream>

#include "fuzzhyper/paper_suite.hpp"

int main() {
    std::vector<fuzzhyper::CheckResult> results = fuzzhyper::run_paper_suite(&std::cout);
    int failed = 0;
    for (const auto& result : results)
        if (!result.passed) ++failed;
    std::cout << "----\n"
              << (results.size() - static_cast<size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
