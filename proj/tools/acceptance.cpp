// Runs the twelve acceptance criteria and prints one line per criterion.

#include <chrono>
#include <cstdio>

#include "pistar/suites.hpp"

int main() {
    using namespace pistar;
    const SuiteOptions opts; // p = 2^31 - 1, seed 0, 7 trials
    int failed = 0;
    auto start = std::chrono::steady_clock::now();
    for (const auto& s : suites::registry()) {
        if (s.criterion == 0) continue;
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult r = suites::run(s, opts);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %-16s %s  %s  [%.2f s]\n", s.criterion, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                    r.detail.c_str(), secs);
        failed += !r.passed;
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.2f s, %d failing\n", total, failed);
    return failed == 0 ? 0 : 1;
}
