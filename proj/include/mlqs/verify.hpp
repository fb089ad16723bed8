#pragma once

#include <string>
#include <vector>

namespace mlqs::verify {

struct Result {
    std::string suite;
    bool pass = false;
    long long checks = 0;
    std::string detail;   // first failure, empty when passing
    double seconds = 0.0;
};

struct Options {
    int n = 5;                 // cap for exhaustive sweeps
    unsigned seed = 20250801;  // randomized suites
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
Result run_suite(const std::string& name, const Options& opt);
std::vector<Result> run_all(const Options& opt);

}  // namespace mlqs::verify
