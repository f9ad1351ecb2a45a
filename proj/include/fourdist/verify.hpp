#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fourdist {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Built-in self checks. Suites: "arith" (number-theory identities against
/// brute force), "filters" (witness re-validation and oracle soundness on
/// small squares), "paper" (the z = 60 lists and sieve, the published
/// three-distance triples). Throws std::invalid_argument for other names.
std::vector<CheckResult> run_verify_suite(std::string_view suite);

}  // namespace fourdist
