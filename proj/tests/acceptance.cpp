// Acceptance suite: one pass/fail line per criterion. Criteria 1-9 come
// from the library's verification module; criterion 10 exercises the CLI
// binary end to end.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>

#include "adem/expr.hpp"
#include "adem/verify.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(ADEM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.out.append(buffer, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

bool check_cli_contract(std::string& detail) {
    long long cases = 0, failures = 0;
    auto record = [&](bool ok) {
        ++cases;
        if (!ok)
            ++failures;
    };

    // Round trip: parsing inverts formatting on random elements.
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> seq_length(0, 4);
    std::uniform_int_distribution<long long> entry(0, 9);
    for (int round = 0; round < 200; ++round) {
        adem::Element x;
        const int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            adem::Sequence s;
            const int len = seq_length(rng);
            for (int j = 0; j < len; ++j)
                s.entries.push_back(entry(rng));
            adem::toggle(x, std::move(s));
        }
        record(adem::parse_element(adem::format_element(x)) == x);
    }

    // Golden outputs for the documented invocations.
    const RunResult normalize = run_cli("normalize --algebra a2 \"Q3 Q2\"");
    record(normalize.exit_code == 0 && normalize.out == "0\n");
    const RunResult action = run_cli("action --sq 2 --algebra f0 \"Q3 Q2\"");
    record(action.exit_code == 0 && action.out == "Q^2 Q^1\n");
    const RunResult lift = run_cli("lift --length 2 \"Q3 Q2\"");
    record(lift.exit_code == 0 && lift.out == "Q^4 Q^1\n");

    // Deterministic reports: identical inputs give identical bytes.
    const RunResult json_a = run_cli("normalize --algebra r --json \"Q4 Q1 + Q2 Q0\"");
    const RunResult json_b = run_cli("normalize --algebra r --json \"Q4 Q1 + Q2 Q0\"");
    record(json_a.exit_code == 0 && json_a.out == json_b.out && !json_a.out.empty());

    // Exit codes: domain error 1, usage error 2.
    record(run_cli("lift --length 2 \"Q1 Q2\"").exit_code == 1);
    record(run_cli("normalize --algebra nope \"Q1\"").exit_code == 2);
    record(run_cli("normalize --algebra a2 \"Q\"").exit_code == 2);

    // verify exits 0 exactly when the whole suite passes.
    const RunResult verify = run_cli("verify");
    record(verify.exit_code == 0 && verify.out.find("[FAIL]") == std::string::npos);

    detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    return failures == 0;
}

}  // namespace

int main() {
    const std::vector<adem::CheckResult> checks = adem::run_verification();
    int failed = 0;
    int index = 0;
    for (const adem::CheckResult& c : checks) {
        ++index;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << " " << c.name
                  << " (" << c.detail << ")\n";
        if (!c.pass)
            ++failed;
    }
    std::string detail;
    const bool cli_ok = check_cli_contract(detail);
    std::cout << (cli_ok ? "[PASS] " : "[FAIL] ") << "criterion 10 cli-contract (" << detail
              << ")\n";
    if (!cli_ok)
        ++failed;
    std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (10 - failed) << "/10)\n";
    return failed == 0 ? 0 : 1;
}
