#pragma once

#include <string>
#include <vector>

namespace umemura {

enum class Verdict { Pass, Fail, Mismatch };

const char* verdict_name(Verdict v);

struct CheckResult {
    std::string id;
    std::string inputs;
    Verdict verdict = Verdict::Pass;
    std::string detail;
    double wall_ms = 0.0;
};

/// Flat result list for a verification run. The process exit contract:
/// 0 iff no FAIL; a Heun-branch MISMATCH only fails the run in strict mode.
struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void append(const Report& other);
    std::size_t count(Verdict v) const;
    bool ok(bool strict_mismatch = false) const;
};

/// Fixed-width table for terminal output; includes wall times.
std::string render_table(const Report& report);

}  // namespace umemura
