#include "umemura/report.hpp"

#include <algorithm>
#include <cstdio>

namespace umemura {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Mismatch: return "MISMATCH";
    }
    return "?";
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [v](const CheckResult& c) { return c.verdict == v; }));
}

bool Report::ok(bool strict_mismatch) const {
    for (const auto& c : checks) {
        if (c.verdict == Verdict::Fail) return false;
        if (strict_mismatch && c.verdict == Verdict::Mismatch) return false;
    }
    return true;
}

std::string render_table(const Report& report) {
    std::size_t id_w = 5, in_w = 6;
    for (const auto& c : report.checks) {
        id_w = std::max(id_w, c.id.size());
        in_w = std::max(in_w, c.inputs.size());
    }
    std::string out;
    char line[512];
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof(line), "%-*s  %-*s  %-8s  %9.1f ms  %s\n",
                      static_cast<int>(id_w), c.id.c_str(), static_cast<int>(in_w),
                      c.inputs.c_str(), verdict_name(c.verdict), c.wall_ms, c.detail.c_str());
        out += line;
    }
    std::snprintf(line, sizeof(line), "%zu checks: %zu PASS, %zu FAIL, %zu MISMATCH\n",
                  report.checks.size(), report.count(Verdict::Pass),
                  report.count(Verdict::Fail), report.count(Verdict::Mismatch));
    out += line;
    return out;
}

}  // namespace umemura
