#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "umemura/config.hpp"
#include "umemura/report.hpp"
#include "umemura/sigma.hpp"

namespace umemura {

// The verification suites. Thresholds and ranges are pinned constants,
// independent of runtime configuration:
//  1  hankel == recurrence, symbolic r, n = 2..10, under 60 s
//  2  no NotDivisible through n = 12 (recurrence and Hankel quotient)
//  3  deg_t sigma_n = n(n-1)/2 with leading coefficient 8^{-n(n-1)/2};
//     deg_t a_n = n with positive leading coefficient
//  4  exact P_V residual: n <= 6 numeric r in {0, 1/3, 1/2, -2/5, 7/4},
//     n <= 4 symbolic r; parameter perturbations all break it; under 120 s
//  5  formal Riccati residual, N = 20: orders lambda^2..lambda^-18 all zero
//  6  scaled bilinear identity, n = 1..8, symbolic r
//  7  linearization: Riccati residual < 1e-8, Wronskian drift < 1e-9,
//     F = lambda Y2/Y1 identity, over the default (lambda, r) grid, t in [1,3]
//  8  Kummer closed form at r = 0: residual < 1e-9 on [0.5, 5],
//     matches integration to < 1e-7
//  9  indicial exponents of the linearized equation at t = 0 and t = 8r
// 10  HeunC evaluator: normalization, v1, defining-ODE residual < 1e-9,
//     integration agreement < 1e-8
// 11  Heun branch adjudication over (lambda, r) in {1/2, 1} x {1/2, 1, -1}

struct SuiteContext {
    SigmaEngine symbolic{std::nullopt};
};

Report criterion_hankel_equiv(SuiteContext& ctx);       // 1
Report criterion_polynomiality(SuiteContext& ctx);      // 2
Report criterion_degree_law(SuiteContext& ctx);         // 3
Report criterion_pv_solutions(SuiteContext& ctx);       // 4
Report criterion_riccati_formal();                      // 5
Report criterion_scaled_toda(SuiteContext& ctx);        // 6
// The numeric suites optionally write their data files (integration paths
// as CSV t,Y1,Y2,F,residual; branch sweeps as CSV t,candidate,residual plus
// a JSON verdict block) into artifact_dir; empty means no artifacts.
Report criterion_linearization(const std::string& artifact_dir = "");   // 7
Report criterion_kummer_branch(const std::string& artifact_dir = "");   // 8
Report criterion_frobenius();                           // 9
Report criterion_heunc_evaluator();                     // 10
Report criterion_heun_branch(const std::string& artifact_dir = "");     // 11

inline constexpr int kCriterionCount = 11;

/// Runs criterion `index` (1-based) against a shared context.
Report run_criterion(int index, SuiteContext& ctx, const std::string& artifact_dir = "");

const char* criterion_title(int index);

/// Known suite names for CLI selection ("all", "hankel", "pv", ...).
/// Returns the criterion indices a name covers; empty when unknown.
std::vector<int> suite_selection(const std::string& name);

/// Runs the listed criteria in order; when `progress` is given, prints one
/// line per criterion as it completes. A nonempty artifact_dir collects the
/// numeric suites' CSV/JSON data files.
Report run_suites(const std::vector<int>& indices, std::ostream* progress = nullptr,
                  const std::string& artifact_dir = "");

}  // namespace umemura
