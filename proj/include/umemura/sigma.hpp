#pragma once

#include <map>
#include <optional>

#include "umemura/bipoly.hpp"
#include "umemura/entries.hpp"
#include "umemura/hankel.hpp"
#include "umemura/report.hpp"

namespace umemura {

enum class SigmaMethod { recurrence, hankel, cached };

const char* sigma_method_name(SigmaMethod m);

/// Persistable table of computed entries and sigma polynomials for one r-mode.
struct UmemuraCache {
    RMode r_value;
    std::vector<BiPoly> entries;           // a_0..a_K
    std::map<int, BiPoly> sigma;           // n -> sigma_n
    std::map<int, SigmaMethod> method;     // provenance tag per sigma entry
    int max_n = -1;                        // << highest cached sigma index
};

/// Memoized computation of the sigma polynomials by both routes.
///
/// Recurrence route (sigma_0 = sigma_1 = 1):
///   sigma_{n+1} = [ t (sigma_n'' sigma_n - (sigma_n')^2) + sigma_n' sigma_n
///                   + (t/8 - r + (3/4) n) sigma_n^2 ] / sigma_{n-1}
/// Determinant route: sigma_n = t^{-n(n-1)/2} det(a_{i+j-2})_{i,j=1..n}.
/// Every division is exact or throws NotDivisible, which would falsify the
/// corresponding polynomiality claim.
class SigmaEngine {
public:
    explicit SigmaEngine(RMode r_value = std::nullopt);

    const RMode& r_value() const { return r_value_; }

    const BiPoly& entry(int n);
    const EntrySequence& entries(int up_to_n);

    const BiPoly& sigma_recurrence(int n);
    const BiPoly& sigma_hankel(int n);

    /// rho_n = t^{n(n-1)/2} sigma_n (recurrence side).
    BiPoly rho(int n);

    /// Checks the scaled bilinear identity
    ///   t^2 (rho_n'' rho_n - (rho_n')^2) + t rho_n' rho_n
    ///     + t (t/8 - r + (3/4) n) rho_n^2 = rho_{n+1} rho_{n-1}
    /// by exact arithmetic; n >= 1.
    bool verify_scaled_toda(int n);

    /// One row per 2 <= n <= n_max comparing the two sigma routes exactly.
    /// Mismatches and per-n errors are recorded in the report, not thrown.
    Report cross_check(int n_max);

    /// Adopts an externally provided value (cache load, or corruption in
    /// tests) into the recurrence-side table.
    void adopt_sigma(int n, BiPoly value, SigmaMethod m = SigmaMethod::cached);

    UmemuraCache to_cache() const;
    static SigmaEngine from_cache(const UmemuraCache& cache);

private:
    RMode r_value_;
    EntrySequence entries_;
    std::map<int, BiPoly> sigma_rec_;
    std::map<int, SigmaMethod> method_;
    std::map<int, BiPoly> sigma_hank_;

    BiPoly sigma_weight(int n) const;  // t/8 - r + (3/4) n
};

/// Free-function forms of the module operations, each on a fresh engine.
BiPoly sigma_recurrence(int n, const RMode& r = std::nullopt);
BiPoly sigma_hankel(int n, const RMode& r = std::nullopt);

}  // namespace umemura
