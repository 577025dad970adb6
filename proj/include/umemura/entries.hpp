#pragma once

#include <optional>
#include <vector>

#include "umemura/bipoly.hpp"

namespace umemura {

/// The parameter r is either the symbolic indeterminate (nullopt) or a fixed
/// exact rational substituted throughout the computation.
using RMode = std::optional<Rational>;

/// r as a polynomial: the indeterminate itself, or a constant.
BiPoly r_as_poly(const RMode& r);

/// Hankel entry sequence a_0..a_N.
/// a_0 = 1, a_1 = (3/4) t, and
///   a_n = t (a'_{n-1} + (3/4) a_{n-1}) + t (t/8 - r) sum_{k=0}^{n-2} a_k a_{n-k-2},
/// the convolution being empty for n = 1.
struct EntrySequence {
    RMode r_value;                 // nullopt: symbolic r
    std::vector<BiPoly> entries;   // entries[n] = a_n

    int max_n() const { return static_cast<int>(entries.size()) - 1; }
};

EntrySequence compute_entries(int n_max, const RMode& r_value = std::nullopt);

/// Extends seq in place so that a_0..a_n_max are present.
void grow_entries(EntrySequence& seq, int n_max);

}  // namespace umemura
