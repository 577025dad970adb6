#pragma once

#include <vector>

#include "umemura/bipoly.hpp"
#include "umemura/entries.hpp"

namespace umemura {

/// Square matrix of polynomials, row-major.
struct PolyMatrix {
    int n = 0;
    std::vector<BiPoly> a;

    static PolyMatrix zero(int n);
    BiPoly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BiPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    void swap_rows(int i, int j);
    bool is_symmetric() const;
};

/// Matrices built from an entry sequence have entry (i,j) = a_{i+j-2} for
/// i,j = 1..n, so they are constant along anti-diagonals.
using HankelMatrix = PolyMatrix;

/// Throws InsufficientEntries unless seq holds a_0..a_{2n-2}.
HankelMatrix build_hankel(int n, const EntrySequence& seq);

bool is_hankel(const PolyMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination: every interior
/// division is exact. Zero pivots are handled by searching the column below,
/// swapping rows and flipping the sign; an all-zero column gives 0.
BiPoly bareiss_det(PolyMatrix m);

}  // namespace umemura
