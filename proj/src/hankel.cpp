#include "umemura/hankel.hpp"

#include <stdexcept>
#include <utility>

#include "umemura/errors.hpp"

namespace umemura {

PolyMatrix PolyMatrix::zero(int n) {
    PolyMatrix m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BiPoly{});
    return m;
}

void PolyMatrix::swap_rows(int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
}

bool PolyMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

HankelMatrix build_hankel(int n, const EntrySequence& seq) {
    if (n < 1) throw std::invalid_argument("build_hankel: n must be >= 1");
    if (seq.max_n() < 2 * n - 2)
        throw InsufficientEntries("build_hankel: need entries a_0..a_" +
                                  std::to_string(2 * n - 2) + ", have up to a_" +
                                  std::to_string(seq.max_n()));
    PolyMatrix m = PolyMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = seq.entries[static_cast<std::size_t>(i + j)];
    return m;
}

bool is_hankel(const PolyMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i + 1 < m.n && j > 0 && m.at(i, j) != m.at(i + 1, j - 1)) return false;
    return true;
}

namespace {

// One Bareiss elimination pass. When `symmetric` is set only the upper
// triangle is updated and mirrored, which is valid as long as no pivot swap
// occurs; the caller falls back to the general pass if one does.
bool bareiss_run(PolyMatrix& m, bool symmetric, int& sign, bool& det_zero) {
    const int n = m.n;
    BiPoly prev = BiPoly::constant(Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            if (symmetric) return false;  // restart without the symmetry shortcut
            int pivot_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) {
                det_zero = true;
                return true;
            }
            m.swap_rows(k, pivot_row);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = symmetric ? i : k + 1; j < n; ++j) {
                BiPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = detail::exact_div_any(num, prev);
            }
            if (symmetric)
                for (int j = k + 1; j < i; ++j) m.at(i, j) = m.at(j, i);
        }
        prev = m.at(k, k);
    }
    return true;
}

}  // namespace

BiPoly bareiss_det(PolyMatrix m) {
    const int n = m.n;
    if (n <= 0) throw std::invalid_argument("bareiss_det: empty matrix");
    if (n == 1) return m.at(0, 0);
    int sign = 1;
    bool det_zero = false;
    if (m.is_symmetric()) {
        PolyMatrix copy = m;
        if (bareiss_run(copy, true, sign, det_zero))
            return det_zero ? BiPoly{}
                            : (sign < 0 ? -copy.at(n - 1, n - 1) : copy.at(n - 1, n - 1));
        sign = 1;
    }
    bareiss_run(m, false, sign, det_zero);
    if (det_zero) return {};
    return sign < 0 ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

}  // namespace umemura
