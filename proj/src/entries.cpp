#include "umemura/entries.hpp"

#include <stdexcept>

namespace umemura {

BiPoly r_as_poly(const RMode& r) {
    return r ? BiPoly::constant(*r) : BiPoly::var_r();
}

EntrySequence compute_entries(int n_max, const RMode& r_value) {
    EntrySequence seq;
    seq.r_value = r_value;
    grow_entries(seq, n_max);
    return seq;
}

void grow_entries(EntrySequence& seq, int n_max) {
    if (n_max < 0) throw std::invalid_argument("grow_entries: n_max must be >= 0");
    auto& a = seq.entries;
    if (a.empty()) a.push_back(BiPoly::constant(Rational(1)));
    if (a.size() == 1 && n_max >= 1)
        a.push_back(BiPoly::monomial(Rational(3, 4), 0, 1));
    const BiPoly t = BiPoly::var_t();
    // t (t/8 - r), the convolution multiplier
    const BiPoly conv_mult =
        t * (BiPoly::monomial(Rational(1, 8), 0, 1) - r_as_poly(seq.r_value));
    for (int n = static_cast<int>(a.size()); n <= n_max; ++n) {
        BiPoly conv;
        for (int k = 0; k <= n - 2; ++k) conv += a[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k - 2)];
        BiPoly next = t * (a.back().derivative_t() + a.back().scaled(Rational(3, 4)));
        next += conv_mult * conv;
        a.push_back(std::move(next));
    }
}

}  // namespace umemura
