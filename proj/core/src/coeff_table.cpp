#include "donsw/coeff_table.hpp"

#include <string>

namespace donsw {

CoeffTable::CoeffTable(long chi_h, long c1sq, Int lam_sq, unsigned m, std::uint64_t seed)
    : chi_h_(chi_h), c1sq_(c1sq), lam_sq_(std::move(lam_sq)), m_(m), seed_(seed) {
    if (chi_h_ < 2)
        throw precondition_error("coefficient table: chi_h must be >= 2");
    n_ = chi_h_ - c1sq_ - 3;
    if (n_ < 0)
        throw precondition_error("coefficient table: chi_h - c1sq - 3 must be >= 0");
}

CoeffTable CoeffTable::with_degree_violation(long chi_h, long c1sq, Int lam_sq, unsigned m,
                                             std::uint64_t seed, unsigned violation_row) {
    CoeffTable t(chi_h, c1sq, std::move(lam_sq), m, seed);
    if (static_cast<long>(violation_row) >= t.n_)
        throw precondition_error("coefficient table: violation row must lie in the modeled region");
    t.violation_row_ = violation_row;
    return t;
}

Rat CoeffTable::beta(unsigned u, unsigned i, unsigned j, unsigned k) const {
    if (static_cast<long>(i) >= n_)
        return 0;
    if (static_cast<long>(u) > n_ - 1 - static_cast<long>(i))
        return 0;
    if ((u + i + static_cast<unsigned long>(n_)) % 2 == 0)  // u = n+i mod 2
        return 0;
    const std::uint64_t key = mix64(seed_) ^
                              (static_cast<std::uint64_t>(u) | (static_cast<std::uint64_t>(i) << 16) |
                               (static_cast<std::uint64_t>(j) << 32) | (static_cast<std::uint64_t>(k) << 48));
    const std::uint64_t h = mix64(key);
    const long num = 1 + static_cast<long>(h % 9);
    const long den = 1L << ((h >> 16) % 3);
    const Rat v = Rat(Int(num), Int(den));
    return ((h >> 8) & 1u) ? -v : v;
}

Rat CoeffTable::evaluate(unsigned i, unsigned j, unsigned k, const Int& x) const {
    const unsigned long a = static_cast<unsigned long>(i) + j + 2ul * k + 2ul * m_;
    if (static_cast<long>(i) >= n_) {
        if (j > 0)
            return 0;
        const Int bound = Int(static_cast<long>(a)) - 4 * chi_h_ - 3 - n_;
        if (lam_sq_ <= bound)
            throw precondition_error("coefficient table: lambda^2 too small for the determined region (need lambda^2 > A - 4 chi_h - 3 - n)");
        Rat v = Rat(factorial(static_cast<unsigned>(a - 2 * m_)));
        v /= factorial(k) * factorial(i);
        v *= pow2(static_cast<long>(m_) - static_cast<long>(k) - n_);
        return v;
    }
    const Rat x4 = Rat(x) / 4;
    Rat sum = 0;
    for (long u = 0; u <= n_ - 1 - static_cast<long>(i); ++u) {
        const Rat b = beta(static_cast<unsigned>(u), i, j, k);
        if (b != 0)
            sum += b * rat_pow(x4, static_cast<unsigned>(u));
    }
    if (violation_row_ && *violation_row_ == i)
        sum += Rat(3, 2) * rat_pow(x4, static_cast<unsigned>(n_ - i));
    return sum;
}

}  // namespace donsw
