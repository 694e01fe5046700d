#pragma once

#include "donsw/errors.hpp"
#include "donsw/numeric.hpp"

#include <cstdint>
#include <optional>

namespace donsw {

/// Universal coefficients b~_{i,j,k}(chi_h, c1sq, x, lam_sq, m) as a function
/// of x = K.Lambda. For i >= n (n = chi_h - c1sq - 3) the value is the known
/// closed form. Below that the coefficients are undetermined; they are
/// modeled as seeded polynomials in x/4 of degree <= n-1-i whose monomials
/// obey the parity constraint beta_{u,i,j,k} = 0 for u = n+i mod 2, so that
/// seed-independence of downstream values is a falsifiable property.
class CoeffTable {
public:
    CoeffTable(long chi_h, long c1sq, Int lam_sq, unsigned m, std::uint64_t seed);

    /// Same model with an extra degree n-i term injected into row
    /// violation_row, breaking the difference-kernel property there.
    static CoeffTable with_degree_violation(long chi_h, long c1sq, Int lam_sq, unsigned m,
                                            std::uint64_t seed, unsigned violation_row);

    long chi_h() const { return chi_h_; }
    long c1sq() const { return c1sq_; }
    const Int& lam_sq() const { return lam_sq_; }
    unsigned m() const { return m_; }
    long n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    std::optional<unsigned> violation_row() const { return violation_row_; }

    /// Model parameter beta_{u,i,j,k}; zero outside 0 <= u <= n-1-i and on
    /// the parity-constrained indices.
    Rat beta(unsigned u, unsigned i, unsigned j, unsigned k) const;

    Rat evaluate(unsigned i, unsigned j, unsigned k, const Int& x) const;

private:
    long chi_h_;
    long c1sq_;
    Int lam_sq_;
    unsigned m_;
    std::uint64_t seed_;
    long n_;
    std::optional<unsigned> violation_row_;
};

}  // namespace donsw
