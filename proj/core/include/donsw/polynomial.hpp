#pragma once

#include "donsw/lattice.hpp"
#include "donsw/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace donsw {

/// Exponent vector; length equals the variable count of the owning Poly.
using Mono = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& v);
    static Poly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rat>& terms() const { return terms_; }

    /// Merges a term into the polynomial, dropping it if the sum cancels.
    void add_term(const Mono& m, const Rat& coef);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    Rat evaluate(const HClass& h) const { return evaluate(h.c); }

    unsigned total_degree() const;
    std::optional<unsigned> homogeneous_degree() const;

    /// Sorted "coeff * x1^a1 x2^a2" lines, one term per line.
    std::string dump() const;

private:
    std::size_t nvars_;
    std::map<Mono, Rat> terms_;
};

/// Degree-1 polynomial with evaluate(h) = eval(K, h).
Poly linear_form(const Lattice& l, const Class& k);

/// Degree-2 polynomial with evaluate(h) = qform(h).
Poly quad_form(const Lattice& l);

/// M(e, h, ..., h) for the symmetric d-linear functional M whose diagonal is
/// the homogeneous degree-d polynomial F: (1/d) times the t-coefficient of
/// F(h + t e).
Rat polarize_slot(const Poly& f, const HClass& e, const HClass& h);

/// M(h_1, ..., h_d) by inclusion-exclusion over subsets of the arguments.
Rat full_polarize(const Poly& f, const std::vector<HClass>& args);

/// polarize_slot for F = prod <T_s,.>^{a_s} * Q^k given in factored form, so
/// the product never has to be expanded.
Rat polarize_slot_product(const Lattice& l,
                          const std::vector<std::pair<Class, unsigned>>& linear_factors,
                          unsigned quad_power, const HClass& e, const HClass& h);

/// True when the linear forms <T_i,.> are linearly independent and (if use_q)
/// the intersection form restricted to their joint kernel is nonzero.
bool check_algebraic_independence(const Lattice& l, const std::vector<Class>& t, bool use_q);

/// Unique expansion of F in the algebra generated by the coordinate functions
/// t_1..t_{num_linear} and the quadratic q, which must have a nonzero t_0^2
/// coefficient. Variables above num_linear are auxiliary and may appear only
/// through q. Keys: [q-power, a_1, ..., a_{num_linear}]. Throws
/// precondition_error when F does not lie in the algebra.
std::map<std::vector<unsigned>, Rat>
decompose_in_coordinate_algebra(const Poly& f, std::size_t num_linear, const Poly& q);

}  // namespace donsw
