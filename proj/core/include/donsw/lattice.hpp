#pragma once

#include "donsw/errors.hpp"
#include "donsw/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace donsw {

/// Integral cohomology class in a fixed basis of the lattice.
struct Class {
    std::vector<Int> c;

    Class() = default;
    explicit Class(std::vector<Int> v) : c(std::move(v)) {}

    static Class zero(std::size_t rank) { return Class(std::vector<Int>(rank, 0)); }
    static Class unit(std::size_t rank, std::size_t i);

    std::size_t rank() const { return c.size(); }
    bool is_zero() const;

    Class operator-() const;
    Class& operator+=(const Class& o);
    Class& operator-=(const Class& o);
    friend Class operator+(Class a, const Class& b) { return a += b; }
    friend Class operator-(Class a, const Class& b) { return a -= b; }
    friend Class operator*(const Int& s, Class a);

    friend bool operator==(const Class& a, const Class& b) { return a.c == b.c; }
    friend bool operator<(const Class& a, const Class& b);
};

/// Rational homology class, written in the coordinates fixed by Poincare
/// duality: <K,h> = K^T * gram * h for any Class K.
struct HClass {
    std::vector<Rat> c;

    HClass() = default;
    explicit HClass(std::vector<Rat> v) : c(std::move(v)) {}

    static HClass zero(std::size_t rank) { return HClass(std::vector<Rat>(rank, Rat(0))); }

    std::size_t rank() const { return c.size(); }

    HClass operator-() const;
    HClass& operator+=(const HClass& o);
    friend HClass operator+(HClass a, const HClass& b) { return a += b; }
    friend HClass operator*(const Rat& s, HClass a);
    friend bool operator==(const HClass& a, const HClass& b) { return a.c == b.c; }
};

/// Poincare duality on coordinates is the identity.
HClass to_h(const Class& k);

/// Signature (b+, b-) of a symmetric rational matrix by exact congruence
/// reduction; throws precondition_error on degenerate input.
std::pair<int, int> signature_of(const std::vector<std::vector<Int>>& gram);

/// Rank-b2 integral symmetric unimodular bilinear form.
class Lattice {
public:
    explicit Lattice(std::vector<std::vector<Int>> gram);

    std::size_t rank() const { return g_.size(); }
    const std::vector<std::vector<Int>>& gram() const { return g_; }
    const Int& det() const { return det_; }

    Int pair(const Class& a, const Class& b) const;
    Rat eval(const Class& k, const HClass& h) const;
    Rat qform(const HClass& h) const;
    /// Polar bilinear form of qform: b(a,b) = a^T gram b.
    Rat bilinear(const HClass& a, const HClass& b) const;

    bool is_characteristic(const Class& k) const;

    std::pair<int, int> signature() const { return sig_; }
    long sigma() const { return sig_.first - sig_.second; }

    /// (w^2 + w.K)/2 mod 2; defined only when w^2 + w.K is even, which holds
    /// for every w exactly when K is characteristic.
    int eps(const Class& w, const Class& k) const;

    /// On a diagonal +-1 basis with K characteristic: a2 e1 - a1 e2 built from
    /// the first two +1 basis vectors, orthogonal to K with positive square.
    Class find_orthogonal_positive(const Class& k) const;

    Lattice direct_sum(const Lattice& other) const;

    bool is_diagonal_pm1() const;

private:
    std::vector<std::vector<Int>> g_;
    Int det_;
    std::pair<int, int> sig_;

    void check_rank(const char* who, std::size_t got) const;
};

/// <1> or <-1>, and diagonal lattices generally.
Lattice diagonal_lattice(const std::vector<int>& entries);

/// The rank-2 hyperbolic form [[0,1],[1,0]].
Lattice hyperbolic_lattice();

/// The even unimodular definite rank-8 form; negative definite on request.
Lattice e8_lattice(bool negative);

}  // namespace donsw
