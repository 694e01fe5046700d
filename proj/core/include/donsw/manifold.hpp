#pragma once

#include "donsw/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace donsw {

/// 1/2 at the zero class, 1 otherwise.
Rat nu(const Class& k);

/// Finite support table K -> SW'(K); validated against the ambient lattice
/// when a FourManifold is formed.
class SWTable {
public:
    SWTable() = default;
    explicit SWTable(std::map<Class, Int> entries) : entries_(std::move(entries)) {}

    const std::map<Class, Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    bool contains(const Class& k) const { return entries_.count(k) > 0; }
    const Int& value(const Class& k) const;

private:
    std::map<Class, Int> entries_;
};

struct CharNumbers {
    long e;
    long sigma;
    long chi_h;
    long c1sq;
    long c;
};

/// Standard four-manifold data: b1 = 0, b+ >= 3 odd, intersection lattice
/// plus Seiberg-Witten table with conjugation symmetry.
class FourManifold {
public:
    FourManifold(Lattice lattice, SWTable sw);

    const Lattice& lattice() const { return l_; }
    const SWTable& sw() const { return sw_; }
    CharNumbers char_numbers() const { return cn_; }

    /// Keys of the table, sorted.
    std::vector<Class> basic_classes() const;

    /// One representative per {K,-K} orbit: the one whose first nonzero
    /// coordinate is positive (0 represents itself). Sorted.
    std::vector<Class> fundamental_domain() const;

    bool contains_zero_class() const { return sw_.contains(Class::zero(l_.rank())); }

    /// K^2 = c1^2(X) for every basic class.
    bool has_simple_type() const;

    /// Lattice gains a <-1> summand; each basic class K splits into K+-e*
    /// with the same SW' value. Requires simple type.
    FourManifold blow_up() const;

    /// c(X) <= 3, or every signed SW power sum of degree <= c(X)-4 vanishes
    /// identically in h; checked exactly monomial by monomial. w must be
    /// characteristic.
    bool is_scst(const Class& w) const;

private:
    Lattice l_;
    SWTable sw_;
    CharNumbers cn_;
};

/// Example manifold together with distinguished named classes
/// (K, f1, f2, e1..en) for class-spec resolution.
struct ExampleManifold {
    FourManifold x;
    std::map<std::string, Class> names;
};

/// The rank 11q+1 model: H + <1>^{2q-2} + <-1>^{9q+1} with a hyperbolic pair
/// f1, f2 and a characteristic K supported on the diagonal part, K^2 = q-3,
/// SW' = {K: 1, -K: (-1)^q}. Requires q >= 2.
ExampleManifold example_xq(int q);

/// example_xq(q) blown up n times; basic classes K +- e1* +- ... +- en*.
/// Requires q >= 2, n >= 0.
ExampleManifold example_xqn(int q, int n);

}  // namespace donsw
