#pragma once

#include "donsw/errors.hpp"
#include "donsw/numeric.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace donsw {

/// Access outside a sequence's declared window.
struct window_error : precondition_error {
    long long point;
    explicit window_error(long long x)
        : precondition_error("sequence accessed outside its window at x = " + std::to_string(x)), point(x) {}
};

/// Integer-indexed rational-valued sequence carrying its validity window.
/// Operators shrink the window explicitly; out-of-window access throws.
class SeqFn {
public:
    using Fn = std::function<Rat(long long)>;

    static SeqFn everywhere(Fn fn);
    static SeqFn on_window(Fn fn, long long lo, long long hi);
    static SeqFn from_table(long long x0, std::vector<Rat> values);

    Rat operator()(long long x) const;
    bool defined_at(long long x) const;
    std::optional<long long> lo() const { return lo_; }
    std::optional<long long> hi() const { return hi_; }

private:
    Fn fn_;
    std::optional<long long> lo_, hi_;
    SeqFn(Fn fn, std::optional<long long> lo, std::optional<long long> hi)
        : fn_(std::move(fn)), lo_(lo), hi_(hi) {}
};

/// x -> f(x) + (-1)^q f(x+p). The result's window shrinks so both reads stay
/// inside f's window.
SeqFn nabla(int q, long long p, SeqFn f);

/// 0 for even a, p for odd a.
long long z2_scale(int a, long long p);

/// Sum over (Z/2)^n of (-1)^{sum q_u pi_u} f(x + sum p_u pi_u).
Rat permutation_sum(const SeqFn& f, long long x,
                    const std::vector<long long>& p, const std::vector<int>& q);

/// n-fold composition of nabla(1, lam, .).
SeqFn iterated_nabla1(long long lam, unsigned n, SeqFn f);

/// The same operator evaluated by the alternating binomial sum
/// sum_i (-1)^i C(n,i) f(x + i lam); kept as an independent route.
Rat binomial_difference(const SeqFn& f, long long x, long long lam, unsigned n);

/// Univariate polynomial over Q in coefficient form c[0] + c[1] x + ...
struct UniPoly {
    std::vector<Rat> coef;

    static UniPoly zero() { return {}; }
    int degree() const;  // -1 for the zero polynomial
    Rat eval(const Rat& x) const;
    Rat leading() const;

    UniPoly& operator+=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(const Rat& s, UniPoly a);
    friend bool operator==(const UniPoly& a, const UniPoly& b);
};

/// Difference-kernel hypothesis failed; carries the witnessing sample index.
struct kernel_error : precondition_error {
    long long witness;
    kernel_error(long long x, const std::string& msg) : precondition_error(msg), witness(x) {}
};

/// Given samples[j] = f(j*lam) for j = 0..m with m >= 2n, first verifies that
/// the n-fold step-lam first difference vanishes at every computable sample
/// point, then reconstructs the polynomial g of degree <= n-1 with
/// g(j) = f(j*lam) by Newton forward differences based at 0.
UniPoly poly_from_kernel(long long lam, unsigned n, const std::vector<Rat>& samples);

}  // namespace donsw
