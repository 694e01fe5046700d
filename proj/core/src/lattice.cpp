#include "donsw/lattice.hpp"

#include <algorithm>
#include <string>

namespace donsw {

Class Class::unit(std::size_t rank, std::size_t i) {
    Class k = zero(rank);
    k.c.at(i) = 1;
    return k;
}

bool Class::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

Class Class::operator-() const {
    Class r = *this;
    for (auto& v : r.c)
        v = -v;
    return r;
}

Class& Class::operator+=(const Class& o) {
    if (c.size() != o.c.size())
        throw precondition_error("class addition: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.c[i];
    return *this;
}

Class& Class::operator-=(const Class& o) {
    if (c.size() != o.c.size())
        throw precondition_error("class subtraction: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= o.c[i];
    return *this;
}

Class operator*(const Int& s, Class a) {
    for (auto& v : a.c)
        v *= s;
    return a;
}

bool operator<(const Class& a, const Class& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

HClass HClass::operator-() const {
    HClass r = *this;
    for (auto& v : r.c)
        v = -v;
    return r;
}

HClass& HClass::operator+=(const HClass& o) {
    if (c.size() != o.c.size())
        throw precondition_error("homology class addition: dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.c[i];
    return *this;
}

HClass operator*(const Rat& s, HClass a) {
    for (auto& v : a.c)
        v *= s;
    return a;
}

HClass to_h(const Class& k) {
    HClass h;
    h.c.reserve(k.c.size());
    for (const auto& v : k.c)
        h.c.emplace_back(v);
    return h;
}

namespace {

// Fraction-free Bareiss elimination.
Int det_of(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

}  // namespace

std::pair<int, int> signature_of(const std::vector<std::vector<Int>>& gram) {
    const std::size_t n = gram.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(gram[i][j]);

    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            // pull in a nonzero diagonal entry, or force one from an
            // off-diagonal pair (hyperbolic fallback)
            std::size_t p = i + 1;
            while (p < n && a[p][p] == 0)
                ++p;
            if (p < n) {
                std::swap(a[i], a[p]);
                for (std::size_t r = 0; r < n; ++r)
                    std::swap(a[r][i], a[r][p]);
            } else {
                std::size_t q = i + 1;
                while (q < n && a[i][q] == 0)
                    ++q;
                if (q == n)
                    throw precondition_error("signature: degenerate form");
                for (std::size_t r = 0; r < n; ++r)
                    a[i][r] += a[q][r];
                for (std::size_t r = 0; r < n; ++r)
                    a[r][i] += a[r][q];
            }
        }
        const Rat piv = a[i][i];
        if (piv > 0)
            ++plus;
        else
            ++minus;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][i] == 0)
                continue;
            const Rat f = a[r][i] / piv;
            for (std::size_t cix = 0; cix < n; ++cix)
                a[r][cix] -= f * a[i][cix];
            for (std::size_t cix = 0; cix < n; ++cix)
                a[cix][r] -= f * a[cix][i];
        }
    }
    return {plus, minus};
}

Lattice::Lattice(std::vector<std::vector<Int>> gram) : g_(std::move(gram)) {
    const std::size_t n = g_.size();
    if (n == 0)
        throw invariant_error("lattice: rank must be positive");
    for (const auto& row : g_)
        if (row.size() != n)
            throw invariant_error("lattice: gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g_[i][j] != g_[j][i])
                throw invariant_error("lattice: gram matrix is not symmetric");
    det_ = det_of(g_);
    if (det_ != 1 && det_ != -1)
        throw invariant_error("lattice: form is not unimodular (|det| = " + boost::multiprecision::abs(det_).str() + ")");
    sig_ = signature_of(g_);
}

void Lattice::check_rank(const char* who, std::size_t got) const {
    if (got != rank())
        throw precondition_error(std::string(who) + ": dimension mismatch (" + std::to_string(got) + " vs rank " + std::to_string(rank()) + ")");
}

Int Lattice::pair(const Class& a, const Class& b) const {
    check_rank("pair", a.rank());
    check_rank("pair", b.rank());
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a.c[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            row += g_[i][j] * b.c[j];
        s += a.c[i] * row;
    }
    return s;
}

Rat Lattice::eval(const Class& k, const HClass& h) const {
    check_rank("eval", k.rank());
    check_rank("eval", h.rank());
    Rat s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (k.c[i] == 0)
            continue;
        Rat row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            row += Rat(g_[i][j]) * h.c[j];
        s += Rat(k.c[i]) * row;
    }
    return s;
}

Rat Lattice::bilinear(const HClass& a, const HClass& b) const {
    check_rank("bilinear", a.rank());
    check_rank("bilinear", b.rank());
    Rat s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a.c[i] == 0)
            continue;
        Rat row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            row += Rat(g_[i][j]) * b.c[j];
        s += a.c[i] * row;
    }
    return s;
}

Rat Lattice::qform(const HClass& h) const {
    return bilinear(h, h);
}

bool Lattice::is_characteristic(const Class& k) const {
    check_rank("is_characteristic", k.rank());
    // K.x = x.x mod 2 is linear mod 2 in x, so basis vectors suffice
    for (std::size_t i = 0; i < rank(); ++i) {
        Int kx = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            kx += g_[i][j] * k.c[j];
        if (parity(kx) != parity(g_[i][i]))
            return false;
    }
    return true;
}

int Lattice::eps(const Class& w, const Class& k) const {
    const Int s = pair(w, w) + pair(w, k);
    if (parity(s) != 0)
        throw precondition_error("eps(w,K): w^2 + w.K is odd; K is not characteristic");
    return parity(half(s));
}

bool Lattice::is_diagonal_pm1() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) {
            if (i == j && g_[i][j] != 1 && g_[i][j] != -1)
                return false;
            if (i != j && g_[i][j] != 0)
                return false;
        }
    return true;
}

Class Lattice::find_orthogonal_positive(const Class& k) const {
    check_rank("find_orthogonal_positive", k.rank());
    if (!is_diagonal_pm1())
        throw precondition_error("find_orthogonal_positive: form is not diagonal with entries +-1");
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < rank() && pos.size() < 2; ++i)
        if (g_[i][i] == 1)
            pos.push_back(i);
    if (pos.size() < 2)
        throw precondition_error("find_orthogonal_positive: fewer than 2 positive basis vectors");
    if (!is_characteristic(k))
        throw precondition_error("find_orthogonal_positive: K is not characteristic");
    const Int a1 = k.c[pos[0]];
    const Int a2 = k.c[pos[1]];
    Class lam = Class::zero(rank());
    lam.c[pos[0]] = a2;
    lam.c[pos[1]] = -a1;
    return lam;
}

Lattice Lattice::direct_sum(const Lattice& other) const {
    const std::size_t n = rank(), m = other.rank();
    std::vector<std::vector<Int>> g(n + m, std::vector<Int>(n + m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = g_[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g[n + i][n + j] = other.g_[i][j];
    return Lattice(std::move(g));
}

Lattice diagonal_lattice(const std::vector<int>& entries) {
    const std::size_t n = entries.size();
    std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        g[i][i] = entries[i];
    return Lattice(std::move(g));
}

Lattice hyperbolic_lattice() {
    return Lattice({{Int(0), Int(1)}, {Int(1), Int(0)}});
}

Lattice e8_lattice(bool negative) {
    // Cartan matrix of E8: chain 1-2-...-7 with node 8 attached to node 5
    std::vector<std::vector<Int>> g(8, std::vector<Int>(8, 0));
    for (std::size_t i = 0; i < 8; ++i)
        g[i][i] = 2;
    for (std::size_t i = 0; i + 1 < 7; ++i) {
        g[i][i + 1] = -1;
        g[i + 1][i] = -1;
    }
    g[4][7] = -1;
    g[7][4] = -1;
    if (negative)
        for (auto& row : g)
            for (auto& v : row)
                v = -v;
    return Lattice(std::move(g));
}

}  // namespace donsw
