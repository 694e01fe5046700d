#include "donsw/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace donsw {

Poly Poly::constant(std::size_t nvars, const Rat& v) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), v);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m.at(i) = 1;
    p.add_term(m, Rat(1));
    return p;
}

void Poly::add_term(const Mono& m, const Rat& coef) {
    if (coef == 0)
        return;
    if (m.size() != nvars_)
        throw precondition_error("poly term: exponent length mismatch");
    auto [it, inserted] = terms_.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_)
        throw precondition_error("poly addition: variable count mismatch");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_)
        throw precondition_error("poly subtraction: variable count mismatch");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_)
        throw precondition_error("poly multiplication: variable count mismatch");
    Poly r(a.nvars_);
    Mono m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(nvars_, Rat(1));
    Poly b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1u)
            r = r * b;
        if (e > 1)
            b = b * b;
    }
    return r;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars_)
        throw precondition_error("poly evaluate: point dimension mismatch");
    Rat s = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] > 0)
                t *= rat_pow(point[i], m[i]);
        s += t;
    }
    return s;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (unsigned e : m)
            t += e;
        d = std::max(d, t);
    }
    return d;
}

std::optional<unsigned> Poly::homogeneous_degree() const {
    std::optional<unsigned> d;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (unsigned e : m)
            t += e;
        if (!d)
            d = t;
        else if (*d != t)
            return std::nullopt;
    }
    return d ? d : std::optional<unsigned>(0);
}

std::string Poly::dump() const {
    std::ostringstream out;
    for (const auto& [m, c] : terms_) {
        out << rat_string(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0)
                continue;
            out << " * x" << (i + 1);
            if (m[i] > 1)
                out << "^" << m[i];
        }
        out << "\n";
    }
    return out.str();
}

Poly linear_form(const Lattice& l, const Class& k) {
    if (k.rank() != l.rank())
        throw precondition_error("linear_form: dimension mismatch");
    Poly p(l.rank());
    Mono m(l.rank(), 0);
    for (std::size_t j = 0; j < l.rank(); ++j) {
        Int coef = 0;
        for (std::size_t i = 0; i < l.rank(); ++i)
            coef += k.c[i] * l.gram()[i][j];
        if (coef != 0) {
            m[j] = 1;
            p.add_term(m, Rat(coef));
            m[j] = 0;
        }
    }
    return p;
}

Poly quad_form(const Lattice& l) {
    Poly p(l.rank());
    Mono m(l.rank(), 0);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = i; j < l.rank(); ++j) {
            const Int& g = l.gram()[i][j];
            if (g == 0)
                continue;
            m[i] += 1;
            m[j] += 1;
            p.add_term(m, i == j ? Rat(g) : Rat(2 * g));
            m[i] = 0;
            m[j] = 0;
        }
    return p;
}

namespace {

// convolution product of univariate coefficient vectors
std::vector<Rat> uni_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rat> uni_pow(std::vector<Rat> base, unsigned e) {
    std::vector<Rat> r{Rat(1)};
    for (; e > 0; e >>= 1) {
        if (e & 1u)
            r = uni_mul(r, base);
        if (e > 1)
            base = uni_mul(base, base);
    }
    return r;
}

}  // namespace

Rat polarize_slot(const Poly& f, const HClass& e, const HClass& h) {
    const auto deg = f.homogeneous_degree();
    if (!deg || *deg < 1)
        throw precondition_error("polarize_slot: polynomial is not homogeneous of positive degree");
    if (e.rank() != f.nvars() || h.rank() != f.nvars())
        throw precondition_error("polarize_slot: argument dimension mismatch");
    // expand F(h + t e) as a univariate polynomial in t, term by term
    Rat t1 = 0;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rat> term{c};
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (m[i] == 0)
                continue;
            if (e.c[i] == 0) {
                const Rat p = rat_pow(h.c[i], m[i]);
                for (auto& v : term)
                    v *= p;
                continue;
            }
            term = uni_mul(term, uni_pow({h.c[i], e.c[i]}, m[i]));
            if (term.size() > 2)
                term.resize(2);  // only the t^0 and t^1 coefficients survive
        }
        if (term.size() > 1)
            t1 += term[1];
    }
    return t1 / Int(*deg);
}

Rat full_polarize(const Poly& f, const std::vector<HClass>& args) {
    const auto deg = f.homogeneous_degree();
    if (!deg || *deg < 1)
        throw precondition_error("full_polarize: polynomial is not homogeneous of positive degree");
    const unsigned d = *deg;
    if (args.size() != d)
        throw precondition_error("full_polarize: expected " + std::to_string(d) + " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args)
        if (a.rank() != f.nvars())
            throw precondition_error("full_polarize: argument dimension mismatch");
    Rat sum = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        HClass x = HClass::zero(f.nvars());
        int bits = 0;
        for (unsigned i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                x += args[i];
                ++bits;
            }
        const Rat v = f.evaluate(x);
        sum += ((d - bits) % 2 == 0) ? v : -v;
    }
    return sum / factorial(d);
}

Rat polarize_slot_product(const Lattice& l,
                          const std::vector<std::pair<Class, unsigned>>& linear_factors,
                          unsigned quad_power, const HClass& e, const HClass& h) {
    unsigned d = 2 * quad_power;
    for (const auto& [t, a] : linear_factors)
        d += a;
    if (d < 1)
        throw precondition_error("polarize_slot_product: degree must be positive");

    std::vector<Rat> at_h, at_e;
    for (const auto& [t, a] : linear_factors) {
        at_h.push_back(l.eval(t, h));
        at_e.push_back(l.eval(t, e));
    }
    const Rat q_h = l.qform(h);
    const Rat q_cross = 2 * l.bilinear(h, e);

    // t-coefficient of prod (u_s + t v_s)^{a_s} * (q_h + t q_cross + ...)^k
    Rat t1 = 0;
    for (std::size_t s = 0; s < linear_factors.size(); ++s) {
        const unsigned a = linear_factors[s].second;
        if (a == 0 || at_e[s] == 0)
            continue;
        Rat term = Int(a) * at_e[s] * rat_pow(at_h[s], a - 1) * rat_pow(q_h, quad_power);
        for (std::size_t r = 0; r < linear_factors.size(); ++r)
            if (r != s)
                term *= rat_pow(at_h[r], linear_factors[r].second);
        t1 += term;
    }
    if (quad_power > 0 && q_cross != 0) {
        Rat term = Int(quad_power) * q_cross * rat_pow(q_h, quad_power - 1);
        for (std::size_t r = 0; r < linear_factors.size(); ++r)
            term *= rat_pow(at_h[r], linear_factors[r].second);
        t1 += term;
    }
    (void)base;
    return t1 / Int(d);
}

namespace {

// reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        const Rat piv = m[r][c];
        for (auto& v : m[r])
            v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

bool check_algebraic_independence(const Lattice& l, const std::vector<Class>& t, bool use_q) {
    const std::size_t n = l.rank();
    std::vector<std::vector<Rat>> rows;
    for (const auto& k : t) {
        if (k.rank() != n)
            throw precondition_error("check_algebraic_independence: dimension mismatch");
        std::vector<Rat> row(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            Int v = 0;
            for (std::size_t i = 0; i < n; ++i)
                v += k.c[i] * l.gram()[i][j];
            row[j] = Rat(v);
        }
        rows.push_back(std::move(row));
    }
    auto m = rows;
    const auto pivots = rref(m);
    if (pivots.size() < t.size())
        return false;
    if (!use_q)
        return true;

    // kernel basis of the linear forms: free columns parametrize solutions
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<HClass> kernel;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc])
            continue;
        HClass v = HClass::zero(n);
        v.c[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v.c[pivots[r]] = -m[r][fc];
        kernel.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < kernel.size(); ++a)
        for (std::size_t b = a; b < kernel.size(); ++b)
            if (l.bilinear(kernel[a], kernel[b]) != 0)
                return true;
    return false;
}

std::map<std::vector<unsigned>, Rat>
decompose_in_coordinate_algebra(const Poly& f, std::size_t num_linear, const Poly& q) {
    const std::size_t nv = f.nvars();
    if (q.nvars() != nv)
        throw precondition_error("decompose: variable count mismatch");
    if (num_linear >= nv)
        throw precondition_error("decompose: need auxiliary variables beyond the linear generators");

    Mono lead(nv, 0);
    lead[0] = 2;
    Rat theta = 0;
    if (auto it = q.terms().find(lead); it != q.terms().end())
        theta = it->second;
    if (theta == 0)
        throw precondition_error("decompose: quadratic generator must have a nonzero t0^2 coefficient");

    std::vector<Poly> q_pow{Poly::constant(nv, Rat(1))};
    auto q_power = [&](unsigned e) -> const Poly& {
        while (q_pow.size() <= e)
            q_pow.push_back(q_pow.back() * q);
        return q_pow[e];
    };

    std::map<std::vector<unsigned>, Rat> out;
    Poly g = f;
    while (!g.is_zero()) {
        const auto& [mu, c_mu] = *g.terms().rbegin();  // lex-largest monomial
        if (mu[0] % 2 != 0)
            throw precondition_error("decompose: polynomial is not in the generated algebra (odd auxiliary power)");
        for (std::size_t i = num_linear + 1; i < nv; ++i)
            if (mu[i] != 0)
                throw precondition_error("decompose: polynomial is not in the generated algebra (stray auxiliary variable)");
        const unsigned kq = mu[0] / 2;
        std::vector<unsigned> key(num_linear + 1, 0);
        key[0] = kq;
        Poly basis = q_power(kq);
        Poly shift(nv);
        Mono sm(nv, 0);
        for (std::size_t i = 1; i <= num_linear; ++i) {
            key[i] = mu[i];
            sm[i] = mu[i];
        }
        shift.add_term(sm, Rat(1));
        basis = basis * shift;
        const Rat c = c_mu / rat_pow(theta, kq);
        out[key] = c;
        basis *= c;
        g -= basis;
        if (!g.is_zero() && !(g.terms().rbegin()->first < mu))
            throw precondition_error("decompose: reduction failed to make progress");
    }
    return out;
}

}  // namespace donsw
