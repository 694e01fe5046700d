#include "donsw/diffops.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <utility>

namespace donsw {

SeqFn SeqFn::everywhere(Fn fn) {
    return SeqFn(std::move(fn), std::nullopt, std::nullopt);
}

SeqFn SeqFn::on_window(Fn fn, long long lo, long long hi) {
    if (lo > hi)
        throw precondition_error("sequence window is empty");
    return SeqFn(std::move(fn), lo, hi);
}

SeqFn SeqFn::from_table(long long x0, std::vector<Rat> values) {
    if (values.empty())
        throw precondition_error("sequence table is empty");
    const long long hi = x0 + static_cast<long long>(values.size()) - 1;
    auto table = std::make_shared<std::vector<Rat>>(std::move(values));
    return SeqFn([table, x0](long long x) { return (*table)[static_cast<std::size_t>(x - x0)]; }, x0, hi);
}

bool SeqFn::defined_at(long long x) const {
    if (lo_ && x < *lo_)
        return false;
    if (hi_ && x > *hi_)
        return false;
    return true;
}

Rat SeqFn::operator()(long long x) const {
    if (!defined_at(x))
        throw window_error(x);
    return fn_(x);
}

SeqFn nabla(int q, long long p, SeqFn f) {
    const int sign = (q % 2 == 0) ? 1 : -1;
    auto base = std::make_shared<SeqFn>(std::move(f));
    // both x and x+p must stay in the base window
    std::optional<long long> lo = base->lo(), hi = base->hi();
    if (p >= 0) {
        if (hi)
            hi = *hi - p;
    } else {
        if (lo)
            lo = *lo - p;
    }
    if (lo && hi && *lo > *hi)
        throw window_error(lo.value());
    auto fn = [base, sign, p](long long x) {
        const Rat a = (*base)(x);
        const Rat b = (*base)(x + p);
        return sign > 0 ? a + b : a - b;
    };
    if (lo && hi)
        return SeqFn::on_window(std::move(fn), *lo, *hi);
    if (!lo && !hi)
        return SeqFn::everywhere(std::move(fn));
    // one-sided window
    SeqFn s = SeqFn::everywhere(std::move(fn));
    return SeqFn::on_window([s](long long x) { return s(x); },
                            lo ? *lo : std::numeric_limits<long long>::min() / 4,
                            hi ? *hi : std::numeric_limits<long long>::max() / 4);
}

long long z2_scale(int a, long long p) {
    return (a % 2 == 0) ? 0 : p;
}

Rat permutation_sum(const SeqFn& f, long long x,
                    const std::vector<long long>& p, const std::vector<int>& q) {
    if (p.size() != q.size())
        throw precondition_error("permutation_sum: p and q length mismatch");
    const std::size_t n = p.size();
    if (n >= 63)
        throw precondition_error("permutation_sum: too many factors");
    Rat sum = 0;
    for (unsigned long long phi = 0; phi < (1ULL << n); ++phi) {
        long long arg = x;
        int sgn = 0;
        for (std::size_t u = 0; u < n; ++u) {
            const int bit = (phi >> u) & 1u;
            arg += z2_scale(bit, p[u]);
            sgn += bit * (q[u] % 2 == 0 ? 0 : 1);
        }
        const Rat v = f(arg);
        sum += (sgn % 2 == 0) ? v : -v;
    }
    return sum;
}

SeqFn iterated_nabla1(long long lam, unsigned n, SeqFn f) {
    SeqFn g = std::move(f);
    for (unsigned i = 0; i < n; ++i)
        g = nabla(1, lam, std::move(g));
    return g;
}

Rat binomial_difference(const SeqFn& f, long long x, long long lam, unsigned n) {
    Rat sum = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const Rat term = Rat(binomial(n, i)) * f(x + static_cast<long long>(i) * lam);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

int UniPoly::degree() const {
    for (std::size_t i = coef.size(); i > 0; --i)
        if (coef[i - 1] != 0)
            return static_cast<int>(i - 1);
    return -1;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = coef.size(); i > 0; --i)
        r = r * x + coef[i - 1];
    return r;
}

Rat UniPoly::leading() const {
    const int d = degree();
    return d < 0 ? Rat(0) : coef[static_cast<std::size_t>(d)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coef.size() > coef.size())
        coef.resize(o.coef.size(), Rat(0));
    for (std::size_t i = 0; i < o.coef.size(); ++i)
        coef[i] += o.coef[i];
    return *this;
}

UniPoly operator*(const Rat& s, UniPoly a) {
    for (auto& c : a.coef)
        c *= s;
    return a;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return false;
    for (int i = 0; i <= da; ++i)
        if (a.coef[static_cast<std::size_t>(i)] != b.coef[static_cast<std::size_t>(i)])
            return false;
    return true;
}

UniPoly poly_from_kernel(long long lam, unsigned n, const std::vector<Rat>& samples) {
    if (lam == 0)
        throw precondition_error("poly_from_kernel: lam must be nonzero");
    if (n == 0)
        throw precondition_error("poly_from_kernel: n must be positive");
    if (samples.empty() || samples.size() - 1 < 2 * static_cast<std::size_t>(n))
        throw precondition_error("poly_from_kernel: too few samples (need m >= 2n)");
    const std::size_t m = samples.size() - 1;

    // the kernel hypothesis is verified, not trusted
    for (std::size_t j = 0; j + n <= m; ++j) {
        Rat v = 0;
        for (unsigned i = 0; i <= n; ++i) {
            const Rat t = Rat(binomial(n, i)) * samples[j + i];
            v += (i % 2 == 0) ? t : -t;
        }
        if (v != 0)
            throw kernel_error(static_cast<long long>(j) * lam,
                               "poly_from_kernel: difference kernel condition fails at sample x = " +
                                   std::to_string(static_cast<long long>(j) * lam) + " (value " + rat_string(v) + ")");
    }

    // Newton forward differences based at sample 0
    std::vector<Rat> row(samples.begin(), samples.begin() + n);
    std::vector<Rat> deltas;
    deltas.push_back(row[0]);
    for (unsigned s = 1; s < n; ++s) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = row[i + 1] - row[i];
        row.pop_back();
        deltas.push_back(row[0]);
    }

    // p(x) = sum_s deltas[s] * C(x, s)
    UniPoly p = UniPoly::zero();
    UniPoly falling{{Rat(1)}};  // x(x-1)...(x-s+1)/s!
    for (unsigned s = 0; s < n; ++s) {
        if (s > 0) {
            UniPoly next;
            next.coef.assign(falling.coef.size() + 1, Rat(0));
            for (std::size_t i = 0; i < falling.coef.size(); ++i) {
                next.coef[i + 1] += falling.coef[i];
                next.coef[i] -= Rat(Int(s) - 1) * falling.coef[i];
            }
            falling = std::move(next);
        }
        p += (deltas[s] / factorial(s)) * falling;
    }

    for (std::size_t j = 0; j <= m; ++j)
        if (p.eval(Rat(Int(j))) != samples[j])
            throw kernel_error(static_cast<long long>(j) * lam,
                               "poly_from_kernel: reconstruction does not reproduce the samples");
    return p;
}

}  // namespace donsw
