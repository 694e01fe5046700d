#include "donsw/invariants.hpp"

#include "donsw/diffops.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace donsw {

bool degree_admissible(long chi_h, const Int& w_sq, unsigned delta) {
    const Int r = Int(delta) + w_sq + 3 * chi_h;
    return r % 4 == 0;
}

bool degree_admissible(const FourManifold& x, const Class& w, unsigned delta) {
    return degree_admissible(x.char_numbers().chi_h, x.lattice().pair(w, w), delta);
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw precondition_error(msg);
}

void check_query_shape(const FourManifold& x, const InvariantQuery& q) {
    require(q.delta >= 2 * q.m, "invariant query requires delta - 2m >= 0");
    require(q.w.rank() == x.lattice().rank(), "invariant query: w has wrong rank");
    require(q.h.rank() == x.lattice().rank(), "invariant query: h has wrong rank");
}

void check_cobordism_hypotheses(const FourManifold& x, const InvariantQuery& q, const Class& lam) {
    const auto cn = x.char_numbers();
    require(lam.rank() == x.lattice().rank(), "cobordism formula: lambda has wrong rank");
    require(x.has_simple_type(), "cobordism formula requires Seiberg-Witten simple type");
    require(x.lattice().is_characteristic(q.w - lam),
            "cobordism formula requires w - lambda characteristic");
    const Int capacity = x.lattice().pair(lam, lam) + cn.c + 4 * cn.chi_h;
    require(capacity > q.delta,
            "cobordism formula requires lambda^2 + c(X) + 4 chi_h(X) > delta");
    require(degree_admissible(x, q.w, q.delta),
            "cobordism formula requires delta = -w^2 - 3 chi_h mod 4");
    require(q.delta >= 2 * q.m, "cobordism formula requires delta - 2m >= 0");
}

}  // namespace

Rat witten_invariant(const FourManifold& x, const InvariantQuery& q) {
    check_query_shape(x, q);
    require(x.has_simple_type(), "Witten evaluator requires Seiberg-Witten simple type");
    if (!degree_admissible(x, q.w, q.delta))
        return 0;
    const auto cn = x.char_numbers();
    const unsigned d = q.delta - 2 * q.m;
    const Lattice& l = x.lattice();
    const Rat qh = l.qform(q.h);

    Rat total = 0;
    for (const Class& k : x.fundamental_domain()) {
        const int e = l.eps(q.w, k);
        Rat side = nu(k) * Rat(x.sw().value(k));
        if (e != 0)
            side = -side;
        const Rat kh = l.eval(k, q.h);
        for (unsigned kk = 0; 2 * kk <= d; ++kk) {
            const unsigned i = d - 2 * kk;
            Rat coef = Rat(factorial(d)) / (factorial(kk) * factorial(i));
            coef *= pow2(static_cast<long>(q.m) + 3 - cn.c - static_cast<long>(kk));
            total += side * coef * rat_pow(kh, i) * rat_pow(qh, kk);
        }
    }
    return total;
}

Rat cobordism_invariant(const FourManifold& x, const InvariantQuery& q, const Class& lam,
                        const CoeffTable& table) {
    check_query_shape(x, q);
    check_cobordism_hypotheses(x, q, lam);
    const auto cn = x.char_numbers();
    require(table.chi_h() == cn.chi_h, "coefficient table chi_h does not match the manifold");
    require(table.c1sq() == cn.c1sq, "coefficient table c1sq does not match the manifold");
    require(table.lam_sq() == x.lattice().pair(lam, lam),
            "coefficient table lambda^2 does not match lambda");
    require(table.m() == q.m, "coefficient table m does not match the query");

    const unsigned d = q.delta - 2 * q.m;
    const Lattice& l = x.lattice();
    const Rat qh = l.qform(q.h);
    const Rat lh = l.eval(lam, q.h);

    Rat total = 0;
    for (const Class& k : x.fundamental_domain()) {
        const int e = l.eps(q.w, k);
        Rat side = nu(k) * Rat(x.sw().value(k));
        if (e != 0)
            side = -side;
        const Rat kh = l.eval(k, q.h);
        const Int xkl = l.pair(k, lam);
        for (unsigned kk = 0; 2 * kk <= d; ++kk)
            for (unsigned j = 0; j + 2 * kk <= d; ++j) {
                const unsigned i = d - j - 2 * kk;
                const Rat b = table.evaluate(i, j, kk, xkl);
                if (b == 0)
                    continue;
                total += side * b * rat_pow(kh, i) * rat_pow(lh, j) * rat_pow(qh, kk);
            }
    }
    return total;
}

Rat cobordism_invariant_blown(const FourManifold& x, const InvariantQuery& q, const Class& lam,
                              const CoeffTable& table) {
    check_query_shape(x, q);
    check_cobordism_hypotheses(x, q, lam);
    require(!x.contains_zero_class(), "blown cobordism evaluator requires 0 not in B(X)");
    const auto cn = x.char_numbers();
    require(table.chi_h() == cn.chi_h, "coefficient table chi_h does not match the manifold");
    require(table.c1sq() == cn.c1sq - 1,
            "blown cobordism evaluator requires the table at c1sq(X) - 1");
    require(table.lam_sq() == x.lattice().pair(lam, lam),
            "coefficient table lambda^2 does not match lambda");
    require(table.m() == q.m, "coefficient table m does not match the query");

    const unsigned d = q.delta - 2 * q.m;
    const Lattice& l = x.lattice();
    const Rat qh = l.qform(q.h);
    const Rat lh = l.eval(lam, q.h);

    Rat total = 0;
    for (const Class& k : x.fundamental_domain()) {
        const int e = l.eps(q.w, k);
        Rat side = Rat(x.sw().value(k));
        if (e != 0)
            side = -side;
        const Rat kh = l.eval(k, q.h);
        const Int xkl = l.pair(k, lam);
        for (unsigned kk = 0; 2 * kk <= d; ++kk)
            for (unsigned j = 0; j + 2 * kk <= d; ++j) {
                const unsigned i = d - j - 2 * kk;
                const Rat b = table.evaluate(i + 1, j, kk, xkl);
                if (b == 0)
                    continue;
                const Rat shift = Rat(Int(2) * (i + 1), Int(d + 1));
                total += side * shift * b * rat_pow(kh, i) * rat_pow(lh, j) * rat_pow(qh, kk);
            }
    }
    return total;
}

Rat scst_vanishing_sum(const FourManifold& x, const Class& w, unsigned j, unsigned u,
                       const HClass& h1, const HClass& h2) {
    const Lattice& l = x.lattice();
    require(l.is_characteristic(w), "scst vanishing sum requires characteristic w");
    require(!x.contains_zero_class(), "scst vanishing sum requires 0 not in B(X)");
    const long c = x.char_numbers().c;
    require(static_cast<long>(j) + u < c - 3, "scst vanishing sum requires j + u < c(X) - 3");
    require((static_cast<long>(j) + u - c) % 2 == 0,
            "scst vanishing sum requires j + u = c(X) mod 2");

    Rat total = 0;
    for (const Class& k : x.fundamental_domain()) {
        Rat term = Rat(x.sw().value(k));
        if (l.eps(w, k) != 0)
            term = -term;
        total += term * rat_pow(l.eval(k, h1), j) * rat_pow(l.eval(k, h2), u);
    }
    return total;
}

bool orientation_identity_check(const Lattice& l, const Class& w, const Class& lam, const Class& k) {
    require(l.is_characteristic(w - lam), "orientation identity requires w - lambda characteristic");
    require(l.is_characteristic(k), "orientation identity requires K characteristic");
    const Int wsq = l.pair(w, w);
    const Int sigma = Int(l.sigma());
    const Int lhs2 = 2 * wsq - sigma + l.pair(w - lam, k);
    const int lhs = parity(half(lhs2));
    const Int rhs2 = l.pair(lam, lam) + l.pair(lam, k);
    const int rhs = parity(Int(l.eps(w, k)) - half(rhs2));
    return lhs == rhs;
}

Int p_factor(const std::vector<Int>& wtilde_coords, const std::vector<unsigned>& i_coords) {
    if (wtilde_coords.size() != i_coords.size())
        throw precondition_error("p_factor: vector length mismatch");
    for (std::size_t u = 0; u < wtilde_coords.size(); ++u)
        if (parity(wtilde_coords[u] + Int(i_coords[u])) != 0)
            return 0;
    Int r = 1;
    r <<= static_cast<unsigned>(wtilde_coords.size());
    return r;
}

bool km_multiplicativity_check(const FourManifold& x, const Class& w, unsigned delta, unsigned m,
                               const HClass& h) {
    require(x.has_simple_type(), "KM simple type check requires Seiberg-Witten simple type");
    const Rat low = witten_invariant(x, InvariantQuery{w, delta, m, h});
    const Rat high = witten_invariant(x, InvariantQuery{w, delta + 4, m + 2, h});
    return high == 4 * low;
}

bool blowup_consistency_check(const FourManifold& x, const InvariantQuery& q) {
    check_query_shape(x, q);
    require(x.has_simple_type(), "blow-up consistency check requires Seiberg-Witten simple type");
    require(degree_admissible(x, q.w, q.delta),
            "blow-up consistency check requires an admissible degree");

    const Rat lhs = witten_invariant(x, q);

    const FourManifold blown = x.blow_up();
    const Lattice& lb = blown.lattice();
    const std::size_t r = lb.rank();
    Class wt = q.w;
    wt.c.push_back(1);
    HClass ht = q.h;
    ht.c.emplace_back(0);
    HClass exc = HClass::zero(r);
    exc.c[r - 1] = 1;

    const auto cnb = blown.char_numbers();
    const unsigned d1 = q.delta + 1 - 2 * q.m;
    Rat rhs = 0;
    for (const Class& k : blown.fundamental_domain()) {
        const int e = lb.eps(wt, k);
        Rat side = nu(k) * Rat(blown.sw().value(k));
        if (e != 0)
            side = -side;
        for (unsigned kk = 0; 2 * kk <= d1; ++kk) {
            const unsigned i = d1 - 2 * kk;
            Rat coef = Rat(factorial(d1)) / (factorial(kk) * factorial(i));
            coef *= pow2(static_cast<long>(q.m) + 3 - cnb.c - static_cast<long>(kk));
            const Rat slot = polarize_slot_product(lb, {{k, i}}, kk, exc, ht);
            rhs += side * coef * slot;
        }
    }
    return lhs == rhs;
}

MainTheoremReport main_theorem_check(const FourManifold& x, const InvariantQuery& q,
                                     const Class& lam, const std::vector<std::uint64_t>& seeds) {
    check_query_shape(x, q);
    const auto cn = x.char_numbers();
    const Lattice& l = x.lattice();
    require(cn.c >= 5, "main theorem check requires c(X) >= 5");
    require(!x.contains_zero_class(), "main theorem check requires 0 not in B(X)");
    bool odd = false;
    for (std::size_t i = 0; i < l.rank(); ++i)
        odd = odd || parity(l.gram()[i][i]) != 0;
    require(odd, "main theorem check requires an odd intersection form");
    require(x.has_simple_type(), "main theorem check requires Seiberg-Witten simple type");
    require(l.is_characteristic(q.w), "main theorem check requires characteristic w");
    require(degree_admissible(x, q.w, q.delta), "main theorem check requires an admissible degree");

    for (const auto& coord : lam.c)
        require(parity(coord) == 0, "main theorem check requires lambda divisible by 2");
    const Int lam_sq = l.pair(lam, lam);
    require(lam_sq > 0, "main theorem check requires lambda^2 > 0");
    bool orthogonal_exists = false;
    for (const Class& k : x.basic_classes()) {
        const Int kl = l.pair(k, lam);
        require(kl % 4 == 0, "main theorem check requires K.lambda = 0 mod 4 for every basic class");
        orthogonal_exists = orthogonal_exists || kl == 0;
    }
    require(orthogonal_exists, "main theorem check requires a basic class orthogonal to lambda");
    require(lam_sq + cn.c + 4 * cn.chi_h > q.delta,
            "main theorem check requires lambda^2 + c(X) + 4 chi_h(X) > delta");

    MainTheoremReport report;
    report.scst = x.is_scst(q.w);
    report.witten = witten_invariant(x, q);
    report.all_equal = true;
    report.seed_independent = true;
    for (const std::uint64_t seed : seeds) {
        const CoeffTable table(cn.chi_h, cn.c1sq - 1, lam_sq, q.m, seed);
        SeedOutcome run;
        run.seed = seed;
        run.value = cobordism_invariant_blown(x, q, lam, table);
        run.equal = run.value == report.witten;
        report.all_equal = report.all_equal && run.equal;
        if (!report.runs.empty())
            report.seed_independent = report.seed_independent && run.value == report.runs.front().value;
        report.runs.push_back(std::move(run));
    }
    return report;
}

namespace {

struct Subspace {
    std::vector<HClass> basis;       // kernel_1, duals..., kernel_2
    std::vector<Poly> gen_linear;    // generator linear forms in t-coordinates
    Poly quad;                       // intersection form in t-coordinates
    Subspace() : quad(0) {}
};

// Builds a parametrized subspace on which the generator forms become
// coordinate functions t_1..t_g and the form restricts with a nonzero
// t_0^2 coefficient.
Subspace dual_subspace(const Lattice& l, const std::vector<Class>& gens,
                       const std::vector<HClass>& candidates) {
    const std::size_t g = gens.size();
    const std::size_t s = candidates.size();
    // pairing matrix of generators against candidate vectors
    std::vector<std::vector<Rat>> m(g, std::vector<Rat>(s));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < s; ++b)
            m[a][b] = l.eval(gens[a], candidates[b]);

    // solve M xi = e_a for each generator and collect a nullspace basis
    std::vector<std::vector<Rat>> aug(g, std::vector<Rat>(s + g, Rat(0)));
    for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = 0; b < s; ++b)
            aug[a][b] = m[a][b];
        aug[a][s + a] = 1;
    }
    // row reduce on the first s columns
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < s && row < g; ++col) {
        std::size_t p = row;
        while (p < g && aug[p][col] == 0)
            ++p;
        if (p == g)
            continue;
        std::swap(aug[row], aug[p]);
        const Rat piv = aug[row][col];
        for (auto& v : aug[row])
            v /= piv;
        for (std::size_t i = 0; i < g; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            const Rat f = aug[i][col];
            for (std::size_t jj = 0; jj < s + g; ++jj)
                aug[i][jj] -= f * aug[row][jj];
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() < g)
        throw precondition_error("identity fixture: generators are not independent on the chosen subspace");

    auto combine = [&](const std::vector<Rat>& xi) {
        HClass v = HClass::zero(l.rank());
        for (std::size_t b = 0; b < s; ++b)
            if (xi[b] != 0)
                v += xi[b] * candidates[b];
        return v;
    };

    // dual vectors: for target e_a read the particular solution off the rref
    std::vector<HClass> duals;
    for (std::size_t a = 0; a < g; ++a) {
        std::vector<Rat> xi(s, Rat(0));
        for (std::size_t rix = 0; rix < pivots.size(); ++rix)
            xi[pivots[rix]] = aug[rix][s + a];
        duals.push_back(combine(xi));
    }

    // nullspace basis from the free columns
    std::vector<bool> is_pivot(s, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<HClass> kernel;
    for (std::size_t fc = 0; fc < s; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<Rat> xi(s, Rat(0));
        xi[fc] = 1;
        for (std::size_t rix = 0; rix < pivots.size(); ++rix)
            xi[pivots[rix]] = -aug[rix][fc];
        kernel.push_back(combine(xi));
    }
    if (kernel.size() < 2)
        throw precondition_error("identity fixture: subspace kernel is too small");

    // put a vector with nonzero square first
    std::size_t lead = kernel.size();
    for (std::size_t i = 0; i < kernel.size(); ++i)
        if (l.qform(kernel[i]) != 0) {
            lead = i;
            break;
        }
    if (lead == kernel.size()) {
        for (std::size_t a = 0; a < kernel.size() && lead == kernel.size(); ++a)
            for (std::size_t b = a + 1; b < kernel.size(); ++b)
                if (l.bilinear(kernel[a], kernel[b]) != 0) {
                    kernel[a] += kernel[b];
                    lead = a;
                    break;
                }
    }
    if (lead == kernel.size())
        throw precondition_error("identity fixture: form vanishes on the generator kernel");
    std::swap(kernel[0], kernel[lead]);

    Subspace sub;
    sub.basis.push_back(kernel[0]);
    for (auto& d : duals)
        sub.basis.push_back(std::move(d));
    sub.basis.push_back(kernel[1]);

    const std::size_t nt = sub.basis.size();
    for (std::size_t a = 0; a < g; ++a) {
        Poly lin(nt);
        Mono mono(nt, 0);
        for (std::size_t t = 0; t < nt; ++t) {
            const Rat v = l.eval(gens[a], sub.basis[t]);
            if (v != 0) {
                mono[t] = 1;
                lin.add_term(mono, v);
                mono[t] = 0;
            }
        }
        sub.gen_linear.push_back(std::move(lin));
    }
    Poly quad(nt);
    Mono mono(nt, 0);
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t b = a; b < nt; ++b) {
            const Rat v = l.bilinear(sub.basis[a], sub.basis[b]);
            if (v == 0)
                continue;
            mono[a] += 1;
            mono[b] += 1;
            quad.add_term(mono, a == b ? v : 2 * v);
            mono[a] = 0;
            mono[b] = 0;
        }
    sub.quad = std::move(quad);
    return sub;
}

}  // namespace

bool verify_blownup_identity(int q, int n, int p, unsigned j, unsigned k, unsigned m,
                             const CoeffTable& table) {
    require(q >= 2, "blown-up identity requires q >= 2");
    require(n >= 2, "blown-up identity requires n >= 2");
    require(p >= 1 && p <= n - 1, "blown-up identity requires 1 <= p <= n - 1");
    require(table.chi_h() == q, "blown-up identity: table chi_h must equal q");
    require(table.c1sq() == q - n - 3, "blown-up identity: table c1sq must equal q - n - 3");
    require(table.m() == m, "blown-up identity: table m mismatch");

    const Int y = table.lam_sq();
    const long a_total = p + static_cast<long>(j) + 2L * k + 2L * m;
    require(y > Int(a_total) - 4 * q - n - 3,
            "blown-up identity requires lambda^2 > A - 4q - n - 3");
    require((y - (Int(a_total) - (n + 3))) % 4 == 0,
            "blown-up identity requires lambda^2 = A - (n+3) mod 4");

    const Int x = parity(y) == 0 ? Int(0) : Int(1);  // base point, same parity as lambda^2

    const ExampleManifold ex = example_xqn(q, n);
    const Lattice& l = ex.x.lattice();
    const std::size_t r0 = static_cast<std::size_t>(11 * q + 1);
    const Class kcls = ex.names.at("K");
    std::vector<Class> exceptional;
    for (int u = 1; u <= n; ++u)
        exceptional.push_back(ex.names.at("e" + std::to_string(u)));

    Class k0 = kcls;
    for (const auto& e : exceptional)
        k0 += e;

    std::vector<Int> lam_coeffs(static_cast<std::size_t>(n), 0);
    lam_coeffs[0] = -(x + 2 * Int(n - p));
    for (int u = p + 1; u <= n; ++u)
        lam_coeffs[static_cast<std::size_t>(u - 1)] = 2;
    Int lam_sq_correction = 0;
    for (const auto& lu : lam_coeffs)
        lam_sq_correction += lu * lu;
    const Int y0 = half(y + lam_sq_correction);

    Class lam_tilde = Class::zero(l.rank());
    lam_tilde.c[0] = y0;  // y0 f1 + f2 on the hyperbolic block
    lam_tilde.c[1] = 1;
    for (int u = 1; u <= n; ++u)
        lam_tilde += lam_coeffs[static_cast<std::size_t>(u - 1)] * exceptional[static_cast<std::size_t>(u - 1)];

    if (l.pair(lam_tilde, lam_tilde) != y || l.pair(k0, lam_tilde) != x)
        throw invariant_error("blown-up identity: fixture construction is inconsistent");

    const Class w_tilde = lam_tilde - k0;
    std::vector<Int> w_coeffs(static_cast<std::size_t>(n));
    for (int u = 1; u <= n; ++u)
        w_coeffs[static_cast<std::size_t>(u - 1)] = lam_coeffs[static_cast<std::size_t>(u - 1)] - 1;
    const int w1_parity = parity(w_coeffs[0]);

    // generators: K+e1, K-e1, e2..en, lambda-tilde
    std::vector<Class> gens;
    gens.push_back(kcls + exceptional[0]);
    gens.push_back(kcls - exceptional[0]);
    for (int u = 2; u <= n; ++u)
        gens.push_back(exceptional[static_cast<std::size_t>(u - 1)]);
    gens.push_back(lam_tilde);
    require(check_algebraic_independence(l, gens, true),
            "blown-up identity: generator set is not algebraically independent");

    // candidate vectors spanning a subspace that separates the generators
    std::vector<HClass> candidates;
    candidates.push_back(to_h(Class::unit(l.rank(), 0)));  // f1
    candidates.push_back(to_h(Class::unit(l.rank(), 1)));  // f2
    candidates.push_back(to_h(-Class::unit(l.rank(), 2 * static_cast<std::size_t>(q))));  // meets K once
    for (int u = 1; u <= n; ++u)
        candidates.push_back(to_h(exceptional[static_cast<std::size_t>(u - 1)]));
    candidates.push_back(to_h(Class::unit(l.rank(), 2) - Class::unit(l.rank(), 3)));  // kernel direction

    const Subspace sub = dual_subspace(l, gens, candidates);
    const std::size_t nt = sub.basis.size();
    const std::size_t num_linear = gens.size();

    const unsigned d = static_cast<unsigned>(a_total) - 2 * m;

    // row evaluations as sequences, for the difference-operator routes
    auto table_row = [&table](unsigned i, unsigned jj, unsigned kk) {
        return SeqFn::everywhere([&table, i, jj, kk](long long z) {
            return table.evaluate(i, jj, kk, Int(z));
        });
    };

    const Poly& qt = sub.quad;
    const Poly& lin_plus = sub.gen_linear[0];
    const Poly& lin_minus = sub.gen_linear[1];
    const Poly& lin_lam = sub.gen_linear[num_linear - 1];

    // left side: normalized Witten sum over i_1..i_n, k' with sum + 2k' = d
    Poly lhs(nt), rhs(nt);
    std::vector<unsigned> iu(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, unsigned, const std::function<void()>&)> comps =
        [&](std::size_t pos, unsigned remaining, const std::function<void()>& emit) {
            if (pos + 1 == iu.size()) {
                iu[pos] = remaining;
                emit();
                iu[pos] = 0;
                return;
            }
            for (unsigned v = 0; v <= remaining; ++v) {
                iu[pos] = v;
                comps(pos + 1, remaining - v, emit);
            }
            iu[pos] = 0;
        };

    std::vector<Int> w_rest(w_coeffs.begin() + 1, w_coeffs.end());
    const long long xll = static_cast<long long>(x);
    std::vector<long long> steps;  // 2 lambda_u for u = 2..n
    for (int u = 2; u <= n; ++u)
        steps.push_back(2 * static_cast<long long>(lam_coeffs[static_cast<std::size_t>(u - 1)]));

    for (unsigned kk = 0; 2 * kk <= d; ++kk) {
        const unsigned rem = d - 2 * kk;
        // left side has no lambda factor
        comps(0, rem, [&]() {
            std::vector<unsigned> i_rest(iu.begin() + 1, iu.end());
            const Int pf = p_factor(w_rest, i_rest);
            if (pf == 0)
                return;
            Rat coef = Rat(factorial(d)) * pf;
            coef *= pow2(static_cast<long>(m) - static_cast<long>(kk) - n);
            coef /= factorial(kk);
            for (unsigned v : iu)
                coef /= factorial(v);
            Poly term = lin_plus.pow(iu[0]);
            Poly minus_part = lin_minus.pow(iu[0]);
            if (w1_parity != 0)
                term -= minus_part;
            else
                term += minus_part;
            for (int u = 2; u <= n; ++u)
                if (iu[static_cast<std::size_t>(u - 1)] > 0)
                    term = term * sub.gen_linear[static_cast<std::size_t>(u)].pow(iu[static_cast<std::size_t>(u - 1)]);
            if (kk > 0)
                term = term * qt.pow(kk);
            term *= coef;
            lhs += term;
        });
        // right side carries the lambda power and the difference operators
        for (unsigned jj = 0; jj + 2 * kk <= d; ++jj) {
            const unsigned rem2 = d - 2 * kk - jj;
            comps(0, rem2, [&]() {
                const unsigned i_sum = rem2;
                std::vector<int> qpar;
                for (int u = 2; u <= n; ++u)
                    qpar.push_back(static_cast<int>((iu[static_cast<std::size_t>(u - 1)] +
                                                     static_cast<unsigned>(parity(w_coeffs[static_cast<std::size_t>(u - 1)]))) %
                                                    2));
                const SeqFn row = table_row(i_sum, jj, kk);
                const Rat d_plus = permutation_sum(row, xll, steps, qpar);
                const Rat d_minus =
                    permutation_sum(row, xll + 2 * static_cast<long long>(lam_coeffs[0]), steps, qpar);
                if (d_plus == 0 && d_minus == 0)
                    return;
                Rat multi = Rat(factorial(i_sum));
                for (unsigned v : iu)
                    multi /= factorial(v);
                Poly bracket = d_plus * lin_plus.pow(iu[0]);
                Poly minus_part = d_minus * lin_minus.pow(iu[0]);
                if (w1_parity != 0)
                    bracket -= minus_part;
                else
                    bracket += minus_part;
                if (bracket.is_zero())
                    return;
                Poly term = bracket;
                for (int u = 2; u <= n; ++u)
                    if (iu[static_cast<std::size_t>(u - 1)] > 0)
                        term = term * sub.gen_linear[static_cast<std::size_t>(u)].pow(iu[static_cast<std::size_t>(u - 1)]);
                if (jj > 0)
                    term = term * lin_lam.pow(jj);
                if (kk > 0)
                    term = term * qt.pow(kk);
                term *= multi;
                rhs += term;
            });
        }
    }

    const auto lhs_coeffs = decompose_in_coordinate_algebra(lhs, num_linear, qt);
    const auto rhs_coeffs = decompose_in_coordinate_algebra(rhs, num_linear, qt);

    // the distinguished monomial: <K+e1> once, e2..ep once, lambda^j, Q^k
    std::vector<unsigned> key(num_linear + 1, 0);
    key[0] = k;
    key[1] = 1;
    for (int u = 2; u <= p; ++u)
        key[static_cast<std::size_t>(u + 1)] = 1;
    key[num_linear] = j;

    const auto read = [](const std::map<std::vector<unsigned>, Rat>& mp,
                         const std::vector<unsigned>& kk2) {
        auto it = mp.find(kk2);
        return it == mp.end() ? Rat(0) : it->second;
    };
    const Rat lhs_c = read(lhs_coeffs, key);
    const Rat rhs_c = read(rhs_coeffs, key);

    // independent route for the right side coefficient
    Rat direct = Rat(factorial(static_cast<unsigned>(p))) * pow2(p - 1);
    direct *= binomial_difference(table_row(static_cast<unsigned>(p), j, k), xll, 4,
                                  static_cast<unsigned>(n - p));
    if (rhs_c != direct)
        throw invariant_error("blown-up identity: extracted coefficient disagrees with the direct route");

    return lhs_c == 0 && rhs_c == 0;
}

}  // namespace donsw
