#include "donsw/manifold.hpp"

#include <algorithm>
#include <functional>

namespace donsw {

Rat nu(const Class& k) {
    return k.is_zero() ? Rat(1, 2) : Rat(1);
}

const Int& SWTable::value(const Class& k) const {
    auto it = entries_.find(k);
    if (it == entries_.end())
        throw precondition_error("SW table: class is not a basic class");
    return it->second;
}

FourManifold::FourManifold(Lattice lattice, SWTable sw)
    : l_(std::move(lattice)), sw_(std::move(sw)) {
    const auto [bp, bm] = l_.signature();
    if (bp < 3 || bp % 2 == 0)
        throw invariant_error("manifold: b+ must be >= 3 and odd (got " + std::to_string(bp) + ")");
    cn_.e = 2 + static_cast<long>(l_.rank());
    cn_.sigma = bp - bm;
    if ((cn_.e + cn_.sigma) % 4 != 0)
        throw invariant_error("manifold: chi_h = (e+sigma)/4 is not an integer");
    cn_.chi_h = (cn_.e + cn_.sigma) / 4;
    cn_.c1sq = 2 * cn_.e + 3 * cn_.sigma;
    cn_.c = cn_.chi_h - cn_.c1sq;

    const int conj_sign = (cn_.chi_h % 2 == 0) ? 1 : -1;
    for (const auto& [k, v] : sw_.entries()) {
        if (k.rank() != l_.rank())
            throw invariant_error("SW table: class rank mismatch");
        if (v == 0)
            throw invariant_error("SW table: zero value stored");
        if (!l_.is_characteristic(k))
            throw invariant_error("SW table: basic class is not characteristic");
        auto conj = sw_.entries().find(-k);
        if (conj == sw_.entries().end() || conj->second != Int(conj_sign) * v)
            throw invariant_error("SW table: conjugation symmetry violated");
    }
}

std::vector<Class> FourManifold::basic_classes() const {
    std::vector<Class> out;
    out.reserve(sw_.entries().size());
    for (const auto& [k, v] : sw_.entries())
        out.push_back(k);
    return out;
}

namespace {

bool first_nonzero_positive(const Class& k) {
    for (const auto& v : k.c) {
        if (v > 0)
            return true;
        if (v < 0)
            return false;
    }
    return true;  // zero class represents itself
}

}  // namespace

std::vector<Class> FourManifold::fundamental_domain() const {
    std::vector<Class> out;
    for (const auto& [k, v] : sw_.entries())
        if (first_nonzero_positive(k))
            out.push_back(k);
    return out;
}

bool FourManifold::has_simple_type() const {
    for (const auto& [k, v] : sw_.entries())
        if (l_.pair(k, k) != cn_.c1sq)
            return false;
    return true;
}

FourManifold FourManifold::blow_up() const {
    if (!has_simple_type())
        throw precondition_error("blow_up: manifold does not have Seiberg-Witten simple type");
    Lattice lat = l_.direct_sum(diagonal_lattice({-1}));
    std::map<Class, Int> entries;
    for (const auto& [k, v] : sw_.entries()) {
        Class up = k;
        up.c.push_back(1);
        Class down = k;
        down.c.push_back(-1);
        entries.emplace(std::move(up), v);
        entries.emplace(std::move(down), v);
    }
    return FourManifold(std::move(lat), SWTable(std::move(entries)));
}

bool FourManifold::is_scst(const Class& w) const {
    if (!l_.is_characteristic(w))
        throw precondition_error("is_scst: w is not characteristic");
    if (cn_.c <= 3)
        return true;

    // signed values and dual coordinate vectors gram*K per basic class
    std::vector<Int> sign_sw;
    std::vector<std::vector<Int>> dual;
    for (const auto& [k, v] : sw_.entries()) {
        const int e = l_.eps(w, k);
        sign_sw.push_back(e == 0 ? v : -v);
        std::vector<Int> d(l_.rank(), 0);
        for (std::size_t j = 0; j < l_.rank(); ++j)
            for (std::size_t i = 0; i < l_.rank(); ++i)
                d[j] += k.c[i] * l_.gram()[i][j];
        dual.push_back(std::move(d));
    }

    // only coordinates met by some basic class can carry a nonzero monomial
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < l_.rank(); ++j)
        for (const auto& d : dual)
            if (d[j] != 0) {
                support.push_back(j);
                break;
            }

    // sum over K of sign * prod (gram K)_j^{alpha_j} must vanish for every
    // multi-index alpha with |alpha| = i <= c-4
    std::vector<unsigned> alpha(support.size(), 0);
    std::function<bool(std::size_t, unsigned)> scan = [&](std::size_t pos, unsigned remaining) {
        if (pos + 1 == alpha.size() || remaining == 0) {
            if (!alpha.empty())
                alpha[pos] = remaining;
            Int sum = 0;
            for (std::size_t t = 0; t < dual.size(); ++t) {
                Int term = sign_sw[t];
                for (std::size_t s = 0; s < alpha.size() && term != 0; ++s)
                    for (unsigned rep = 0; rep < alpha[s]; ++rep)
                        term *= dual[t][support[s]];
                sum += term;
            }
            if (!alpha.empty())
                alpha[pos] = 0;
            return sum == 0;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            alpha[pos] = v;
            if (!scan(pos + 1, remaining - v)) {
                alpha[pos] = 0;
                return false;
            }
        }
        alpha[pos] = 0;
        return true;
    };

    for (long i = 0; i <= cn_.c - 4; ++i) {
        if (sw_.entries().empty())
            break;
        if (support.empty()) {
            // all dual vectors vanish, so only the i = 0 monomial can fail
            if (i == 0) {
                Int sum = 0;
                for (const auto& s : sign_sw)
                    sum += s;
                if (sum != 0)
                    return false;
            }
            continue;
        }
        if (!scan(0, static_cast<unsigned>(i)))
            return false;
    }
    return true;
}

ExampleManifold example_xq(int q) {
    if (q < 2)
        throw precondition_error("example_xq: q must be >= 2");
    const std::size_t pos = static_cast<std::size_t>(2 * q - 2);
    const std::size_t neg = static_cast<std::size_t>(9 * q + 1);
    std::vector<int> diag;
    diag.insert(diag.end(), pos, 1);
    diag.insert(diag.end(), neg, -1);
    Lattice lat = hyperbolic_lattice().direct_sum(diagonal_lattice(diag));
    const std::size_t rank = lat.rank();

    Class k = Class::zero(rank);
    for (std::size_t i = 0; i < pos; ++i)
        k.c[2 + i] = (i < static_cast<std::size_t>(q)) ? 3 : 1;
    for (std::size_t i = 0; i < neg; ++i)
        k.c[2 + pos + i] = 1;

    std::map<Class, Int> entries;
    entries.emplace(k, 1);
    entries.emplace(-k, q % 2 == 0 ? 1 : -1);

    ExampleManifold ex{FourManifold(std::move(lat), SWTable(std::move(entries))), {}};
    ex.names.emplace("f1", Class::unit(rank, 0));
    ex.names.emplace("f2", Class::unit(rank, 1));
    ex.names.emplace("K", std::move(k));
    return ex;
}

ExampleManifold example_xqn(int q, int n) {
    if (n < 0)
        throw precondition_error("example_xqn: n must be >= 0");
    ExampleManifold ex = example_xq(q);
    for (int u = 1; u <= n; ++u) {
        FourManifold blown = ex.x.blow_up();
        std::map<std::string, Class> names;
        for (auto& [name, cls] : ex.names) {
            Class extended = cls;
            extended.c.push_back(0);
            names.emplace(name, std::move(extended));
        }
        names.emplace("e" + std::to_string(u), Class::unit(blown.lattice().rank(), blown.lattice().rank() - 1));
        ex = ExampleManifold{std::move(blown), std::move(names)};
    }
    return ex;
}

}  // namespace donsw
