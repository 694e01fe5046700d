#include "donsw/lattice.hpp"

#include <doctest.h>

using namespace donsw;

namespace {

Class cls(std::vector<long> v) {
    Class k;
    for (long x : v)
        k.c.emplace_back(x);
    return k;
}

HClass hcls(std::vector<Rat> v) {
    return HClass(std::move(v));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("construction rejects bad grams") {
    CHECK_THROWS_AS(Lattice({{Int(2)}}), invariant_error);                    // det 2
    CHECK_THROWS_AS(Lattice({{Int(0), Int(1)}, {Int(2), Int(0)}}), invariant_error);  // asymmetric
    CHECK_THROWS_AS(Lattice({{Int(0)}}), invariant_error);                    // degenerate
    CHECK_NOTHROW(Lattice({{Int(-1)}}));
}

TEST_CASE("pairing") {
    const Lattice unit = diagonal_lattice({1});
    CHECK(unit.pair(cls({1}), cls({1})) == 1);

    const Lattice h = hyperbolic_lattice();
    CHECK(h.pair(cls({1, 0}), cls({0, 1})) == 1);

    const Lattice d = diagonal_lattice({1, -1});
    CHECK(d.pair(cls({3, 1}), cls({3, 1})) == 8);

    SUBCASE("symmetry on a mixed form") {
        const Lattice l = hyperbolic_lattice().direct_sum(diagonal_lattice({1, -1}));
        const Class a = cls({1, -2, 3, 0});
        const Class b = cls({0, 4, -1, 2});
        CHECK(l.pair(a, b) == l.pair(b, a));
    }

    CHECK_THROWS_AS(d.pair(cls({1}), cls({1, 0})), precondition_error);
}

TEST_CASE("evaluation against homology classes") {
    const Lattice d = diagonal_lattice({1, -1});
    CHECK(d.eval(cls({5, 7}), HClass::zero(2)) == 0);

    // Poincare duality is the identity on coordinates
    const Class k = cls({2, 3});
    const Class lam = cls({-1, 4});
    CHECK(d.eval(k, to_h(lam)) == Rat(d.pair(k, lam)));

    CHECK(d.eval(cls({1, 1}), hcls({Rat(1, 2), Rat(1, 3)})) == Rat(1, 6));
}

TEST_CASE("quadratic form") {
    const Lattice h = hyperbolic_lattice();
    CHECK(h.qform(HClass::zero(2)) == 0);
    CHECK(h.qform(hcls({Rat(1), Rat(1)})) == 2);

    const Lattice d = diagonal_lattice({1, 1, -1});
    CHECK(d.qform(hcls({Rat(1), Rat(1), Rat(1)})) == 1);

    SUBCASE("bilinear polarization") {
        const HClass a = hcls({Rat(1, 2), Rat(3), Rat(-1)});
        const HClass b = hcls({Rat(2), Rat(0), Rat(5, 2)});
        CHECK(2 * d.bilinear(a, b) == d.qform(a + b) - d.qform(a) - d.qform(b));
    }
}

TEST_CASE("characteristic test") {
    const Lattice d = diagonal_lattice({1, -1});
    CHECK(d.is_characteristic(cls({1, 1})));
    CHECK_FALSE(d.is_characteristic(cls({2, 1})));

    const Lattice h = hyperbolic_lattice();
    CHECK(h.is_characteristic(cls({0, 0})));  // even form
    CHECK_FALSE(h.is_characteristic(cls({1, 0})));
}

TEST_CASE("signature") {
    CHECK(diagonal_lattice({1, 1, 1, -1}).signature() == std::pair<int, int>{3, 1});
    CHECK(hyperbolic_lattice().signature() == std::pair<int, int>{1, 1});
    const Lattice mixed = hyperbolic_lattice().direct_sum(diagonal_lattice({1, -1, -1}));
    CHECK(mixed.signature() == std::pair<int, int>{2, 3});
    CHECK(mixed.sigma() == -1);

    CHECK_THROWS_AS(signature_of({{Int(0)}}), precondition_error);
    CHECK_THROWS_AS(signature_of({{Int(1), Int(0)}, {Int(0), Int(0)}}), precondition_error);
}

TEST_CASE("characteristic squares match the signature mod 8") {
    const Lattice l = hyperbolic_lattice().direct_sum(diagonal_lattice({1, 1, -1, -1, -1}));
    // characteristic classes: even on the hyperbolic block, odd on the diagonal
    for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= 2; ++b) {
            const Class kappa = cls({2 * a, 2 * b, 1, -1, 3, 1, 1});
            REQUIRE(l.is_characteristic(kappa));
            CHECK((l.pair(kappa, kappa) - l.sigma()) % 8 == 0);
        }
}

TEST_CASE("orientation parity eps") {
    const Lattice d2 = diagonal_lattice({1, -1});
    CHECK(d2.eps(cls({0, 0}), cls({1, 1})) == 0);
    CHECK(d2.eps(cls({1, 1}), cls({1, 1})) == 0);

    const Lattice d3 = diagonal_lattice({1, 1, -1});
    CHECK(d3.eps(cls({1, 0, 0}), cls({1, 1, 1})) == 1);

    CHECK_THROWS_AS(d3.eps(cls({1, 0, 0}), cls({0, 1, 0})), precondition_error);
}

TEST_CASE("orthogonal positive class") {
    const Lattice d4 = diagonal_lattice({1, 1, 1, -1});
    const Class k = cls({1, 1, 1, 1});
    const Class lam = d4.find_orthogonal_positive(k);
    CHECK(lam == cls({1, -1, 0, 0}));
    CHECK(d4.pair(lam, lam) == 2);
    CHECK(d4.pair(lam, k) == 0);

    const Lattice d3 = diagonal_lattice({1, 1, 1});
    const Class lam2 = d3.find_orthogonal_positive(cls({3, 1, 1}));
    CHECK(lam2 == cls({1, -3, 0}));
    CHECK(d3.pair(lam2, lam2) == 10);
    CHECK(d3.pair(lam2, cls({3, 1, 1})) == 0);

    CHECK_THROWS_AS(hyperbolic_lattice().find_orthogonal_positive(cls({0, 0})), precondition_error);
    CHECK_THROWS_AS(diagonal_lattice({1, -1, -1}).find_orthogonal_positive(cls({1, 1, 1})),
                    precondition_error);
    CHECK_THROWS_AS(d3.find_orthogonal_positive(cls({2, 1, 1})), precondition_error);
}

TEST_CASE("direct sums") {
    const Lattice a = diagonal_lattice({1}).direct_sum(diagonal_lattice({-1}));
    CHECK(a.gram() == diagonal_lattice({1, -1}).gram());

    const Lattice b = hyperbolic_lattice().direct_sum(diagonal_lattice({-1}));
    CHECK(b.rank() == 3);
    CHECK(b.sigma() == -1);

    CHECK(a.rank() == diagonal_lattice({1}).rank() + diagonal_lattice({-1}).rank());
}

TEST_CASE("e8 building block") {
    const Lattice e8 = e8_lattice(false);
    CHECK(e8.signature() == std::pair<int, int>{8, 0});
    CHECK(e8_lattice(true).signature() == std::pair<int, int>{0, 8});
    CHECK(e8.is_characteristic(Class::zero(8)));  // even form
}

}  // TEST_SUITE
