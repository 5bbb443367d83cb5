#include <doctest.h>

#include "planecomp/birational_map.hpp"
#include "planecomp/error.hpp"
#include "planecomp/verify.hpp"
#include "test_support.hpp"

using namespace planecomp;

namespace {

const Field F5 = Field::prime(5);
const VarSet XY{"x", "y"};
const VarSet Tv{"t"};

MultiPoly nonzero_poly(testing::Rng& rng, const Field& k, const VarSet& vars, int deg, int terms) {
    MultiPoly p;
    do {
        p = testing::random_poly(rng, k, vars, deg, terms);
    } while (p.is_zero());
    return p;
}

RationalFunction random_fraction(testing::Rng& rng, int deg) {
    return RationalFunction(testing::random_poly(rng, F5, XY, deg, 3), nonzero_poly(rng, F5, XY, deg, 3));
}

// A random small map whose components are fractions of degree <= 1 or 2.
BirationalMap random_map(testing::Rng& rng) {
    while (true) {
        std::vector<RationalFunction> comps{random_fraction(rng, 2), random_fraction(rng, 2)};
        if (!comps[0].is_zero() || !comps[1].is_zero()) return BirationalMap(comps);
    }
}

// Brute force: clear the denominator and try every n up to the bound.
std::optional<unsigned> member_oracle(const RationalFunction& h, const MultiPoly& f) {
    const MultiPoly& den = h.den();
    unsigned bound = static_cast<unsigned>(std::max(den.total_degree(), 0));
    for (unsigned n = 0; n <= bound; ++n)
        if (divexact(h.num() * f.pow(n), den)) return n;
    return std::nullopt;
}

}  // namespace

TEST_CASE("property: pullback contravariance") {
    testing::Rng rng(testing::seed() + 100);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        BirationalMap f = random_map(rng), g = random_map(rng);
        MultiPoly h = testing::random_poly(rng, F5, XY, 3, 4);
        try {
            RationalFunction lhs = pullback(compose(f, g), h);
            RationalFunction rhs = pullback(g, pullback(f, h));
            CHECK(lhs.equals(rhs));
            ++checked;
        } catch (const Error& e) {
            // a component of g may force a denominator of f to vanish
            CHECK(e.kind() == ErrorKind::DenominatorIdenticallyZero);
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("property: localization membership matches the oracle") {
    testing::Rng rng(testing::seed() + 101);
    int members = 0;
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly f = testing::random_poly(rng, F5, XY, 2, 3);
        if (f.is_constant()) f += MultiPoly::variable(F5, XY, "x");
        // denominators built from f, a second factor, or both
        MultiPoly other = nonzero_poly(rng, F5, XY, 1, 2);
        MultiPoly den = f.pow(rng() % 3);
        if (rng() % 3 == 0) den = den * other;
        MultiPoly num = testing::random_poly(rng, F5, XY, 6 - std::min(den.total_degree(), 6), 4);
        if (den.total_degree() > 6) continue;
        RationalFunction h(num, den);
        auto got = localization_member(h, f);
        auto want = member_oracle(h, f);
        INFO("h = (", format_poly(num), ")/(", format_poly(den), ")  f = ", format_poly(f));
        CHECK(got.has_value() == want.has_value());
        if (got && want) CHECK(*got == *want);
        if (got) ++members;
    }
    CHECK(members > 0);
}

TEST_CASE("property: divexact round trip") {
    testing::Rng rng(testing::seed() + 102);
    for (int trial = 0; trial < 500; ++trial) {
        const Field k = trial % 2 ? F5 : Field::rationals();
        MultiPoly f = testing::random_poly(rng, k, XY, 4, 5);
        MultiPoly g = nonzero_poly(rng, k, XY, 3, 4);
        auto q = divexact(f * g, g);
        REQUIRE(q);
        CHECK(*q == f);
    }
}

TEST_CASE("property: extended gcd Bezout replay") {
    testing::Rng rng(testing::seed() + 103);
    for (int trial = 0; trial < 500; ++trial) {
        const Field k = trial % 2 ? F5 : Field::rationals();
        MultiPoly common = testing::random_poly(rng, k, Tv, 2, 2);
        MultiPoly f = testing::random_poly(rng, k, Tv, 4, 4), g = testing::random_poly(rng, k, Tv, 4, 4);
        if (!common.is_zero()) {
            f = f * common;
            g = g * common;
        }
        if (f.is_zero() && g.is_zero()) continue;
        ExtGcd e = uni_ext_gcd(f, g, "t");
        CHECK(e.s * f + e.u * g == e.gcd);
        CHECK(e.gcd.leading_coeff().is_one());
        CHECK(divexact(f, e.gcd).has_value());
        CHECK(divexact(g, e.gcd).has_value());
    }
}

TEST_CASE("property: substitute respects ring operations") {
    testing::Rng rng(testing::seed() + 104);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<RationalFunction, 2> vals{random_fraction(rng, 1), random_fraction(rng, 1)};
        MultiPoly f = testing::random_poly(rng, F5, XY, 3, 4), g = testing::random_poly(rng, F5, XY, 3, 4);
        CHECK(substitute(f + g, vals).equals(substitute(f, vals) + substitute(g, vals)));
        CHECK(substitute(f * g, vals).equals(substitute(f, vals) * substitute(g, vals)));
    }
}

TEST_CASE("property: unit_form answers replay") {
    testing::Rng rng(testing::seed() + 105);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly f = nonzero_poly(rng, F5, XY, 2, 3);
        if (f.is_constant()) continue;
        Scalar lam = testing::random_scalar(rng, F5, true);
        long long n = static_cast<long long>(rng() % 5) - 2;
        MultiPoly c = MultiPoly::constant(F5, XY, lam);
        RationalFunction h = n >= 0 ? RationalFunction(c * f.pow(static_cast<unsigned>(n)))
                                    : RationalFunction(c, f.pow(static_cast<unsigned>(-n)));
        auto u = unit_form(h, f);
        REQUIRE(u);
        CHECK(u->first == lam);
        CHECK(u->second == n);
    }
}
