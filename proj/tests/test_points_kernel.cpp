#include <doctest.h>

#include <vector>

#include "planecomp/constructions.hpp"
#include "planecomp/equivalence.hpp"
#include "planecomp/error.hpp"
#include "planecomp/grid_eval.hpp"
#include "planecomp/points.hpp"
#include "test_support.hpp"

using namespace planecomp;

namespace {

const VarSet XY{"x", "y"};

MultiPoly P(const char* text, const Field& k) { return parse_poly(text, k, XY); }

std::uint32_t naive_eval(const std::vector<std::uint32_t>& coeffs, std::uint32_t t, std::uint32_t p) {
    std::uint64_t acc = 0, power = 1;
    for (std::uint32_t c : coeffs) {
        acc = (acc + c * power) % p;
        power = power * t % p;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint64_t brute_curve_points(const MultiPoly& f) {
    auto elems = enumerate_field(f.field());
    std::uint64_t n = 0;
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (f.evaluate(std::array<Scalar, 2>{x, y}).is_zero()) ++n;
    return n;
}

}  // namespace

TEST_CASE("grid_eval variants agree with direct evaluation") {
    testing::Rng rng(testing::seed() + 20);
    std::vector<GridKernel> kinds{GridKernel::Scalar, GridKernel::Avx2, GridKernel::Neon};
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 101u, 1009u, 2039u, 65521u, 2147483647u}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::size_t n = 1 + rng() % 14, m = rng() % 70;
            std::vector<std::uint32_t> coeffs(n), points(m);
            for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % p);
            for (auto& t : points) t = static_cast<std::uint32_t>(rng() % p);
            if (m > 0) points[0] = p - 1;
            std::vector<std::uint32_t> expect(m);
            for (std::size_t j = 0; j < m; ++j) expect[j] = naive_eval(coeffs, points[j], p);
            for (GridKernel k : kinds) {
                if (!grid_kernel_available(k, p)) continue;
                std::vector<std::uint32_t> out(m, 0xffffffffu);
                grid_eval_with(k, coeffs, points, out, p);
                INFO("kernel ", to_string(k), " p=", p);
                CHECK(out == expect);
            }
            std::vector<std::uint32_t> dispatched(m);
            grid_eval(coeffs, points, dispatched, p);
            CHECK(dispatched == expect);
        }
    }
    CHECK(grid_kernel_available(GridKernel::Scalar, 2147483647u));
    MESSAGE("dispatch for p=101: ", to_string(grid_kernel_for(101)));
}

TEST_CASE("count_points examples") {
    Field f5 = Field::prime(5);
    PointCounts a = count_points(P("x", f5));
    CHECK(a.curve_points == 5);
    CHECK(a.complement_points == 20);
    PointCounts b = count_points(P("x*y-1", f5));
    CHECK(b.curve_points == 4);
    CHECK(b.complement_points == 21);
    CHECK_THROWS_AS(count_points(P("x", Field::prime(103))), Error);
    CHECK_THROWS_AS(count_points(P("x", Field::rationals())), Error);
}

TEST_CASE("count_points agrees with brute force") {
    testing::Rng rng(testing::seed() + 21);
    for (std::uint64_t q : {2u, 3u, 7u, 13u}) {
        Field k = Field::prime(q);
        for (int trial = 0; trial < 10; ++trial) {
            MultiPoly f = testing::random_poly(rng, k, XY, 5, 6);
            if (f.is_zero()) continue;
            PointCounts c = count_points(f, 1 + trial % 3);
            CHECK(c.curve_points == brute_curve_points(f));
            CHECK(c.curve_points + c.complement_points == q * q);
        }
    }
}

TEST_CASE("passing certificates induce bijections on F_q points") {
    for (std::uint64_t q : {5u, 7u, 11u}) {
        Field k = Field::prime(q);
        auto s = [&](long long v) { return Scalar::from_int(k, v); };
        std::vector<CurvePair> pairs;
        pairs.push_back(degree7_pair(s(1), s(1), s(2), s(1)));
        pairs.push_back(sl2_pair({parse_poly("y", k, VarSet{"y"}), parse_poly("-1", k, VarSet{"y"}),
                                  parse_poly("1", k, VarSet{"y"}), parse_poly("0", k, VarSet{"y"})}));
        VarSet yv{"y"};
        pairs.push_back(psi_bm(parse_poly("y+1", k, yv), 3, 1));
        for (const auto& pair : pairs) {
            REQUIRE(pair.certificate.pass());
            BijectionReport r = check_bijection(pair.iso, pair.C, pair.D, 2);
            INFO(pair.construction, " q=", q, " ", r.reason);
            CHECK(r.bijective);
            CHECK(r.domain_points == r.codomain_points);
            CHECK(count_points(pair.C).complement_points == count_points(pair.D).complement_points);
        }
    }
}

TEST_CASE("check_bijection rejects a mismatched target") {
    Field k = Field::prime(5);
    auto s = [&](long long v) { return Scalar::from_int(k, v); };
    CurvePair pair = degree7_pair(s(1), s(1), s(2), s(1));
    BijectionReport r = check_bijection(pair.iso, pair.C, P("x", k));
    CHECK_FALSE(r.bijective);
    CHECK_FALSE(r.reason.empty());
}

TEST_CASE("results do not depend on the job count") {
    testing::Rng rng(testing::seed() + 22);
    Field k = Field::prime(7);
    VarSet tv{"t"};
    for (int trial = 0; trial < 6; ++trial) {
        MultiPoly f = testing::random_poly(rng, k, XY, 4, 5);
        if (f.is_zero()) continue;
        CHECK(count_points(f, 1).to_json().dump() == count_points(f, 5).to_json().dump());
    }
    for (int trial = 0; trial < 8; ++trial) {
        MultiPoly p, q;
        do {
            p = testing::random_poly(rng, k, tv, 3, 4);
        } while (p.total_degree() < 2 || is_squarefree(p, "t") != Squarefree::Yes);
        do {
            q = testing::random_poly(rng, k, tv, 3, 4);
        } while (q.total_degree() != p.total_degree() || is_squarefree(q, "t") != Squarefree::Yes);
        CHECK(spec_iso_test(p, q, 1).to_json().dump() == spec_iso_test(p, q, 6).to_json().dump());
    }
    auto s = [&](long long v) { return Scalar::from_int(k, v); };
    CurvePair pair = degree7_pair(s(1), s(1), s(2), s(1));
    CHECK(check_bijection(pair.iso, pair.C, pair.D, 1).to_json().dump() ==
          check_bijection(pair.iso, pair.C, pair.D, 7).to_json().dump());
}
