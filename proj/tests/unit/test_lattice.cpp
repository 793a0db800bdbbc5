#include "doctest.h"

#include <random>
#include <set>
#include <tuple>

#include "cubicmahler/fieldgen.hpp"
#include "cubicmahler/lattice.hpp"

using namespace cubicmahler;
using lattice::MatrixX;
using numerics::Interval;

namespace {

MatrixX<Interval> diagonal(long a, long b, long c)
{
    MatrixX<Interval> m = MatrixX<Interval>::Constant(3, 3, Interval(0L));
    m(0, 0) = Interval(a);
    m(1, 1) = Interval(b);
    m(2, 2) = Interval(c);
    return m;
}

using Triple = std::tuple<long long, long long, long long>;

std::vector<Triple> collect(const lattice::SearchBox& box)
{
    std::vector<Triple> out;
    lattice::enumerate_box(box, [&](long long a, long long b, long long c) { out.emplace_back(a, b, c); });
    return out;
}

lattice::SearchBox box_of(long a, long b, long c)
{
    lattice::SearchBox box;
    box.a_max = a;
    box.b_max = b;
    box.c_max = c;
    return box;
}

}  // namespace

TEST_SUITE("lattice")
{
    TEST_CASE("orthogonal rows are left alone")
    {
        MatrixX<BigRat> m(3, 3);
        m << 2, 0, 0, 0, 3, 0, 0, 0, 5;
        const auto gs = lattice::gram_schmidt(m);
        CHECK(gs.star == m);
        CHECK(gs.mu == MatrixX<BigRat>::Identity(3, 3));
        CHECK(gs.norm2 == std::vector<BigRat>{4, 9, 25});
    }

    TEST_CASE("two-vector orthogonalization")
    {
        MatrixX<BigRat> m(2, 3);
        m << 1, 1, 0, 1, 0, 0;
        const auto gs = lattice::gram_schmidt(m);
        CHECK(gs.star(1, 0) == BigRat(1, 2));
        CHECK(gs.star(1, 1) == BigRat(-1, 2));
        CHECK(gs.star(1, 2) == 0);
        CHECK(gs.mu(1, 0) == BigRat(1, 2));
    }

    TEST_CASE("dependent rows are degenerate")
    {
        MatrixX<BigRat> m(2, 2);
        m << 1, 2, 2, 4;
        CHECK_THROWS_AS(lattice::gram_schmidt(m), lattice::DegenerateBasisError);
    }

    TEST_CASE("LLL swaps a long first vector")
    {
        MatrixX<BigInt> m(2, 2);
        m << 0, 3, 1, 0;
        const auto r = lattice::lll_reduce(m);
        MatrixX<BigRat> expect(2, 2);
        expect << 1, 0, 0, 3;
        CHECK(r.basis == expect);
        CHECK(r.swaps == 1);
        CHECK(lattice::is_lll_reduced(r.gs));
    }

    TEST_CASE("reduced orthogonal basis stays put")
    {
        MatrixX<BigInt> m(3, 3);
        m << 1, 0, 0, 0, 2, 0, 0, 0, 3;
        const auto r = lattice::lll_reduce(m);
        CHECK(r.basis == m.cast<BigRat>());
        CHECK(r.swaps == 0);
    }

    TEST_CASE("random integer bases reduce to equivalent reduced bases")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> e(-50, 50);
        for (int t = 0; t < 100; ++t) {
            MatrixX<BigInt> m(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = e(rng);
            if (sgn(BigInt(m.cast<BigRat>().determinant().get_num())) == 0) continue;
            const auto r = lattice::lll_reduce(m);
            CHECK(r.basis == (r.transform * m).cast<BigRat>());
            CHECK(abs(BigRat(r.transform.cast<BigRat>().determinant())) == 1);
            CHECK(lattice::is_lll_reduced(r.gs));
        }
    }

    TEST_CASE("scaled-integer reduction of the x^3 - 5 lattice")
    {
        const CubicField K = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -5));
        const auto roots = embed::cubic_roots(K.defining_poly);
        lattice::LllConfig cfg;
        cfg.mode = lattice::LllMode::ScaledInt;
        cfg.scale_digits = 10;
        const auto red = lattice::reduce_minkowski_lattice(K, roots, cfg);
        CHECK(red.lovasz_certified);
        CHECK(red.mu_bound <= numerics::Dyadic(1).ldexp(-1));
        CHECK(abs(BigRat(red.basis.transform.cast<BigRat>().determinant())) == 1);
    }

    TEST_CASE("coefficient bounds for an orthonormal basis")
    {
        const auto gs = lattice::gram_schmidt(diagonal(1, 1, 1));
        const auto box = lattice::coefficient_bounds(gs, Interval(2L), 3);
        CHECK(box.c_max == 3);
        CHECK(box.b_max == 5);
        CHECK(box.a_max == 7);
    }

    TEST_CASE("a long last vector forces the last coordinate to zero")
    {
        const auto gs = lattice::gram_schmidt(diagonal(1, 1, 1000));
        const auto box = lattice::coefficient_bounds(gs, Interval(2L), 3);
        CHECK(box.c_max == 0);
        CHECK(box.b_max == 3);
    }

    TEST_CASE("a small bound gives the empty box")
    {
        const auto gs = lattice::gram_schmidt(diagonal(10, 10, 10));
        const auto box = lattice::coefficient_bounds(gs, Interval(1L), 3);
        CHECK(box.a_max == 0);
        CHECK(box.b_max == 0);
        CHECK(box.c_max == 0);
        CHECK(collect(box).empty());
    }

    TEST_CASE("box enumeration with sign canonicalization")
    {
        CHECK(collect(box_of(1, 0, 0)) == std::vector<Triple>{{1, 0, 0}});
        const auto four = collect(box_of(1, 1, 0));
        CHECK(std::set<Triple>(four.begin(), four.end()) == std::set<Triple>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}});
        CHECK(four.size() == 4);
        const auto big = box_of(3, 5, 3);
        CHECK(lattice::box_size(big) == 269);
        const auto all = collect(big);
        CHECK(all.size() == 269);
        CHECK(std::set<Triple>(all.begin(), all.end()).size() == 269);
    }

    TEST_CASE("box and ball enumeration agree with a filtered box scan")
    {
        const long rows[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
        MatrixX<Interval> m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = Interval(rows[i][j]);
        const auto gs = lattice::gram_schmidt(m);
        const auto box = box_of(6, 5, 4);
        const numerics::Dyadic r2(40);
        std::set<Triple> in_ball;
        lattice::enumerate_box_in_ball(box, gs, [&] { return r2; }, -4, 4,
                                       [&](long long a, long long b, long long c) { in_ball.emplace(a, b, c); });
        std::set<Triple> expect;
        lattice::enumerate_box(box, [&](long long a, long long b, long long c) {
            long long n2 = 0;
            for (int j = 0; j < 3; ++j) {
                const long long v = a * rows[0][j] + b * rows[1][j] + c * rows[2][j];
                n2 += v * v;
            }
            if (n2 <= 40) expect.emplace(a, b, c);
        });
        CHECK(!expect.empty());
        // the ball scan may include a few boundary points, never miss one
        for (const auto& t : expect) CHECK(in_ball.count(t) == 1);
    }
}
