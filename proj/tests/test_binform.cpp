#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "coble/binform.hpp"
#include "coble/error.hpp"

using coble::binary_form;
using coble::mobius_map;
using coble::Rat;

namespace {

binary_form form(int degree, std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int v : coeffs) c.emplace_back(v);
    return binary_form(degree, std::move(c));
}

// (u - r v) as a factor
binary_form linear_root(int r) { return form(1, {1, -r}); }

binary_form random_quadratic(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    while (true) {
        binary_form f = form(2, {d(rng), d(rng), d(rng)});
        if (f.is_zero()) continue;
        Rat disc = f[1] * f[1] - Rat(4) * f[0] * f[2];
        if (disc != 0) return f;
    }
}

mobius_map inverse_map(const mobius_map& t) {
    return coble::make_mobius(t.d, -t.b, -t.c, t.a);
}

} // namespace

TEST_CASE("form arithmetic follows the coefficient convention") {
    binary_form f = form(2, {1, 0, -1});
    CHECK(f.degree() == 2);
    CHECK(coble::evaluate(f, Rat(3), Rat(1)) == 8);
    CHECK(coble::evaluate(f, Rat(1), Rat(1)) == 0);

    binary_form g = form(1, {2, 1});
    binary_form prod = f * g;
    CHECK(prod.degree() == 3);
    CHECK(prod == form(3, {2, 1, -2, -1}));
    CHECK(f + f == f * Rat(2));
    CHECK((f - f).is_zero());

    CHECK_THROWS_AS(form(2, {1, 2}), coble::error);
    CHECK_THROWS_AS(f + g, coble::error);
}

TEST_CASE("derivatives and the Euler relation") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = 1 + trial % 6;
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
        binary_form f(deg, c);
        if (f.is_zero()) continue;
        binary_form euler = coble::derivative_u(f) * form(1, {1, 0}) +
                            coble::derivative_v(f) * form(1, {0, 1});
        CHECK(euler == f * Rat(deg));
    }
}

TEST_CASE("valuations count roots at the coordinate points") {
    binary_form f = form(5, {0, 0, 1, 4, 0, 0});
    CHECK(coble::v_valuation(f) == 2);
    CHECK(coble::u_valuation(f) == 2);
    CHECK(coble::v_valuation(binary_form::zero(3)) == 4);
}

TEST_CASE("normalization clears denominators and fixes the sign") {
    binary_form f(2, {Rat(-1, 2), Rat(0), Rat(3, 4)});
    binary_form n = coble::normalize_form(f);
    CHECK(n == form(2, {2, 0, -3}));
    CHECK(coble::proportional(f, n));
    CHECK_FALSE(coble::proportional(f, form(2, {2, 0, 3})));
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    binary_form f = linear_root(1) * linear_root(2);
    binary_form g = linear_root(3) * linear_root(4);
    // product of root differences for monic split quadratics
    CHECK(coble::resultant(f, g) == Rat((1 - 3) * (1 - 4) * (2 - 3) * (2 - 4)));
    CHECK(coble::resultant(f, linear_root(2) * linear_root(5)) == 0);

    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        binary_form a = random_quadratic(rng);
        binary_form b = random_quadratic(rng);
        binary_form c = random_quadratic(rng);
        CHECK(coble::resultant(a, b * c) == coble::resultant(a, b) * coble::resultant(a, c));
        CHECK(coble::resultant(a, b) == coble::resultant(b, a));
        CHECK((coble::resultant(a, b) == 0) == (coble::gcd_form(a, b).degree() > 0));
    }
}

TEST_CASE("gcd extracts the common factor including coordinate roots") {
    binary_form f = linear_root(1) * linear_root(-1) * linear_root(2);
    binary_form g = linear_root(1) * linear_root(3);
    CHECK(coble::gcd_form(f, g) == linear_root(1));

    binary_form u2v = form(3, {0, 1, 0, 0});
    binary_form uv2 = form(3, {0, 0, 1, 0});
    CHECK(coble::gcd_form(u2v, uv2) == form(2, {0, 1, 0}));

    CHECK(coble::gcd_form(f, binary_form::zero(3)) == coble::normalize_form(f));

    binary_form scaled = f * Rat(7, 3);
    CHECK(coble::gcd_form(scaled, f * Rat(-2)) == coble::normalize_form(f));
}

TEST_CASE("divisibility testing matches explicit factorizations") {
    binary_form f = linear_root(2) * linear_root(3) * linear_root(3);
    CHECK(coble::form_divides(linear_root(3), f));
    CHECK(coble::form_divides(linear_root(3) * linear_root(3), f));
    CHECK_FALSE(coble::form_divides(linear_root(4), f));
    CHECK_FALSE(coble::form_divides(linear_root(2) * linear_root(2), f));
    CHECK(coble::form_divides(form(1, {0, 1}), form(2, {0, 1, 0})));
    CHECK_FALSE(coble::is_square_free(f));
    CHECK(coble::is_square_free(linear_root(2) * linear_root(3)));
    CHECK_FALSE(coble::is_square_free(form(2, {0, 0, 1})));
}

TEST_CASE("the Jacobian obeys the product rule and is alternating") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        binary_form f = random_quadratic(rng);
        binary_form g = random_quadratic(rng);
        binary_form h = random_quadratic(rng);
        CHECK(coble::jacobian(f * g, h) ==
              coble::jacobian(f, h) * g + coble::jacobian(g, h) * f);
        CHECK(coble::jacobian(f, g) == -coble::jacobian(g, f));
        CHECK(coble::jacobian(f, f).is_zero());
    }
    CHECK(coble::jacobian(form(2, {1, 0, 0}), form(2, {0, 0, 1})) == form(2, {0, 4, 0}));
}

TEST_CASE("mobius maps are stored projectively normalized") {
    mobius_map t = coble::make_mobius(Rat(2), Rat(0), Rat(0), Rat(2));
    CHECK(t.a == 1);
    CHECK(t.d == 1);
    CHECK(coble::is_scalar(t));

    mobius_map half = coble::make_mobius(Rat(1, 2), Rat(0), Rat(0), Rat(-1, 3));
    CHECK(half.a == 3);
    CHECK(half.d == -2);

    mobius_map s = coble::make_mobius(Rat(-1), Rat(0), Rat(0), Rat(1));
    CHECK(s.a == 1);
    CHECK(s.d == -1);

    CHECK_THROWS_AS(coble::make_mobius(Rat(1), Rat(2), Rat(2), Rat(4)), coble::error);
}

TEST_CASE("composition matches substitution") {
    std::mt19937 rng(24);
    std::uniform_int_distribution<int> d(-4, 4);
    auto random_map = [&] {
        while (true) {
            Rat a(d(rng)), b(d(rng)), c(d(rng)), dd(d(rng));
            if (a * dd - b * c != 0) return coble::make_mobius(a, b, c, dd);
        }
    };
    for (int trial = 0; trial < 20; ++trial) {
        mobius_map s = random_map();
        mobius_map t = random_map();
        mobius_map r = random_map();
        CHECK(coble::compose(coble::compose(s, t), r) == coble::compose(s, coble::compose(t, r)));

        // compose renormalizes the matrix, so the two sides agree only
        // projectively
        binary_form f = random_quadratic(rng);
        CHECK(coble::proportional(coble::substitute(coble::substitute(f, s), t),
                                  coble::substitute(f, coble::compose(s, t))));

        mobius_map inv = inverse_map(s);
        CHECK(coble::is_scalar(coble::compose(s, inv)));
        CHECK(coble::proportional(coble::substitute(coble::substitute(f, s), inv), f));
    }
}

TEST_CASE("fixed forms cut out the fixed points") {
    // u/v -> v/u fixes [1:1] and [1:-1]
    mobius_map swap = coble::make_mobius(Rat(0), Rat(1), Rat(1), Rat(0));
    binary_form fixed = coble::fixed_form(swap);
    CHECK(coble::proportional(fixed, form(2, {1, 0, -1})));
    CHECK(coble::is_involution(swap));
    CHECK_FALSE(coble::is_involution(coble::make_mobius(Rat(1), Rat(1), Rat(0), Rat(1))));
    CHECK_THROWS_WITH_AS(coble::fixed_form(coble::make_mobius(Rat(1), Rat(0), Rat(0), Rat(1))),
                         doctest::Contains("ScalarMap"), coble::error);
}

TEST_CASE("the pencil involution swaps the roots of every member") {
    binary_form f = form(2, {0, 1, 0});
    binary_form g = form(2, {1, 0, -1});
    mobius_map sigma = coble::pencil_involution(f, g);
    CHECK(coble::is_involution(sigma));
    CHECK(coble::proportional(coble::fixed_form(sigma), coble::jacobian(f, g)));

    std::mt19937 rng(25);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        int lam = d(rng), mu = d(rng);
        if (lam == 0 && mu == 0) continue;
        binary_form member = f * Rat(lam) + g * Rat(mu);
        if (member.is_zero()) continue;
        CHECK(coble::proportional(coble::substitute(member, sigma), member));
    }
}

TEST_CASE("pencil involutions exist for random base-point-free pencils") {
    std::mt19937 rng(26);
    int done = 0;
    while (done < 30) {
        binary_form f = random_quadratic(rng);
        binary_form g = random_quadratic(rng);
        if (coble::resultant(f, g) == 0) continue;
        if (coble::proportional(f, g)) continue;
        ++done;
        mobius_map sigma = coble::pencil_involution(f, g);
        CHECK(coble::is_involution(sigma));
        CHECK(coble::proportional(coble::substitute(f, sigma), f));
        CHECK(coble::proportional(coble::substitute(g, sigma), g));
        CHECK(coble::pencil_involution(g, f) == sigma);
    }
}

TEST_CASE("degenerate pencils are refused") {
    binary_form f = form(2, {0, 1, 0});
    CHECK_THROWS_WITH_AS(coble::pencil_involution(f, form(2, {1, 1, 0})),
                         doctest::Contains("DegeneratePencil"), coble::error);
    CHECK_THROWS_AS(coble::pencil_involution(f, f * Rat(2)), coble::error);
    CHECK_THROWS_AS(coble::pencil_involution(f, binary_form::zero(2)), coble::error);
    CHECK_THROWS_AS(coble::pencil_involution(form(1, {1, 0}), form(1, {0, 1})), coble::error);
}
