// Pascal-staircase matrices with prescribed zero pattern and arbitrary first
// column, the two-variable window sums built from them, and the evaluation
// identities they satisfy.

#include <doctest.h>

#include <supschur/schur.hpp>
#include <supschur/staircase.hpp>
#include <supschur/thom_a3.hpp>

#include "test_support.hpp"

using namespace supschur;
using namespace supschur::testing;

namespace {

Polynomial ypoly(unsigned exp) {
    return Polynomial::term(Monomial::of(Variable::named("y"), exp), 1);
}

/* v_k = y^{k-1}: the k-th entry of the geometric first column. */
Polynomial vsum(std::initializer_list<std::pair<unsigned, int>> terms) {
    Polynomial out;
    for (auto [k, coeff] : terms) out += ypoly(k - 1) * Int(coeff);
    return out;
}

}  // namespace

TEST_SUITE("staircase") {

TEST_CASE("support width and zero staircase") {
    CHECK(StaircaseMatrix::support_width(1) == 1);
    CHECK(StaircaseMatrix::support_width(2) == 1);
    CHECK(StaircaseMatrix::support_width(3) == 2);
    CHECK(StaircaseMatrix::support_width(7) == 4);
    StaircaseMatrix m = geometric_staircase(6);
    CHECK(m.at(2, 2) == Polynomial::zero());
    CHECK(m.at(4, 3) == Polynomial::zero());
    CHECK_THROWS_AS(m.at(7, 1), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 1), std::out_of_range);
}

TEST_CASE("geometric seed fixtures match the displayed symbolic matrix") {
    StaircaseMatrix m = geometric_staircase(7);
    for (unsigned s = 1; s <= 7; ++s) CHECK(m.at(s, 1) == ypoly(s - 1));
    CHECK(m.at(4, 2) == vsum({{3, 1}, {2, 1}}));
    CHECK(m.at(5, 2) == vsum({{4, 1}, {3, 1}, {2, 1}}));
    CHECK(m.at(5, 3) == vsum({{3, 1}, {2, 1}}));
    CHECK(m.at(6, 2) == vsum({{5, 1}, {4, 1}, {3, 1}, {2, 1}}));
    CHECK(m.at(6, 3) == vsum({{4, 1}, {3, 2}, {2, 2}}));
    CHECK(m.at(7, 2) == vsum({{6, 1}, {5, 1}, {4, 1}, {3, 1}, {2, 1}}));
    CHECK(m.at(7, 3) == vsum({{5, 1}, {4, 2}, {3, 3}, {2, 3}}));
    CHECK(m.at(7, 4) == vsum({{4, 1}, {3, 2}, {2, 2}}));
}

TEST_CASE("rational seed reproduces the coefficient table") {
    StaircaseMatrix m = f_staircase(12);
    ETable table(13);
    for (unsigned s = 1; s <= 12; ++s)
        for (unsigned t = 1; t <= StaircaseMatrix::support_width(s); ++t) {
            CAPTURE(s);
            CAPTURE(t);
            CHECK(m.at(s, t) == Polynomial::constant(table.at(s + 1, t - 1)));
        }
}

TEST_CASE("staircase recursion with the zero pattern") {
    StaircaseMatrix m = f_staircase(9);
    for (unsigned s = 2; s <= 9; ++s)
        for (unsigned t = 2; t <= StaircaseMatrix::support_width(s); ++t)
            CHECK(m.at(s, t) == m.at(s - 1, t - 1) + m.at(s - 1, t));
}

TEST_CASE("each entry is a column sum of the previous column") {
    StaircaseMatrix m = f_staircase(9);
    for (unsigned s = 1; s <= 9; ++s)
        for (unsigned t = 2; t <= StaircaseMatrix::support_width(s); ++t) {
            Polynomial sum;
            for (unsigned u = 2 * t - 2; u <= s - 1; ++u) sum += m.at(u, t - 1);
            CAPTURE(s);
            CAPTURE(t);
            CHECK(m.at(s, t) == sum);
        }
}

TEST_CASE("construction is linear in the seed, randomized") {
    auto g = rng_for(41);
    Variable y = Variable::named("y");
    for (unsigned k = 0; k < 200; ++k) {
        unsigned rows = static_cast<unsigned>(rand_between(g, 1, 7));
        std::vector<Polynomial> pa, pb, pc;
        Int alpha(rand_between(g, -4, 4)), beta(rand_between(g, -4, 4));
        for (unsigned s = 0; s < rows; ++s) {
            pa.push_back(Polynomial::term(Monomial::of(y, static_cast<std::uint32_t>(
                                                              rand_between(g, 0, 3))),
                                          Int(rand_between(g, -5, 5))));
            pb.push_back(Polynomial::constant(rand_between(g, -5, 5)));
            pc.push_back(pa.back() * alpha + pb.back() * beta);
        }
        StaircaseMatrix ma(Seed::explicit_entries(pa), rows);
        StaircaseMatrix mb(Seed::explicit_entries(pb), rows);
        StaircaseMatrix mc(Seed::explicit_entries(pc), rows);
        for (unsigned s = 1; s <= rows; ++s)
            for (unsigned t = 1; t <= StaircaseMatrix::support_width(s); ++t) {
                CAPTURE(k);
                CHECK(mc.at(s, t) == ma.at(s, t) * alpha + mb.at(s, t) * beta);
            }
    }
}

TEST_CASE("window sums over the geometric staircase collapse") {
    // W(0) = 1 and W(n, [x1+x2]) = (y-1) y^{n-1} S_n for n >= 1.
    Evaluator on_x2(x2_alphabet() - Alphabet());
    Polynomial y = ypoly(1);
    CHECK(w_function(0, Alphabet(), geometric_staircase(1)) == Polynomial::constant(1));
    for (unsigned n = 1; n <= 8; ++n) {
        StaircaseMatrix p = geometric_staircase(n + 1);
        Polynomial expect = (y - Polynomial::constant(1)) * ypoly(n - 1) * on_x2.complete(n);
        CAPTURE(n);
        CHECK(w_function(n, Alphabet::parse("x1+x2"), p) == expect);
    }
}

TEST_CASE("window sums over the doubled alphabet") {
    Evaluator on_x2(x2_alphabet() - Alphabet());
    Polynomial y = ypoly(1);
    Polynomial one = Polynomial::constant(1);

    CHECK(w_function(1, d_alphabet(), geometric_staircase(2)) ==
          (y - Polynomial::constant(3)) * on_x2.complete(1));

    Polynomial s2 = on_x2.complete(2);
    Polynomial s11 = on_x2.schur(Partition{1, 1});
    CHECK(w_function(2, d_alphabet(), geometric_staircase(3)) ==
          (y - one) * (y - Int(2) * one) * s2 -
              Int(2) * (y - Int(3) * one) * s11);

    for (unsigned n = 3; n <= 8; ++n) {
        StaircaseMatrix p = geometric_staircase(n + 1);
        Polynomial sn = on_x2.complete(n);
        Polynomial s1n = on_x2.schur(Partition{1, n - 1});
        Polynomial expect = ypoly(n - 2) * (y - one) * (y - Int(2) * one) * sn -
                            Int(2) * ypoly(n - 3) * (y - one) * (y - Int(2) * one) * s1n;
        CAPTURE(n);
        CHECK(w_function(n, d_alphabet(), p) == expect);
    }
}

TEST_CASE("window sum with extra base letters, exact form") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned nb = 0; nb <= 3; ++nb) {
            VerificationReport report = verify_corollary(n, b_alphabet(nb));
            CAPTURE(n);
            CAPTURE(nb);
            CHECK(report.all_pass());
            CHECK(report.checks.size() == (n > nb ? 2 : 1));
        }
}

TEST_CASE("window sum with random letters in the corollary, randomized") {
    auto g = rng_for(42);
    auto pool = variable_pool("cw", 2);
    for (unsigned k = 0; k < 50; ++k) {
        unsigned n = static_cast<unsigned>(rand_between(g, 1, 4));
        Alphabet b = random_alphabet(g, pool, static_cast<unsigned>(rand_between(g, 0, 3)));
        VerificationReport report = verify_corollary(n, b);
        CAPTURE(k);
        CHECK(report.all_pass());
    }
}

TEST_CASE("specialized staircase evaluation matches the quotient function") {
    for (unsigned r = 2; r <= 8; ++r) {
        VerificationReport report = verify_appendix_application(r);
        CAPTURE(r);
        CHECK(report.all_pass());
        REQUIRE(report.checks.size() == 2);
        CHECK(report.checks[0].name == "staircase-vs-v");
        CHECK(report.checks[1].name == "closed-form");
    }
}

TEST_CASE("seed validation") {
    CHECK_THROWS_AS(Seed::rational_integers({}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Seed::rational_integers({1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Seed::rational_integers({1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(StaircaseMatrix(Seed::explicit_entries({Polynomial::constant(1)}), 3),
                    std::invalid_argument);
}

}  // TEST_SUITE
