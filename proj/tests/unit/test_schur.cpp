// The Schur evaluation engine: complete functions of alphabet differences,
// determinant evaluation with generalized integer indices, resultants, the
// two-variable symmetrizer, the Chern-monomial converter, and the classical
// identities (cancellation, duality, factorization) as randomized properties.

#include <doctest.h>

#include <supschur/schur.hpp>
#include <supschur/thom_a3.hpp>

#include "test_support.hpp"

using namespace supschur;
using namespace supschur::testing;

namespace {

Polynomial pvar(const char* name) { return Polynomial::variable(Variable::named(name)); }

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("complete functions of ordinary and boxed alphabets") {
    Evaluator two_letters(Alphabet::parse("x1,x2") - Alphabet());
    Polynomial x1 = pvar("x1"), x2 = pvar("x2");
    CHECK(two_letters.complete(0) == Polynomial::constant(1));
    CHECK(two_letters.complete(1) == x1 + x2);
    CHECK(two_letters.complete(2) == x1 * x1 + x1 * x2 + x2 * x2);
    CHECK(two_letters.complete(-1) == Polynomial::zero());

    // One boxed letter x1+x2: completes are plain powers of the form.
    Evaluator boxed(Alphabet::parse("x1+x2") - Alphabet());
    CHECK(boxed.complete(2) == (x1 + x2) * (x1 + x2));
    CHECK(boxed.complete(3) == (x1 + x2).pow(3));

    // Minus alphabets terminate: S_i(-B) = 0 for i > |B|.
    Evaluator minus(Alphabet() - Alphabet::parse("b1,b2"));
    Polynomial b1 = pvar("b1"), b2 = pvar("b2");
    CHECK(minus.complete(1) == -(b1 + b2));
    CHECK(minus.complete(2) == b1 * b2);
    CHECK(minus.complete(3) == Polynomial::zero());
    CHECK(minus.complete(7) == Polynomial::zero());
}

TEST_CASE("numeric alphabet fixtures") {
    Evaluator e(Alphabet::parse("2,3") - Alphabet());
    for (unsigned i = 1; i <= 6; ++i)
        CHECK(e.complete(i) == Polynomial::constant(int_pow(3, i + 1) - int_pow(2, i + 1)));
    CHECK(e.schur(Partition{1, 2}).constant_value() == 30);
    CHECK(e.schur(Partition{2, 2}).constant_value() == 36);
    CHECK(e.schur(Partition{3, 3}).constant_value() == 216);
}

TEST_CASE("generalized indices straighten") {
    Evaluator empty(Alphabet() - Alphabet());
    CHECK(empty.schur_indexed({1, -1}) == Polynomial::constant(-1));
    CHECK(empty.schur_indexed({1, 0}) == Polynomial::zero());
    CHECK(empty.schur_indexed({}) == Polynomial::constant(1));

    // (1,0) and (1,-1) straighten the same way over any difference.
    Evaluator generic(Alphabet::parse("x1,x2") - Alphabet::parse("b1"));
    CHECK(generic.schur_indexed({1, 0}) == Polynomial::zero());
    CHECK(generic.schur_indexed({1, -1}) == -Polynomial::constant(1));
    CHECK(generic.schur_indexed({0, 1}) == generic.complete(1));
}

TEST_CASE("evaluating an expansion is linear") {
    Evaluator e(Alphabet::parse("x1,x2") - Alphabet());
    SchurExpansion t;
    t.add(Partition{1, 1}, 2);
    t.add(Partition{2}, -3);
    CHECK(e.eval(t) == e.schur(Partition{1, 1}) * Int(2) - e.schur(Partition{2}) * Int(3));
}

TEST_CASE("resultant is the product of letter differences") {
    CHECK(resultant(Alphabet::parse("x"), Alphabet::parse("y")) == pvar("x") - pvar("y"));
    Polynomial x = pvar("x"), y1 = pvar("y1"), y2 = pvar("y2");
    CHECK(resultant(Alphabet::parse("x,2x"), Alphabet::parse("y1,y2")) ==
          (x - y1) * (x - y2) * (Int(2) * x - y1) * (Int(2) * x - y2));
    CHECK(resultant(Alphabet(), Alphabet::parse("y")) == Polynomial::constant(1));
}

TEST_CASE("triple-point resultant identity") {
    // -6x^3 prod_j (3x-y_j)(2x-y_j)(x-y_j) = R(x+[2x]+[3x], Y+[4x]) for any
    // number of ordinary letters y_j.
    Polynomial x = pvar("x");
    Alphabet left = Alphabet::parse("x,2x,3x");
    for (unsigned k = 0; k <= 3; ++k) {
        std::vector<LinearForm> ys;
        Polynomial product = Polynomial::constant(-6) * x.pow(3);
        for (unsigned j = 1; j <= k; ++j) {
            Variable yj = Variable::named("y" + std::to_string(j));
            ys.push_back(LinearForm::variable(yj));
            Polynomial y = Polynomial::variable(yj);
            product *= (Int(3) * x - y) * (Int(2) * x - y) * (x - y);
        }
        Alphabet right = Alphabet(ys) + Alphabet::parse("4x");
        CAPTURE(k);
        CHECK(product == resultant(left, right));
    }
}

TEST_CASE("one-part expansion evaluates to the resultant at its own locus") {
    for (unsigned r = 1; r <= 4; ++r) {
        Polynomial lhs =
            eval_expansion(f_part(r), Alphabet::parse("x") - b_alphabet(r));
        Polynomial rhs = resultant(Alphabet::parse("x,2x,3x"), b_alphabet(r));
        CAPTURE(r);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tall tails vanish at one-fresh-letter specializations") {
    // S_{(i1,i2,i3)} with i2, i3 >= r+1 vanishes at x - B_{r-1} - [y] because
    // the trailing two-row index exceeds the minus-alphabet bound.
    for (unsigned r = 1; r <= 5; ++r) {
        Evaluator e(Alphabet::parse("x") -
                    (b_alphabet(r - 1) + Alphabet::parse("y")));
        for (unsigned i2 = r + 1; i2 <= r + 3; ++i2)
            for (unsigned i3 = i2; i3 <= r + 3; ++i3)
                for (unsigned i1 = 0; i1 <= i2; ++i1) {
                    CAPTURE(r);
                    CAPTURE(i1);
                    CAPTURE(i2);
                    CAPTURE(i3);
                    CHECK(e.schur_indexed({i1, i2, i3}) == Polynomial::zero());
                }
    }
}

TEST_CASE("cancellation property, randomized") {
    auto failure = property_cancellation(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("duality property, randomized") {
    auto failure = property_duality(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("factorization property, randomized") {
    auto failure = property_factorization(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("factorization needs a full-length shifted block") {
    // |A| = 2 but only one shifted entry: the product formula fails.
    Alphabet a = Alphabet::parse("a1,a2");
    Alphabet b = Alphabet::parse("b1");
    Polynomial lhs = Evaluator(a - b).schur_indexed({2});  // i1=1 shifted by n=1
    Polynomial rhs = Evaluator(a - Alphabet()).schur_indexed({1}) * resultant(a, b);
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("tableau oracle agreement, randomized") {
    auto failure = property_tableau_oracle(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("tableau oracle fixture") {
    // s_{(2,1)} in two variables = x1^2 x2 + x1 x2^2.
    auto vars = variable_pool("tf", 2);
    Polynomial expect = Polynomial::term(Monomial::of(vars[0], 2) * Monomial::of(vars[1], 1), 1) +
                        Polynomial::term(Monomial::of(vars[0], 1) * Monomial::of(vars[1], 2), 1);
    CHECK(ssyt_schur(Partition{1, 2}, vars) == expect);
    std::vector<LinearForm> letters{LinearForm::variable(vars[0]), LinearForm::variable(vars[1])};
    CHECK(Evaluator(Alphabet(letters) - Alphabet()).schur(Partition{1, 2}) == expect);
}

TEST_CASE("two-variable symmetrizer fixtures and determinant agreement") {
    Variable vx1 = Variable::named("x1");
    Variable vx2 = Variable::named("x2");
    Evaluator on_x2(Alphabet::parse("x1,x2") - Alphabet());
    CHECK(pi_symmetrizer(Polynomial::constant(1)) == Polynomial::constant(1));
    CHECK(pi_symmetrizer(pvar("x2")) == Polynomial::zero());
    CHECK(pi_symmetrizer(pvar("x1")) == pvar("x1") + pvar("x2"));
    for (unsigned total = 0; total <= 8; ++total)
        for (unsigned j = 0; j <= total; ++j) {
            unsigned i = total - j;
            Polynomial mono = Polynomial::term(Monomial::of(vx1, j) * Monomial::of(vx2, i), 1);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(pi_symmetrizer(mono) ==
                  on_x2.schur_indexed({(long long)i, (long long)j}));
        }
}

TEST_CASE("symmetrizer linearity, randomized") {
    auto failure = property_pi_symmetrizer(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("chern conversion fixture") {
    SchurExpansion t;
    t.add(Partition{1, 1}, 1);
    t.add(Partition{2}, 2);
    Polynomial c1 = pvar("c1"), c2 = pvar("c2");
    CHECK(to_chern_monomials(t) == c1 * c1 + c2);
    CHECK(to_chern_monomials(SchurExpansion::single(Partition{}, 5)) == Polynomial::constant(5));
}

TEST_CASE("chern round-trip, randomized") {
    auto failure = property_chern_roundtrip(200);
    CHECK_MESSAGE(!failure, failure.value_or(""));
}

TEST_CASE("determinant helper") {
    Polynomial a = pvar("da"), b = pvar("db"), c = pvar("dc"), d = pvar("dd");
    CHECK(determinant({}) == Polynomial::constant(1));
    CHECK(determinant({{a}}) == a);
    CHECK(determinant({{a, b}, {c, d}}) == a * d - b * c);
    CHECK_THROWS_AS(determinant({{a, b}}), std::invalid_argument);
}

}  // TEST_SUITE
