// The restriction-equation verifier and the two-variable evaluation
// functions: positive verification for small degrees, the designed negative
// control, closed forms, transfer to nonzero base letters, and report
// rendering.

#include <doctest.h>

#include <json.hpp>
#include <supschur/schur.hpp>
#include <supschur/thom_a3.hpp>
#include <supschur/verification.hpp>

#include "test_support.hpp"

using namespace supschur;
using namespace supschur::testing;

namespace {

const std::vector<std::string> kCheckNamesR1 = {"A0", "A1", "A2", "A3"};
const std::vector<std::string> kCheckNamesR2 = {"A0", "A1", "A2", "A3", "III22"};

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("assembled polynomials pass all checks for r = 1..3") {
    for (unsigned r = 1; r <= 3; ++r) {
        VerificationReport report = verify_restriction(thom_a3(r), r);
        CAPTURE(r);
        CHECK(report.all_pass());
        CHECK(report.r == r);
        const auto& names = r == 1 ? kCheckNamesR1 : kCheckNamesR2;
        REQUIRE(report.checks.size() == names.size());
        for (std::size_t k = 0; k < names.size(); ++k) {
            CHECK(report.checks[k].name == names[k]);
            CHECK(report.checks[k].pass);
            CHECK(report.checks[k].residual_terms == 0);
        }
    }
}

TEST_CASE("parallel verification agrees with serial") {
    VerificationReport serial = verify_restriction(thom_a3(3), 3, 1);
    VerificationReport parallel = verify_restriction(thom_a3(3), 3, 4);
    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (std::size_t k = 0; k < serial.checks.size(); ++k) {
        CHECK(serial.checks[k].name == parallel.checks[k].name);
        CHECK(serial.checks[k].pass == parallel.checks[k].pass);
        CHECK(serial.checks[k].residual_terms == parallel.checks[k].residual_terms);
    }
}

TEST_CASE("one-part candidate fails exactly the quadratic-locus check") {
    VerificationReport report = verify_restriction(f_part(2), 2);
    CHECK_FALSE(report.all_pass());
    REQUIRE(report.checks.size() == 5);
    for (std::size_t k = 0; k + 1 < report.checks.size(); ++k) CHECK(report.checks[k].pass);
    const CheckResult& last = report.checks.back();
    CHECK(last.name == "III22");
    CHECK_FALSE(last.pass);
    CHECK(last.residual_terms == 3);
}

TEST_CASE("the negative control residual is minus the two-part layer") {
    AlphabetDifference locus = x2_alphabet() - d_alphabet();
    Polynomial residual = eval_expansion(f_part(2), locus);
    CHECK(residual == -eval_expansion(h_part2(2), locus));
    CHECK_FALSE(residual.is_zero());
    CHECK(residual.term_count() == 3);
    // And that value is -5 times the resultant of the locus.
    CHECK(residual == Int(-5) * resultant(x2_alphabet(), d_alphabet()));
}

TEST_CASE("two-part layer vanishes at every one-letter locus") {
    for (unsigned r = 2; r <= 5; ++r) {
        SchurExpansion h = h_part2(r);
        Alphabet b = b_alphabet(r - 1);
        CAPTURE(r);
        CHECK(eval_expansion(h, Alphabet() - b) == Polynomial::zero());
        for (const char* box : {"2x", "3x", "4x"}) {
            AlphabetDifference locus = x_alphabet() - (b + Alphabet::parse(box));
            CHECK(eval_expansion(h, locus) == Polynomial::zero());
        }
    }
}

TEST_CASE("quotient evaluation closed form") {
    CHECK(v_function(2, false) == Polynomial::constant(5));
    Polynomial s1 = complete(1, x2_alphabet() - Alphabet());
    CHECK(v_function(3, false) == Int(9) * s1);
    CHECK(u_function(2, false) == Polynomial::constant(-5));
    for (unsigned r = 2; r <= 8; ++r) {
        CAPTURE(r);
        CHECK(v_function(r, false) == v_closed_form(r));
        CHECK(u_function(r, false) == -v_function(r, false));
    }
}

TEST_CASE("direct expansion of the one-part layer at the doubled locus") {
    Polynomial x1 = Polynomial::variable(Variable::named("x1"));
    Polynomial x2 = Polynomial::variable(Variable::named("x2"));
    for (unsigned r = 2; r <= 5; ++r) {
        Polynomial lhs = eval_expansion(f_part(r), x2_alphabet() - d_alphabet());
        Polynomial rhs = -resultant(x2_alphabet(), d_alphabet()) * (x1 * x2).pow(r - 2) *
                         v_closed_form(r);
        CAPTURE(r);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("base-letter transfer expands through complete functions") {
    for (unsigned r = 3; r <= 4; ++r) {
        Alphabet b = b_alphabet(r - 2);
        Evaluator negb(Alphabet() - b);
        Polynomial v_sum, u_sum;
        for (unsigned i = 0; i <= r - 2; ++i) {
            v_sum += v_function(r - i, false) * negb.complete(i);
            u_sum += u_function(r - i, false) * negb.complete(i);
        }
        CAPTURE(r);
        CHECK(v_function(r, true) == v_sum);
        CHECK(u_function(r, true) == u_sum);
    }
}

TEST_CASE("the two layers cancel at the quadratic locus") {
    for (unsigned r = 2; r <= 6; ++r) {
        CAPTURE(r);
        CHECK(u_function(r, true) + v_function(r, true) == Polynomial::zero());
    }
}

TEST_CASE("report rendering") {
    VerificationReport report;
    report.r = 2;
    report.ms = 7;
    report.checks.push_back({"A0", true, 0});
    report.checks.push_back({"III22", false, 3});
    std::string text = report.to_text();
    CHECK(text.find("A0    pass") != std::string::npos);
    CHECK(text.find("III22 FAIL (3 residual terms)") != std::string::npos);
    CHECK(text.find("r=2 CHECKS FAILED [7 ms]") != std::string::npos);

    auto doc = nlohmann::json::parse(report.to_json_string());
    CHECK(doc["r"] == 2);
    CHECK(doc["ms"] == 7);
    REQUIRE(doc["checks"].size() == 2);
    CHECK(doc["checks"][0]["name"] == "A0");
    CHECK(doc["checks"][0]["pass"] == true);
    CHECK(doc["checks"][1]["residual_terms"] == 3);

    report.checks[1].pass = true;
    report.checks[1].residual_terms = 0;
    CHECK(report.all_pass());
    CHECK(report.to_text().find("r=2 all checks pass") != std::string::npos);
}

}  // TEST_SUITE
