#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
//
// Values are immutable in spirit: every operation returns a fresh canonical
// polynomial (terms sorted, zero coefficients dropped) and never mutates its
// inputs.  Canonical *output* order (rendering, leading-term selection in
// division) is graded lexicographic by variable name; internal storage uses
// the registration-order analogue, which is cheaper and equality-compatible.

#include "supschur/bigint.hpp"
#include "supschur/monomial.hpp"
#include "supschur/variable.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace supschur {

class Polynomial {
  public:
    struct Term {
        Monomial mono;
        Int coeff;  // never zero in a canonical polynomial
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;  // zero
    static Polynomial zero() { return {}; }
    static Polynomial constant(Int value);
    static Polynomial variable(Variable v);
    static Polynomial term(Monomial m, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* The value of a constant polynomial (zero included). */
    Int constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    /* Total degree; zero polynomial reports 0. */
    std::uint64_t degree() const;
    const std::vector<Term>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;
    std::vector<Variable> variables() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Int& scalar) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    friend Polynomial operator*(const Int& scalar, const Polynomial& p) { return p * scalar; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned exp) const;

    /* Exchange two variables everywhere (an involution, not a general
       substitution). */
    Polynomial with_swapped(Variable a, Variable b) const;

    /* Replace each listed variable by a polynomial; unlisted variables stay. */
    Polynomial substitute(const std::vector<std::pair<Variable, Polynomial>>& bindings) const;

    /* Canonical text rendering: terms in descending graded-lex-by-name order,
       explicit '^' powers and '*' products, e.g. "2*x^2*y - y + 3". */
    std::string to_string() const;

    /* Build from already-normalized or raw term lists (combines duplicates,
       drops zeros, sorts). */
    static Polynomial from_terms(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;  // sorted ascending by Monomial::id_graded_less
};

/* Quotient of an exact division; throws std::domain_error with message
   "division is not exact" when the remainder of multivariate long division
   (by leading term, graded-lex-by-name order) is nonzero. */
Polynomial exact_divide(const Polynomial& numerator, const Polynomial& divisor);

}  // namespace supschur
