#pragma once

// Alphabets: finite multisets of "letters", each letter an integer linear
// form in the global variables (plus an integer constant).  A letter that is
// a compound form -- 2x, x1+x2, or the constant 3 -- is the "boxed" single
// letter of that value; there is no separate box type, because a letter *is*
// a box.  Specializations are described by a difference of two alphabets.

#include "supschur/bigint.hpp"
#include "supschur/polynomial.hpp"
#include "supschur/variable.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace supschur {

class LinearForm {
  public:
    LinearForm() = default;  // zero form
    static LinearForm constant(Int c);
    static LinearForm variable(Variable v);
    /* Parse e.g. "x", "2x1", "3*y", "x1+x2", "2x-3", "-y". */
    static LinearForm parse(std::string_view text);

    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }

    LinearForm operator+(const LinearForm& other) const;
    LinearForm operator-(const LinearForm& other) const;
    LinearForm operator-() const;
    LinearForm operator*(const Int& scalar) const;

    Polynomial to_polynomial() const;
    std::string to_string() const { return to_polynomial().to_string(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

  private:
    Int constant_{0};
    std::vector<std::pair<std::uint32_t, Int>> coeffs_;  // (var id, coeff), id-sorted
    void normalize();
};

class Alphabet {
  public:
    Alphabet() = default;  // the empty alphabet
    explicit Alphabet(std::vector<LinearForm> letters) : letters_(std::move(letters)) {}
    /* Fresh ordinary variables stem1..stemN as letters. */
    static Alphabet of_variables(std::string_view stem, unsigned count);
    /* Parse a comma-separated letter list, e.g. "x,2x,x1+x2". */
    static Alphabet parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    const std::vector<LinearForm>& letters() const { return letters_; }

    /* Multiset union. */
    Alphabet operator+(const Alphabet& other) const;
    /* Negate every letter. */
    Alphabet negated() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

  private:
    std::vector<LinearForm> letters_;
};

/* The formal difference A - B feeding a specialization. */
struct AlphabetDifference {
    Alphabet plus;
    Alphabet minus;
    friend bool operator==(const AlphabetDifference&, const AlphabetDifference&) = default;
};

inline AlphabetDifference operator-(Alphabet plus, Alphabet minus) {
    return {std::move(plus), std::move(minus)};
}

}  // namespace supschur
