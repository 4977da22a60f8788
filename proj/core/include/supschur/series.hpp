#pragma once

// Truncated power series in one distinguished indeterminate z, with
// polynomial coefficients.  coefficient(n) is the coefficient of z^n; the
// series carries terms for n = 0..order().

#include "supschur/polynomial.hpp"

#include <vector>

namespace supschur {

class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1) {}  // the zero series, truncated at order 0
    explicit TruncatedSeries(std::vector<Polynomial> coeffs);
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Polynomial& coefficient(std::size_t n) const;

    /* Truncated sum/product; the result order is the smaller operand order. */
    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    /* Multiply by (1 + c z), extending the order by one. */
    TruncatedSeries times_one_plus(const Polynomial& c) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Polynomial> coeffs_;
};

/* numerator / denominator as a truncated series of the given order.  The
   denominator's constant term must be the unit 1; anything else throws
   std::invalid_argument. */
TruncatedSeries series_quotient(const TruncatedSeries& numerator,
                                const TruncatedSeries& denominator,
                                std::size_t order);

}  // namespace supschur
