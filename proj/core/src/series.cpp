#include "supschur/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace supschur {

TruncatedSeries::TruncatedSeries(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: no coefficients");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    std::vector<Polynomial> c(order + 1);
    c[0] = Polynomial::constant(Int{1});
    return TruncatedSeries(std::move(c));
}

const Polynomial& TruncatedSeries::coefficient(std::size_t n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("TruncatedSeries::coefficient: beyond truncation order");
    return coeffs_[n];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    const std::size_t n = std::min(order(), other.order());
    std::vector<Polynomial> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = coeffs_[i] + other.coeffs_[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    const std::size_t n = std::min(order(), other.order());
    std::vector<Polynomial> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::times_one_plus(const Polynomial& c) const {
    std::vector<Polynomial> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i];
        out[i + 1] += coeffs_[i] * c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_quotient(const TruncatedSeries& numerator,
                                const TruncatedSeries& denominator,
                                std::size_t order) {
    if (denominator.coefficient(0) != Polynomial::constant(Int{1}))
        throw std::invalid_argument("series_quotient: denominator constant term must be 1");
    std::vector<Polynomial> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Polynomial value =
            n <= numerator.order() ? numerator.coefficient(n) : Polynomial::zero();
        for (std::size_t k = 1; k <= n && k <= denominator.order(); ++k)
            value -= denominator.coefficient(k) * c[n - k];
        c[n] = std::move(value);
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace supschur
