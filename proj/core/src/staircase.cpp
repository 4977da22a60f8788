#include "supschur/staircase.hpp"

#include "supschur/schur.hpp"
#include "supschur/series.hpp"
#include "supschur/thom_a3.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace supschur {

Seed Seed::explicit_entries(std::vector<Polynomial> entries) {
    Seed seed;
    seed.numerator_ = std::move(entries);
    return seed;
}

Seed Seed::rational(std::vector<Polynomial> numerator, std::vector<Polynomial> denominator) {
    Seed seed;
    seed.rational_ = true;
    seed.numerator_ = std::move(numerator);
    seed.denominator_ = std::move(denominator);
    if (seed.numerator_.empty() || seed.denominator_.empty())
        throw std::invalid_argument("Seed::rational: empty coefficient list");
    if (seed.denominator_[0] != Polynomial::constant(1))
        throw std::invalid_argument("Seed::rational: denominator constant term must be 1");
    return seed;
}

Seed Seed::rational_integers(const std::vector<Int>& numerator,
                             const std::vector<Int>& denominator) {
    const auto lift = [](const std::vector<Int>& values) {
        std::vector<Polynomial> out;
        out.reserve(values.size());
        for (const Int& v : values) out.push_back(Polynomial::constant(v));
        return out;
    };
    return rational(lift(numerator), lift(denominator));
}

std::vector<Polynomial> Seed::entries(std::size_t count) const {
    if (!rational_) {
        if (numerator_.size() < count)
            throw std::invalid_argument("Seed::entries: explicit seed too short");
        return {numerator_.begin(), numerator_.begin() + count};
    }
    if (count == 0) return {};
    const TruncatedSeries series = series_quotient(
        TruncatedSeries(numerator_), TruncatedSeries(denominator_), count - 1);
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(series.coefficient(i));
    return out;
}

StaircaseMatrix::StaircaseMatrix(const Seed& seed, unsigned rows) {
    if (rows < 1) throw std::invalid_argument("StaircaseMatrix: need rows >= 1");
    const std::vector<Polynomial> first_column = seed.entries(rows);
    rows_.reserve(rows);
    for (unsigned s = 1; s <= rows; ++s) {
        std::vector<Polynomial> row(support_width(s));
        row[0] = first_column[s - 1];
        for (unsigned t = 2; t <= row.size(); ++t)
            row[t - 1] = at(s - 1, t - 1) + at(s - 1, t);
        rows_.push_back(std::move(row));
    }
}

Polynomial StaircaseMatrix::at(unsigned s, unsigned t) const {
    if (s < 1 || s > rows_.size() || t < 1)
        throw std::out_of_range("StaircaseMatrix::at: outside the built matrix");
    const std::vector<Polynomial>& row = rows_[s - 1];
    return t <= row.size() ? row[t - 1] : Polynomial::zero();
}

Polynomial w_function(unsigned n, const Alphabet& a, const StaircaseMatrix& p) {
    if (p.rows() < n + 1)
        throw std::invalid_argument("w_function: staircase has too few rows");
    const Evaluator negated(Alphabet{} - a);
    const Evaluator on_x2(x2_alphabet() - Alphabet{});
    Polynomial sum;
    for (unsigned i = 0; i <= n; ++i) {
        const unsigned s = n + 1 - i;
        for (unsigned j = 0; j + 1 <= StaircaseMatrix::support_width(s); ++j) {
            const Polynomial entry = p.at(s, j + 1);
            if (entry.is_zero()) continue;
            sum += entry * negated.complete(i) *
                   on_x2.schur_indexed({j, static_cast<long long>(n) - i - j});
        }
    }
    return sum;
}

StaircaseMatrix geometric_staircase(unsigned rows) {
    const Polynomial one = Polynomial::constant(1);
    const Polynomial y = Polynomial::variable(Variable::named("y"));
    return StaircaseMatrix(Seed::rational({one}, {one, -y}), rows);
}

StaircaseMatrix f_staircase(unsigned rows) {
    return StaircaseMatrix(Seed::rational_integers({5, -6}, {1, -6, 11, -6}), rows);
}

VerificationReport verify_corollary(unsigned n, const Alphabet& b) {
    const auto start = std::chrono::steady_clock::now();
    const StaircaseMatrix p = geometric_staircase(n + 1);
    const Alphabet box = Alphabet::parse("x1+x2");
    const Polynomial w = w_function(n, box + b, p);

    const Evaluator on_x2(x2_alphabet() - Alphabet{});
    const Evaluator neg_b(Alphabet{} - b);
    const Polynomial y = Polynomial::variable(Variable::named("y"));
    Polynomial tail;
    for (unsigned k = 0; k + 1 <= n; ++k)
        tail += y.pow(n - 1 - k) * on_x2.complete(n - k) * neg_b.complete(k);
    const Polynomial rhs_exact = (y - Polynomial::constant(1)) * tail + neg_b.complete(n);

    VerificationReport report;
    report.r = n;
    {
        const Polynomial residual = w - rhs_exact;
        report.checks.push_back({"corollary-exact", residual.is_zero(), residual.term_count()});
    }
    if (n > b.size()) {
        const Polynomial residual = w - (y - Polynomial::constant(1)) * tail;
        report.checks.push_back({"corollary-truncated", residual.is_zero(), residual.term_count()});
    }
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
}

VerificationReport verify_appendix_application(unsigned r) {
    if (r < 2) throw std::invalid_argument("verify_appendix_application: need r >= 2");
    const auto start = std::chrono::steady_clock::now();
    const unsigned n = r - 2;
    const Polynomial w = w_function(n, d_alphabet(), f_staircase(n + 1));

    VerificationReport report;
    report.r = r;
    {
        const Polynomial residual = w - v_function(r, false);
        report.checks.push_back({"staircase-vs-v", residual.is_zero(), residual.term_count()});
    }
    {
        const Polynomial residual = w - v_closed_form(r);
        report.checks.push_back({"closed-form", residual.is_zero(), residual.term_count()});
    }
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
}

}  // namespace supschur
