#include "supschur/thom_a3.hpp"

#include "supschur/schur.hpp"
#include "supschur/series.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <utility>

namespace supschur {

std::vector<Int> taylor_seed(unsigned n) {
    if (n < 1) throw std::invalid_argument("taylor_seed: need n >= 1");
    const TruncatedSeries numerator(
        {Polynomial::constant(5), Polynomial::constant(-6)});
    // (1-z)(1-2z)(1-3z) = 1 - 6z + 11z^2 - 6z^3
    const TruncatedSeries denominator(
        {Polynomial::constant(1), Polynomial::constant(-6), Polynomial::constant(11),
         Polynomial::constant(-6)});
    const TruncatedSeries series = series_quotient(numerator, denominator, n - 1);
    std::vector<Int> out;
    out.reserve(n);
    for (unsigned i = 0; i < n; ++i) out.push_back(series.coefficient(i).constant_value());
    return out;
}

ETable::ETable(unsigned max_i) : max_i_(max_i) {
    if (max_i < 2) throw std::invalid_argument("ETable: need max_i >= 2");
    const std::vector<Int> seed = taylor_seed(max_i - 1);
    rows_.reserve(max_i - 1);
    for (unsigned i = 2; i <= max_i; ++i) {
        std::vector<Int> row(support_width(i) + 1);
        row[0] = seed[i - 2];
        for (unsigned j = 1; j < row.size(); ++j)
            row[j] = at(i - 1, j - 1) + at(i - 1, j);
        rows_.push_back(std::move(row));
    }
}

Int ETable::at(unsigned i, unsigned j) const {
    if (i < 2 || i > max_i_ || rows_.size() < i - 1)
        throw std::out_of_range("ETable::at: row outside the built table");
    const std::vector<Int>& row = rows_[i - 2];
    return j < row.size() ? row[j] : Int{0};
}

Int e_recursive(unsigned i, unsigned j) {
    if (i < 2) throw std::invalid_argument("e_recursive: need i >= 2");
    return ETable(i).at(i, j);
}

Int e_closed(unsigned i, unsigned j) {
    if (i < 2 || 2 * j > i - 2)
        throw std::invalid_argument("e_closed: index above the staircase support");
    Int bracket = (int_pow(3, i + 1) - int_pow(3, 2 * (j + 1))) -
                  (int_pow(2, i + j + 2) - int_pow(2, 3 * (j + 1)));
    const long long w = static_cast<long long>(i) - 2 * static_cast<long long>(j) - 1;
    std::vector<Int> J{Int{1}};  // J[s] = J_s(w)
    for (unsigned s = 1; s <= j; ++s) {
        Int value = binomial(w + 2 * (static_cast<long long>(s) - 1), s);
        for (unsigned a = 1; a < s; ++a) value -= binomial(2 * a, a - 1) * J[s - 1 - a];
        J.push_back(std::move(value));
    }
    for (unsigned s = 1; s <= j; ++s)
        bracket -= int_pow(2, s) *
                   (int_pow(3, 2 * (j - s + 1)) - int_pow(2, 3 * (j - s + 1))) * J[s];
    return exact_div(bracket, int_pow(2, j + 1));
}

Partition i_partition(unsigned i, unsigned j) {
    if (i < 2 || 2 * j > i - 2)
        throw std::invalid_argument("i_partition: index above the staircase support");
    return Partition({i + 1 + j, 2 * i - 1 - j});
}

SchurExpansion f_part(unsigned r) {
    if (r < 1) throw std::invalid_argument("f_part: need r >= 1");
    const Evaluator two_three(
        Alphabet({LinearForm::constant(2), LinearForm::constant(3)}) - Alphabet{});
    SchurExpansion out;
    for (unsigned j1 = 0; j1 <= r; ++j1)
        for (unsigned j2 = j1; j2 <= r; ++j2) {
            const Polynomial coeff = two_three.schur_indexed({j1, j2});
            out.add(Partition(std::vector<unsigned>{r - j2, r - j1, r + j1 + j2}),
                    coeff.constant_value());
        }
    return out;
}

SchurExpansion h_bar(unsigned r) {
    if (r < 2) throw std::invalid_argument("h_bar: need r >= 2");
    const ETable table(r);
    SchurExpansion out;
    for (unsigned j = 0; j <= ETable::support_width(r); ++j)
        out.add(i_partition(r, j), table.at(r, j));
    return out;
}

SchurExpansion h_part2_recursive(unsigned r) {
    SchurExpansion h;
    for (unsigned k = 2; k <= r; ++k) h = h_bar(k) + h.phi_shifted();
    return h;
}

SchurExpansion h_part2_closed(unsigned r) {
    SchurExpansion out;
    if (r < 2) return out;
    const ETable table(r);
    for (unsigned i = 0; i + 2 <= r; ++i)
        for (unsigned j = 0; i + 2 * j + 2 <= r; ++j)
            out.add(Partition(std::vector<unsigned>{i, r + j + 1, 2 * r - i - j - 1}),
                    table.at(r - i, j));
    return out;
}

SchurExpansion h_part2(unsigned r) {
    SchurExpansion recursive = h_part2_recursive(r);
    if (recursive != h_part2_closed(r))
        throw std::logic_error("h_part2: recursive and closed builds disagree");
    return recursive;
}

SchurExpansion thom_a3(unsigned r) {
    if (r < 1) throw std::invalid_argument("thom_a3: need r >= 1");
    return f_part(r) + h_part2(r);
}

std::map<unsigned, SchurExpansion> h_decompose(const SchurExpansion& T, unsigned r) {
    std::map<unsigned, SchurExpansion> parts;
    for (const auto& [partition, coeff] : T.terms())
        parts[partition.h_class(r)].add(partition, coeff);
    return parts;
}

Alphabet x_alphabet() {
    return Alphabet({LinearForm::variable(Variable::named("x"))});
}

Alphabet x2_alphabet() { return Alphabet::of_variables("x", 2); }

Alphabet d_alphabet() { return Alphabet::parse("2x1,2x2,x1+x2"); }

Alphabet b_alphabet(unsigned n) { return Alphabet::of_variables("b", n); }

Alphabet zero_letters(unsigned n) {
    return Alphabet(std::vector<LinearForm>(n));
}

const std::vector<SingularitySpec>& restriction_checks() {
    static const std::vector<SingularitySpec> specs = [] {
        const auto zero = [](unsigned) { return Polynomial::zero(); };
        std::vector<SingularitySpec> v;
        v.push_back({"A0", 1,
                     [](unsigned r) { return Alphabet{} - b_alphabet(r - 1); }, zero});
        v.push_back({"A1", 1,
                     [](unsigned r) {
                         return x_alphabet() - (b_alphabet(r - 1) + Alphabet::parse("2x"));
                     },
                     zero});
        v.push_back({"A2", 1,
                     [](unsigned r) {
                         return x_alphabet() - (b_alphabet(r - 1) + Alphabet::parse("3x"));
                     },
                     zero});
        v.push_back({"A3", 1,
                     [](unsigned r) {
                         return x_alphabet() - (b_alphabet(r - 1) + Alphabet::parse("4x"));
                     },
                     [](unsigned r) {
                         return resultant(Alphabet::parse("x,2x,3x"),
                                          b_alphabet(r - 1) + Alphabet::parse("4x"));
                     }});
        v.push_back({"III22", 2,
                     [](unsigned r) {
                         return x2_alphabet() - (d_alphabet() + b_alphabet(r - 2));
                     },
                     zero});
        return v;
    }();
    return specs;
}

VerificationReport verify_restriction(const SchurExpansion& T, unsigned r, unsigned jobs) {
    if (r < 1) throw std::invalid_argument("verify_restriction: need r >= 1");
    const auto start = std::chrono::steady_clock::now();

    std::vector<const SingularitySpec*> applicable;
    for (const auto& spec : restriction_checks())
        if (r >= spec.min_r) applicable.push_back(&spec);

    std::vector<CheckResult> results(applicable.size());
    const auto run_one = [&](std::size_t k) {
        const SingularitySpec& spec = *applicable[k];
        const Evaluator ev(spec.specialization(r));
        const Polynomial residual = ev.eval(T) - spec.expected(r);
        results[k] = CheckResult{spec.name, residual.is_zero(), residual.term_count()};
    };

    if (jobs <= 1) {
        for (std::size_t k = 0; k < applicable.size(); ++k) run_one(k);
    } else {
        std::atomic<std::size_t> next{0};
        const unsigned worker_count =
            std::min<std::size_t>(jobs, applicable.size());
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w)
            workers.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < applicable.size();
                     k = next.fetch_add(1))
                    run_one(k);
            });
        for (auto& worker : workers) worker.join();
    }

    VerificationReport report;
    report.r = r;
    report.checks = std::move(results);
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return report;
}

namespace {

Alphabet restriction_b(unsigned r, bool with_b) {
    return with_b ? b_alphabet(r - 2) : zero_letters(r - 2);
}

}  // namespace

Polynomial v_function(unsigned r, bool with_b) {
    if (r < 2) throw std::invalid_argument("v_function: need r >= 2");
    const Alphabet x2 = x2_alphabet();
    const Alphabet db = d_alphabet() + restriction_b(r, with_b);

    const Evaluator negative(Alphabet{} - db);  // S_i(-D - B)
    const Evaluator on_x2(x2 - Alphabet{});
    const ETable table(r);
    Polynomial sum;
    for (unsigned i = 0; i + 2 <= r; ++i)
        for (unsigned j = 0; i + 2 * j + 2 <= r; ++j) {
            const Int coeff = table.at(r - i, j);
            sum += negative.complete(i) *
                   on_x2.schur_indexed({j, static_cast<long long>(r - i - j) - 2}) * coeff;
        }

    const Polynomial quotient = exact_divide(
        eval_expansion(h_part2(r), x2 - db), resultant(x2, db));
    if (quotient != sum)
        throw std::logic_error("v_function: sum and quotient forms disagree");
    return sum;
}

Polynomial u_function(unsigned r, bool with_b) {
    if (r < 2) throw std::invalid_argument("u_function: need r >= 2");
    const Alphabet x2 = x2_alphabet();
    const Alphabet db = d_alphabet() + restriction_b(r, with_b);
    return exact_divide(eval_expansion(f_part(r), x2 - db), resultant(x2, db));
}

Polynomial v_closed_form(unsigned r) {
    if (r < 2) throw std::invalid_argument("v_closed_form: need r >= 2");
    const Evaluator on_x2(x2_alphabet() - Alphabet{});
    const Polynomial value =
        on_x2.schur_indexed({static_cast<long long>(r) - 2}) * Int{3} -
        on_x2.schur_indexed({1, static_cast<long long>(r) - 3}) * Int{2};
    return value * int_pow(3, r - 2);
}

}  // namespace supschur
