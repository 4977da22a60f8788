#include "supschur/schur.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace supschur {

namespace {

/* z-coefficients of acc * (1 - letter z). */
std::vector<Polynomial> times_one_minus(std::vector<Polynomial> acc, const Polynomial& letter) {
    std::vector<Polynomial> out(acc.size() + 1);
    out[0] = acc[0];
    for (std::size_t i = 1; i < acc.size(); ++i) out[i] = acc[i] - letter * acc[i - 1];
    out[acc.size()] = -(letter * acc.back());
    return out;
}

std::vector<Polynomial> linear_factors(const Alphabet& a) {
    std::vector<Polynomial> acc{Polynomial::constant(1)};
    for (const auto& letter : a.letters()) acc = times_one_minus(std::move(acc), letter.to_polynomial());
    return acc;
}

}  // namespace

Evaluator::Evaluator(AlphabetDifference diff)
    : diff_(std::move(diff)),
      numerator_(linear_factors(diff_.minus)),
      denominator_(linear_factors(diff_.plus)) {
    cache_.push_back(Polynomial::constant(1));  // S_0 = 1
}

void Evaluator::extend_cache(std::size_t order) const {
    for (std::size_t n = cache_.size(); n <= order; ++n) {
        Polynomial c = n < numerator_.size() ? numerator_[n] : Polynomial::zero();
        const std::size_t k_max = std::min(n, denominator_.size() - 1);
        for (std::size_t k = 1; k <= k_max; ++k) c -= denominator_[k] * cache_[n - k];
        cache_.push_back(std::move(c));
    }
}

Polynomial Evaluator::complete(long long i) const {
    if (i < 0) return Polynomial::zero();
    std::lock_guard lock(mutex_);
    extend_cache(static_cast<std::size_t>(i));
    return cache_[static_cast<std::size_t>(i)];
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix) {
    const std::size_t s = matrix.size();
    if (s == 0) return Polynomial::constant(1);
    if (s > 24) throw std::invalid_argument("determinant: matrix too large");
    for (const auto& row : matrix)
        if (row.size() != s) throw std::invalid_argument("determinant: matrix not square");
    if (s == 1) return matrix[0][0];

    /* minor over the last popcount(mask) rows, restricted to the column set
       mask; the full determinant is the minor at the full mask. */
    std::unordered_map<std::uint32_t, Polynomial> memo;
    auto minor = [&](auto&& self, std::uint32_t mask) -> const Polynomial& {
        auto found = memo.find(mask);
        if (found != memo.end()) return found->second;
        const std::size_t row = s - static_cast<std::size_t>(std::popcount(mask));
        Polynomial sum;
        bool negate = false;
        for (std::size_t col = 0; col < s; ++col) {
            const std::uint32_t bit = std::uint32_t{1} << col;
            if (!(mask & bit)) continue;
            const Polynomial& entry = matrix[row][col];
            if (!entry.is_zero()) {
                if (mask == bit) {
                    sum += negate ? -entry : entry;
                } else {
                    Polynomial contribution = entry * self(self, mask & ~bit);
                    sum += negate ? -contribution : std::move(contribution);
                }
            }
            negate = !negate;
        }
        return memo.emplace(mask, std::move(sum)).first->second;
    };
    const std::uint32_t full = (std::uint32_t{1} << s) - 1;
    return minor(minor, full);
}

Polynomial Evaluator::schur_indexed(const std::vector<long long>& index) const {
    const std::size_t s = index.size();
    if (s == 0) return Polynomial::constant(1);
    std::vector<std::vector<Polynomial>> matrix(s, std::vector<Polynomial>(s));
    for (std::size_t p = 0; p < s; ++p)
        for (std::size_t q = 0; q < s; ++q)
            matrix[p][q] = complete(index[p] + static_cast<long long>(p) - static_cast<long long>(q));
    return determinant(matrix);
}

Polynomial Evaluator::schur(const Partition& p) const {
    std::vector<long long> index(p.parts().begin(), p.parts().end());
    return schur_indexed(index);
}

Polynomial Evaluator::eval(const SchurExpansion& expansion) const {
    Polynomial sum;
    for (const auto& [p, coeff] : expansion.terms()) sum += schur(p) * coeff;
    return sum;
}

Polynomial complete(long long i, const AlphabetDifference& d) { return Evaluator(d).complete(i); }

Polynomial schur(const Partition& I, const AlphabetDifference& d) { return Evaluator(d).schur(I); }

Polynomial schur_indexed(const std::vector<long long>& index, const AlphabetDifference& d) {
    return Evaluator(d).schur_indexed(index);
}

Polynomial eval_expansion(const SchurExpansion& T, const AlphabetDifference& d) {
    return Evaluator(d).eval(T);
}

Polynomial resultant(const Alphabet& a, const Alphabet& b) {
    Polynomial product = Polynomial::constant(1);
    for (const auto& x : a.letters()) {
        const Polynomial xp = x.to_polynomial();
        for (const auto& y : b.letters()) product *= xp - y.to_polynomial();
    }
    return product;
}

Polynomial pi_symmetrizer(const Polynomial& f, Variable x1, Variable x2) {
    const Polynomial p1 = Polynomial::variable(x1);
    const Polynomial p2 = Polynomial::variable(x2);
    const Polynomial numerator = p1 * f - p2 * f.with_swapped(x1, x2);
    return exact_divide(numerator, p1 - p2);
}

Polynomial pi_symmetrizer(const Polynomial& f) {
    return pi_symmetrizer(f, Variable::named("x1"), Variable::named("x2"));
}

namespace {

Polynomial chern_symbol(long long k) {
    if (k < 0) return Polynomial::zero();
    if (k == 0) return Polynomial::constant(1);
    return Polynomial::variable(Variable::named("c" + std::to_string(k)));
}

}  // namespace

Polynomial to_chern_monomials(const SchurExpansion& T) {
    Polynomial sum;
    for (const auto& [partition, coeff] : T.terms()) {
        const auto& parts = partition.parts();
        const std::size_t s = parts.size();
        if (s == 0) {
            sum += Polynomial::constant(coeff);
            continue;
        }
        std::vector<std::vector<Polynomial>> matrix(s, std::vector<Polynomial>(s));
        for (std::size_t p = 0; p < s; ++p)
            for (std::size_t q = 0; q < s; ++q)
                matrix[p][q] = chern_symbol(static_cast<long long>(parts[p]) +
                                            static_cast<long long>(p) - static_cast<long long>(q));
        sum += determinant(matrix) * coeff;
    }
    return sum;
}

Polynomial substitute_chern(const Polynomial& chern_poly, const Evaluator& ev) {
    std::vector<std::pair<Variable, Polynomial>> bindings;
    for (Variable v : chern_poly.variables()) {
        const std::string name = v.name();
        if (name.size() < 2 || name[0] != 'c') continue;
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (!digits || name[1] == '0') continue;
        bindings.emplace_back(v, ev.complete(std::stoll(name.substr(1))));
    }
    return chern_poly.substitute(bindings);
}

}  // namespace supschur
