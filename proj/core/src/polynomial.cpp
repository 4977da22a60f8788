#include "supschur/polynomial.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace supschur {

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) {
    return Monomial::id_graded_less(a.mono, b.mono);
}

}  // namespace

Polynomial Polynomial::constant(Int value) {
    return term(Monomial::one(), std::move(value));
}

Polynomial Polynomial::variable(Variable v) {
    return term(Monomial::of(v), Int{1});
}

Polynomial Polynomial::term(Monomial m, Int coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_less);
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Int Polynomial::constant_value() const {
    if (terms_.empty()) return Int{0};
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
    throw std::domain_error("constant_value: polynomial is not constant");
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Int Polynomial::coefficient(const Monomial& m) const {
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
            return Monomial::id_graded_less(t.mono, key);
        });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Int{0};
}

std::vector<Variable> Polynomial::variables() const {
    std::set<std::uint32_t> ids;
    for (const Term& t : terms_)
        for (const auto& e : t.mono.entries()) ids.insert(e.var);
    std::vector<Variable> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(Variable::named(Variable::name_of_id(id)));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
        if (term_less(*a, *b)) {
            out.terms_.push_back(*a++);
        } else if (term_less(*b, *a)) {
            out.terms_.push_back(*b++);
        } else {
            Int c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
            ++a, ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, ae);
    out.terms_.insert(out.terms_.end(), b, be);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

namespace {

/* Multiplication kernel, packed flavor: when the product involves at most 8
   distinct variables and has total degree < 256, a monomial packs losslessly
   into one uint64 (one byte lane per variable), and products of monomials
   become integer additions.  This is where specialization-heavy callers
   (restriction checks in ~6 variables, degree <= 30) spend their time. */
struct PackedLanes {
    std::array<std::uint32_t, 8> var_of_lane{};
    std::vector<std::pair<std::uint32_t, int>> lanes;  // (var id, lane), sorted by id

    int lane(std::uint32_t var) const {
        auto it = std::lower_bound(lanes.begin(), lanes.end(), var,
                                   [](const auto& p, std::uint32_t v) { return p.first < v; });
        return (it != lanes.end() && it->first == var) ? it->second : -1;
    }
};

std::uint64_t pack(const Monomial& m, const PackedLanes& pl) {
    std::uint64_t key = 0;
    for (const auto& e : m.entries()) {
        const int lane = pl.lane(e.var);
        key |= std::uint64_t(e.exp) << (8 * lane);
    }
    return key;
}

Monomial unpack(std::uint64_t key, const PackedLanes& pl, unsigned nlanes) {
    Monomial m;
    for (unsigned lane = 0; lane < nlanes; ++lane) {
        const auto exp = std::uint32_t((key >> (8 * lane)) & 0xffu);
        if (exp != 0) m = m * Monomial::of(Variable::named(Variable::name_of_id(pl.var_of_lane[lane])), exp);
    }
    return m;
}

struct U64Hash {
    std::size_t operator()(std::uint64_t k) const {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdull;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

}  // namespace

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    if (other.terms_.size() == 1) {
        const Term& t = other.terms_[0];
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& a : terms_) out.push_back({a.mono * t.mono, a.coeff * t.coeff});
        return from_terms(std::move(out));
    }
    if (terms_.size() == 1) return other * *this;

    /* Try the packed kernel. */
    std::set<std::uint32_t> ids;
    for (const Term& t : terms_)
        for (const auto& e : t.mono.entries()) ids.insert(e.var);
    for (const Term& t : other.terms_)
        for (const auto& e : t.mono.entries()) ids.insert(e.var);
    if (ids.size() <= 8 && degree() + other.degree() < 256) {
        PackedLanes pl;
        int lane = 0;
        for (auto id : ids) {
            pl.var_of_lane[lane] = id;
            pl.lanes.emplace_back(id, lane);
            ++lane;
        }
        std::vector<std::pair<std::uint64_t, Int>> pa, pb;
        pa.reserve(terms_.size());
        pb.reserve(other.terms_.size());
        for (const Term& t : terms_) pa.emplace_back(pack(t.mono, pl), t.coeff);
        for (const Term& t : other.terms_) pb.emplace_back(pack(t.mono, pl), t.coeff);
        std::unordered_map<std::uint64_t, Int, U64Hash> acc;
        acc.reserve(pa.size() + pb.size());
        for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb) {
                auto [it, inserted] = acc.try_emplace(ka + kb, Int(ca * cb));
                if (!inserted) it->second += ca * cb;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [key, coeff] : acc) {
            if (coeff == 0) continue;
            out.push_back({unpack(key, pl, unsigned(ids.size())), std::move(coeff)});
        }
        return from_terms(std::move(out));
    }

    /* Generic kernel. */
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(terms_.size() + other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_) {
            Monomial m = a.mono * b.mono;
            auto [it, inserted] = acc.try_emplace(std::move(m), Int(a.coeff * b.coeff));
            if (!inserted) it->second += a.coeff * b.coeff;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
        if (coeff == 0) continue;
        out.push_back({mono, std::move(coeff)});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::operator*(const Int& scalar) const {
    if (scalar == 0) return {};
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coeff *= scalar;
    return out;
}

Polynomial Polynomial::pow(unsigned exp) const {
    Polynomial result = constant(Int{1});
    Polynomial base = *this;
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

Polynomial Polynomial::with_swapped(Variable a, Variable b) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.mono.with_swapped(a, b), t.coeff});
    return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(
    const std::vector<std::pair<Variable, Polynomial>>& bindings) const {
    /* Memoize powers of each replacement polynomial on demand. */
    std::map<std::uint32_t, const Polynomial*> replacement;
    for (const auto& [v, p] : bindings) replacement[v.id()] = &p;
    std::map<std::uint32_t, std::vector<Polynomial>> powers;  // powers[v][k] = p^k

    Polynomial result;
    for (const Term& t : terms_) {
        Polynomial factor = constant(t.coeff);
        Monomial untouched;
        for (const auto& e : t.mono.entries()) {
            auto it = replacement.find(e.var);
            if (it == replacement.end()) {
                untouched = untouched * Monomial::of(
                    Variable::named(Variable::name_of_id(e.var)), e.exp);
                continue;
            }
            auto& pw = powers[e.var];
            if (pw.empty()) pw.push_back(constant(Int{1}));
            while (pw.size() <= e.exp) pw.push_back(pw.back() * *it->second);
            factor *= pw[e.exp];
        }
        if (!untouched.is_one()) factor *= term(untouched, Int{1});
        result += factor;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const Term& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return Monomial::name_graded_less(b->mono, a->mono);  // descending
    });

    std::ostringstream out;
    bool first = true;
    for (const Term* t : order) {
        const bool negative = t->coeff < 0;
        Int magnitude = negative ? Int(-t->coeff) : t->coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        /* Sort the factors of the monomial by variable name. */
        auto entries = t->mono.entries();
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return Variable::name_less_ids(a.var, b.var);
        });
        bool wrote_anything = false;
        if (magnitude != 1 || entries.empty()) {
            out << magnitude.str();
            wrote_anything = true;
        }
        for (const auto& e : entries) {
            if (wrote_anything) out << "*";
            out << Variable::name_of_id(e.var);
            if (e.exp > 1) out << "^" << e.exp;
            wrote_anything = true;
        }
    }
    return out.str();
}

Polynomial exact_divide(const Polynomial& numerator, const Polynomial& divisor) {
    if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (numerator.is_zero()) return {};

    /* Leading term of the divisor under the canonical order. */
    const Polynomial::Term* lead = &divisor.terms()[0];
    for (const auto& t : divisor.terms())
        if (Monomial::name_graded_less(lead->mono, t.mono)) lead = &t;

    /* Long division with the remainder kept in a name-ordered map, so the
       current leading term is always rbegin(). */
    struct NameLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return Monomial::name_graded_less(a, b);
        }
    };
    std::map<Monomial, Int, NameLess> rem;
    for (const auto& t : numerator.terms()) rem.emplace(t.mono, t.coeff);

    std::vector<Polynomial::Term> quotient;
    while (!rem.empty()) {
        const auto& [mono, coeff] = *rem.rbegin();
        auto factor_mono = mono.divided_by(lead->mono);
        if (!factor_mono) throw std::domain_error("division is not exact");
        if (coeff % lead->coeff != 0) throw std::domain_error("division is not exact");
        Int factor_coeff = coeff / lead->coeff;
        quotient.push_back({*factor_mono, factor_coeff});
        /* rem -= factor * divisor */
        for (const auto& t : divisor.terms()) {
            Monomial m = t.mono * *factor_mono;
            Int delta = t.coeff * factor_coeff;
            auto [it, inserted] = rem.try_emplace(std::move(m), Int(-delta));
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            } else if (it->second == 0) {
                rem.erase(it);
            }
        }
    }
    return Polynomial::from_terms(std::move(quotient));
}

}  // namespace supschur
