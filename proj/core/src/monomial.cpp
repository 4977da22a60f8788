#include "supschur/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace supschur {

Monomial Monomial::of(Variable v, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) m.entries_.push_back({v.id(), exp});
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const Entry& e : entries_) d += e.exp;
    return d;
}

std::uint32_t Monomial::exponent(Variable v) const {
    for (const Entry& e : entries_)
        if (e.var == v.id()) return e.exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = other.entries_.begin(), be = other.entries_.end();
    while (a != ae && b != be) {
        if (a->var < b->var) {
            out.entries_.push_back(*a++);
        } else if (b->var < a->var) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.push_back({a->var, a->exp + b->exp});
            ++a, ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, ae);
    out.entries_.insert(out.entries_.end(), b, be);
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    auto a = entries_.begin(), ae = entries_.end();
    auto b = other.entries_.begin(), be = other.entries_.end();
    while (b != be) {
        if (a == ae || a->var > b->var) return std::nullopt;  // divisor var missing
        if (a->var < b->var) {
            out.entries_.push_back(*a++);
            continue;
        }
        if (a->exp < b->exp) return std::nullopt;
        if (a->exp > b->exp) out.entries_.push_back({a->var, a->exp - b->exp});
        ++a, ++b;
    }
    out.entries_.insert(out.entries_.end(), a, ae);
    return out;
}

Monomial Monomial::with_swapped(Variable a, Variable b) const {
    Monomial out = *this;
    for (Entry& e : out.entries_) {
        if (e.var == a.id())
            e.var = b.id();
        else if (e.var == b.id())
            e.var = a.id();
    }
    std::sort(out.entries_.begin(), out.entries_.end(),
              [](const Entry& x, const Entry& y) { return x.var < y.var; });
    return out;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (const Entry& e : entries_) {
        h ^= (std::uint64_t(e.var) << 32) | e.exp;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

bool Monomial::id_graded_less(const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    /* Equal degree: lexicographic, earliest id first.  Walk both id-sorted
       entry lists; the first id where the exponents differ decides, and the
       larger exponent there makes the larger monomial. */
    auto i = a.entries_.begin(), ie = a.entries_.end();
    auto j = b.entries_.begin(), je = b.entries_.end();
    while (i != ie && j != je) {
        if (i->var < j->var) return false;           // a has the earlier var => a larger
        if (j->var < i->var) return true;
        if (i->exp != j->exp) return i->exp < j->exp;
        ++i, ++j;
    }
    /* One list exhausted; equal degree forces both exhausted. */
    return false;
}

template <class VarLess>
bool Monomial::graded_less(const Monomial& a, const Monomial& b, VarLess less) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    boost::container::small_vector<std::pair<std::uint32_t, int>, 8> diff;
    for (const Entry& e : a.entries_) diff.emplace_back(e.var, int(e.exp));
    for (const Entry& e : b.entries_) {
        bool found = false;
        for (auto& d : diff)
            if (d.first == e.var) {
                d.second -= int(e.exp);
                found = true;
                break;
            }
        if (!found) diff.emplace_back(e.var, -int(e.exp));
    }
    std::sort(diff.begin(), diff.end(), [&](const auto& x, const auto& y) {
        return less(x.first, y.first);
    });
    for (const auto& [var, delta] : diff) {
        if (delta > 0) return false;  // a has the larger exponent on the earliest variable
        if (delta < 0) return true;
    }
    return false;
}

bool Monomial::name_graded_less(const Monomial& a, const Monomial& b) {
    return graded_less(a, b, &Variable::name_less_ids);
}

}  // namespace supschur
