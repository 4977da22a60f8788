#pragma once

// Monomials: finite exponent maps over interned variables, stored as an
// id-sorted vector of (variable, exponent) pairs with exponent > 0.  The
// empty monomial is 1.

#include "supschur/variable.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <optional>

namespace supschur {

class Monomial {
  public:
    struct Entry {
        std::uint32_t var;  // Variable id
        std::uint32_t exp;  // > 0
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    using Entries = boost::container::small_vector<Entry, 4>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial of(Variable v, std::uint32_t exp = 1);

    bool is_one() const { return entries_.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t exponent(Variable v) const;
    const Entries& entries() const { return entries_; }

    Monomial operator*(const Monomial& other) const;
    /* this / other, or nullopt when other does not divide this. */
    std::optional<Monomial> divided_by(const Monomial& other) const;

    /* Exchange the roles of two variables (used by the x1 <-> x2 flip). */
    Monomial with_swapped(Variable a, Variable b) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.entries_ == b.entries_;
    }

    std::size_t hash() const;

    /* Graded comparison, ties broken lexicographically: the monomial with the
       larger exponent on the earliest variable (under the given variable
       order) is the larger monomial.  id flavor = internal storage order,
       name flavor = canonical output order. */
    static bool id_graded_less(const Monomial& a, const Monomial& b);
    static bool name_graded_less(const Monomial& a, const Monomial& b);

  private:
    Entries entries_;

    template <class VarLess>
    static bool graded_less(const Monomial& a, const Monomial& b, VarLess less);
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace supschur
