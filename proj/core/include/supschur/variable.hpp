#pragma once

// Global variable interning.  Variables are identified by name alone; there
// is no ring object to construct or thread through calls.  A Variable is a
// small handle (an index into the process-wide registry) and is cheap to
// copy and compare.
//
// Two orderings exist on purpose:
//   * id order      -- registration order; stable within a run, used for the
//                      internal sorted storage of monomials;
//   * name order    -- lexicographic on names; independent of registration
//                      order, used for canonical (user-visible) term order.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace supschur {

class Variable {
  public:
    /* Intern a variable by name, creating it on first use. */
    static Variable named(std::string_view name);

    /* Intern "stem1".."stemN"; convenience for generic alphabets. */
    static std::vector<Variable> sequence(std::string_view stem, unsigned count);

    const std::string& name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
    friend bool operator!=(Variable a, Variable b) { return a.id_ != b.id_; }
    /* id order (see header comment); use name_less for canonical order. */
    friend bool operator<(Variable a, Variable b) { return a.id_ < b.id_; }

    /* Canonical order: lexicographic comparison of names. */
    static bool name_less(Variable a, Variable b);
    static bool name_less_ids(std::uint32_t a, std::uint32_t b);
    static const std::string& name_of_id(std::uint32_t id);

  private:
    explicit Variable(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

}  // namespace supschur
