#pragma once

// Formal integer combinations of Schur functions indexed by partitions.
// This is the exchange format of the whole library: constructions produce
// expansions, specializations consume them.

#include "supschur/bigint.hpp"
#include "supschur/partition.hpp"

#include <map>
#include <string>
#include <string_view>

namespace supschur {

class SchurExpansion {
  public:
    SchurExpansion() = default;  // empty (the zero combination)
    static SchurExpansion single(Partition p, Int coeff = Int{1});

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Partition, Int>& terms() const { return terms_; }
    Int coefficient(const Partition& p) const;

    /* Common weight of the indexing partitions; 0 when empty; throws
       std::domain_error when the expansion is inhomogeneous. */
    unsigned weight() const;

    SchurExpansion operator+(const SchurExpansion& other) const;
    SchurExpansion operator-(const SchurExpansion& other) const;
    SchurExpansion operator*(const Int& scalar) const;
    SchurExpansion& operator+=(const SchurExpansion& other) { return *this = *this + other; }
    void add(Partition p, Int coeff);

    /* Apply the index shift (i1,i2,i3) -> (i1+1,i2+1,i3+1) to every term. */
    SchurExpansion phi_shifted() const;

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    /* "S_{111} + 5 S_{12} + 6 S_{3}"; descending display order (the order
       published tables use). */
    std::string to_text() const;
    /* "5S_{144}+24S_{45}"; subscripts use commas as soon as any part is >= 10
       and juxtaposed digits otherwise; single-character subscripts drop the
       braces (S_3). */
    std::string to_latex() const;

    /* {"weight": w, "terms": [{"partition": [...], "coeff": n}, ...]} with
       terms ascending by partition; coefficients emitted as JSON numbers when
       they fit in 64 bits and as decimal strings beyond that. */
    std::string to_json_string(int indent = 2) const;
    static SchurExpansion from_json_string(std::string_view text);

  private:
    std::map<Partition, Int> terms_;  // ascending; zero coefficients never stored
};

}  // namespace supschur
