#pragma once

// Partitions in the weakly increasing convention: (i1 <= i2 <= ... <= is),
// all parts nonnegative, stored canonically with zero parts stripped.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace supschur {

class Partition {
  public:
    Partition() = default;  // the empty partition
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts);
    /* h copies of the part p (the h x p rectangle); p = 0 or h = 0 gives the
       empty partition. */
    static Partition rectangle(unsigned p, unsigned h);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    unsigned weight() const;
    unsigned largest() const { return parts_.empty() ? 0 : parts_.back(); }

    /* Transpose of the Young diagram. */
    Partition conjugate() const;

    /* Diagram containment, parts compared aligned from the largest end. */
    bool contains(const Partition& other) const;

    /* (i1,i2,i3) -> (i1+1, i2+1, i3+1), padding with zeros to length 3 first.
       Throws std::invalid_argument when length > 3. */
    Partition phi_shift() const;

    /* The largest h >= 1 such that this partition contains the rectangle
       ((r+h-1)^h); 0 when it does not even contain (r). */
    unsigned h_class(unsigned r) const;

    friend bool operator==(const Partition&, const Partition&) = default;

    /* Total order: lexicographic on the increasing part tuples after padding
       with leading zeros to a common length.  This single comparator drives
       both the ascending JSON order and (reversed) the display order used to
       diff against published tables. */
    friend bool operator<(const Partition& a, const Partition& b);

    /* "(i1,i2,...)"; "()" for the empty partition. */
    std::string to_string() const;

  private:
    std::vector<unsigned> parts_;
    void canonicalize();
};

}  // namespace supschur
