#include "supschur/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supschur {

Partition::Partition(std::initializer_list<unsigned> parts)
    : parts_(parts) {
    canonicalize();
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    canonicalize();
}

void Partition::canonicalize() {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] > parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly increasing");
    parts_.erase(parts_.begin(),
                 std::find_if(parts_.begin(), parts_.end(), [](unsigned p) { return p > 0; }));
}

Partition Partition::rectangle(unsigned p, unsigned h) {
    if (p == 0) return {};
    return Partition(std::vector<unsigned>(h, p));
}

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    const unsigned height = largest();
    /* Column k of the diagram (1-based) has as many boxes as there are parts
       >= k; collecting those counts for k = height..1 gives the conjugate in
       increasing order. */
    std::vector<unsigned> out;
    out.reserve(height);
    for (unsigned k = height; k >= 1; --k) {
        unsigned count = 0;
        for (unsigned p : parts_)
            if (p >= k) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    /* Align from the largest end: back() against back(), etc. */
    for (std::size_t k = 0; k < other.length(); ++k)
        if (parts_[length() - 1 - k] < other.parts_[other.length() - 1 - k]) return false;
    return true;
}

Partition Partition::phi_shift() const {
    if (length() > 3)
        throw std::invalid_argument("phi_shift: partition longer than 3");
    std::vector<unsigned> out(3, 0);
    std::copy(parts_.begin(), parts_.end(), out.begin() + (3 - length()));
    for (unsigned& p : out) ++p;
    return Partition(std::move(out));
}

unsigned Partition::h_class(unsigned r) const {
    if (!contains(rectangle(r, 1))) return 0;
    unsigned h = 1;
    while (contains(rectangle(r + h, h + 1))) ++h;
    return h;
}

bool operator<(const Partition& a, const Partition& b) {
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t k = 0; k < n; ++k) {
        /* Part k of the zero-padded tuple of length n. */
        const unsigned pa = k + a.length() >= n ? a.parts_[k + a.length() - n] : 0;
        const unsigned pb = k + b.length() >= n ? b.parts_[k + b.length() - n] : 0;
        if (pa != pb) return pa < pb;
    }
    return false;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

}  // namespace supschur
