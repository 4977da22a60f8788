// Partitions stored as weakly increasing tuples: canonicalization, conjugate,
// containment, the length-3 shift, and rectangle classification.

#include <doctest.h>

#include <supschur/partition.hpp>

#include "test_support.hpp"

using namespace supschur;
using namespace supschur::testing;

TEST_SUITE("partition") {

TEST_CASE("construction canonicalizes and validates") {
    CHECK(Partition{0, 0, 2} == Partition{2});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.weight() == 0);
    CHECK_THROWS_AS(Partition(std::vector<unsigned>{3, 1}), std::invalid_argument);
    Partition p{1, 2, 3};
    CHECK(p.length() == 3);
    CHECK(p.weight() == 6);
    CHECK(p.largest() == 3);
    CHECK(p.to_string() == "(1,2,3)");
    CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("rectangle") {
    CHECK(Partition::rectangle(3, 2) == Partition{3, 3});
    CHECK(Partition::rectangle(4, 1) == Partition{4});
    CHECK(Partition::rectangle(2, 0) == Partition{});
}

TEST_CASE("conjugate fixtures") {
    CHECK(Partition{3}.conjugate() == Partition{1, 1, 1});
    CHECK(Partition{1, 1, 1}.conjugate() == Partition{3});
    CHECK(Partition{1, 2, 3}.conjugate() == Partition{1, 2, 3});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{1, 3}.conjugate() == Partition{1, 1, 2});
}

TEST_CASE("conjugate is a weight-preserving involution, randomized") {
    auto g = rng_for(21);
    for (unsigned k = 0; k < 200; ++k) {
        Partition p = random_partition(g, 5, 7);
        CAPTURE(p.to_string());
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
    }
}

TEST_CASE("containment is diagram inclusion") {
    CHECK(Partition{1, 2}.contains(Partition{1, 1}));
    CHECK(Partition{1, 2}.contains(Partition{}));
    CHECK(Partition{1, 2}.contains(Partition{2}));
    CHECK_FALSE(Partition{1, 2}.contains(Partition{3}));
    CHECK_FALSE(Partition{2}.contains(Partition{1, 1}));
    CHECK_FALSE(Partition{2, 2}.contains(Partition{1, 1, 1}));
}

TEST_CASE("containment is a partial order, randomized") {
    auto g = rng_for(22);
    for (unsigned k = 0; k < 200; ++k) {
        Partition a = random_partition(g, 4, 5);
        Partition b = random_partition(g, 4, 5);
        Partition c = random_partition(g, 4, 5);
        CHECK(a.contains(a));
        if (a.contains(b) && b.contains(a)) CHECK(a == b);
        if (a.contains(b) && b.contains(c)) CHECK(a.contains(c));
        // Conjugation is monotone for inclusion.
        if (a.contains(b)) CHECK(a.conjugate().contains(b.conjugate()));
    }
}

TEST_CASE("three-row shift pads then increments") {
    CHECK(Partition{1, 2}.phi_shift() == Partition{1, 2, 3});
    CHECK(Partition{3, 3}.phi_shift() == Partition{1, 4, 4});
    CHECK(Partition{}.phi_shift() == Partition{1, 1, 1});
    CHECK(Partition{4, 5}.phi_shift() == Partition{1, 5, 6});
    Partition four_rows{1, 1, 1, 1};
    CHECK_THROWS_AS(four_rows.phi_shift(), std::invalid_argument);
}

TEST_CASE("rectangle class within a fixed grading") {
    // Largest h with ((r+h-1)^h) inside the partition; 0 when (r) is absent.
    CHECK(Partition{3, 3}.h_class(2) == 2);
    CHECK(Partition{3, 3}.h_class(3) == 1);
    CHECK(Partition{2, 2, 2}.h_class(2) == 1);
    CHECK(Partition{1, 2, 3}.h_class(2) == 1);
    CHECK(Partition{1, 1, 1}.h_class(2) == 0);
    CHECK(Partition{4, 4, 4}.h_class(2) == 3);
    CHECK(Partition{1, 4, 4}.h_class(3) == 2);
    CHECK(Partition{}.h_class(1) == 0);
}

TEST_CASE("ordering is total and consistent with equality, randomized") {
    auto g = rng_for(23);
    for (unsigned k = 0; k < 200; ++k) {
        Partition a = random_partition(g, 4, 5);
        Partition b = random_partition(g, 4, 5);
        CHECK((a < b || b < a || a == b));
        CHECK_FALSE((a < b && b < a));
        CHECK_FALSE(a < a);
    }
}

}  // TEST_SUITE
