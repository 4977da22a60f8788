#pragma once

// Complete functions and Schur functions of alphabet differences, resultants,
// the divided-difference symmetrizer, and conversion between the Schur basis
// and polynomials in the complete functions c1, c2, ...

#include "supschur/alphabet.hpp"
#include "supschur/expansion.hpp"
#include "supschur/partition.hpp"
#include "supschur/polynomial.hpp"

#include <mutex>
#include <vector>

namespace supschur {

/* Evaluates complete functions S_i(plus - minus) lazily as coefficients of
   the generating series

       sum_i S_i z^i = prod_{m in minus}(1 - m z) / prod_{a in plus}(1 - a z),

   and Schur functions as determinants |S_{c_p + p - q}| of them.  One
   Evaluator is the shared complete-function memo table for one
   specialization; it is guarded by a mutex, so a single instance may serve
   concurrent evaluations. */
class Evaluator {
  public:
    explicit Evaluator(AlphabetDifference diff);

    const AlphabetDifference& difference() const { return diff_; }

    /* 0 for i < 0, 1 for i = 0. */
    Polynomial complete(long long i) const;
    /* Arbitrary integer index sequences are allowed; the determinant
       straightens sequences that are not weakly increasing partitions
       (e.g. the index (1,-1) gives the constant -1). */
    Polynomial schur_indexed(const std::vector<long long>& index) const;
    Polynomial schur(const Partition& p) const;
    Polynomial eval(const SchurExpansion& expansion) const;

  private:
    AlphabetDifference diff_;
    std::vector<Polynomial> numerator_;    // z-coefficients of prod (1 - m z)
    std::vector<Polynomial> denominator_;  // z-coefficients of prod (1 - a z)
    mutable std::mutex mutex_;
    mutable std::vector<Polynomial> cache_;  // cache_[i] = S_i for i >= 0
    void extend_cache(std::size_t order) const;  // caller holds mutex_
};

/* One-shot conveniences; each constructs a throwaway Evaluator. */
Polynomial complete(long long i, const AlphabetDifference& d);
Polynomial schur(const Partition& I, const AlphabetDifference& d);
Polynomial schur_indexed(const std::vector<long long>& index, const AlphabetDifference& d);
Polynomial eval_expansion(const SchurExpansion& T, const AlphabetDifference& d);

/* R(A,B) = prod_{a in A, b in B} (a - b); the empty product is 1. */
Polynomial resultant(const Alphabet& a, const Alphabet& b);

/* pi(f) = (x1 f(x1,x2) - x2 f(x2,x1)) / (x1 - x2).  Sends the monomial
   x1^j x2^i to S_{i,j}(x1 + x2); variables other than the chosen pair pass
   through as scalars.  The division is exact for every polynomial input;
   a nonzero remainder would signal an internal bug and throws. */
Polynomial pi_symmetrizer(const Polynomial& f, Variable x1, Variable x2);
/* Same, on the conventional variables named "x1" and "x2". */
Polynomial pi_symmetrizer(const Polynomial& f);

/* Expands each S_I through its determinant with the symbol c_k substituted
   for the k-th complete function, yielding a polynomial in the variables
   c1, c2, ...  For every specialization d,
   substitute_chern(to_chern_monomials(T), Evaluator(d)) == eval_expansion(T, d). */
Polynomial to_chern_monomials(const SchurExpansion& T);
/* Replaces each variable named c<k> by ev.complete(k). */
Polynomial substitute_chern(const Polynomial& chern_poly, const Evaluator& ev);

/* Determinant of a square polynomial matrix by cofactor expansion with
   subset-memoized minors (intended for the small matrices of Schur
   determinants). */
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix);

}  // namespace supschur
