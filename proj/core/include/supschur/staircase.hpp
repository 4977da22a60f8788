#pragma once

// Pascal staircases: Pascal-triangle variants with a prescribed staircase of
// zeros and an arbitrary first column, the functions W(n, A) built from
// them, and verifiers for the identities they satisfy (geometric-seed
// product form, its alphabet-extended corollary, and the specialization
// that recovers V_r(X2; 0)).

#include "supschur/alphabet.hpp"
#include "supschur/bigint.hpp"
#include "supschur/polynomial.hpp"
#include "supschur/verification.hpp"

#include <vector>

namespace supschur {

/* First column of a staircase: either explicit entries v_1, v_2, ... or the
   Taylor coefficients of a rational function (numerator and denominator
   z-coefficient lists; the denominator constant term must be 1). */
class Seed {
  public:
    static Seed explicit_entries(std::vector<Polynomial> entries);
    static Seed rational(std::vector<Polynomial> numerator,
                         std::vector<Polynomial> denominator);
    static Seed rational_integers(const std::vector<Int>& numerator,
                                  const std::vector<Int>& denominator);

    /* v_1..v_count; an explicit seed must hold at least count entries. */
    std::vector<Polynomial> entries(std::size_t count) const;

  private:
    Seed() = default;
    bool rational_ = false;
    std::vector<Polynomial> numerator_;  // or the explicit entries
    std::vector<Polynomial> denominator_;
};

/* P = [p_{s,t}], s,t >= 1: zero above the staircase (p_{s,t} = 0 for
   t > (s+1)/2), first column from the seed, and every other supported entry
   given by p_{s+1,t} = p_{s,t-1} + p_{s,t}. */
class StaircaseMatrix {
  public:
    StaircaseMatrix(const Seed& seed, unsigned rows);

    unsigned rows() const { return static_cast<unsigned>(rows_.size()); }
    /* Largest supported column of row s: t ranges over 1..support_width(s). */
    static unsigned support_width(unsigned s) { return (s + 1) / 2; }
    /* 1-based (s,t); zero above the staircase; requires 1 <= s <= rows(). */
    Polynomial at(unsigned s, unsigned t) const;

  private:
    std::vector<std::vector<Polynomial>> rows_;  // rows_[s-1] holds t = 1..support_width(s)
};

/* W(n, A) = sum_{i,j} p_{n+1-i, j+1} S_i(-A) S_{(j, n-i-j)}(X2), the sum
   running over the staircase support (which keeps (j, n-i-j) a partition);
   X2 is the alphabet {x1, x2}.  Requires p.rows() >= n+1. */
Polynomial w_function(unsigned n, const Alphabet& a, const StaircaseMatrix& p);

/* The two staircases the identities use: the geometric seed 1, y, y^2, ...
   in the variable y, and the Taylor seed of (5-6z)/((1-z)(1-2z)(1-3z)). */
StaircaseMatrix geometric_staircase(unsigned rows);
StaircaseMatrix f_staircase(unsigned rows);

/* For the geometric staircase, checks the exact identity

     W(n, [x1+x2] + B) = (y-1) sum_{k=0}^{n-1} y^{n-1-k} S_{n-k}(X2) S_k(-B)
                         + S_n(-B)

   (the trailing term vanishes whenever n > |B|, where the identity is also
   checked without it). */
VerificationReport verify_corollary(unsigned n, const Alphabet& b);

/* With n = r-2: checks that W(n, D) over the f-seeded staircase equals both
   v_function(r, false) and the closed value 3^{n+1} S_n(X2) -
   2*3^n S_{1,n-1}(X2). */
VerificationReport verify_appendix_application(unsigned r);

}  // namespace supschur
