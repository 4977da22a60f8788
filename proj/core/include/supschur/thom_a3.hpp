#pragma once

// Construction of the A3 Thom polynomials T_r = F_r + H_r and exact
// verification of the restriction equations that characterize them: the
// coefficient table e_{i,j}, the 1-part F_r, the 2-part H_r (recursive and
// closed builds), the quotient functions U_r and V_r, and the five-equation
// restriction verifier.

#include "supschur/alphabet.hpp"
#include "supschur/bigint.hpp"
#include "supschur/expansion.hpp"
#include "supschur/partition.hpp"
#include "supschur/polynomial.hpp"
#include "supschur/verification.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace supschur {

/* First n Taylor coefficients of (5 - 6z) / ((1-z)(1-2z)(1-3z)):
   5, 24, 89, 300, 965, 3024, 9329, ... */
std::vector<Int> taylor_seed(unsigned n);

/* The integer table e_{i,j} (i >= 2, j >= 0): first column taylor_seed,
   zero above the staircase support j <= (i-2)/2 (the zero pattern overrides
   the recursion), remaining entries e_{i+1,j} = e_{i,j-1} + e_{i,j}. */
class ETable {
  public:
    explicit ETable(unsigned max_i);  // rows i = 2..max_i
    unsigned max_i() const { return max_i_; }
    /* Width of the supported part of row i: j ranges over 0..(i-2)/2. */
    static unsigned support_width(unsigned i) { return (i - 2) / 2; }
    /* 0 above the staircase; requires 2 <= i <= max_i. */
    Int at(unsigned i, unsigned j) const;

  private:
    unsigned max_i_;
    std::vector<std::vector<Int>> rows_;  // rows_[i-2] holds j = 0..support_width(i)
};

/* Table entry by the recursion (builds a fresh table up to row i). */
Int e_recursive(unsigned i, unsigned j);

/* Table entry by the closed formula

     e_{i,j} = (1/2^{j+1}) [ (3^{i+1} - 3^{2(j+1)}) - (2^{i+j+2} - 2^{3(j+1)})
               - sum_{s=1}^{j} 2^s (3^{2(j-s+1)} - 2^{3(j-s+1)}) J_s(i-2j-1) ],

   where J_0 = 1 and J_s(w) = C(w+2(s-1), s) - sum_{a=1}^{s-1} C(2a,a-1)
   J_{s-1-a}(w), with C(n,k) = 0 for k < 0, n < 0, or n < k.  Requires the
   support 2 <= i, 2j <= i-2; the trailing division must be exact (throws
   std::domain_error otherwise). */
Int e_closed(unsigned i, unsigned j);

/* The two-row partition (i+1+j, 2i-1-j) indexing the 2-part corrections;
   requires the support 2j <= i-2. */
Partition i_partition(unsigned i, unsigned j);

/* The 1-part: F_r = sum_{0 <= j1 <= j2 <= r} S_{j1,j2}({2,3}) *
   S_{(r-j2, r-j1, r+j1+j2)}, duplicates merged. */
SchurExpansion f_part(unsigned r);

/* Top corrections of one r: sum_j e_{r,j} S_{i_partition(r,j)} (r >= 2). */
SchurExpansion h_bar(unsigned r);

/* The 2-part H_r.  h_part2 computes both builds and throws std::logic_error
   if they ever disagree. */
SchurExpansion h_part2_recursive(unsigned r);  // H_1 = 0; H_r = h_bar(r) + shift(H_{r-1})
SchurExpansion h_part2_closed(unsigned r);     // double sum over e_{r-i,j}
SchurExpansion h_part2(unsigned r);

/* T_r = f_part(r) + h_part2(r), for r >= 1. */
SchurExpansion thom_a3(unsigned r);

/* Group the terms of T by Partition::h_class(r); the parts sum back to T.
   Terms whose partition does not contain the row (r) land under key 0. */
std::map<unsigned, SchurExpansion> h_decompose(const SchurExpansion& T, unsigned r);

/* The standard alphabets of the restriction equations. */
Alphabet x_alphabet();                 // the single ordinary letter x
Alphabet x2_alphabet();                // ordinary letters x1, x2
Alphabet d_alphabet();                 // boxed letters 2x1, 2x2, x1+x2
Alphabet b_alphabet(unsigned n);       // ordinary letters b1..bn
Alphabet zero_letters(unsigned n);     // n copies of the zero form

/* One restriction equation: evaluate the candidate at specialization(r) and
   compare with expected(r). */
struct SingularitySpec {
    std::string name;  // A0, A1, A2, A3, III22
    unsigned min_r;    // the III22 equation exists only for r >= 2
    std::function<AlphabetDifference(unsigned)> specialization;
    std::function<Polynomial(unsigned)> expected;
};

/* The five equations: T(-B_{r-1}) = 0; T(x - B_{r-1} - [2x]) = 0;
   T(x - B_{r-1} - [3x]) = 0; T(x - B_{r-1} - [4x]) = R(x + [2x] + [3x],
   B_{r-1} + [4x]); T(x1 + x2 - D - B_{r-2}) = 0. */
const std::vector<SingularitySpec>& restriction_checks();

/* Evaluate every applicable restriction equation exactly, in generic
   variables.  jobs > 1 runs the checks concurrently; the report order is
   deterministic regardless. */
VerificationReport verify_restriction(const SchurExpansion& T, unsigned r, unsigned jobs = 1);

/* V_r = H_r(X2 - D - B_{r-2}) / R(X2, D + B_{r-2}), computed both as the
   explicit double sum sum e_{r-i,j} S_i(-D - B_{r-2}) S_{(j, r-i-j-2)}(X2)
   and by exact division; throws std::logic_error if the two disagree.
   with_b = false specializes the B-letters to the zero form ("V_r(X2; 0)"). */
Polynomial v_function(unsigned r, bool with_b);

/* U_r = F_r(X2 - D - B_{r-2}) / R(X2, D + B_{r-2}) by exact division;
   with_b = false as above. */
Polynomial u_function(unsigned r, bool with_b);

/* The closed value 3^{r-2} (3 S_{r-2}(X2) - 2 S_{1,r-3}(X2)) that
   v_function(r, false) must equal (generalized indices at r = 2, 3). */
Polynomial v_closed_form(unsigned r);

}  // namespace supschur
