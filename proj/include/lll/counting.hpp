#pragma once

#include <cstddef>
#include <vector>

#include "lll/rational.hpp"

namespace lll {

// Number of full (d+1)-ary rooted planar trees with n internal nodes:
// binomial((d+1)n, n) / (dn + 1).
BigInt count_tn(int d, std::size_t n);
std::vector<BigInt> t_sequence(int d, std::size_t n_max);

// Number of rooted planar forests of m full (d+1)-ary trees with n internal
// nodes in total: the m-fold convolution of the t-sequence.
BigInt count_fn(int d, std::size_t m, std::size_t n);
std::vector<BigInt> f_sequence(int d, std::size_t m, std::size_t n_max);

// (1+1/d)^d * (d+1) * p, the base of the exponential tail; 1 * 1 * p at d=0.
double growth_base(int d, double p);

struct BoundReport {
  BigInt fn;
  Rational fn_pn;  // rigorous tail bound on the n-round survival probability
  double growth;
};
BoundReport bound_report(int d, std::size_t m, std::size_t n, const Rational& p);

}  // namespace lll
