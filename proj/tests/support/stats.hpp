#pragma once

#include <cstddef>

namespace testsupport {

// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// P[Chi2(df) >= stat].
double chi_square_pvalue(double stat, std::size_t df);

}  // namespace testsupport
