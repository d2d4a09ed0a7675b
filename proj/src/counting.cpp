#include "lll/counting.hpp"

#include <cmath>

#include "lll/errors.hpp"

namespace lll {

BigInt count_tn(int d, std::size_t n) {
  if (d < 1) throw MalformedError("count_tn requires d >= 1");
  BigInt t;
  mpz_bin_uiui(t.get_mpz_t(), static_cast<unsigned long>(d + 1) * n, n);
  BigInt divisor = BigInt(static_cast<unsigned long>(d)) * static_cast<unsigned long>(n) + 1;
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), divisor.get_mpz_t());
  return t;
}

std::vector<BigInt> t_sequence(int d, std::size_t n_max) {
  std::vector<BigInt> t(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) t[n] = count_tn(d, n);
  return t;
}

std::vector<BigInt> f_sequence(int d, std::size_t m, std::size_t n_max) {
  const auto t = t_sequence(d, n_max);
  std::vector<BigInt> f(n_max + 1, 0);
  f[0] = 1;  // zero trees: a single empty forest
  for (std::size_t tree = 0; tree < m; ++tree) {
    std::vector<BigInt> next(n_max + 1, 0);
    for (std::size_t total = 0; total <= n_max; ++total) {
      for (std::size_t k = 0; k <= total; ++k) next[total] += f[total - k] * t[k];
    }
    f = std::move(next);
  }
  return f;
}

BigInt count_fn(int d, std::size_t m, std::size_t n) {
  return f_sequence(d, m, n)[n];
}

double growth_base(int d, double p) {
  const double factor = d == 0 ? 1.0 : std::pow(1.0 + 1.0 / d, d);
  return factor * (d + 1) * p;
}

BoundReport bound_report(int d, std::size_t m, std::size_t n, const Rational& p) {
  BoundReport report;
  report.fn = count_fn(d, m, n);
  Rational pn;
  mpz_pow_ui(mpq_numref(pn.get_mpq_t()), mpq_numref(p.get_mpq_t()), n);
  mpz_pow_ui(mpq_denref(pn.get_mpq_t()), mpq_denref(p.get_mpq_t()), n);
  pn.canonicalize();
  report.fn_pn = Rational(report.fn) * pn;
  report.growth = growth_base(d, to_double(p));
  return report;
}

}  // namespace lll
