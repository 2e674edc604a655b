#include "tailmatch/numeric.hpp"

#include <utility>

#include "tailmatch/errors.hpp"

namespace tailmatch {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

RootInterval bisect_exact(const ExactFunction& f, Rational lo, Rational hi,
                          const Rational& eps) {
  if (eps.sign() <= 0) throw PreconditionError("bisect_exact: eps must be positive");
  if (!(lo < hi)) std::swap(lo, hi);
  if (lo == hi) throw BracketError("bisect_exact: empty bracket");

  const int sign_lo = f(lo).sign();
  const int sign_hi = f(hi).sign();
  if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi) {
    throw BracketError("bisect_exact: f(" + lo.str() + ") and f(" + hi.str() +
                       ") do not have strictly opposite signs");
  }

  const Rational two(2);
  while (hi - lo > eps) {
    const Rational mid = (lo + hi) / two;
    const int s = f(mid).sign();
    if (s == sign_lo) {
      lo = mid;
    } else if (s == sign_hi) {
      hi = mid;
    } else {
      // Exact root at mid: shrink a symmetric bracket until both ends
      // recover their strict signs.
      Rational delta = min(eps, hi - lo) / Rational(4);
      for (;;) {
        const Rational a = mid - delta;
        const Rational b = mid + delta;
        if (f(a).sign() == sign_lo && f(b).sign() == sign_hi) return {a, b};
        delta /= two;
        if (delta.denominator() > BigInt(1) << 4096) {
          throw BracketError("bisect_exact: root at " + mid.str() +
                             " is not a sign change");
        }
      }
    }
  }
  return {lo, hi};
}

}  // namespace tailmatch
