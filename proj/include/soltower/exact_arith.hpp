#pragma once

/*
 * Exact integer and rational arithmetic.
 *
 * Integers and rationals are GMP values; mpq_class results are always kept
 * in canonical form (positive denominator, coprime numerator), so equality
 * of two Rationals is equality of the numbers they denote.
 *
 * On top of that this header provides the number theory the certificates
 * need: extended gcd, modular inverses, the Chinese Remainder solver, and
 * the m-adic split s = m^alpha * q.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace soltower {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced; throws InvalidInput when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q" or "p" with optional leading sign.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Always "p/q", also for integral values ("3/1").
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
// value - floor(value), in [0, 1).
Rational frac(const Rational& value);
bool is_integer(const Rational& value);
Rational abs(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
// Least nonnegative residue of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);

struct ExtendedGcd {
  Integer g;  // gcd(a, b) >= 0
  Integer x;  // a*x + b*y == g
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Inverse of a modulo m, if gcd(a, m) == 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

// Converts values in [0, 2^63) to uint64, throwing SizeGuardExceeded otherwise.
std::uint64_t to_u64(const Integer& value);

// The pairwise co-prime exponents (m_1, ..., m_r) of the torus self-cover.
class Moduli {
 public:
  // Throws InvalidInput (empty, some m_i < 2) or ModuliNotCoprime.
  explicit Moduli(std::vector<Integer> values);

  std::size_t size() const { return values_.size(); }
  const Integer& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Integer>& values() const { return values_; }
  Integer max() const;
  // prod_i m_i^exponent
  Integer product_power(unsigned long exponent) const;

  friend bool operator==(const Moduli& a, const Moduli& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Integer> values_;
};

struct MAdicDecomposition {
  unsigned long alpha = 0;
  Integer q;
};

// Least x >= 0 with x = residues[i] (mod moduli[i]) for all i; x < prod moduli.
// Throws ModuliNotCoprime, or InvalidInput on length mismatch / modulus < 1.
Integer crt_solve(std::span<const Integer> residues,
                  std::span<const Integer> moduli);

// s = m^alpha * q with gcd(q, m) == 1. Such an alpha is unique when it
// exists; for composite m it may not (s = 2, m = 4) and NoDecomposition is
// thrown.
MAdicDecomposition paper_decomposition(const Integer& s, const Integer& m);

// True iff gcd(s, m^(n+1)) divides m^n, i.e. s*k = j*m^n (mod m^(n+1)) is
// solvable in k for every j.
bool gcd_certificate_condition(const Integer& s, const Integer& m,
                               unsigned long n);

}  // namespace soltower
