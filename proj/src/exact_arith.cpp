#include "soltower/exact_arith.hpp"

#include "soltower/errors.hpp"

namespace soltower {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  return text;
}

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_decimal_integer(text))
    throw Error(Errc::InvalidInput, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw Error(Errc::InvalidInput, "signed denominator: '" + std::string(text) + "'");
  return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& value) {
  if (value.get_den() == 1) return Rational(0);
  Integer rem;
  mpz_fdiv_r(rem.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  // rem/den is already reduced: gcd(rem, den) == gcd(num, den) == 1.
  return Rational(rem, value.get_den());
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  // Iterative Euclid on (a, b) tracking Bezout coefficients.
  Integer old_r = a, r = b;
  Integer old_x = 1, x = 0;
  Integer old_y = 0, y = 1;
  while (r != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 0) return std::nullopt;
  if (m == 1) return Integer(0);
  const ExtendedGcd e = extended_gcd(mod_floor(a, m), m);
  if (e.g != 1) return std::nullopt;
  return mod_floor(e.x, m);
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 63)
    throw Error(Errc::SizeGuardExceeded, "value " + value.get_str() + " exceeds 63 bits");
  // mpz_get_ui only guarantees unsigned long; assemble from 32-bit halves.
  const Integer high = value >> 32;
  const Integer low = value - (high << 32);
  std::uint64_t out = (static_cast<std::uint64_t>(high.get_ui()) << 32) |
                      static_cast<std::uint64_t>(low.get_ui());
  return out;
}

Moduli::Moduli(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::InvalidInput, "moduli list is empty");
  for (const Integer& m : values_)
    if (m < 2) throw Error(Errc::InvalidInput, "modulus " + m.get_str() + " < 2");
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (gcd(values_[i], values_[j]) != 1)
        throw Error(Errc::ModuliNotCoprime,
                    values_[i].get_str() + " and " + values_[j].get_str() +
                        " share a factor");
}

Integer Moduli::max() const {
  Integer out = values_.front();
  for (const Integer& m : values_)
    if (m > out) out = m;
  return out;
}

Integer Moduli::product_power(unsigned long exponent) const {
  Integer out = 1;
  for (const Integer& m : values_) out *= pow(m, exponent);
  return out;
}

Integer crt_solve(std::span<const Integer> residues,
                  std::span<const Integer> moduli) {
  if (residues.size() != moduli.size() || residues.empty())
    throw Error(Errc::InvalidInput, "crt_solve needs equal, nonempty lists");
  for (const Integer& m : moduli)
    if (m < 1) throw Error(Errc::InvalidInput, "modulus " + m.get_str() + " < 1");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (gcd(moduli[i], moduli[j]) != 1)
        throw Error(Errc::ModuliNotCoprime,
                    moduli[i].get_str() + " and " + moduli[j].get_str() +
                        " share a factor");

  // Fold congruences pairwise: x = a (mod big) and x = b (mod m) give
  // x = a + big * ((b - a) * big^{-1} mod m).
  Integer x = mod_floor(residues[0], moduli[0]);
  Integer big = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const Integer& m = moduli[i];
    const ExtendedGcd e = extended_gcd(big, m);
    const Integer t = mod_floor((residues[i] - x) * e.x, m);
    x += big * t;
    big *= m;
    x = mod_floor(x, big);
  }
  return x;
}

MAdicDecomposition paper_decomposition(const Integer& s, const Integer& m) {
  if (s == 0) throw Error(Errc::InvalidInput, "paper_decomposition needs s != 0");
  if (m < 2) throw Error(Errc::InvalidInput, "paper_decomposition needs m >= 2");
  // gcd(q, m) == 1 forces m not to divide q, so only the maximal alpha with
  // m^alpha | s can work.
  MAdicDecomposition out{0, s};
  while (out.q % m == 0) {
    out.q /= m;
    ++out.alpha;
  }
  if (gcd(out.q, m) != 1)
    throw Error(Errc::NoDecomposition,
                "no alpha with " + s.get_str() + " = " + m.get_str() +
                    "^alpha * q and gcd(q, m) = 1");
  return out;
}

bool gcd_certificate_condition(const Integer& s, const Integer& m,
                               unsigned long n) {
  const Integer g = gcd(s, pow(m, n + 1));
  return pow(m, n) % g == 0;
}

}  // namespace soltower
