#include "ricci/rational.hpp"

#include <algorithm>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

Rational pow2_rational(const Integer& e) {
  if (!e.fits_slong_p()) throw ScaleError("exponent of 2 out of range");
  long k = e.get_si();
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ArgumentError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational gen_binomial(const Rational& s, unsigned i) {
  Rational out = 1;
  for (unsigned j = 0; j < i; ++j) {
    out *= (s - j);
    out /= (j + 1);
  }
  return out;
}

Rational binomial_partial_sum(const Rational& s, unsigned up_to) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i <= up_to; ++i) {
    if (i > 0) {
      term *= (s - (i - 1));
      term /= i;
    }
    sum += term;
  }
  return sum;
}

Enclosure pow2_enclosure(const Rational& s, unsigned bits) {
  Integer whole = floor(s);
  Rational frac = s - whole;
  Rational scale = pow2_rational(whole);
  if (frac == 0) return {scale, scale, bits};

  // 2^frac = 2^(a/q) lies in [1, 2). Find the largest k in [2^bits, 2^(bits+1))
  // with k^q <= 2^(a + bits*q), i.e. k / 2^bits <= 2^frac.
  if (!frac.get_den().fits_ulong_p()) throw ScaleError("exponent denominator too large");
  unsigned long q = frac.get_den().get_ui();
  unsigned long a = frac.get_num().get_ui();
  Integer target = 1;
  mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), a + static_cast<unsigned long>(bits) * q);

  Integer lo = 1, hi = 1;
  mpz_mul_2exp(lo.get_mpz_t(), lo.get_mpz_t(), bits);
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), bits + 1);
  // invariant: lo^q <= target < hi^q
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (pow(mid, q) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Integer denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  Rational lower(lo, denom), upper(hi, denom);
  lower.canonicalize();
  upper.canonicalize();
  // An exact hit would make 2^frac rational with 0 < frac < 1, which cannot
  // happen, so the bracket is strict.
  return {lower * scale, upper * scale, bits};
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "less";
    case Ordering::Equal:
      return "equal";
    case Ordering::Greater:
      return "greater";
    case Ordering::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Pow2Comparison compare_with_pow2(const Rational& value, const Rational& s, const Rational& offset,
                                 unsigned max_bits) {
  if (is_integer(s)) {
    Enclosure e = pow2_enclosure(s, 0);
    e.lower += offset;
    e.upper += offset;
    Ordering o = value < e.lower ? Ordering::Less : value == e.lower ? Ordering::Equal : Ordering::Greater;
    return {o, e};
  }
  Enclosure e;
  for (unsigned bits = 32;; bits *= 2) {
    bits = std::min(bits, max_bits);
    e = pow2_enclosure(s, bits);
    e.lower += offset;
    e.upper += offset;
    if (value < e.lower) return {Ordering::Less, e};
    if (value > e.upper) return {Ordering::Greater, e};
    if (bits >= max_bits) break;
  }
  return {Ordering::Inconclusive, e};
}

BoundComparison check_noninteger_lemma(const Rational& s, unsigned max_bits) {
  if (s < 1) throw ArgumentError("s must be at least 1, got " + to_string(s));
  if (is_integer(s)) {
    throw ArgumentError("s = " + to_string(s) + " is an integer; the sum equals 2^s exactly there");
  }
  auto upto = static_cast<unsigned>(floor(s).get_ui() + 1);
  Rational lhs = binomial_partial_sum(s, upto);
  Rational extra = 1 / (4 * (s + 1));
  extra.canonicalize();
  auto cmp = compare_with_pow2(lhs, s, extra, max_bits);
  BoundVerdict verdict = cmp.order == Ordering::Less ? BoundVerdict::StrictlyLess : BoundVerdict::Inconclusive;
  return {lhs, cmp.rhs.lower, cmp.rhs.upper, verdict, cmp.rhs.bits};
}

}  // namespace ricci
