#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ricci {

// Exact fraction in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q" and "-p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer pow(const Integer& base, unsigned long exponent);

// s(s-1)...(s-i+1)/i!, with gen_binomial(s, 0) = 1.
Rational gen_binomial(const Rational& s, unsigned i);

// Sum of gen_binomial(s, i) for i = 0..up_to.
Rational binomial_partial_sum(const Rational& s, unsigned up_to);

// Rational bracket around an irrational (or rational) real.
struct Enclosure {
  Rational lower;
  Rational upper;
  unsigned bits = 0;  // dyadic precision that produced the bracket
};

// lower <= 2^s <= upper with upper - lower <= 2^(floor(s) - bits). Exact
// (lower == upper) when s is an integer. Computed by bisection with exact
// integer power comparisons, so the bracket is rigorous.
Enclosure pow2_enclosure(const Rational& s, unsigned bits);

enum class Ordering { Less, Equal, Greater, Inconclusive };

std::string_view to_string(Ordering o);

struct Pow2Comparison {
  Ordering order;
  Enclosure rhs;  // enclosure of 2^s + offset
};

// Orders value against 2^s + offset. Integer s is decided exactly; otherwise
// the enclosure is refined by doubling the precision, starting at 32 bits, until
// value falls strictly outside it or max_bits is reached.
Pow2Comparison compare_with_pow2(const Rational& value, const Rational& s,
                                 const Rational& offset = 0, unsigned max_bits = 1024);

enum class BoundVerdict { StrictlyLess, Inconclusive };

struct BoundComparison {
  Rational lhs;
  Rational rhs_lower;
  Rational rhs_upper;
  BoundVerdict verdict;
  unsigned bits = 0;
};

// Compares sum_{i=0}^{floor(s)+1} C(s, i) against 2^s + 1/(4(s+1)) for a
// non-integer s >= 1. Throws ArgumentError for integer s or s < 1.
BoundComparison check_noninteger_lemma(const Rational& s, unsigned max_bits = 1024);

}  // namespace ricci
