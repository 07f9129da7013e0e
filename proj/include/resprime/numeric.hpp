#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace resprime {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt power(const BigInt& base, unsigned long exp);
// Negative exponents invert; throws ZeroDenominator for 0^-k.
BigRat power(const BigRat& base, long exp);

// num/den in canonical form; throws ZeroDenominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt floor_of(const BigRat& x);
BigInt ceil_of(const BigRat& x);
bool is_integer(const BigRat& x);
BigRat abs_of(const BigRat& x);
BigInt abs_of(const BigInt& x);

std::string to_string(const BigInt& x);
// "n" for integers, "n/d" otherwise.
std::string to_string(const BigRat& x);

// Accepts "[-]digits" or "[-]digits/digits".
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// Round to a dyadic rational with about `bits` significant bits, upward or
// downward. Used to keep certified bounds short.
BigRat round_up_dyadic(const BigRat& x, unsigned bits = 64);
BigRat round_down_dyadic(const BigRat& x, unsigned bits = 64);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace resprime
