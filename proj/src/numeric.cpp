#include "resprime/numeric.hpp"

#include <cctype>

#include "resprime/error.hpp"

namespace resprime {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BinomialInput: return "BinomialInput";
    case ErrorCode::IterationDiverged: return "IterationDiverged";
    case ErrorCode::CoefficientConstraintViolated: return "CoefficientConstraintViolated";
    case ErrorCode::SquareM: return "SquareM";
    case ErrorCode::NoCommonPrime: return "NoCommonPrime";
    case ErrorCode::DegreeOrder: return "DegreeOrder";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

BigInt power(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat power(const BigRat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroDenominator, "zero raised to a negative power");
    BigRat inv = 1 / base;
    return power(inv, -exp);
  }
  BigRat r(power(BigInt(base.get_num()), static_cast<unsigned long>(exp)),
           power(BigInt(base.get_den()), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

BigInt floor_of(const BigRat& x) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const BigRat& x) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

bool is_integer(const BigRat& x) { return x.get_den() == 1; }

BigRat abs_of(const BigRat& x) { return sgn(x) < 0 ? BigRat(-x) : x; }
BigInt abs_of(const BigInt& x) { return sgn(x) < 0 ? BigInt(-x) : x; }

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_signed_digits(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

BigInt parse_integer(std::string_view text) { return parse_signed_digits(text, text); }

BigRat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_signed_digits(text, text));
  BigInt num = parse_signed_digits(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, std::string(text));
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigRat round_dyadic(const BigRat& x, unsigned bits, bool up) {
  if (x == 0) return x;
  long mag = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long e = static_cast<long>(bits) - mag;
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  if (e >= 0)
    num <<= static_cast<mp_bitcnt_t>(e);
  else
    den <<= static_cast<mp_bitcnt_t>(-e);
  BigInt q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigRat r;
  if (e >= 0) {
    BigInt d = 1;
    d <<= static_cast<mp_bitcnt_t>(e);
    r = BigRat(q, d);
  } else {
    q <<= static_cast<mp_bitcnt_t>(-e);
    r = BigRat(q);
  }
  r.canonicalize();
  return r;
}

}  // namespace

BigRat round_up_dyadic(const BigRat& x, unsigned bits) { return round_dyadic(x, bits, true); }
BigRat round_down_dyadic(const BigRat& x, unsigned bits) { return round_dyadic(x, bits, false); }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace resprime
