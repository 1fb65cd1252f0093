#include "exdisc/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "exdisc/errors.hpp"

namespace exdisc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_set: return "EmptySet";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::delta_out_of_range: return "DeltaOutOfRange";
    case Errc::malformed_interval: return "MalformedInterval";
    case Errc::not_a_step: return "NotAStepFunction";
    case Errc::negative_values: return "NegativeValues";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::invalid_exponent: return "InvalidExponent";
    case Errc::tolerance_invalid: return "ToleranceInvalid";
    case Errc::irrational_boundary: return "IrrationalBoundary";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Rational rat(long num, long den) {
  if (den == 0) raise(Errc::parse_error, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.erase(body.begin());
  }
  if (!all_digits(body)) raise(Errc::parse_error, "not an integer: '" + s + "'");
  mpz_class z(body, 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) raise(Errc::parse_error, "empty rational literal");

  if (auto pos = s.find('/'); pos != std::string::npos) {
    mpz_class num = parse_integer(s.substr(0, pos));
    mpz_class den = parse_integer(s.substr(pos + 1));
    if (den == 0) raise(Errc::parse_error, "zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto pos = s.find('.'); pos != std::string::npos) {
    bool neg = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
      neg = body[0] == '-';
      body.erase(body.begin());
      --pos;
    }
    std::string whole = body.substr(0, pos);
    std::string frac = body.substr(pos + 1);
    if (whole.empty() && frac.empty()) raise(Errc::parse_error, "malformed decimal '" + text + "'");
    if (!whole.empty() && !all_digits(whole)) raise(Errc::parse_error, "malformed decimal '" + text + "'");
    if (!frac.empty() && !all_digits(frac)) raise(Errc::parse_error, "malformed decimal '" + text + "'");
    mpz_class num(whole.empty() ? std::string("0") : whole, 10);
    for (char c : frac) {
      num *= 10;
      num += c - '0';
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  return Rational(parse_integer(s));
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

namespace {

// 0 <= lo < hi, open interval.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  mpz_class fl = lo.get_num() / lo.get_den();  // floor for nonnegative lo
  Rational next_int(fl + 1);
  if (lo < next_int && next_int < hi) return next_int;
  Rational lo_frac = lo - Rational(fl);
  Rational hi_frac = hi - Rational(fl);
  if (lo_frac == 0) {
    // interval (fl, fl + hi_frac): take fl + 1/k with smallest k
    Rational inv = 1 / hi_frac;
    mpz_class k = inv.get_num() / inv.get_den();
    k += 1;
    return Rational(fl) + Rational(1) / Rational(k);
  }
  return Rational(fl) + 1 / simplest_nonneg(1 / hi_frac, 1 / lo_frac);
}

}  // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) raise(Errc::malformed_interval, "simplest_in_interval requires lo < hi");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return Rational(-simplest_nonneg(-hi, -lo));
  return simplest_nonneg(lo, hi);
}

}  // namespace exdisc
