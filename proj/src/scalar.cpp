#include "setopt/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cmath>

#include "setopt/error.hpp"

namespace setopt {

namespace {
std::atomic<double> g_tolerance{1e-9};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IterationCap: return "IterationCap";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::MixedImageKinds: return "MixedImageKinds";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonRationalLiteral: return "NonRationalLiteral";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::WeightNotInDualCone: return "WeightNotInDualCone";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

double float_tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_float_tolerance(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and nonnegative");
  }
  g_tolerance.store(tau, std::memory_order_relaxed);
}

Vec<double> to_double(const Vec<Rational>& v) { return convert_vec<double>(v); }

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a number: '" + text + "'"); };
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    Rational d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    value = Rational(num) / d;
  } else {
    std::string exponent;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      exponent = s.substr(e + 1);
      s = s.substr(0, e);
    }
    std::string int_part = s, frac_part;
    if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
      int_part = s.substr(0, dot_pos);
      frac_part = s.substr(dot_pos + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw fail();
    }
    Rational digits(int_part.empty() && frac_part.empty() ? std::string("0")
                                                           : int_part + frac_part);
    long long shift = -static_cast<long long>(frac_part.size());
    if (!exponent.empty()) {
      long long ex = 0;
      auto [ptr, ec] = std::from_chars(exponent.data() + (exponent[0] == '+' ? 1 : 0),
                                       exponent.data() + exponent.size(), ex);
      if (ec != std::errc() || ptr != exponent.data() + exponent.size()) throw fail();
      shift += ex;
    }
    if (shift < -4000 || shift > 4000) throw fail();
    Rational scale(1);
    for (long long i = 0; i < (shift < 0 ? -shift : shift); ++i) scale *= 10;
    value = shift < 0 ? digits / scale : digits * scale;
  }
  return negative ? Rational(-value) : value;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorCode::ParseError, "cannot format double");
  return parse_rational(std::string(buf, ptr));
}

std::string format_rational(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  auto rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return format_rational(q);
  const int digits = std::max(twos, fives);
  decltype(num) scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  decltype(num) scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return (negative ? "-" : "") + s;
}

}  // namespace setopt
