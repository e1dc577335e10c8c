#include "spcsp/rational.hpp"

#include "spcsp/error.hpp"

namespace spcsp {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "not a rational: '" + text + "'"); };
  auto slash = text.find('/');
  auto whole = [&](const std::string& s) {
    if (s.empty()) throw bad();
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(whole(text), mpz_class(1));
  mpz_class n = whole(text.substr(0, slash));
  mpz_class d = whole(text.substr(slash + 1));
  if (d == 0) throw bad();
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OutOfRangeWeight: return "OutOfRangeWeight";
    case ErrorCode::EmptyStrictRelation: return "EmptyStrictRelation";
    case ErrorCode::NoPromiseHomomorphism: return "NoPromiseHomomorphism";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::ArityTooLarge: return "ArityTooLarge";
    case ErrorCode::NotARelaxation: return "NotARelaxation";
    case ErrorCode::ArityUnderflow: return "ArityUnderflow";
    case ErrorCode::DegenerateChain: return "DegenerateChain";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoSmallFixingSet: return "NoSmallFixingSet";
    case ErrorCode::SanityCheckFailed: return "SanityCheckFailed";
    case ErrorCode::NotTractable: return "NotTractable";
    case ErrorCode::NoInstance: return "NoInstance";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace spcsp
