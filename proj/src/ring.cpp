#include "catmon/ring.hpp"

#include <ostream>

namespace catmon {

namespace {

mpz_class parse_mpz(std::string_view text) {
  if (text.empty()) throw UsageError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw UsageError("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw UsageError("bad integer literal: '" + std::string(text) + "'");
  }
  mpz_class v;
  v.set_str(std::string(text.substr(text[0] == '+' ? 1 : 0)), 10);
  return v;
}

mpz_class floor_mod(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RingValue& v) {
  if (v.denominator() == 1) return os << v.numerator();
  return os << v.numerator() << "/" << v.denominator();
}

Ring Ring::integers() { return Ring(RingKind::integers, 0); }

Ring Ring::integers_mod(mpz_class modulus) {
  if (modulus < 2)
    throw UsageError("modulus must be >= 2, got " + modulus.get_str());
  return Ring(RingKind::integers_mod, std::move(modulus));
}

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::parse(std::string_view name) {
  if (name == "Z") return integers();
  if (name == "Q") return rationals();
  if (name.size() > 2 && name.substr(0, 2) == "Z/")
    return integers_mod(parse_mpz(name.substr(2)));
  throw UsageError("unknown ring '" + std::string(name) +
                   "' (expected \"Z\", \"Z/<m>\" or \"Q\")");
}

const mpz_class& Ring::modulus() const {
  if (kind_ != RingKind::integers_mod)
    throw UsageError("ring " + name() + " has no modulus");
  return modulus_;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::integers:
      return "Z";
    case RingKind::integers_mod:
      return "Z/" + modulus_.get_str();
    case RingKind::rationals:
      return "Q";
  }
  return "?";
}

RingValue Ring::from_integer(const mpz_class& v) const {
  if (kind_ == RingKind::integers_mod)
    return RingValue(mpq_class(floor_mod(v, modulus_)));
  return RingValue(mpq_class(v));
}

void Ring::check_member(const RingValue& v) const {
  switch (kind_) {
    case RingKind::integers:
      if (v.denominator() != 1)
        throw UsageError("value " + format_value(v) + " is not in Z");
      return;
    case RingKind::integers_mod:
      if (v.denominator() != 1 || v.numerator() < 0 ||
          v.numerator() >= modulus_)
        throw UsageError("value " + format_value(v) + " is not a canonical " +
                         name() + " residue");
      return;
    case RingKind::rationals:
      return;  // mpq_class is kept canonical by construction
  }
}

RingValue Ring::add(const RingValue& a, const RingValue& b) const {
  check_member(a);
  check_member(b);
  switch (kind_) {
    case RingKind::integers:
      return RingValue(mpq_class(a.numerator() + b.numerator()));
    case RingKind::integers_mod: {
      mpz_class s = a.numerator() + b.numerator();
      if (s >= modulus_) s -= modulus_;
      return RingValue(mpq_class(s));
    }
    case RingKind::rationals:
      return RingValue(a.q_ + b.q_);
  }
  throw Error("unreachable");
}

RingValue Ring::sub(const RingValue& a, const RingValue& b) const {
  return add(a, neg(b));
}

RingValue Ring::mul(const RingValue& a, const RingValue& b) const {
  check_member(a);
  check_member(b);
  switch (kind_) {
    case RingKind::integers:
      return RingValue(mpq_class(a.numerator() * b.numerator()));
    case RingKind::integers_mod:
      return RingValue(
          mpq_class(floor_mod(a.numerator() * b.numerator(), modulus_)));
    case RingKind::rationals:
      return RingValue(a.q_ * b.q_);
  }
  throw Error("unreachable");
}

RingValue Ring::neg(const RingValue& a) const {
  check_member(a);
  switch (kind_) {
    case RingKind::integers:
      return RingValue(mpq_class(-a.numerator()));
    case RingKind::integers_mod: {
      if (a.is_zero()) return RingValue();
      return RingValue(mpq_class(modulus_ - a.numerator()));
    }
    case RingKind::rationals:
      return RingValue(-a.q_);
  }
  throw Error("unreachable");
}

RingValue Ring::parse_value(std::string_view text) const {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (kind_ != RingKind::rationals)
      throw UsageError("fraction '" + std::string(text) +
                       "' is not a value of " + name());
    mpz_class num = parse_mpz(text.substr(0, slash));
    mpz_class den = parse_mpz(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return RingValue(std::move(q));
  }
  return from_integer(parse_mpz(text));
}

std::string Ring::format_value(const RingValue& v) const {
  if (v.denominator() == 1) return v.numerator().get_str();
  return v.numerator().get_str() + "/" + v.denominator().get_str();
}

}  // namespace catmon
