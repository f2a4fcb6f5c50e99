#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "catmon/errors.hpp"

namespace catmon {

enum class RingKind { integers, integers_mod, rationals };

class Ring;

/// One element of a coefficient ring, kept in canonical form:
///   Z    -- arbitrary-precision integer (denominator 1),
///   Z/m  -- residue in [0, m) (denominator 1),
///   Q    -- reduced fraction with positive denominator.
/// Canonical form is unique per ring element, so operator== is ring
/// equality. Values are immutable once built; all arithmetic goes
/// through the owning Ring.
class RingValue {
 public:
  RingValue() : q_(0) {}

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  bool operator==(const RingValue& other) const { return q_ == other.q_; }
  bool operator!=(const RingValue& other) const { return q_ != other.q_; }

 private:
  explicit RingValue(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;

  friend class Ring;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

/// A commutative ring with unit, selected at runtime: the integers Z,
/// the integers Z/m modulo any m >= 2 (not necessarily prime), or the
/// rationals Q. All operations are exact and pure.
class Ring {
 public:
  static Ring integers();
  static Ring integers_mod(mpz_class modulus);  // UsageError unless m >= 2
  static Ring rationals();

  /// Accepts "Z", "Z/<m>" with m >= 2, or "Q".
  static Ring parse(std::string_view name);

  RingKind kind() const { return kind_; }

  /// Modulus of Z/m; UsageError for the other kinds.
  const mpz_class& modulus() const;

  /// "Z", "Z/4", "Q" -- the same syntax parse() accepts.
  std::string name() const;

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  RingValue zero() const { return RingValue(); }
  RingValue one() const { return from_integer(1); }
  RingValue from_integer(long v) const { return from_integer(mpz_class(v)); }
  RingValue from_integer(const mpz_class& v) const;

  RingValue add(const RingValue& a, const RingValue& b) const;
  RingValue sub(const RingValue& a, const RingValue& b) const;
  RingValue mul(const RingValue& a, const RingValue& b) const;
  RingValue neg(const RingValue& a) const;

  /// Parses a coefficient: a decimal integer, or "p/q" when the ring is
  /// Q. Integer input is reduced into [0, m) when the ring is Z/m.
  RingValue parse_value(std::string_view text) const;

  /// Decimal string; rationals with denominator != 1 print as "p/q".
  std::string format_value(const RingValue& v) const;

  /// UsageError unless v is a canonical member of this ring.
  void check_member(const RingValue& v) const;

 private:
  Ring(RingKind kind, mpz_class modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_;
  mpz_class modulus_;  // 0 unless kind_ == integers_mod
};

}  // namespace catmon
