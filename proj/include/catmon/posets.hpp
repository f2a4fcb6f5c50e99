#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "catmon/errors.hpp"

namespace catmon {

/// Elements are 1-based; a Subset of ambient size n holds members from
/// {1, ..., n}. Backed by a machine-word bitmask, hence the cap n <= 62.
inline constexpr int kMaxAmbient = 62;

/// Enumeration routines refuse to run past this degree (n+1) unless the
/// caller raises the bound explicitly.
inline constexpr int kDefaultEnumerationBound = 14;

class Subset {
 public:
  static Subset empty(int ambient) { return Subset(ambient, 0); }
  static Subset universe(int ambient);

  /// Members must be strictly increasing and within [1, ambient];
  /// DomainError otherwise, naming the offending position.
  static Subset from_members(int ambient, std::span<const int> members);
  static Subset from_members(int ambient, std::initializer_list<int> members);

  /// Bit i-1 of `bits` is the membership of element i.
  static Subset from_bits(int ambient, std::uint64_t bits);

  int ambient() const { return ambient_; }
  std::uint64_t bits() const { return bits_; }

  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int element) const {
    return element >= 1 && element <= ambient_ &&
           (bits_ >> (element - 1)) & 1u;
  }

  std::vector<int> members() const;
  int sum() const;

  /// Containment as sets; requires equal ambient sizes.
  bool is_subset_of(const Subset& other) const;

  /// The same members viewed inside [1, new_ambient]; DomainError if a
  /// member does not fit.
  Subset with_ambient(int new_ambient) const;

  bool operator==(const Subset& other) const = default;

 private:
  Subset(int ambient, std::uint64_t bits) : ambient_(ambient), bits_(bits) {}

  int ambient_;
  std::uint64_t bits_;
};

std::ostream& operator<<(std::ostream& os, const Subset& s);

/// "{1,3}" with an empty set printed as "{}".
std::string to_string(const Subset& s);

/// X <= Y: equal cardinality and the i-th smallest members satisfy
/// x_i <= y_i throughout. UsageError on ambient mismatch.
bool leq(const Subset& x, const Subset& y);

/// X before Y: |X| < |Y|, or equal cardinality and X <= Y.
bool preceq(const Subset& x, const Subset& y);

/// Total-order key realizing a linear extension of preceq: compares
/// cardinality, then element sum, then the member sequences
/// lexicographically. Injective on subsets of a fixed ambient set.
struct LinextKey {
  int cardinality;
  int element_sum;
  std::uint64_t bits;

  std::strong_ordering operator<=>(const LinextKey& other) const;
  bool operator==(const LinextKey& other) const = default;
};

LinextKey linext_key(const Subset& s);

/// Comparator ordering subsets by linext_key.
struct SubsetOrder {
  bool operator()(const Subset& a, const Subset& b) const {
    return linext_key(a) < linext_key(b);
  }
};

/// An ordered pair (X, Y) with X <= Y; the free basis of the incidence
/// algebra of the poset.
class PosetPair {
 public:
  PosetPair(Subset x, Subset y);  // DomainError unless leq(x, y)

  const Subset& x() const { return x_; }
  const Subset& y() const { return y_; }
  int ambient() const { return x_.ambient(); }
  bool is_diagonal() const { return x_ == y_; }

  bool operator==(const PosetPair& other) const = default;

 private:
  Subset x_;
  Subset y_;
};

std::ostream& operator<<(std::ostream& os, const PosetPair& p);

/// "{1}<{2}" -- the label format used in CSV headers.
std::string to_string(const PosetPair& p);

/// Comparator ordering pairs by (linext_key(X), linext_key(Y)).
struct PairOrder {
  bool operator()(const PosetPair& a, const PosetPair& b) const;
};

/// All subsets of [n] sorted by linext_key.
std::vector<Subset> enumerate_subsets(int n,
                                      int max_degree = kDefaultEnumerationBound);

/// All pairs X <= Y sorted by (linext_key(X), linext_key(Y)); there are
/// Catalan(n+1) of them.
std::vector<PosetPair> enumerate_pairs(int n,
                                       int max_degree = kDefaultEnumerationBound);

}  // namespace catmon
