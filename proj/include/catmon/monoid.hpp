#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "catmon/errors.hpp"
#include "catmon/posets.hpp"

namespace catmon {

/// An element of the Catalan monoid of degree d: a self-map f of
/// {1, ..., d} that is order-preserving (i <= j implies f(i) <= f(j))
/// and weakly increasing (f(i) >= i). Stored as its image sequence,
/// 1-based. Note f(d) = d always.
class CMap {
 public:
  static CMap identity(int degree);

  /// Validates the two defining conditions; DomainError naming the
  /// first failing index otherwise.
  static CMap from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// f(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const CMap& other) const = default;

 private:
  explicit CMap(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const CMap& f);

/// "[2,3,3]".
std::string to_string(const CMap& f);

/// Comparator: degree, then image sequence lexicographically. This is
/// the order enumerate_monoid emits.
struct CMapOrder {
  bool operator()(const CMap& a, const CMap& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.images() < b.images();
  }
};

/// (f, g) -> f after g: result(i) = f(g(i)). UsageError on degree
/// mismatch. The monoid is closed under this, so the result is valid.
CMap compose(const CMap& f, const CMap& g);

/// Every monoid element of the given degree exactly once, in
/// lexicographic image order; there are Catalan(degree) of them.
/// Generated by backtracking over valid image sequences.
std::vector<CMap> enumerate_monoid(int degree,
                                   int max_degree = kDefaultEnumerationBound);

/// The classical bijection from pairs X <= Y in the poset over [n] to
/// the monoid of degree n+1: blocks of the fiber partition end at the
/// members of X and map onto the members of Y; everything past the last
/// member of X maps to n+1. An empty X gives the constant map n+1.
CMap from_pair(const PosetPair& pair);
CMap from_pair(const Subset& x, const Subset& y);

/// Inverse direction: Y is the image of f minus {n+1}, X collects the
/// largest element of each fiber over Y. Total on valid maps, and
/// from_pair(to_pair(f)) == f.
PosetPair to_pair(const CMap& f);

/// { f(s) : s in S } as a subset of [degree]. S may live in any ambient
/// size up to the degree.
Subset image_of_set(const CMap& f, const Subset& s);

/// S is a partial cross-section of f when degree is outside f(S) and f
/// restricted to S is injective. S may have any ambient size up to the
/// degree; sets containing the top element never qualify.
bool is_partial_cross_section(const CMap& f, const Subset& s);

/// All partial cross-sections of f as subsets of [degree-1], sorted by
/// linext_key. Always contains the empty set and to_pair(f).x().
std::vector<Subset> partial_cross_sections(const CMap& f);

/// Exactly uniform over the monoid of the given degree, using suffix
/// counts over valid image sequences; no enumeration required.
/// Degree is capped at 33 so the counts fit in 64 bits.
CMap uniform_random_cmap(int degree, std::mt19937_64& rng);

}  // namespace catmon
