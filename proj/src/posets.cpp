#include "catmon/posets.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace catmon {

namespace {

void check_ambient(int ambient) {
  if (ambient < 0)
    throw DomainError("ambient size must be >= 0, got " +
                      std::to_string(ambient));
  if (ambient > kMaxAmbient)
    throw DomainError("ambient size " + std::to_string(ambient) +
                      " exceeds the bitmask cap " +
                      std::to_string(kMaxAmbient));
}

void check_same_ambient(const Subset& x, const Subset& y, const char* op) {
  if (x.ambient() != y.ambient())
    throw UsageError(std::string(op) + ": ambient sizes differ (" +
                     std::to_string(x.ambient()) + " vs " +
                     std::to_string(y.ambient()) + ")");
}

void check_enumeration_bound(int degree, int max_degree, const char* what) {
  if (degree > max_degree)
    throw ResourceError(std::string(what) + ": degree " +
                        std::to_string(degree) + " exceeds the bound " +
                        std::to_string(max_degree) +
                        " (raise the bound to proceed)");
}

}  // namespace

Subset Subset::universe(int ambient) {
  check_ambient(ambient);
  std::uint64_t bits =
      ambient == 0 ? 0 : (~std::uint64_t{0} >> (64 - ambient));
  return Subset(ambient, bits);
}

Subset Subset::from_members(int ambient, std::span<const int> members) {
  check_ambient(ambient);
  std::uint64_t bits = 0;
  int prev = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    int m = members[i];
    if (m < 1 || m > ambient)
      throw DomainError("member #" + std::to_string(i + 1) + " = " +
                        std::to_string(m) + " is outside [1, " +
                        std::to_string(ambient) + "]");
    if (m <= prev)
      throw DomainError("members must be strictly increasing: member #" +
                        std::to_string(i + 1) + " = " + std::to_string(m) +
                        " does not exceed " + std::to_string(prev));
    bits |= std::uint64_t{1} << (m - 1);
    prev = m;
  }
  return Subset(ambient, bits);
}

Subset Subset::from_members(int ambient, std::initializer_list<int> members) {
  return from_members(ambient, std::span<const int>(members.begin(),
                                                    members.size()));
}

Subset Subset::from_bits(int ambient, std::uint64_t bits) {
  check_ambient(ambient);
  if (ambient < 64 && (bits >> ambient) != 0)
    throw DomainError("bitmask has members beyond ambient size " +
                      std::to_string(ambient));
  return Subset(ambient, bits);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

int Subset::sum() const {
  int s = 0;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    s += std::countr_zero(b) + 1;
  return s;
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_ambient(*this, other, "is_subset_of");
  return (bits_ & ~other.bits_) == 0;
}

Subset Subset::with_ambient(int new_ambient) const {
  check_ambient(new_ambient);
  if (new_ambient < 64 && (bits_ >> new_ambient) != 0)
    throw DomainError("subset " + to_string(*this) +
                      " does not fit in ambient size " +
                      std::to_string(new_ambient));
  return Subset(new_ambient, bits_);
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  return os << to_string(s);
}

bool leq(const Subset& x, const Subset& y) {
  check_same_ambient(x, y, "leq");
  std::uint64_t a = x.bits(), b = y.bits();
  if (std::popcount(a) != std::popcount(b)) return false;
  while (a != 0) {
    if (std::countr_zero(a) > std::countr_zero(b)) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

bool preceq(const Subset& x, const Subset& y) {
  check_same_ambient(x, y, "preceq");
  if (x.size() != y.size()) return x.size() < y.size();
  return leq(x, y);
}

std::strong_ordering LinextKey::operator<=>(const LinextKey& other) const {
  if (auto c = cardinality <=> other.cardinality; c != 0) return c;
  if (auto c = element_sum <=> other.element_sum; c != 0) return c;
  if (bits == other.bits) return std::strong_ordering::equal;
  // Lexicographic comparison of the strictly increasing member
  // sequences: the set containing the smallest differing element wins.
  std::uint64_t diff = bits ^ other.bits;
  std::uint64_t lowest = diff & (~diff + 1);
  return (bits & lowest) ? std::strong_ordering::less
                         : std::strong_ordering::greater;
}

LinextKey linext_key(const Subset& s) {
  return LinextKey{s.size(), s.sum(), s.bits()};
}

PosetPair::PosetPair(Subset x, Subset y) : x_(std::move(x)), y_(std::move(y)) {
  if (!leq(x_, y_))
    throw DomainError("pair " + to_string(x_) + "<" + to_string(y_) +
                      " violates X <= Y");
}

std::string to_string(const PosetPair& p) {
  return to_string(p.x()) + "<" + to_string(p.y());
}

std::ostream& operator<<(std::ostream& os, const PosetPair& p) {
  return os << to_string(p);
}

bool PairOrder::operator()(const PosetPair& a, const PosetPair& b) const {
  if (auto c = linext_key(a.x()) <=> linext_key(b.x()); c != 0) return c < 0;
  return linext_key(a.y()) < linext_key(b.y());
}

std::vector<Subset> enumerate_subsets(int n, int max_degree) {
  check_ambient(n);
  check_enumeration_bound(n + 1, max_degree, "enumerate_subsets");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    out.push_back(Subset::from_bits(n, bits));
  std::sort(out.begin(), out.end(), SubsetOrder{});
  return out;
}

std::vector<PosetPair> enumerate_pairs(int n, int max_degree) {
  std::vector<Subset> subsets = enumerate_subsets(n, max_degree);
  // Bucket by cardinality, preserving linext order within each bucket.
  std::vector<std::vector<Subset>> by_card(static_cast<std::size_t>(n) + 1);
  for (const Subset& s : subsets)
    by_card[static_cast<std::size_t>(s.size())].push_back(s);
  std::vector<PosetPair> out;
  for (const Subset& x : subsets) {
    for (const Subset& y : by_card[static_cast<std::size_t>(x.size())]) {
      if (leq(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace catmon
