#include "catmon/monoid.hpp"

#include <numeric>
#include <ostream>

namespace catmon {

namespace {

void check_degree(int degree) {
  if (degree < 1)
    throw DomainError("degree must be >= 1, got " + std::to_string(degree));
  if (degree > kMaxAmbient + 1)
    throw DomainError("degree " + std::to_string(degree) +
                      " exceeds the supported cap " +
                      std::to_string(kMaxAmbient + 1));
}

/// Draws uniformly from [0, n) by rejection; deterministic given the
/// generator state, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

}  // namespace

CMap CMap::identity(int degree) {
  check_degree(degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return CMap(std::move(images));
}

CMap CMap::from_images(std::vector<int> images) {
  const int degree = static_cast<int>(images.size());
  check_degree(degree);
  for (int i = 1; i <= degree; ++i) {
    const int v = images[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > degree)
      throw DomainError("image[" + std::to_string(i) + "] = " +
                        std::to_string(v) + " is outside [1, " +
                        std::to_string(degree) + "]");
  }
  for (int i = 1; i < degree; ++i) {
    if (images[static_cast<std::size_t>(i - 1)] >
        images[static_cast<std::size_t>(i)])
      throw DomainError(
          "not order-preserving: image[" + std::to_string(i) + "] = " +
          std::to_string(images[static_cast<std::size_t>(i - 1)]) +
          " exceeds image[" + std::to_string(i + 1) + "] = " +
          std::to_string(images[static_cast<std::size_t>(i)]));
  }
  for (int i = 1; i <= degree; ++i) {
    if (images[static_cast<std::size_t>(i - 1)] < i)
      throw DomainError("not weakly increasing: image[" + std::to_string(i) +
                        "] = " +
                        std::to_string(images[static_cast<std::size_t>(i - 1)]) +
                        " is below " + std::to_string(i));
  }
  return CMap(std::move(images));
}

bool CMap::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string to_string(const CMap& f) {
  std::string out = "[";
  for (int i = 1; i <= f.degree(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(f(i));
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const CMap& f) {
  return os << to_string(f);
}

CMap compose(const CMap& f, const CMap& g) {
  if (f.degree() != g.degree())
    throw UsageError("compose: degrees differ (" + std::to_string(f.degree()) +
                     " vs " + std::to_string(g.degree()) + ")");
  std::vector<int> images(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i)
    images[static_cast<std::size_t>(i - 1)] = f(g(i));
  return CMap::from_images(std::move(images));
}

namespace {

void extend_images(std::vector<int>& images, int degree,
                   std::vector<CMap>& out) {
  const int pos = static_cast<int>(images.size()) + 1;
  if (pos > degree) {
    out.push_back(CMap::from_images(images));
    return;
  }
  const int low = std::max(pos, images.empty() ? 1 : images.back());
  for (int v = low; v <= degree; ++v) {
    images.push_back(v);
    extend_images(images, degree, out);
    images.pop_back();
  }
}

}  // namespace

std::vector<CMap> enumerate_monoid(int degree, int max_degree) {
  check_degree(degree);
  if (degree > max_degree)
    throw ResourceError("enumerate_monoid: degree " + std::to_string(degree) +
                        " exceeds the bound " + std::to_string(max_degree) +
                        " (raise the bound to proceed)");
  std::vector<CMap> out;
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(degree));
  extend_images(images, degree, out);
  return out;
}

CMap from_pair(const Subset& x, const Subset& y) {
  if (!leq(x, y))
    throw DomainError("from_pair: " + to_string(x) + " <= " + to_string(y) +
                      " fails");
  return from_pair(PosetPair(x, y));
}

CMap from_pair(const PosetPair& pair) {
  const int n = pair.ambient();
  const std::vector<int> xs = pair.x().members();
  const std::vector<int> ys = pair.y().members();
  std::vector<int> images(static_cast<std::size_t>(n) + 1);
  std::size_t j = 0;
  for (int i = 1; i <= n + 1; ++i) {
    while (j < xs.size() && xs[j] < i) ++j;
    images[static_cast<std::size_t>(i - 1)] =
        j < ys.size() ? ys[j] : n + 1;
  }
  return CMap::from_images(std::move(images));
}

PosetPair to_pair(const CMap& f) {
  const int degree = f.degree();
  const int n = degree - 1;
  std::uint64_t x_bits = 0, y_bits = 0;
  for (int i = 1; i <= degree; ++i) {
    const int v = f(i);
    if (v == degree) continue;
    // Fibers of an order-preserving map are intervals, so the block of
    // v ends at the last i with f(i) == v.
    if (i == degree || f(i + 1) != v) {
      x_bits |= std::uint64_t{1} << (i - 1);
      y_bits |= std::uint64_t{1} << (v - 1);
    }
  }
  return PosetPair(Subset::from_bits(n, x_bits), Subset::from_bits(n, y_bits));
}

Subset image_of_set(const CMap& f, const Subset& s) {
  if (s.ambient() > f.degree())
    throw UsageError("image_of_set: ambient size " +
                     std::to_string(s.ambient()) + " exceeds degree " +
                     std::to_string(f.degree()));
  std::uint64_t image_bits = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
    image_bits |= std::uint64_t{1} << (f(std::countr_zero(b) + 1) - 1);
  return Subset::from_bits(f.degree(), image_bits);
}

bool is_partial_cross_section(const CMap& f, const Subset& s) {
  if (s.ambient() > f.degree())
    throw UsageError("is_partial_cross_section: ambient size " +
                     std::to_string(s.ambient()) + " exceeds degree " +
                     std::to_string(f.degree()));
  const std::uint64_t top = std::uint64_t{1} << (f.degree() - 1);
  std::uint64_t image_bits = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
    image_bits |= std::uint64_t{1} << (f(std::countr_zero(b) + 1) - 1);
  if (image_bits & top) return false;
  return std::popcount(image_bits) == s.size();
}

std::vector<Subset> partial_cross_sections(const CMap& f) {
  const int n = f.degree() - 1;
  std::vector<Subset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Subset s = Subset::from_bits(n, bits);
    if (is_partial_cross_section(f, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SubsetOrder{});
  return out;
}

CMap uniform_random_cmap(int degree, std::mt19937_64& rng) {
  check_degree(degree);
  if (degree > 33)
    throw ResourceError("uniform_random_cmap: degree " +
                        std::to_string(degree) +
                        " overflows the 64-bit completion counts");
  const std::size_t d = static_cast<std::size_t>(degree);
  // completions[pos-1][last-1]: valid ways to fill positions pos..degree
  // when position pos-1 held the value `last` (values are nondecreasing,
  // >= their position, <= degree).
  std::vector<std::vector<std::uint64_t>> completions(
      d + 1, std::vector<std::uint64_t>(d + 1, 0));
  for (std::size_t last = 0; last <= d; ++last) completions[d][last] = 1;
  for (std::size_t pos = d; pos >= 1; --pos) {
    for (std::size_t last = 0; last <= d; ++last) {
      const std::size_t low = std::max(pos, last);
      std::uint64_t total = 0;
      for (std::size_t v = low; v <= d; ++v)
        total += completions[pos][v];
      completions[pos - 1][last] = total;
    }
  }
  std::vector<int> images;
  images.reserve(d);
  std::size_t last = 0;
  for (std::size_t pos = 1; pos <= d; ++pos) {
    std::uint64_t draw = uniform_below(rng, completions[pos - 1][last]);
    for (std::size_t v = std::max(pos, last); v <= d; ++v) {
      if (draw < completions[pos][v]) {
        images.push_back(static_cast<int>(v));
        last = v;
        break;
      }
      draw -= completions[pos][v];
    }
  }
  return CMap::from_images(std::move(images));
}

}  // namespace catmon
