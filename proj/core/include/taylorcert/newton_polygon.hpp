// p-adic Newton polygons: lower convex hulls of (j, v_p(c_j)), the root
// valuations they encode, and the Newton index.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "taylorcert/exact.hpp"
#include "taylorcert/padic.hpp"

namespace taylorcert {

struct ValuationPoint {
  std::size_t j;
  Valuation v;
};

struct PolygonVertex {
  std::size_t x;
  Rational y;
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSegment {
  Rational slope;
  std::size_t length;
  friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

/// Lower convex hull of the finite valuation points. Collinear interior points
/// are not vertices; their x-coordinates are kept in `touching`.
class NewtonPolygon {
 public:
  NewtonPolygon(std::uint64_t p, std::vector<ValuationPoint> points);

  std::uint64_t prime() const { return p_; }
  const std::vector<ValuationPoint>& points() const { return points_; }
  const std::vector<PolygonVertex>& vertices() const { return vertices_; }
  const std::vector<PolygonSegment>& segments() const { return segments_; }
  const std::vector<std::size_t>& touching() const { return touching_; }

  /// Height of the polygon above x, for first x <= x <= last x.
  Rational height_at(const Rational& x) const;

 private:
  std::uint64_t p_;
  std::vector<ValuationPoint> points_;
  std::vector<PolygonVertex> vertices_;
  std::vector<PolygonSegment> segments_;
  std::vector<std::size_t> touching_;
};

std::vector<ValuationPoint> valuation_points(const RatPoly& f, std::uint64_t p);

/// Throws std::invalid_argument for the zero polynomial or a non-prime p.
NewtonPolygon build_np(const RatPoly& f, std::uint64_t p);
NewtonPolygon build_np(const IntPoly& f, std::uint64_t p);

/// Re-checks strict convexity, domination of every finite point, and that the
/// segment lengths span the polygon. Independent of the hull construction.
bool verify_polygon(const NewtonPolygon& np);

struct RootValuation {
  Rational valuation;
  std::size_t count;
  friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// One entry per segment: `length` roots of valuation -slope.
std::vector<RootValuation> root_valuations(const NewtonPolygon& np);

struct NewtonIndexReport {
  BigInt index;
  /// Prime -> denominators of that prime's slopes; only primes with a nonzero slope.
  std::map<std::uint64_t, std::set<BigInt>> contributions;
};

/// Lcm of all slope denominators over the primes dividing a numerator of the
/// extreme coefficients or any denominator; every other prime yields a single
/// slope-zero segment.
NewtonIndexReport newton_index(const RatPoly& f);

class CertificateRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PolyForm { scaled, rational };

/// Single-segment 2-adic polygon for a Taylor spec of degree n = 2^s.
struct SlopeCertificate {
  unsigned s = 0;
  PolyForm form = PolyForm::scaled;
  PolygonVertex left;
  PolygonVertex right;
  Rational slope;
  /// Common 2-adic valuation of every root, -slope.
  Rational root_valuation;
  /// Exponents t for which +-2^t is consistent with the polygon: t must equal
  /// root_valuation, so this is empty or a single entry.
  std::vector<long> candidate_exponents;
  /// (i, v_2) of each interior point, infinite ones omitted.
  std::vector<ValuationPoint> interior;
};

/// Checks that every interior point (i, v_2(coefficient i)) lies strictly
/// above the segment joining the endpoints. Throws CertificateRefused if one
/// touches or crosses it, std::invalid_argument unless deg = 2^s and c_0 != 0.
SlopeCertificate power_of_two_slope_certificate(const TaylorSpec& spec, unsigned s,
                                                PolyForm form = PolyForm::scaled);

}  // namespace taylorcert
