#include "taylorcert/newton_polygon.hpp"

#include <algorithm>

#include "taylorcert/primes.hpp"

namespace taylorcert {

namespace {

struct HullPoint {
  std::size_t x;
  Rational y;
};

// Twice the signed area of (a, b, c); positive for a strict left turn.
Rational cross(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
  const Rational bx(static_cast<unsigned long>(b.x - a.x));
  const Rational cx(static_cast<unsigned long>(c.x - a.x));
  return bx * (c.y - a.y) - (b.y - a.y) * cx;
}

Rational x_as_rational(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

}  // namespace

NewtonPolygon::NewtonPolygon(std::uint64_t p, std::vector<ValuationPoint> points)
    : p_(p), points_(std::move(points)) {
  std::vector<HullPoint> finite;
  for (const auto& pt : points_) {
    if (!pt.v.is_infinite()) finite.push_back({pt.j, Rational(pt.v.value())});
  }
  if (finite.empty()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  std::sort(finite.begin(), finite.end(), [](const HullPoint& a, const HullPoint& b) { return a.x < b.x; });

  std::vector<HullPoint> hull;
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (const auto& h : hull) vertices_.push_back({h.x, h.y});
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const std::size_t len = hull[i].x - hull[i - 1].x;
    segments_.push_back({(hull[i].y - hull[i - 1].y) / x_as_rational(len), len});
  }
  for (const auto& pt : finite) {
    const bool is_vertex = std::any_of(vertices_.begin(), vertices_.end(),
                                       [&](const PolygonVertex& v) { return v.x == pt.x; });
    if (!is_vertex && height_at(x_as_rational(pt.x)) == pt.y) touching_.push_back(pt.x);
  }
}

Rational NewtonPolygon::height_at(const Rational& x) const {
  if (x < x_as_rational(vertices_.front().x) || x > x_as_rational(vertices_.back().x)) {
    throw std::out_of_range("x outside the polygon's horizontal extent");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (x <= x_as_rational(vertices_[i + 1].x)) {
      return vertices_[i].y + segments_[i].slope * (x - x_as_rational(vertices_[i].x));
    }
  }
  return vertices_.back().y;
}

std::vector<ValuationPoint> valuation_points(const RatPoly& f, std::uint64_t p) {
  std::vector<ValuationPoint> pts;
  pts.reserve(f.coeffs().size());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) pts.push_back({j, v_p(f.coeffs()[j], p)});
  return pts;
}

NewtonPolygon build_np(const RatPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  return NewtonPolygon(p, valuation_points(f, p));
}

NewtonPolygon build_np(const IntPoly& f, std::uint64_t p) { return build_np(to_rational(f), p); }

bool verify_polygon(const NewtonPolygon& np) {
  const auto& vs = np.vertices();
  const auto& segs = np.segments();
  if (vs.empty() || segs.size() + 1 != vs.size()) return false;
  std::size_t span = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (vs[i + 1].x <= vs[i].x) return false;
    if (segs[i].length != vs[i + 1].x - vs[i].x) return false;
    if (segs[i].slope * x_as_rational(segs[i].length) != vs[i + 1].y - vs[i].y) return false;
    if (i > 0 && !(segs[i - 1].slope < segs[i].slope)) return false;
    span += segs[i].length;
  }
  std::size_t first = SIZE_MAX, last = 0;
  for (const auto& pt : np.points()) {
    if (pt.v.is_infinite()) continue;
    first = std::min(first, pt.j);
    last = std::max(last, pt.j);
  }
  if (first != vs.front().x || last != vs.back().x || span != last - first) return false;
  for (const auto& v : vs) {
    const bool present = std::any_of(np.points().begin(), np.points().end(), [&](const ValuationPoint& pt) {
      return pt.j == v.x && !pt.v.is_infinite() && Rational(pt.v.value()) == v.y;
    });
    if (!present) return false;
  }
  for (const auto& pt : np.points()) {
    if (pt.v.is_infinite()) continue;
    if (Rational(pt.v.value()) < np.height_at(x_as_rational(pt.j))) return false;
  }
  return true;
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& np) {
  std::vector<RootValuation> out;
  out.reserve(np.segments().size());
  for (const auto& seg : np.segments()) out.push_back({Rational(-seg.slope), seg.length});
  return out;
}

NewtonIndexReport newton_index(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton index of the zero polynomial");
  const auto& c = f.coeffs();
  std::size_t lowest = 0;
  while (c[lowest] == 0) ++lowest;

  BigInt den_lcm(1);
  for (const auto& a : c) {
    if (a != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  }
  std::set<BigInt> candidates;
  for (const BigInt& z : {den_lcm, BigInt(c[lowest].get_num()), BigInt(c.back().get_num())}) {
    for (auto& q : prime_divisors(z)) candidates.insert(q);
  }

  NewtonIndexReport report{BigInt(1), {}};
  for (const auto& q : candidates) {
    if (!q.fits_ulong_p()) throw std::domain_error("relevant prime " + q.get_str() + " exceeds 64 bits");
    const std::uint64_t p = q.get_ui();
    const NewtonPolygon np = build_np(f, p);
    const bool has_nonzero = std::any_of(np.segments().begin(), np.segments().end(),
                                         [](const PolygonSegment& s) { return s.slope != 0; });
    if (!has_nonzero) continue;
    auto& dens = report.contributions[p];
    for (const auto& seg : np.segments()) {
      dens.insert(BigInt(seg.slope.get_den()));
      mpz_lcm(report.index.get_mpz_t(), report.index.get_mpz_t(), seg.slope.get_den_mpz_t());
    }
  }
  return report;
}

SlopeCertificate power_of_two_slope_certificate(const TaylorSpec& spec, unsigned s, PolyForm form) {
  const unsigned n = spec.degree();
  if (s == 0 || s >= 32 || n != (1u << s)) {
    throw std::invalid_argument("degree " + std::to_string(n) + " is not 2^" + std::to_string(s));
  }
  if (spec.coeffs()[0] == 0) throw std::invalid_argument("constant coefficient is zero");

  const RatPoly f = form == PolyForm::scaled ? to_rational(scaled_taylor_poly(spec)) : make_taylor_poly(spec);
  SlopeCertificate cert;
  cert.s = s;
  cert.form = form;
  cert.left = {0, Rational(v_p(f.coeffs()[0], 2).value())};
  cert.right = {n, Rational(v_p(f.coeffs()[n], 2).value())};
  cert.slope = (cert.right.y - cert.left.y) / Rational(n);
  cert.root_valuation = -cert.slope;

  for (std::size_t i = 1; i < n; ++i) {
    const Valuation v = v_p(f.coeffs()[i], 2);
    if (v.is_infinite()) continue;
    cert.interior.push_back({i, v});
    const Rational line = cert.left.y + cert.slope * Rational(static_cast<unsigned long>(i));
    if (Rational(v.value()) <= line) {
      throw CertificateRefused("point (" + std::to_string(i) + ", " + v.str() +
                               ") does not lie strictly above the segment");
    }
  }
  if (cert.root_valuation.get_den() == 1 && cert.root_valuation >= 0) {
    cert.candidate_exponents.push_back(cert.root_valuation.get_num().get_si());
  }
  return cert;
}

}  // namespace taylorcert
