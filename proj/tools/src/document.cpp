#include "taylorcert/cli/document.hpp"

#include "taylorcert/padic.hpp"

namespace taylorcert::cli {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const Rational& v) { return taylorcert::to_string(v); }

template <class T>
Json strings(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json vertex_json(const PolygonVertex& v) { return Json{{"x", str(v.x)}, {"y", str(v.y)}}; }

Json slope_json(const SlopeCertificate& c) {
  Json interior = Json::array();
  for (const auto& pt : c.interior) interior.push_back(Json{{"x", str(pt.j)}, {"v", pt.v.str()}});
  std::vector<BigInt> exps;
  for (long t : c.candidate_exponents) exps.emplace_back(t);
  return Json{{"type", "two-adic-slope"},
              {"s", str(c.s)},
              {"form", c.form == PolyForm::scaled ? "scaled" : "rational"},
              {"left", vertex_json(c.left)},
              {"right", vertex_json(c.right)},
              {"slope", str(c.slope)},
              {"root_valuation", str(c.root_valuation)},
              {"candidate_exponents", strings(exps)},
              {"interior", interior}};
}

Json oracle_json(const OracleResult& r) {
  Json used = Json::array();
  for (const auto& u : r.used) used.push_back(Json{{"p", str(u.p)}, {"degrees", strings(u.degrees)}});
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back(Json{{"p", str(s.p)}, {"reason", s.reason}});
  return Json{{"verdict", r.verdict == OracleVerdict::irreducible ? "irreducible" : "inconclusive"},
              {"used", used},
              {"skipped", skipped},
              {"reason", r.reason}};
}

Json evidence_json(const EvidenceStep& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TheoremStep>) {
          return Json{{"type", "theorem"}, {"rule", s.rule}, {"detail", s.detail}};
        } else if constexpr (std::is_same_v<T, SlopeStep>) {
          return slope_json(s.cert);
        } else if constexpr (std::is_same_v<T, RootSearchStep>) {
          std::vector<BigInt> ts;
          for (long t : s.admissible_t) ts.emplace_back(t);
          return Json{{"type", "root-search"},
                      {"t_bound", str(s.t_bound)},
                      {"admissible_t", strings(ts)},
                      {"candidates", strings(s.candidates)},
                      {"roots", strings(s.roots)}};
        } else if constexpr (std::is_same_v<T, EisensteinStep>) {
          return Json{{"type", "eisenstein"}, {"poly", to_json(s.poly)}, {"prime", str(s.prime)}};
        } else if constexpr (std::is_same_v<T, OracleStep>) {
          return Json{{"type", "degree-patterns"}, {"poly", to_json(s.poly)}, {"result", oracle_json(s.result)}};
        } else {
          return Json{{"type", "positivity"}, {"rule", s.rule}, {"point", str(s.point)}, {"value", str(s.value)}};
        }
      },
      step);
}

Json witness_json(const CycleWitness& w) {
  return Json{{"target", to_string(w.target)},
              {"p", str(w.p)},
              {"pattern", strings(w.pattern)},
              {"factorization", to_json(w.factorization)}};
}

Json containment_json(const ContainmentEvidence& ev) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ChebyshevStep>) {
          return Json{{"type", "chebyshev-prime"}, {"q", str(s.q)}, {"polygon", to_json(s.polygon)},
                      {"shape_ok", s.shape_ok}};
        } else if constexpr (std::is_same_v<T, CycleTypeStep>) {
          Json ws = Json::array();
          for (const auto& w : s.witnesses) ws.push_back(witness_json(w));
          return Json{{"type", "cycle-types"}, {"witnesses", ws}};
        } else {
          return Json{{"type", "cubic-factor"},
                      {"cubic", to_json(s.cubic)},
                      {"eisenstein_prime", str(s.eisenstein_prime)},
                      {"discriminant", str(s.discriminant)}};
        }
      },
      ev);
}

// Reading back. Every accessor throws on a missing key or a malformed value,
// which validate_document turns into a reported problem.

BigInt big(const Json& j) { return parse_bigint(j.get<std::string>()); }
Rational rat(const Json& j) { return parse_rational(j.get<std::string>()); }
std::uint64_t u64(const Json& j) {
  const BigInt v = big(j);
  if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument("value out of range: " + v.get_str());
  return v.get_ui();
}

IntPoly int_poly(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(big(x));
  return IntPoly(std::move(c));
}

class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) report.problems.push_back(what);
  }
  ValidationReport report;
};

void check_polygon_shape(const Json& poly, Checker& ck, const std::string& where) {
  const auto& vs = poly.at("vertices");
  ck.require(!vs.empty(), where + ": polygon has no vertices");
  Rational prev_slope;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const long dx = static_cast<long>(u64(vs[i].at("x"))) - static_cast<long>(u64(vs[i - 1].at("x")));
    ck.require(dx > 0, where + ": vertex x-coordinates not increasing");
    if (dx <= 0) return;
    const Rational slope = (rat(vs[i].at("y")) - rat(vs[i - 1].at("y"))) / Rational(dx);
    if (i > 1) ck.require(slope > prev_slope, where + ": slopes not strictly increasing");
    prev_slope = slope;
  }
}

void check_polygon(const Json& poly, const RatPoly& f, Checker& ck, const std::string& where) {
  check_polygon_shape(poly, ck, where);
  const NewtonPolygon np = build_np(f, u64(poly.at("p")));
  ck.require(verify_polygon(np), where + ": rebuilt polygon fails verification");
  ck.require(to_json(np) == poly, where + ": polygon differs from the one rebuilt from the subject");
}

void check_factorization(const Json& fac, const IntPoly& f, Checker& ck, const std::string& where) {
  const std::uint64_t p = u64(fac.at("p"));
  ModPoly prod(p, {u64(fac.at("unit"))});
  for (const auto& g : fac.at("factors")) {
    std::vector<std::uint64_t> c;
    for (const auto& x : g.at("coefficients")) c.push_back(u64(x));
    const ModPoly gp(p, c);
    ck.require(is_irreducible_modp(gp), where + ": factor " + gp.str() + " is not irreducible mod " + str(p));
    for (std::uint64_t m = u64(g.at("multiplicity")); m > 0; --m) prod = prod * gp;
  }
  ck.require(prod == reduce_mod(f, p), where + ": factors do not multiply back mod " + str(p));
}

void check_irreducibility(const Json& irr, const Subject& subject, Checker& ck) {
  const IntPoly scaled = int_poly(irr.at("scaled"));
  ck.require(scaled == subject.poly, "irreducibility: scaled polynomial differs from the subject");
  ck.require(big(irr.at("scale")) == factorial(subject.spec->degree()), "irreducibility: scale is not n!");
  const std::string verdict = irr.at("verdict");
  if (verdict == "reducible") {
    IntPoly prod({BigInt(1)});
    for (const auto& f : irr.at("factors")) {
      const IntPoly g = int_poly(f.at("coefficients"));
      for (std::uint64_t m = u64(f.at("multiplicity")); m > 0; --m) prod = prod * g;
    }
    ck.require(prod == scaled, "irreducibility: factors do not multiply back to the scaled polynomial");
  } else {
    ck.require(irr.at("factors").empty(), "irreducibility: factors listed for a " + verdict + " verdict");
  }
  for (const auto& step : irr.at("evidence")) {
    const std::string type = step.at("type");
    if (type == "two-adic-slope") {
      const PolyForm form = step.at("form") == "scaled" ? PolyForm::scaled : PolyForm::rational;
      const auto again = power_of_two_slope_certificate(*subject.spec, static_cast<unsigned>(u64(step.at("s"))), form);
      ck.require(slope_json(again) == step, "irreducibility: slope certificate does not re-derive");
    } else if (type == "eisenstein") {
      ck.require(eisenstein_check(int_poly(step.at("poly"))).has_value(), "irreducibility: Eisenstein step fails");
    } else if (type == "root-search") {
      for (const auto& r : step.at("roots")) {
        ck.require(eval_exact(scaled, big(r)) == 0, "irreducibility: listed root is not a root");
      }
    } else if (type == "positivity") {
      const Rational value = eval_exact(subject.rational(), rat(step.at("point")));
      ck.require(value == rat(step.at("value")) && value > 0, "irreducibility: positivity value does not check");
    }
  }
}

void check_galois(const Json& gal, const Subject& subject, Checker& ck) {
  const unsigned n = subject.spec->degree();
  ck.require(u64(gal.at("n")) == n, "galois: degree differs from the subject");
  if (gal.contains("square_test")) {
    const auto& sq = gal.at("square_test");
    const BigInt value = big(sq.at("value"));
    ck.require(value == discriminant_closed_form(n).value, "galois: discriminant differs from the closed form");
    ck.require(sq.at("is_square").get<bool>() == is_perfect_square(value), "galois: square flag is wrong");
  }
  if (!gal.contains("containment")) return;
  const auto& ev = gal.at("containment");
  const std::string type = ev.at("type");
  if (type == "chebyshev-prime") {
    check_polygon(ev.at("polygon"), subject.rational(), ck, "galois");
  } else if (type == "cycle-types") {
    for (const auto& w : ev.at("witnesses")) {
      check_factorization(w.at("factorization"), subject.poly, ck, "galois witness");
      std::vector<std::size_t> degrees;
      for (const auto& f : w.at("factorization").at("factors")) {
        ck.require(u64(f.at("multiplicity")) == 1, "galois witness: factorization not squarefree");
        degrees.push_back(f.at("coefficients").size() - 1);
      }
      std::sort(degrees.begin(), degrees.end());
      ck.require(strings(degrees) == w.at("pattern"), "galois witness: pattern differs from factor degrees");
    }
  } else if (type == "cubic-factor") {
    const IntPoly cubic = int_poly(ev.at("cubic"));
    ck.require(divide_exact(subject.poly, cubic).has_value(), "galois: cubic does not divide the subject");
    ck.require(discriminant_resultant(cubic) == big(ev.at("discriminant")), "galois: cubic discriminant is wrong");
  }
}

}  // namespace

Json to_json(const IntPoly& f) { return strings(f.coeffs()); }

Json to_json(const NewtonPolygon& np) {
  Json vertices = Json::array();
  for (const auto& v : np.vertices()) vertices.push_back(vertex_json(v));
  Json segments = Json::array();
  for (const auto& s : np.segments()) segments.push_back(Json{{"slope", str(s.slope)}, {"length", str(s.length)}});
  return Json{{"p", str(np.prime())}, {"vertices", vertices}, {"segments", segments},
              {"touching", strings(np.touching())}};
}

Json to_json(const FactorizationModP& fac) {
  Json factors = Json::array();
  for (const auto& f : fac.factors) {
    factors.push_back(Json{{"text", f.poly.str()},
                           {"coefficients", strings(f.poly.coeffs())},
                           {"multiplicity", str(f.multiplicity)}});
  }
  return Json{{"p", str(fac.p)}, {"unit", str(fac.unit)}, {"factors", factors}};
}

Json to_json(const DiscriminantReport& r) {
  Json out{{"n", str(r.n)},
           {"value", str(r.value)},
           {"sign", std::to_string(r.sign)},
           {"is_square", r.is_square},
           {"at_minus_n", str(r.at_minus_n)},
           {"method", to_string(r.method)}};
  if (r.factored) out["factored"] = *r.factored;
  return out;
}

Json to_json(const FastPathCriterion& c) { return Json{{"criterion", to_string(c.kind)}, {"primes", strings(c.primes)}}; }

Json to_json(const FactorialSumCondition& c) {
  return Json{{"p", str(c.p)}, {"residue", str(c.residue)}, {"holds", c.holds}};
}

Json to_json(const IrreducibilityCertificate& cert) {
  Json factors = Json::array();
  for (const auto& f : cert.factors) {
    factors.push_back(Json{{"text", to_string(f.poly)},
                           {"coefficients", to_json(f.poly)},
                           {"multiplicity", str(f.multiplicity)}});
  }
  Json evidence = Json::array();
  for (const auto& step : cert.evidence) evidence.push_back(evidence_json(step));
  return Json{{"verdict", to_string(cert.verdict)},
              {"scaled", to_json(cert.scaled)},
              {"scale", str(cert.scale)},
              {"factors", factors},
              {"cofactor", to_string(cert.cofactor)},
              {"evidence", evidence},
              {"note", cert.note}};
}

Json to_json(const GaloisCertificate& cert) {
  Json out{{"n", str(cert.n)}, {"group", group_name(cert)}};
  if (cert.containment) out["containment"] = containment_json(*cert.containment);
  if (cert.square_test) out["square_test"] = to_json(*cert.square_test);
  Json tags = Json::array();
  Json details = Json::array();
  for (const auto& c : cert.fast_paths) {
    tags.push_back(to_string(c.kind));
    details.push_back(to_json(c));
  }
  out["fast_paths"] = tags;
  out["fast_path_details"] = details;
  out["fast_paths_agree"] = cert.fast_paths_agree;
  out["note"] = cert.note;
  return out;
}

Json subject_json(const Subject& s) {
  Json out{{"form", to_string(s.form)}, {"text", s.canonical()}};
  if (s.spec) out["taylor_coefficients"] = strings(s.spec->coeffs());
  out["integer_coefficients"] = to_json(s.poly);
  return out;
}

Json certificate_document(const Subject& subject, const IrreducibilityCertificate& irreducibility,
                          const GaloisCertificate* galois, const Timings& timings) {
  Json doc{{"schema_version", kSchemaVersion},
           {"subject", subject_json(subject)},
           {"irreducibility", to_json(irreducibility)}};
  if (galois) doc["galois"] = to_json(*galois);
  Json t = Json::object();
  for (const auto& [step, ms] : timings) t[step] = ms;
  doc["timings"] = t;
  return doc;
}

ValidationReport validate_document(const Json& doc) {
  Checker ck;
  try {
    ck.require(doc.at("schema_version") == kSchemaVersion, "unsupported schema_version");
    const Subject subject = parse_poly(doc.at("subject").at("text").get<std::string>());
    ck.require(subject_json(subject) == doc.at("subject"), "subject block does not match its text");
    if (!subject.spec) {
      ck.require(false, "certificate subject must be a Taylor form");
    } else {
      check_irreducibility(doc.at("irreducibility"), subject, ck);
      if (doc.contains("galois")) check_galois(doc.at("galois"), subject, ck);
    }
  } catch (const std::exception& e) {
    ck.require(false, std::string("malformed document: ") + e.what());
  }
  ck.report.ok = ck.report.problems.empty();
  return ck.report;
}

}  // namespace taylorcert::cli
