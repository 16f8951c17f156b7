#include "taylorcert/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "taylorcert/cli/document.hpp"
#include "taylorcert/primes.hpp"

namespace taylorcert::cli {

namespace {

std::string dump(const Json& doc, bool pretty) { return pretty ? doc.dump(2) : doc.dump(); }

std::string error_text(const std::exception& e) { return std::string("error: ") + e.what() + "\n"; }

// Maps exceptions onto exit codes: bad input is 2, anything that should be
// impossible (a failed cross-check or an exhausted search) is 3.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SubjectError& e) {
    err << error_text(e);
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << error_text(e);
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal consistency alarm: " << e.what() << "\n";
    return kExitAlarm;
  }
}

class Stopwatch {
 public:
  explicit Stopwatch(Timings* sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& step) {
    const auto now = std::chrono::steady_clock::now();
    if (sink_) sink_->emplace_back(step, std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  Timings* sink_;
  std::chrono::steady_clock::time_point start_;
};

struct Built {
  Json doc;
  bool consistent = true;
};

Built build_certificate(const Subject& subject, bool timings) {
  Timings t;
  Stopwatch watch(timings ? &t : nullptr);
  Built out;
  if (subject.form == SubjectForm::exp_sum) {
    const unsigned n = subject.spec->degree();
    const auto irr = certify_exp_sum(n);
    watch.lap("irreducibility");
    const auto gal = classify(n);
    watch.lap("galois");
    out.consistent = gal.fast_paths_agree && irr.cofactor != CofactorStatus::contradicts_structure;
    out.doc = certificate_document(subject, irr, &gal, t);
    return out;
  }
  if (!subject.spec) {
    throw SubjectError("unsupported subject " + subject.canonical() +
                       ": certify handles the Taylor forms (taylor:, E:, e:) only");
  }
  const auto irr = certify_schur(*subject.spec);
  watch.lap("irreducibility");
  if (irr.verdict == Verdict::refused) throw SubjectError("unsupported subject " + subject.canonical() + ": " + irr.note);
  out.consistent = irr.cofactor != CofactorStatus::contradicts_structure;
  out.doc = certificate_document(subject, irr, nullptr, t);
  return out;
}

std::string summary(const Json& doc) {
  std::ostringstream s;
  const auto& irr = doc.at("irreducibility");
  s << doc.at("subject").at("text").get<std::string>() << ": " << irr.at("verdict").get<std::string>();
  if (irr.at("verdict") == "reducible") {
    s << " as ";
    for (const auto& f : irr.at("factors")) {
      s << "(" << f.at("text").get<std::string>() << ")";
      if (f.at("multiplicity") != "1") s << "^" << f.at("multiplicity").get<std::string>();
    }
    s << "/" << irr.at("scale").get<std::string>();
  }
  if (doc.contains("galois")) {
    const auto& gal = doc.at("galois");
    s << "; Galois group " << gal.at("group").get<std::string>();
    if (!gal.at("fast_paths").empty()) {
      s << " (fast paths:";
      for (const auto& tag : gal.at("fast_paths")) s << " " << tag.get<std::string>();
      s << ")";
    }
  }
  return s.str();
}

Json fast_path_document(unsigned n, bool check, bool& consistent) {
  const auto fired = symmetric_fast_paths(n);
  Json tags = Json::array();
  Json details = Json::array();
  for (const auto& c : fired) {
    tags.push_back(to_string(c.kind));
    details.push_back(to_json(c));
  }
  Json doc{{"schema_version", kSchemaVersion}, {"n", std::to_string(n)}, {"fast_paths", tags},
           {"fast_path_details", details}};
  if (check && n >= 3) {
    const auto disc = discriminant_closed_form(n);
    doc["discriminant_is_square"] = disc.is_square;
    consistent = fired.empty() || !disc.is_square;
  }
  return doc;
}

std::uint64_t parse_u64(const std::string& s, std::size_t offset) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s[0] == '-' || s[0] == '+') throw std::invalid_argument("sign");
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw SubjectError("expected a non-negative integer at position " + std::to_string(offset), offset);
  }
  return v;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

int run_certify(const std::string& text, const CertifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Subject subject = parse_poly(text);
    const Built built = build_certificate(subject, opts.timings);
    if (opts.json || opts.pretty) {
      out << dump(built.doc, opts.pretty) << "\n";
    } else {
      out << summary(built.doc) << "\n";
    }
    if (!built.consistent) {
      err << "internal consistency alarm: certificate contradicts its own structure\n";
      return kExitAlarm;
    }
    return kExitOk;
  });
}

ResidueFilter parse_residue_filter(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw SubjectError("expected MODULUS:R1,R2,... at position 0", 0);
  ResidueFilter f;
  f.modulus = parse_u64(text.substr(0, colon), 0);
  if (f.modulus == 0) throw SubjectError("modulus must be positive at position 0", 0);
  std::size_t start = colon + 1;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::uint64_t r = parse_u64(item, start);
    if (r >= f.modulus) throw SubjectError("residue " + item + " is not below the modulus", start);
    f.residues.push_back(r);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return f;
}

int run_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.from < 1 || opts.from > opts.to) {
      throw std::invalid_argument("scan range needs 1 <= from <= to");
    }
    std::vector<unsigned> subjects;
    for (unsigned n = opts.from; n <= opts.to; ++n) {
      if (opts.residues) {
        const auto& rs = opts.residues->residues;
        if (std::find(rs.begin(), rs.end(), n % opts.residues->modulus) == rs.end()) continue;
      }
      subjects.push_back(n);
    }

    std::vector<std::string> lines(subjects.size());
    std::vector<char> consistent(subjects.size(), 1);
    std::vector<std::string> failures(subjects.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < subjects.size();) {
        const unsigned n = subjects[i];
        try {
          if (opts.fast_paths_only) {
            bool ok = true;
            lines[i] = fast_path_document(n, opts.check_consistency, ok).dump();
            consistent[i] = ok;
          } else {
            const Built built = build_certificate(parse_poly("E:" + std::to_string(n)), opts.timings);
            lines[i] = built.doc.dump();
            consistent[i] = built.consistent;
          }
        } catch (const std::exception& e) {
          failures[i] = e.what();
        }
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(subjects.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kExitOk;
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      if (!failures[i].empty()) {
        err << "internal consistency alarm at n = " << subjects[i] << ": " << failures[i] << "\n";
        code = kExitAlarm;
        continue;
      }
      out << lines[i] << "\n";
      if (opts.check_consistency && !consistent[i]) {
        err << "consistency check failed at n = " << subjects[i] << "\n";
        code = kExitAlarm;
      }
    }
    return code;
  });
}

int run_np(const std::string& text, std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_prime(p);
    const Subject subject = parse_poly(text);
    const NewtonPolygon np = build_np(subject.rational(), p);
    Json roots = Json::array();
    for (const auto& r : root_valuations(np)) {
      roots.push_back(Json{{"valuation", taylorcert::to_string(r.valuation)}, {"count", std::to_string(r.count)}});
    }
    Json doc{{"subject", subject_json(subject)}, {"polygon", to_json(np)}, {"root_valuations", roots}};
    out << dump(doc, pretty) << "\n";
    return kExitOk;
  });
}

int run_factor(const std::string& text, std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_prime(p);
    const Subject subject = parse_poly(text);
    const ModPoly f = reduce_mod(subject.poly, p);
    if (f.is_zero()) throw std::invalid_argument("polynomial vanishes mod " + std::to_string(p));
    const auto fac = factor_modp(f);
    if (!(expand(fac) == f)) throw std::logic_error("factorization does not multiply back");
    Json doc{{"subject", subject_json(subject)}, {"reduced", f.str()}, {"factorization", to_json(fac)}};
    out << dump(doc, pretty) << "\n";
    return kExitOk;
  });
}

int run_disc(unsigned n, bool resultant, bool pretty, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n < 1) throw std::invalid_argument("disc needs n >= 1");
    const auto report = resultant && n >= 2 ? discriminant_cross_checked(n) : discriminant_closed_form(n);
    out << dump(to_json(report), pretty) << "\n";
    return kExitOk;
  });
}

int run_checkp(std::optional<std::uint64_t> p, std::optional<std::uint64_t> scan_limit, bool pretty,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (scan_limit) {
      const auto failures = factorial_sum_condition_failures(*scan_limit);
      Json list = Json::array();
      for (auto q : failures) list.push_back(std::to_string(q));
      out << dump(Json{{"limit", std::to_string(*scan_limit)}, {"failures", list}}, pretty) << "\n";
      return kExitOk;
    }
    if (!p) throw std::invalid_argument("checkp needs a prime or --scan LIMIT");
    out << dump(to_json(factorial_sum_condition(*p)), pretty) << "\n";
    return kExitOk;
  });
}

int run_residues(std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto classes = residue_classes(p);
    Json list = Json::array();
    for (auto r : classes) list.push_back(std::to_string(r));
    out << dump(Json{{"p", std::to_string(p)}, {"modulus", std::to_string(4 * p * p)}, {"residues", list}}, pretty)
        << "\n";
    return kExitOk;
  });
}

int run_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility and Galois certificates for truncated exponential sums"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  CertifyOptions certify_opts;
  std::string certify_subject;
  auto* certify = app.add_subcommand("certify", "Certify a polynomial given as taylor:[..], E:n or e:n");
  certify->add_option("subject", certify_subject, "Polynomial descriptor")->required();
  certify->add_flag("--json", certify_opts.json, "Emit the JSON certificate document");
  certify->add_flag("--timings", certify_opts.timings, "Record per-step milliseconds in the document");

  ScanOptions scan_opts;
  std::string residue_text;
  auto* scan = app.add_subcommand("scan", "Certify E:n for every n in [from, to], one JSON line each");
  scan->add_option("from", scan_opts.from)->required();
  scan->add_option("to", scan_opts.to)->required();
  scan->add_flag("--fast-paths-only", scan_opts.fast_paths_only, "Only report the symmetric-group fast paths");
  scan->add_option("--residues", residue_text, "Keep n whose residue is listed, as MODULUS:R1,R2,...");
  scan->add_flag("--check-consistency", scan_opts.check_consistency,
                 "Cross-check fast paths against the square test; exit 3 on disagreement");
  scan->add_option("--jobs", scan_opts.jobs, "Worker threads (output order is unchanged)")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--timings", scan_opts.timings, "Record per-step milliseconds");

  std::string np_subject;
  std::uint64_t np_prime = 0;
  auto* np = app.add_subcommand("np", "Newton polygon of a polynomial at a prime");
  np->add_option("subject", np_subject)->required();
  np->add_option("prime", np_prime)->required();

  std::string factor_subject;
  std::uint64_t factor_prime = 0;
  auto* factor = app.add_subcommand("factor", "Factor the integer form of a polynomial mod a prime");
  factor->add_option("subject", factor_subject)->required();
  factor->add_option("prime", factor_prime)->required();

  unsigned disc_n = 0;
  bool disc_resultant = false;
  auto* disc = app.add_subcommand("disc", "Discriminant of n! E_n");
  disc->add_option("n", disc_n)->required();
  disc->add_flag("--resultant", disc_resultant, "Cross-check against the Sylvester resultant");

  std::optional<std::uint64_t> checkp_prime;
  std::optional<std::uint64_t> checkp_scan;
  auto* checkp = app.add_subcommand("checkp", "Factorial-sum condition sum 2^(p-1-i) i! mod p");
  checkp->add_option("p", checkp_prime);
  checkp->add_option("--scan", checkp_scan, "List every odd prime up to LIMIT failing the condition");

  std::uint64_t residues_prime = 0;
  auto* residues = app.add_subcommand("residues", "Residue classes mod 4p^2 covered by the prime condition");
  residues->add_option("p", residues_prime)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      if (app.get_subcommands().size() == 1) out << app.get_subcommands()[0]->help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (certify->parsed()) {
    certify_opts.pretty = pretty;
    return run_certify(certify_subject, certify_opts, out, err);
  }
  if (scan->parsed()) {
    if (!residue_text.empty()) {
      try {
        scan_opts.residues = parse_residue_filter(residue_text);
      } catch (const SubjectError& e) {
        err << error_text(e);
        return kExitInput;
      }
    }
    return run_scan(scan_opts, out, err);
  }
  if (np->parsed()) return run_np(np_subject, np_prime, pretty, out, err);
  if (factor->parsed()) return run_factor(factor_subject, factor_prime, pretty, out, err);
  if (disc->parsed()) return run_disc(disc_n, disc_resultant, pretty, out, err);
  if (checkp->parsed()) return run_checkp(checkp_prime, checkp_scan, pretty, out, err);
  return run_residues(residues_prime, pretty, out, err);
}

}  // namespace taylorcert::cli
