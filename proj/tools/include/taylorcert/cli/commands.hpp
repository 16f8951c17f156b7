// Subcommands of the taylorcert tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit code.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace taylorcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitAlarm = 3;

struct CertifyOptions {
  bool json = false;
  bool pretty = false;
  bool timings = false;
};

int run_certify(const std::string& subject, const CertifyOptions& opts, std::ostream& out, std::ostream& err);

/// n is kept when n mod `modulus` is one of `residues`.
struct ResidueFilter {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;
};

/// "36:5,17". Throws SubjectError when malformed.
ResidueFilter parse_residue_filter(const std::string& text);

struct ScanOptions {
  unsigned from = 1;
  unsigned to = 1;
  bool fast_paths_only = false;
  std::optional<ResidueFilter> residues;
  bool check_consistency = false;
  unsigned jobs = 1;
  bool timings = false;
};

/// One compact document per line for each E:n with from <= n <= to, in order.
int run_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);

int run_np(const std::string& subject, std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err);
int run_factor(const std::string& subject, std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err);
int run_disc(unsigned n, bool resultant, bool pretty, std::ostream& out, std::ostream& err);
/// With `scan_limit`, lists the odd primes up to the limit failing the
/// factorial-sum condition instead of reporting a single p.
int run_checkp(std::optional<std::uint64_t> p, std::optional<std::uint64_t> scan_limit, bool pretty,
               std::ostream& out, std::ostream& err);
int run_residues(std::uint64_t p, bool pretty, std::ostream& out, std::ostream& err);

/// Full command line, as main() sees it.
int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace taylorcert::cli
