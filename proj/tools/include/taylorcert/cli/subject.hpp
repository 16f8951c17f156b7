// Text forms for polynomials on the command line:
//   taylor:[c0,c1,...,cn]   sum c_i x^i / i!, c_n = 1
//   int:[a0,a1,...,an]      sum a_i x^i
//   E:n                     x^n/n! + 2 sum_{i<n} x^i/i!
//   e:n                     sum_{i<=n} x^i/i!

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "taylorcert/exact.hpp"

namespace taylorcert::cli {

/// Malformed text (position set) or a well-formed subject that fails
/// validation, such as a taylor form whose last coefficient is not 1.
class SubjectError : public std::runtime_error {
 public:
  SubjectError(const std::string& message, std::optional<std::size_t> position = std::nullopt);
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

enum class SubjectForm { taylor, integer, exp_sum, truncated_exp };

std::string to_string(SubjectForm form);

struct Subject {
  SubjectForm form = SubjectForm::integer;
  /// Present for every form except integer.
  std::optional<TaylorSpec> spec;
  /// The integer form as given, or n! f for the Taylor forms.
  IntPoly poly;

  /// Normalized text that parses back to the same subject.
  std::string canonical() const;
  /// f itself: poly for the integer form, the Taylor polynomial otherwise.
  RatPoly rational() const;
};

Subject parse_poly(std::string_view text);

}  // namespace taylorcert::cli
