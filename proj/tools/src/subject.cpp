#include "taylorcert/cli/subject.hpp"

#include <cctype>
#include <vector>

namespace taylorcert::cli {

namespace {

std::string at(std::size_t pos) { return " at position " + std::to_string(pos); }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }
  void seek(std::size_t pos) { pos_ = pos; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (done() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw SubjectError(std::string("expected '") + c + "'" + found() + at(pos_), pos_);
  }

  std::string found() const {
    if (done()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  BigInt integer() {
    const std::size_t start = pos_;
    if (!done() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw SubjectError("expected an integer" + found() + at(pos_), pos_);
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  }

  std::vector<BigInt> integer_list() {
    expect('[');
    std::vector<BigInt> out;
    skip_space();
    if (accept(']')) throw SubjectError("empty coefficient list" + at(pos_ - 1), pos_ - 1);
    while (true) {
      skip_space();
      out.push_back(integer());
      skip_space();
      if (accept(']')) break;
      if (!accept(',')) throw SubjectError("expected ',' or ']'" + found() + at(pos_), pos_);
    }
    return out;
  }

  unsigned degree() {
    const std::size_t start = pos_;
    const BigInt n = integer();
    if (n < 1 || !n.fits_uint_p()) throw SubjectError("degree must be a positive integer" + at(start), start);
    return static_cast<unsigned>(n.get_ui());
  }

  void expect_end() {
    if (!done()) throw SubjectError("unexpected trailing text" + found() + at(pos_), pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out + "]";
}

Subject from_spec(SubjectForm form, TaylorSpec spec) {
  Subject s;
  s.form = form;
  s.poly = scaled_taylor_poly(spec);
  s.spec = std::move(spec);
  return s;
}

}  // namespace

SubjectError::SubjectError(const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(message), position_(position) {}

std::string to_string(SubjectForm form) {
  switch (form) {
    case SubjectForm::taylor: return "taylor";
    case SubjectForm::integer: return "int";
    case SubjectForm::exp_sum: return "E";
    case SubjectForm::truncated_exp: return "e";
  }
  return "unknown";
}

std::string Subject::canonical() const {
  switch (form) {
    case SubjectForm::taylor: return "taylor:" + join(spec->coeffs());
    case SubjectForm::integer: return "int:" + join(poly.coeffs());
    case SubjectForm::exp_sum: return "E:" + std::to_string(spec->degree());
    case SubjectForm::truncated_exp: return "e:" + std::to_string(spec->degree());
  }
  return {};
}

RatPoly Subject::rational() const { return spec ? make_taylor_poly(*spec) : to_rational(poly); }

Subject parse_poly(std::string_view text) {
  Cursor cur(text);
  cur.skip_space();
  const std::size_t tag_start = cur.pos();
  const std::size_t colon = text.find(':', tag_start);
  if (colon == std::string_view::npos) {
    throw SubjectError("expected one of taylor:, int:, E:, e:" + at(tag_start), tag_start);
  }
  const std::string_view tag = text.substr(tag_start, colon - tag_start);
  Cursor body(text);
  body.seek(colon + 1);

  Subject out;
  if (tag == "taylor") {
    auto coeffs = body.integer_list();
    body.skip_space();
    body.expect_end();
    if (coeffs.size() < 2) throw SubjectError("taylor form needs degree >= 1");
    if (coeffs.back() != 1) {
      throw SubjectError("taylor form needs leading coefficient 1, got " + coeffs.back().get_str());
    }
    out = from_spec(SubjectForm::taylor, TaylorSpec::from_coeffs(std::move(coeffs)));
  } else if (tag == "int") {
    auto coeffs = body.integer_list();
    body.skip_space();
    body.expect_end();
    out.form = SubjectForm::integer;
    out.poly = IntPoly(std::move(coeffs));
    if (out.poly.is_zero()) throw SubjectError("int form is the zero polynomial");
  } else if (tag == "E" || tag == "e") {
    body.skip_space();
    const unsigned n = body.degree();
    body.skip_space();
    body.expect_end();
    out = tag == "E" ? from_spec(SubjectForm::exp_sum, TaylorSpec::exp_sum(n))
                     : from_spec(SubjectForm::truncated_exp, TaylorSpec::truncated_exp(n));
  } else {
    throw SubjectError("unknown form '" + std::string(tag) + "'; expected taylor, int, E or e" + at(tag_start),
                       tag_start);
  }
  return out;
}

}  // namespace taylorcert::cli
