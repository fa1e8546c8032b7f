#ifndef QLDS_IO_HPP
#define QLDS_IO_HPP

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lqds.hpp"

namespace qlds {

namespace detail {

// A parsed coefficient keeps its text so the float backend can round it
// directly instead of going through a rational.
struct Coefficient {
  Rational exact;
  std::string text;
  bool fraction = false;
};

template <typename T>
T coefficient_value(const Coefficient& c) {
  if constexpr (is_exact_v<T>) {
    return c.exact;
  } else {
    if (!c.fraction) return std::strtod(c.text.c_str(), nullptr);
    auto slash = c.text.find('/');
    return std::strtod(c.text.substr(0, slash).c_str(), nullptr) /
           std::strtod(c.text.substr(slash + 1).c_str(), nullptr);
  }
}

// Exact value of an unsigned decimal with optional fraction and exponent.
inline Rational decimal_to_rational(const std::string& s) {
  std::size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) exp10 = std::stol(s.substr(epos + 1));
  std::size_t dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty()) digits = "0";
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return r;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  template <typename T>
  Quaternion<T> parse() {
    Quaternion<T> q;
    bool seen[4] = {false, false, false, false};
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty quaternion literal", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      const std::size_t term_start = pos_;
      std::optional<Coefficient> coeff = coefficient();
      skip_ws();
      int unit = 0;
      if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 'j' || s_[pos_] == 'k')) {
        unit = 1 + (s_[pos_] - 'i');
        ++pos_;
      }
      if (!coeff && unit == 0) throw ParseError("expected a coefficient or unit", term_start);
      if (seen[unit]) throw ParseError("duplicate unit in quaternion literal", term_start);
      seen[unit] = true;
      T v = coeff ? coefficient_value<T>(*coeff) : T(1);
      q[unit] = sign < 0 ? T(-v) : v;
      first = false;
    }
    return q;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  std::optional<Coefficient> coefficient() {
    const std::size_t start = pos_;
    std::string intpart = digits();
    std::string frac;
    bool has_dot = false;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      has_dot = true;
      ++pos_;
      frac = digits();
      if (intpart.empty() && frac.empty()) throw ParseError("malformed decimal", start);
    }
    if (intpart.empty() && !has_dot) return std::nullopt;
    // exponent: only when digits follow, so "2e" never eats a unit
    if (pos_ + 1 < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
        pos_ = look;
        digits();
      }
    }
    std::string text(s_.substr(start, pos_ - start));
    if (!has_dot && text.find_first_of("eE") == std::string::npos) {
      // integer, possibly a fraction
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) throw ParseError("expected denominator after '/'", pos_);
        mpz_class d(den, 10);
        if (d == 0) throw ParseError("zero denominator", pos_);
        Rational r(mpz_class(intpart, 10), d);
        r.canonicalize();
        return Coefficient{r, intpart + "/" + den, true};
      }
      pos_ = save;
    }
    return Coefficient{decimal_to_rational(text), text, false};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string render_scalar(const Rational& v) { return v.get_str(); }

inline std::string render_scalar(double v) {
  if (v == 0) v = 0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
bool scalar_is_one(const T& v) {
  return v == T(1);
}

}  // namespace detail

/// Grammar:  quat := [sign] term {sign term};  term := coeff [unit] | unit;
/// unit := i | j | k;  coeff := integer | integer "/" integer | decimal
/// (decimal allows a fraction part and an exponent). Whitespace may separate
/// tokens; each unit (and the real part) appears at most once.
template <typename T>
Quaternion<T> parse_quat(std::string_view text) {
  return detail::LiteralParser(text).parse<T>();
}

/// Canonical text: nonzero terms in the order 1, i, j, k; unit coefficients
/// of +-1 are written as the bare unit; "0" for zero. Exact values print as
/// p/q, floats with 17 significant digits.
template <typename T>
std::string render_quat(const Quaternion<T>& q) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int c = 0; c < 4; ++c) {
    T v = q[c];
    if (ScalarTraits<T>::is_zero(v, 0.0)) continue;
    bool neg = v < 0;
    T mag = neg ? T(-v) : v;
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (c == 0 || !detail::scalar_is_one(mag)) out += detail::render_scalar(mag);
    out += units[c];
  }
  return out.empty() ? "0" : out;
}

template <typename T>
std::string render_vector(const QVector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += render_quat(v[i]);
  }
  return out;
}

/// Line-oriented "key = value" result document in insertion order.
class Document {
 public:
  void add(const std::string& key, const std::string& value) {
    lines_.push_back(key + " = " + value);
  }
  template <typename T>
  void add_scalar(const std::string& key, const T& v) {
    add(key, detail::render_scalar(v));
  }
  template <typename T>
  void add_quat(const std::string& key, const Quaternion<T>& q) {
    add(key, render_quat(q));
  }
  template <typename T>
  void add_vector(const std::string& key, const QVector<T>& v) {
    add(key, render_vector(v));
  }
  /// One line per row: key[1] = a11, a12, ...
  template <typename T>
  void add_matrix(const std::string& key, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      add(key + "[" + std::to_string(i + 1) + "]", render_vector(m.row_vec(i)));
  }
  std::string str() const {
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    return out;
  }

 private:
  std::vector<std::string> lines_;
};

// ---- problem files -------------------------------------------------------

using Json = nlohmann::json;

inline Json load_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

template <typename T>
QVector<T> parse_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of literals");
  QVector<T> v;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(what + ": entries must be literal strings");
    try {
      v.push_back(parse_quat<T>(e.get<std::string>()));
    } catch (const ParseError& pe) {
      throw ParseError(what + ": '" + e.get<std::string>() + "': " + pe.what());
    }
  }
  return v;
}

template <typename T>
Matrix<T> parse_matrix(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a non-empty array of rows");
  std::vector<QVector<T>> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(parse_vector<T>(j[i], what + " row " + std::to_string(i + 1)));
  Matrix<T> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError(what + ": ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rows[i][c];
  }
  return m;
}

template <typename T>
PolynomialVector<T> parse_poly_vector(const Json& j, std::size_t n, const std::string& what) {
  PolynomialVector<T> p(n);
  if (!j.is_array()) throw ParseError(what + ": expected a list of coefficient vectors");
  for (std::size_t m = 0; m < j.size(); ++m) {
    QVector<T> v = parse_vector<T>(j[m], what + " coefficient " + std::to_string(m));
    if (v.size() != n) throw PreconditionError(what + ": coefficient length mismatch");
    p.set(m, v);
  }
  return p;
}

inline double parse_time(const Json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_quat<double>(j.get<std::string>()).w;
  throw ParseError(what + ": expected a number");
}

inline Side parse_side(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  throw ParseError("side must be 'right' or 'left', got '" + s + "'");
}

/// Problem file: {"side", "backend", "A", "b", "t0", "x0", "t", "P", "D",
/// "T", "solution"}; only "A" is always required.
template <typename T>
struct ProblemFile {
  LqdsProblem<T> problem;
  std::vector<double> samples;
  std::optional<Matrix<T>> p, d, t;
  std::optional<PolynomialVector<T>> solution;
};

template <typename T>
ProblemFile<T> parse_problem(const Json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  if (!j.contains("A")) throw ParseError("problem file lacks matrix 'A'");
  ProblemFile<T> f;
  f.problem.a = parse_matrix<T>(j.at("A"), "A");
  const std::size_t n = f.problem.a.rows();
  if (j.contains("side")) f.problem.side = parse_side(j.at("side").get<std::string>());
  f.problem.b = j.contains("b") ? parse_poly_vector<T>(j.at("b"), n, "b") : PolynomialVector<T>(n);
  if (j.contains("t0")) f.problem.t0 = parse_time(j.at("t0"), "t0");
  if (j.contains("x0")) f.problem.x0 = parse_vector<T>(j.at("x0"), "x0");
  if (j.contains("t")) {
    if (!j.at("t").is_array()) throw ParseError("t: expected a list of sample times");
    for (const auto& e : j.at("t")) f.samples.push_back(parse_time(e, "t"));
  }
  if (j.contains("P")) f.p = parse_matrix<T>(j.at("P"), "P");
  if (j.contains("D")) f.d = parse_matrix<T>(j.at("D"), "D");
  if (j.contains("T")) f.t = parse_matrix<T>(j.at("T"), "T");
  if (j.contains("solution")) f.solution = parse_poly_vector<T>(j.at("solution"), n, "solution");
  f.problem.validate();
  return f;
}

/// Every literal string in a document, in document order.
inline void collect_literals(const Json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (j.is_array() || j.is_object()) {
    for (const auto& e : j) collect_literals(e, out);
  }
}

}  // namespace qlds

#endif  // QLDS_IO_HPP
