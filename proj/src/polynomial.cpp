#include "momentkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace momentkit {

int total_degree(const Exponent& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai > bi;
  }
  return false;
}

std::string format_double(double value) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) {
    throw Error(ErrorKind::invalid_input, "polynomial needs at least one variable");
  }
}

Polynomial Polynomial::constant(int num_vars, double value) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), value);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) {
    throw Error(ErrorKind::invalid_input, "variable index out of range");
  }
  Polynomial p(num_vars);
  Exponent e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, 1.0);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

double Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Exponent& e, double coeff) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(ErrorKind::dimension_mismatch, "exponent length does not match variable count");
  }
  for (int k : e) {
    if (k < 0) throw Error(ErrorKind::invalid_input, "negative exponent");
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (coeff != 0.0) terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);
}

static void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw Error(ErrorKind::dimension_mismatch, "polynomials have different variable counts");
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_vars(*this, rhs);
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_same_vars(*this, rhs);
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_vars(*this, rhs);
  Polynomial out(num_vars_);
  Exponent e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(double scalar) const {
  Polynomial out(num_vars_);
  if (scalar == 0.0) return out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

Polynomial Polynomial::operator-() const { return *this * -1.0; }

bool Polynomial::operator==(const Polynomial& rhs) const {
  return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::invalid_input, "negative power");
  Polynomial result = constant(num_vars_, 1.0);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw Error(ErrorKind::dimension_mismatch, "point length does not match variable count");
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c;
    for (int i = 0; i < num_vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0.0;
    const double magnitude = std::abs(c);
    std::string monomial;
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += ' ';
      monomial += 'x';
      monomial += std::to_string(i + 1);
      if (e[i] != 1) {
        monomial += '^';
        monomial += std::to_string(e[i]);
      }
    }
    std::string term;
    if (monomial.empty()) {
      term = format_double(magnitude);
    } else if (magnitude == 1.0) {
      term = monomial;
    } else {
      term = format_double(magnitude) + " * " + monomial;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

struct ParsedTerm {
  double coefficient = 1.0;
  bool saw_factor = false;
  std::map<int, int> exponents;  // variable index (0-based) -> power
};

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::invalid_input,
              "polynomial parse error at position " + std::to_string(pos) + ": " + what +
                  " in \"" + text + "\"");
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int num_vars) {
  std::vector<ParsedTerm> parsed;
  ParsedTerm current;
  double sign = 1.0;
  bool sign_open = false;  // a +/- was consumed but no factor followed yet
  int max_index = 0;

  std::size_t i = 0;
  const auto flush = [&] {
    current.coefficient *= sign;
    parsed.push_back(std::move(current));
    current = ParsedTerm{};
    sign = 1.0;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == '+' || c == '-') {
      if (current.saw_factor) flush();
      if (c == '-') sign = -sign;
      sign_open = true;
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* start = text.c_str() + i;
      char* end = nullptr;
      const double v = std::strtod(start, &end);
      if (end == start) parse_fail(text, i, "bad number");
      current.coefficient *= v;
      current.saw_factor = true;
      sign_open = false;
      i += static_cast<std::size_t>(end - start);
      continue;
    }
    if (c == 'x' || c == 'X') {
      ++i;
      std::size_t digits = 0;
      int index = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        index = index * 10 + (text[i] - '0');
        ++i;
        ++digits;
      }
      if (digits == 0 || index < 1) parse_fail(text, i, "variable needs an index, e.g. x1");
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t pdigits = 0;
        power = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          power = power * 10 + (text[i] - '0');
          ++i;
          ++pdigits;
        }
        if (pdigits == 0) parse_fail(text, i, "missing exponent after ^");
      }
      current.exponents[index - 1] += power;
      current.saw_factor = true;
      sign_open = false;
      max_index = std::max(max_index, index);
      continue;
    }
    parse_fail(text, i, std::string("unexpected character '") + c + "'");
  }
  if (current.saw_factor) {
    flush();
  } else if (sign_open) {
    parse_fail(text, i, "dangling sign");
  } else if (parsed.empty()) {
    parse_fail(text, i, "empty polynomial text");
  }

  int vars = num_vars;
  if (vars == 0) vars = std::max(max_index, 1);
  if (max_index > vars) {
    throw Error(ErrorKind::invalid_input,
                "variable x" + std::to_string(max_index) + " exceeds declared count " +
                    std::to_string(vars));
  }
  Polynomial out(vars);
  for (const auto& term : parsed) {
    Exponent e(vars, 0);
    for (const auto& [idx, p] : term.exponents) e[idx] = p;
    out.add_term(e, term.coefficient);
  }
  return out;
}

Polynomial binomial_product(double bound, const Polynomial& a, int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorKind::invalid_input, "negative binomial power");
  const Polynomial t = Polynomial::constant(a.num_vars(), bound);
  return (t - a).pow(p) * (t + a).pow(q);
}

}  // namespace momentkit
