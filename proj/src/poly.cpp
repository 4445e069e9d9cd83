#include "cubictrace/poly.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace cubictrace {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::optional<TraceOnePoly> parse_pair(std::string_view compact) {
  const auto comma = compact.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const std::string_view lhs = compact.substr(0, comma);
  const std::string_view rhs = compact.substr(comma + 1);
  try {
    return TraceOnePoly{parse_int(lhs), parse_int(rhs)};
  } catch (const std::overflow_error&) {
    throw ParseError("coefficient out of range in '" + std::string(compact) + "'");
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed coefficient pair '" + std::string(compact) + "'");
  }
}

struct Term {
  std::string text;
  Int coeff = 0;
  int degree = 0;
};

// One signed term such as "-2t", "+17*t", "t^3", "-t^2" or "43".
Term parse_term(const std::string& token) {
  Term term{token, 0, 0};
  std::size_t i = 0;
  bool negative = false;
  if (token[i] == '+' || token[i] == '-') {
    negative = token[i] == '-';
    ++i;
  }
  const std::size_t t_pos = token.find('t', i);
  std::string_view digits;
  if (t_pos == std::string::npos) {
    digits = std::string_view(token).substr(i);
    if (!all_digits(digits)) throw ParseError("malformed term '" + token + "'");
  } else {
    std::size_t end = t_pos;
    if (end > i && token[end - 1] == '*') --end;
    digits = std::string_view(token).substr(i, end - i);
    if (!digits.empty() && !all_digits(digits)) throw ParseError("malformed coefficient in term '" + token + "'");
    if (digits.empty() && end != t_pos) throw ParseError("dangling '*' in term '" + token + "'");
    const std::string_view tail = std::string_view(token).substr(t_pos + 1);
    if (tail.empty()) {
      term.degree = 1;
    } else if (tail.size() >= 2 && tail[0] == '^' && all_digits(tail.substr(1))) {
      const Int d = parse_int(tail.substr(1));
      if (d > 3) throw ParseError("degree above 3 in term '" + token + "'");
      term.degree = static_cast<int>(d);
    } else {
      throw ParseError("malformed power in term '" + token + "'");
    }
  }
  Int magnitude = 1;
  if (!digits.empty()) {
    try {
      magnitude = parse_int(digits);
    } catch (const std::overflow_error&) {
      throw ParseError("coefficient out of range in term '" + token + "'");
    }
  }
  term.coeff = negative ? -magnitude : magnitude;
  return term;
}

}  // namespace

std::string TraceOnePoly::to_string() const {
  std::string out = "t^3 - t^2";
  if (a != 0) {
    out += a < 0 ? " - " : " + ";
    const Int m = abs(a);
    if (m != 1) out += cubictrace::to_string(m);
    out += "t";
  }
  if (b != 0) {
    out += b < 0 ? " - " : " + ";
    out += cubictrace::to_string(abs(b));
  }
  return out;
}

TraceOnePoly parse_poly(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) throw ParseError("empty polynomial");
  if (auto pair = parse_pair(compact)) return *pair;

  std::vector<std::string> tokens;
  std::string current;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char ch = compact[i];
    const bool after_caret = i > 0 && compact[i - 1] == '^';
    if ((ch == '+' || ch == '-') && !current.empty() && !after_caret) {
      tokens.push_back(current);
      current.clear();
    }
    current.push_back(ch);
  }
  tokens.push_back(current);

  std::array<std::optional<Int>, 4> by_degree;
  for (const std::string& token : tokens) {
    if (token == "+" || token == "-") throw ParseError("dangling sign '" + token + "'");
    const Term term = parse_term(token);
    auto& slot = by_degree[static_cast<std::size_t>(term.degree)];
    if (slot) throw ParseError("repeated degree-" + std::to_string(term.degree) + " term '" + token + "'");
    slot = term.coeff;
  }
  if (!by_degree[3]) throw ParseError("missing leading term 't^3'");
  if (*by_degree[3] != 1)
    throw ParseError("leading coefficient must be 1, got '" + cubictrace::to_string(*by_degree[3]) + "t^3'");
  if (!by_degree[2]) throw ParseError("missing trace term '-t^2'");
  if (*by_degree[2] != -1)
    throw ParseError("t^2 coefficient must be -1, got '" + cubictrace::to_string(*by_degree[2]) + "t^2'");
  return TraceOnePoly{by_degree[1].value_or(0), by_degree[0].value_or(0)};
}

Int evaluate(const TraceOnePoly& f, Int x) {
  // Horner on t^3 - t^2 + a t + b.
  Int acc = checked_sub(x, 1);
  acc = checked_add(checked_mul(acc, x), f.a);
  return checked_add(checked_mul(acc, x), f.b);
}

Int discriminant(const TraceOnePoly& f) {
  const Int a = f.a;
  const Int b = f.b;
  const Int a2 = checked_mul(a, a);
  const Int a3 = checked_mul(a2, a);
  Int d = a2;
  d = checked_sub(d, checked_mul(4, a3));
  d = checked_sub(d, checked_mul(18, checked_mul(a, b)));
  d = checked_add(d, checked_mul(4, b));
  d = checked_sub(d, checked_mul(27, checked_mul(b, b)));
  return d;
}

bool is_irreducible(const TraceOnePoly& f) {
  if (f.b == 0) return false;
  for (const std::uint64_t d : divisors(abs(f.b))) {
    const Int r = static_cast<Int>(d);
    if (evaluate(f, r) == 0 || evaluate(f, -r) == 0) return false;
  }
  return true;
}

bool is_cyclic(const TraceOnePoly& f) {
  const Int d = discriminant(f);
  if (d <= 0 || !is_perfect_square(d)) return false;
  return is_irreducible(f);
}

Int height_sq(const TraceOnePoly& f) {
  if (f.a > 0) throw std::domain_error("height is defined only for a <= 0, got a = " + cubictrace::to_string(f.a));
  return checked_sub(1, checked_mul(3, f.a));
}

}  // namespace cubictrace
