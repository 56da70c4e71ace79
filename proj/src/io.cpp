#include "f5c/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace f5c {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, std::size_t line, std::size_t col0)
      : text_(text), ring_(ring), line_(line), col0_(col0) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = get() == '-';
      skip_ws();
      terms.push_back(term(negative));
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms), ring_);
  }

 private:
  Term term(bool negative) {
    Term t{1, ring_.one()};
    factor(t);
    skip_ws();
    while (peek() == '*') {
      get();
      skip_ws();
      factor(t);
      skip_ws();
    }
    if (negative) t.coeff = ring_.field.neg(t.coeff);
    return t;
  }

  void factor(Term& t) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = ring_.field.mul(t.coeff, number_mod_p());
      return;
    }
    if (!is_ident_start(peek())) fail(at_end() ? "unexpected end of input" : "expected a term");
    const std::size_t start = pos_;
    while (is_ident_char(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto it = std::find(ring_.variables.begin(), ring_.variables.end(), name);
    if (it == ring_.variables.end()) fail_at(start, "unknown variable '" + std::string(name) + "'");
    unsigned exponent = 1;
    if (peek() == '^') {
      const std::size_t caret = pos_;
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail_at(caret, "dangling '^': expected an exponent");
      }
      unsigned long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(get() - '0');
        if (e > 65535) fail_at(caret, "exponent too large");
      }
      exponent = static_cast<unsigned>(e);
    }
    Monomial m = ring_.var(static_cast<std::size_t>(it - ring_.variables.begin()), exponent);
    t.mono *= m;
  }

  Coeff number_mod_p() {
    const std::uint64_t p = ring_.field.characteristic();
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(get() - '0')) % p;
    }
    return static_cast<Coeff>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, col0_ + pos + 1, msg);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line) {
  return PolyParser(text, ring, line, 0).parse();
}

ParsedSystem parse_system(std::string_view text, std::optional<std::uint32_t> char_override) {
  std::vector<std::string> variables;
  std::optional<std::uint32_t> characteristic;
  OrderKind order = OrderKind::grevlex;
  bool have_ring = false;
  struct PolyLine {
    std::size_t line;
    std::size_t col0;
    std::string_view text;
  };
  std::vector<PolyLine> poly_lines;
  bool in_polys = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (trim(line).empty()) continue;

    if (in_polys) {
      poly_lines.push_back({line_no, 0, line});
      continue;
    }
    const auto colon = line.find(':');
    const std::size_t key_col = line.find_first_not_of(" \t") + 1;
    if (colon == std::string_view::npos) throw ParseError(line_no, key_col, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    const std::size_t after = line.find_first_not_of(" \t", colon + 1);
    const std::size_t value_col = (after == std::string_view::npos ? colon + 1 : after) + 1;
    if (key == "ring") {
      std::size_t pos = 0;
      while (pos <= value.size()) {
        std::size_t comma = value.find(',', pos);
        if (comma == std::string_view::npos) comma = value.size();
        const std::string_view name = trim(value.substr(pos, comma - pos));
        const std::size_t col = value_col + pos;
        if (name.empty() || !is_ident_start(name.front()) ||
            !std::all_of(name.begin(), name.end(), is_ident_char)) {
          throw ParseError(line_no, col, "invalid variable name '" + std::string(name) + "'");
        }
        if (std::find(variables.begin(), variables.end(), name) != variables.end()) {
          throw ParseError(line_no, col, "duplicate variable '" + std::string(name) + "'");
        }
        variables.emplace_back(name);
        pos = comma + 1;
      }
      if (variables.size() > kMaxVariables) {
        throw ParseError(line_no, value_col, "too many variables");
      }
      have_ring = true;
    } else if (key == "char") {
      std::uint64_t v = 0;
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
          }) || value.size() > 10) {
        throw ParseError(line_no, value_col, "characteristic must be a positive integer");
      }
      for (char c : value) v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v >= (1ull << 31) || !is_prime(v)) {
        throw ParseError(line_no, value_col, "characteristic " + std::string(value) + " is not a prime below 2^31");
      }
      characteristic = static_cast<std::uint32_t>(v);
    } else if (key == "order") {
      try {
        order = parse_order_kind(value);
      } catch (const Error& e) {
        throw ParseError(line_no, value_col, e.what());
      }
    } else if (key == "polys") {
      if (!value.empty()) poly_lines.push_back({line_no, value_col - 1, value});
      in_polys = true;
    } else {
      throw ParseError(line_no, key_col, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_ring) throw ParseError(line_no, 1, "missing 'ring:' declaration");
  if (!in_polys) throw ParseError(line_no, 1, "missing 'polys:' section");

  std::uint32_t p = char_override.value_or(characteristic.value_or(kDefaultCharacteristic));
  Ring ring = [&] {
    try {
      return Ring(PrimeField(p), MonomialOrder{order}, variables);
    } catch (const Error& e) {
      throw ParseError(1, 1, e.what());
    }
  }();
  ParsedSystem out{ring, {}};
  for (const PolyLine& pl : poly_lines) {
    out.polys.push_back(PolyParser(pl.text, ring, pl.line, pl.col0).parse());
  }
  return out;
}

std::string render(const Polynomial& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    std::int64_t c = ring.field.to_signed(t.coeff);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    std::string mono;
    for (std::size_t v = 0; v < ring.arity(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring.variables[v];
      if (t.mono[v] > 1) mono += '^' + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + '*' + mono;
    }
  }
  return out;
}

std::string stats_json(const RunStats& stats, const Ring& ring, bool agrees_with_oracle) {
  using nlohmann::ordered_json;
  auto iteration = [](const IterationStats& it) {
    ordered_json pairs = ordered_json::object();
    for (const auto& [d, n] : it.pairs_by_degree) pairs[std::to_string(d)] = n;
    ordered_json j;
    j["i"] = it.i;
    j["basis_size"] = it.basis_size;
    j["pairs_by_degree"] = pairs;
    j["spolys"] = it.spolys;
    j["reduction_steps"] = it.reduction_steps;
    j["zero_reductions"] = it.zero_reductions;
    j["interreduction_steps"] = it.interreduction_steps;
    j["rewritten"] = it.rewritten;
    return j;
  };
  ordered_json j;
  j["algorithm"] = stats.algorithm;
  j["char"] = ring.field.characteristic();
  j["order"] = std::string(to_string(ring.order.kind));
  j["iterations"] = ordered_json::array();
  for (const IterationStats& it : stats.iterations) j["iterations"].push_back(iteration(it));
  const IterationStats totals = stats.totals();
  ordered_json t;
  std::size_t pairs = 0;
  for (const auto& [d, n] : totals.pairs_by_degree) pairs += n;
  t["pairs"] = pairs;
  t["spolys"] = totals.spolys;
  t["reduction_steps"] = totals.reduction_steps;
  t["zero_reductions"] = totals.zero_reductions;
  t["interreduction_steps"] = totals.interreduction_steps;
  t["rewritten"] = totals.rewritten;
  j["totals"] = t;
  j["basis_size_final"] = stats.basis_size_final;
  j["reduced_basis_agrees_with_oracle"] = agrees_with_oracle;
  return j.dump(2);
}

}  // namespace f5c
