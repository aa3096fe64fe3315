#include "ghostchar/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ghostchar {

PairVar::PairVar(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("pair indices start at 1");
  if (a == b) throw std::invalid_argument("diagonal pair is the constant 2, not a variable");
  i = std::min(a, b);
  j = std::max(a, b);
}

std::string PairVar::to_string() const {
  return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

int lex_compare(const Monomial& a, const Monomial& b) {
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size()) return 1;
    if (ia == a.size()) return -1;
    if (a[ia].first < b[ib].first) return 1;
    if (b[ib].first < a[ia].first) return -1;
    if (a[ia].second != b[ib].second) return a[ia].second > b[ib].second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

unsigned degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
      out.push_back(a[ia++]);
    } else if (ia == a.size() || b[ib].first < a[ia].first) {
      out.push_back(b[ib++]);
    } else {
      out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(PairVar v) {
  MultiPoly p;
  p.terms_.emplace(Monomial{{v, 1u}}, Rational(1));
  return p;
}

MultiPoly MultiPoly::pair(int i, int j) {
  if (i == j) return MultiPoly(2);
  return variable(PairVar(i, j));
}

MultiPoly MultiPoly::from_terms(TermMap terms) {
  MultiPoly p;
  for (auto& [m, c] : terms)
    if (sgn(c) != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

std::set<PairVar> MultiPoly::variables() const {
  std::set<PairVar> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), Rational(ca * cb));
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<PairVar, MultiPoly>& values) const {
  std::map<PairVar, std::vector<MultiPoly>> powers;
  MultiPoly out;
  for (const auto& [mono, coeff] : terms_) {
    Monomial kept;
    MultiPoly factor(coeff);
    for (const auto& [v, e] : mono) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto& table = powers[v];
      if (table.empty()) {
        table.emplace_back(1);
        table.push_back(it->second);
      }
      while (table.size() <= e) table.push_back(table.back() * table[1]);
      factor = factor * table[e];
    }
    if (!kept.empty()) {
      MultiPoly rest;
      rest.terms_.emplace(kept, Rational(1));
      factor = factor * rest;
    }
    out += factor;
  }
  return out;
}

MultiPoly MultiPoly::canonical() const {
  if (terms_.empty()) return *this;
  Integer den = 1;
  Integer num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(leading_coefficient()) < 0) scale = -scale;
  MultiPoly out = *this;
  out *= scale;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) os << "-";
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mono.empty() || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : mono) {
      if (need_star) os << " * ";
      os << v.to_string();
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, PairVar>& aliases)
      : s_(text), aliases_(aliases) {}

  MultiPoly parse() {
    MultiPoly total;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      MultiPoly term = factor();
      skip();
      while (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
        term = term * factor();
        skip();
      }
      if (sign < 0) term = -term;
      total += term;
      skip();
    }
    if (first) fail("empty polynomial");
    return total;
  }

 private:
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what);
  }
  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  unsigned exponent() {
    skip();
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      skip();
      return static_cast<unsigned>(integer());
    }
    return 1;
  }
  MultiPoly factor() {
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      Rational q = parse_rational(std::string(s_.substr(start, pos_ - start)));
      return MultiPoly(q).pow(exponent());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "x" && pos_ < s_.size() && peek() == '[') {
        ++pos_;
        skip();
        long a = integer();
        skip();
        if (pos_ >= s_.size() || get() != ',') fail("expected ','");
        skip();
        long b = integer();
        skip();
        if (pos_ >= s_.size() || get() != ']') fail("expected ']'");
        return MultiPoly::pair(static_cast<int>(a), static_cast<int>(b)).pow(exponent());
      }
      auto it = aliases_.find(name);
      if (it == aliases_.end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(it->second).pow(exponent());
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::map<std::string, PairVar>& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::map<std::string, PairVar>& aliases) {
  return Parser(text, aliases).parse();
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mono, coeff] : terms_) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [v, e] : mono) m[std::to_string(v.i) + "," + std::to_string(v.j)] = e;
    out.push_back({{"coeff", coeff.get_str()}, {"monomial", m}});
  }
  return out;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
  MultiPoly out;
  for (const auto& term : j) {
    Rational c = parse_rational(term.at("coeff").get<std::string>());
    MultiPoly t(c);
    for (const auto& [key, e] : term.at("monomial").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad monomial key: " + key);
      t = t * MultiPoly::variable(PairVar(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))))
                  .pow(e.get<unsigned>());
    }
    out += t;
  }
  return out;
}

MultiPoly det(const std::vector<std::vector<MultiPoly>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0 || n > 4) throw std::invalid_argument("det supports sizes 1 to 4");
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("det of a non-square matrix");
  return det_cofactor(matrix);
}

}  // namespace ghostchar
