#include "indcluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "indcluster/error.hpp"

namespace indcluster {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, int exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(v, exponent);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, VarId id) { return f.first < id; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_polynomial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second > 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return {};
  Monomial out = *this;
  for (auto& f : out.factors_) f.second *= k;
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() || ib != fb.rend()) {
    // Walk from the largest VarId down; a missing factor has exponent 0.
    VarId va = ia != fa.rend() ? ia->first : VarId{0};
    VarId vb = ib != fb.rend() ? ib->first : VarId{0};
    int ea, eb;
    if (ib == fb.rend() || (ia != fa.rend() && va > vb)) {
      ea = ia->second;
      eb = 0;
      ++ia;
    } else if (ia == fa.rend() || vb > va) {
      ea = 0;
      eb = ib->second;
      ++ib;
    } else {
      ea = ia->second;
      eb = ib->second;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(VarId v, int exponent) {
  return term(Rational(1), Monomial::variable(v, exponent));
}

LaurentPoly LaurentPoly::term(const Rational& c, const Monomial& m) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId> LaurentPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

int LaurentPoly::max_exponent(VarId v) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (first || e > best) best = e;
    first = false;
  }
  return best;
}

int LaurentPoly::min_exponent(VarId v) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial())
      throw Error(ErrorCode::NotDivisible, "negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Rational inv = 1 / c;
    Rational coeff = 1;
    for (int i = 0; i < -k; ++i) coeff *= inv;
    return term(coeff, m.pow(k));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Monomial LaurentPoly::denominator() const {
  Monomial den;
  for (VarId v : variables()) {
    int e = min_exponent(v);
    if (e < 0) den = den * Monomial::variable(v, -e);
  }
  return den;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

// Multiplies by the monomial that makes every exponent nonnegative with each variable's minimum at 0.
Monomial normalizing_shift(const LaurentPoly& p) {
  Monomial shift;
  for (VarId v : p.variables()) {
    int e = p.min_exponent(v);
    if (e != 0) shift = shift * Monomial::variable(v, -e);
  }
  return shift;
}

LaurentPoly shifted(const LaurentPoly& p, const Monomial& m) { return p * LaurentPoly::term(1, m); }

}  // namespace

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [m, c] = *b.terms().begin();
    return a * LaurentPoly::term(1 / c, m.inverse());
  }
  // Variables are prime in the polynomial ring, so a == q*b in the Laurent ring iff the
  // normalized numerators divide as polynomials.
  Monomial sa = normalizing_shift(a), sb = normalizing_shift(b);
  LaurentPoly rem = shifted(a, sa);
  LaurentPoly divisor = shifted(b, sb);
  const auto& [lead_m, lead_c] = *divisor.terms().begin();
  Monomial lead_inv = lead_m.inverse();
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    Monomial qm = rm * lead_inv;
    if (!qm.is_polynomial()) throw Error(ErrorCode::NotDivisible, "remainder is not a multiple");
    LaurentPoly step = LaurentPoly::term(rc / lead_c, qm);
    quotient += step;
    rem -= step * divisor;
  }
  return shifted(quotient, sb * sa.inverse());
}

LaurentPoly lp_substitute(const LaurentPoly& p, const Substitution& images) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly t(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept = kept * Monomial::variable(v, e);
      } else {
        if (e < 0 && !it->second.is_monomial())
          throw Error(ErrorCode::NotDivisible,
                      "negative power of '" + var_name(v) + "' mapped to a non-unit");
        t *= it->second.pow(e);
      }
    }
    out += t * LaurentPoly::term(1, kept);
  }
  return out;
}

LaurentPoly lp_substitute_exact(const LaurentPoly& p, const Substitution& images) {
  Monomial den = p.denominator();
  LaurentPoly num = lp_substitute(shifted(p, den), images);
  LaurentPoly den_image = lp_substitute(LaurentPoly::term(1, den), images);
  return lp_div_exact(num, den_image);
}

Rational lp_eval(const LaurentPoly& p, const Assignment& values) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw Error(ErrorCode::MissingValue, "no value for '" + var_name(v) + "'");
      const Rational& x = it->second;
      if (x == 0) {
        if (e < 0) throw Error(ErrorCode::ZeroToNegativePower, "'" + var_name(v) + "' is zero");
        t = 0;
        break;
      }
      Rational base = e > 0 ? x : 1 / x;
      for (int i = 0; i < std::abs(e); ++i) t *= base;
    }
    total += t;
  }
  return total;
}

bool lp_is_coefficient_positive(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
}

// ---------------------------------------------------------------- printing

namespace {

std::string name_of(VarId v, const VarNamer& namer) { return namer ? namer(v) : var_name(v); }

}  // namespace

std::string monomial_to_string(const Monomial& m, const VarNamer& namer) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += name_of(v, namer);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string lp_to_string(const LaurentPoly& p, const VarNamer& namer) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += rational_to_string(mag);
    } else {
      if (mag != 1) out += rational_to_string(mag) + "*";
      out += monomial_to_string(m, namer);
    }
  }
  return out;
}

std::string lp_to_fraction_string(const LaurentPoly& p, const VarNamer& namer) {
  Monomial den = p.denominator();
  if (den.is_one()) return lp_to_string(p, namer);
  LaurentPoly num = p * LaurentPoly::term(1, den);
  std::string n = lp_to_string(num, namer);
  if (num.size() > 1) n = "(" + n + ")";
  std::string d = monomial_to_string(den, namer);
  if (den.factors().size() > 1) d = "(" + d + ")";
  return n + " / " + d;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse_all() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    LaurentPoly t = term();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (true) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        acc = lp_div_exact(acc, power());
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      int e = std::stoi(digits);
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  std::string read_digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  LaurentPoly atom() {
    skip();
    if (eat('(')) {
      LaurentPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return LaurentPoly(Rational(Integer(read_digits())));
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      return LaurentPoly::variable(var(read_name()));
    fail("expected a term");
  }

  // identifier, optionally followed by one balanced bracket group
  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      int depth = 0;
      do {
        if (pos_ >= s_.size()) fail("unbalanced '['");
        if (s_[pos_] == '[') ++depth;
        if (s_[pos_] == ']') --depth;
        ++pos_;
      } while (depth > 0);
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly lp_parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------- JSON

nlohmann::json lp_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) exps[var_name(v)] = e;
    out.push_back({{"coeff", rational_to_fraction(c)}, {"exps", exps}});
  }
  return out;
}

LaurentPoly lp_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array of terms");
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string())
      throw Error(ErrorCode::ParseError, "term needs a string 'coeff'");
    Monomial m;
    if (t.contains("exps")) {
      for (const auto& [name, e] : t["exps"].items()) {
        if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, "exponent must be an integer");
        m = m * Monomial::variable(var(name), e.get<int>());
      }
    }
    out += LaurentPoly::term(parse_rational(t["coeff"].get<std::string>()), m);
  }
  return out;
}

}  // namespace indcluster
