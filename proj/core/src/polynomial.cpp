#include "qsk/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace qsk {

std::string var_name(VarId v) {
  const char* prefix = v.kind == VarKind::X ? "x" : v.kind == VarKind::Q ? "q" : "h";
  return prefix + std::to_string(v.index);
}

VarAlphabet::VarAlphabet(AlphabetKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1) throw error("alphabet rank must be positive, got " + std::to_string(n));
}

bool VarAlphabet::contains(VarId v) const {
  if (v.index < 1) return false;
  switch (kind_) {
    case AlphabetKind::X: return v.kind == VarKind::X && v.index <= n_;
    case AlphabetKind::Q: return v.kind == VarKind::Q && v.index <= n_ - 1;
    case AlphabetKind::XQ:
      return (v.kind == VarKind::X && v.index <= n_) ||
             (v.kind == VarKind::Q && v.index <= n_ - 1);
    case AlphabetKind::H: return v.kind == VarKind::H && v.index <= n_ - 1;
  }
  return false;
}

std::vector<VarId> VarAlphabet::variables() const {
  std::vector<VarId> out;
  if (kind_ == AlphabetKind::X || kind_ == AlphabetKind::XQ)
    for (int i = 1; i <= n_; ++i) out.push_back(xvar(i));
  if (kind_ == AlphabetKind::Q || kind_ == AlphabetKind::XQ)
    for (int i = 1; i <= n_ - 1; ++i) out.push_back(qvar(i));
  if (kind_ == AlphabetKind::H)
    for (int i = 1; i <= n_ - 1; ++i) out.push_back(hvar(i));
  return out;
}

int monomial_total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i == a.size() || !(a[i].first == v) || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

namespace {

// true when a < b in graded lex (grading: plain total degree).
bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = monomial_total_degree(a), db = monomial_total_degree(b);
  if (da != db) return da < db;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second < b[j].second;
      ++i, ++j;
    } else {
      // The side owning the earlier variable has a positive exponent where the
      // other has zero, making it lexicographically larger.
      return b[j].first < a[i].first;
    }
  }
  return i < a.size() ? false : j < b.size();
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_less(b, a);  // larger first
}

Polynomial Polynomial::constant(VarAlphabet alphabet, Int c) {
  Polynomial p(alphabet);
  p.add_term({}, std::move(c));
  return p;
}

Polynomial Polynomial::variable(VarAlphabet alphabet, VarId v, int exp) {
  if (!alphabet.contains(v)) throw error("variable " + var_name(v) + " not in alphabet");
  if (exp < 0) throw error("negative exponent for " + var_name(v));
  Polynomial p(alphabet);
  if (exp == 0) p.add_term({}, 1);
  else p.add_term({{v, exp}}, 1);
  return p;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, Int c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_alphabet(const Polynomial& o) const {
  if (!(alphabet_ == o.alphabet_)) throw error("incompatible alphabets");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_alphabet(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_alphabet(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_alphabet(b);
  Polynomial out(a.alphabet_);
  // Iterate the smaller operand outside: fewer monomial_mul allocations stay hot.
  const Polynomial& outer = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& inner = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [ma, ca] : outer.terms_)
    for (const auto& [mb, cb] : inner.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw error("negative polynomial power");
  Polynomial acc = constant(alphabet_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

namespace {

Polynomial mul_by_term(const Polynomial& p, const Monomial& m, const Int& c) {
  Polynomial out(p.alphabet());
  for (const auto& [pm, pc] : p.terms()) out.add_term(monomial_mul(pm, m), pc * c);
  return out;
}

}  // namespace

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& den) const {
  check_same_alphabet(den);
  if (den.is_zero()) throw error("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(alphabet_);
  const auto& dlead = *den.terms_.begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    auto mq = monomial_div(rlead.first, dlead.first);
    if (!mq) return std::nullopt;
    Int cq = rlead.second / dlead.second;
    if (cq * dlead.second != rlead.second) return std::nullopt;
    quot.add_term(*mq, cq);
    rem -= mul_by_term(den, *mq, cq);
  }
  return quot;
}

Polynomial Polynomial::substituted_zero(VarKind kind) const {
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) {
    bool drop = std::any_of(m.begin(), m.end(),
                            [&](const auto& ve) { return ve.first.kind == kind; });
    if (!drop) out.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::converted(VarAlphabet target) const {
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m)
      if (!target.contains(v))
        throw error("variable " + var_name(v) + " does not exist in target alphabet");
    out.terms_.emplace(m, c);
  }
  return out;
}

Polynomial Polynomial::swapped_vars(VarId a, VarId b) const {
  Polynomial out(alphabet_);
  for (const auto& [m, c] : terms_) {
    Monomial sm;
    sm.reserve(m.size());
    for (const auto& [v, e] : m) {
      VarId nv = v == a ? b : v == b ? a : v;
      sm.emplace_back(nv, e);
    }
    std::sort(sm.begin(), sm.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    out.add_term(sm, c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // Quantum parameters print before the x's (the usual way these products
    // are written); storage order keeps x first.
    Monomial shown = m;
    std::stable_sort(shown.begin(), shown.end(),
                     [](const auto& a, const auto& b) {
                       const auto rank = [](VarKind k) {
                         return k == VarKind::Q ? 0 : 1;
                       };
                       if (rank(a.first.kind) != rank(b.first.kind))
                         return rank(a.first.kind) < rank(b.first.kind);
                       return a.first < b.first;
                     });
    std::string vars;
    for (const auto& [v, e] : shown) {
      if (!vars.empty()) vars += "*";
      vars += var_name(v);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += vars;
    }
  }
  return out;
}

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Caret, End } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Name, std::string(s.substr(i, j - i))});
      i = j;
    } else if (c == '+') {
      out.push_back({Token::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Minus, "-"});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Star, "*"});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Caret, "^"});
      ++i;
    } else {
      throw error(std::string("unexpected character '") + c + "' in polynomial text");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

VarId parse_var(const std::string& name) {
  VarKind kind;
  switch (name[0]) {
    case 'x': kind = VarKind::X; break;
    case 'q': kind = VarKind::Q; break;
    case 'h': kind = VarKind::H; break;
    default: throw error("unknown variable '" + name + "'");
  }
  if (name.size() < 2) throw error("variable '" + name + "' is missing an index");
  return {kind, std::stoi(name.substr(1))};
}

}  // namespace

Polynomial Polynomial::parse(VarAlphabet alphabet, std::string_view text) {
  auto toks = tokenize(text);
  std::size_t pos = 0;
  Polynomial out(alphabet);

  auto parse_term = [&](int sign) {
    Int coeff = sign;
    std::map<VarId, int> exps;
    bool expect_factor = true;
    while (true) {
      const Token& t = toks[pos];
      if (t.kind == Token::Number) {
        coeff *= Int(t.text);
        ++pos;
      } else if (t.kind == Token::Name) {
        VarId v = parse_var(t.text);
        if (!alphabet.contains(v)) throw error("variable '" + t.text + "' not in alphabet");
        ++pos;
        int e = 1;
        if (toks[pos].kind == Token::Caret) {
          ++pos;
          if (toks[pos].kind != Token::Number) throw error("expected exponent after '^'");
          e = std::stoi(toks[pos].text);
          ++pos;
        }
        exps[v] += e;
      } else {
        if (expect_factor) throw error("expected a term in polynomial text");
        break;
      }
      expect_factor = false;
      if (toks[pos].kind == Token::Star) {
        ++pos;
        expect_factor = true;
        continue;
      }
      if (toks[pos].kind != Token::Number && toks[pos].kind != Token::Name) break;
      // Adjacent factors without '*' are a syntax error.
      throw error("missing '*' between factors in polynomial text");
    }
    Monomial m;
    for (const auto& [v, e] : exps)
      if (e != 0) m.emplace_back(v, e);
    out.add_term(m, coeff);
  };

  int sign = 1;
  if (toks[pos].kind == Token::Plus) ++pos;
  else if (toks[pos].kind == Token::Minus) { sign = -1; ++pos; }
  parse_term(sign);
  while (toks[pos].kind != Token::End) {
    if (toks[pos].kind == Token::Plus) sign = 1;
    else if (toks[pos].kind == Token::Minus) sign = -1;
    else throw error("expected '+' or '-' between terms");
    ++pos;
    parse_term(sign);
  }
  return out;
}

std::string Polynomial::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m) exps[var_name(v)] = e;
    arr.push_back({{"exponents", std::move(exps)}, {"coeff", c.str()}});
  }
  return arr.dump();
}

Polynomial Polynomial::from_json(VarAlphabet alphabet, std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!arr.is_array()) throw error("polynomial JSON must be an array of terms");
  Polynomial out(alphabet);
  for (const auto& term : arr) {
    if (!term.contains("exponents") || !term.contains("coeff"))
      throw error("polynomial JSON term needs 'exponents' and 'coeff'");
    Monomial m;
    for (const auto& [name, e] : term["exponents"].items()) {
      VarId v = parse_var(name);
      if (!alphabet.contains(v)) throw error("variable '" + name + "' not in alphabet");
      if (!e.is_number_integer() || e.get<long long>() <= 0)
        throw error("exponent for '" + name + "' must be a positive integer");
      m.emplace_back(v, static_cast<int>(e.get<long long>()));
    }
    std::sort(m.begin(), m.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    Int c = term["coeff"].is_string() ? Int(term["coeff"].get<std::string>())
                                      : Int(term["coeff"].get<long long>());
    out.add_term(m, std::move(c));
  }
  return out;
}

}  // namespace qsk
