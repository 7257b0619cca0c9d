#include "grasstropic/polynomial.hpp"

#include <cctype>
#include <set>

namespace grasstropic {

const Rational& Assignment::get(int code) const {
  auto it = values.find(code);
  if (it == values.end()) throw Error("no value assigned to " + Variable::from_code(code).name());
  return it->second;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

Polynomial Polynomial::variable(Variable v) {
  Polynomial p;
  p.terms_[{{v.code(), 1}}] = 1;
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational Polynomial::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Variable> Polynomial::variables() const {
  std::set<int> codes;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) codes.insert(v);
  std::vector<Variable> out;
  for (int c : codes) out.push_back(Variable::from_code(c));
  return out;
}

Rational Polynomial::evaluate(const Assignment& a) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      const Rational& x = a.get(v);
      for (int i = 0; i < e; ++i) t *= x;
    }
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // higher total degree first, then by monomial order
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (auto& [v, e] : a.first) da += e;
    for (auto& [v, e] : b.first) db += e;
    return da > db;
  });
  for (const auto& [m, c] : ordered) {
    Rational a = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += Variable::from_code(v).name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      size_t i = 0, j = 0;
      while (i < ma.size() || j < mb.size()) {
        if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) m.push_back(ma[i++]);
        else if (i == ma.size() || mb[j].first < ma[i].first) m.push_back(mb[j++]);
        else {
          m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
          ++i;
          ++j;
        }
      }
      r.add_term(m, ca * cb);
    }
  return r;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("polynomial '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
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
  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      Polynomial r(1L);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == 'p' || c == 'm') {
      ++pos_;
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index");
      return Polynomial::variable({c, std::stoi(std::string(s_.substr(start, pos_ - start)))});
    }
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("unexpected character");
    return Polynomial(parse_rational(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

RationalMatrix evaluate(const PolyMatrix& m, const Assignment& a) {
  return m.map([&](const Polynomial& p) { return p.evaluate(a); });
}

Rational determinant(RationalMatrix m) {
  const int n = m.rows();
  if (m.cols() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace grasstropic
