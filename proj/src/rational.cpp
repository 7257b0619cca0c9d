#include "grasstropic/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace grasstropic {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  std::string body = s;
  bool neg = false;
  if (body[0] == '-' || body[0] == '+') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational q;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    q = Rational(mpz_class(num), d);
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("malformed decimal '" + s + "'");
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class num(ip.empty() ? "0" : ip);
    num = num * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    q = Rational(num, scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational '" + s + "'");
    q = Rational(mpz_class(body));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::string subset_to_string(const Subset& s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

std::string subset_compact(const Subset& s) {
  bool small = std::all_of(s.begin(), s.end(), [](int x) { return x < 10; });
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!small && i) out += '.';
    out += std::to_string(s[i]);
  }
  return out;
}

Subset parse_subset(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ParseError("unterminated subset '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  Subset out;
  bool separated = s.find_first_of(",. ") != std::string::npos;
  if (!separated) {
    for (char c : s) {
      if (c < '1' || c > '9') throw ParseError("malformed subset '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
  } else {
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      if (!all_digits(tok)) throw ParseError("malformed subset '" + std::string(text) + "'");
      out.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char c : s) {
      if (c == ',' || c == '.' || c == ' ') flush();
      else tok += c;
    }
    flush();
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError("repeated element in subset '" + std::string(text) + "'");
  return out;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool subset_less_lex(const Subset& a, const Subset& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace grasstropic
