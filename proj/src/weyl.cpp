#include "grasstropic/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace grasstropic::weyl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw Error("not a permutation: " + to_string());
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw Error("simple reflection s" + std::to_string(i) + " out of range for S" + std::to_string(n));
  return identity(n).times_simple(i);
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i] - 1] = i + 1;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw Error("permutation sizes differ");
  Permutation p;
  p.images_.resize(size());
  for (int i = 0; i < size(); ++i) p.images_[i] = images_[rhs.images_[i] - 1];
  return p;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw Error("simple reflection index out of range");
  Permutation p = *this;
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (has_right_descent(i)) d.push_back(i);
  return d;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Subset Permutation::apply(const Subset& s) const {
  Subset out;
  out.reserve(s.size());
  for (int x : s) out.push_back((*this)(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < size(); ++i) out << (i ? "," : "") << images_[i];
  out << ')';
  return out.str();
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> im;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    im.push_back(std::stoi(tok));
    tok.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) tok += c;
    else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') flush();
    else throw ParseError("malformed permutation '" + std::string(text) + "'");
  }
  flush();
  if (im.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(im));
}

Word parse_word(std::string_view text, int n) {
  Word w;
  w.n = n;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    int i = std::stoi(tok);
    if (i < 1 || i >= n) throw ParseError("letter s" + tok + " out of range for S" + std::to_string(n));
    w.letters.push_back(i);
    tok.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) tok += c;
    else if (c == 's' || c == ',' || c == ' ' || c == '\t') flush();
    else throw ParseError("malformed word '" + std::string(text) + "'");
  }
  flush();
  return w;
}

std::string format_word(const Word& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (int i : w.letters) out += "s" + std::to_string(i);
  return out;
}

WordValue evaluate_word(const Word& w) {
  Permutation p = Permutation::identity(w.n);
  bool reduced = true;
  for (int i : w.letters) {
    if (i < 1 || i >= w.n) throw Error("letter out of range in word " + format_word(w));
    if (p.has_right_descent(i)) reduced = false;
    p = p.times_simple(i);
  }
  return {p, reduced};
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  const int n = v.size();
  if (w.size() != n) throw Error("bruhat_leq: sizes differ");
  // Compare #{a <= i : x(a) >= j} for every i, j.
  for (int i = 1; i < n; ++i) {
    std::vector<int> cv(n + 2, 0), cw(n + 2, 0);
    for (int a = 1; a <= i; ++a) {
      ++cv[v(a)];
      ++cw[w(a)];
    }
    int sv = 0, sw = 0;
    for (int j = n; j >= 1; --j) {
      sv += cv[j];
      sw += cw[j];
      if (sv > sw) return false;
    }
  }
  return true;
}

std::vector<Permutation> parabolic_min_reps(int k, int n) {
  if (k < 0 || k > n) throw Error("parabolic_min_reps: need 0 <= k <= n");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (i != n - k && im[i - 1] > im[i]) ok = false;
    if (ok) out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<Word> reduced_words(const Permutation& w) {
  std::vector<Word> out;
  std::vector<int> suffix;
  std::function<void(const Permutation&)> rec = [&](const Permutation& p) {
    if (p.is_identity()) {
      Word word{w.size(), std::vector<int>(suffix.rbegin(), suffix.rend())};
      out.push_back(std::move(word));
      return;
    }
    for (int i : p.right_descents()) {
      suffix.push_back(i);
      rec(p.times_simple(i));
      suffix.pop_back();
    }
  };
  rec(w);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.letters < b.letters; });
  return out;
}

Subexpression::Subexpression(Word base, std::vector<bool> mask) : base_(std::move(base)), mask_(std::move(mask)) {
  if (static_cast<int>(mask_.size()) != base_.size()) throw Error("subexpression mask length differs from word length");
  if (!evaluate_word(base_).reduced) throw Error("subexpression base word " + format_word(base_) + " is not reduced");
}

std::vector<Permutation> Subexpression::prefixes() const {
  std::vector<Permutation> out;
  out.reserve(size() + 1);
  out.push_back(Permutation::identity(base_.n));
  for (int j = 0; j < size(); ++j)
    out.push_back(mask_[j] ? out.back().times_simple(base_.letters[j]) : out.back());
  return out;
}

Permutation Subexpression::product() const { return prefixes().back(); }

std::vector<StepKind> Subexpression::kinds() const {
  std::vector<StepKind> out;
  Permutation p = Permutation::identity(base_.n);
  for (int j = 0; j < size(); ++j) {
    int i = base_.letters[j];
    if (!mask_[j]) {
      out.push_back(StepKind::Stay);
      continue;
    }
    out.push_back(p.has_right_descent(i) ? StepKind::Down : StepKind::Up);
    p = p.times_simple(i);
  }
  return out;
}

std::vector<int> Subexpression::positions(StepKind kind) const {
  std::vector<int> out;
  auto ks = kinds();
  for (int j = 0; j < size(); ++j)
    if (ks[j] == kind) out.push_back(j + 1);
  return out;
}

bool Subexpression::is_distinguished() const {
  Permutation p = Permutation::identity(base_.n);
  for (int j = 0; j < size(); ++j) {
    int i = base_.letters[j];
    if (p.has_right_descent(i) && !mask_[j]) return false;
    if (mask_[j]) p = p.times_simple(i);
  }
  return true;
}

bool Subexpression::is_positive() const {
  if (!is_distinguished()) return false;
  for (auto k : kinds())
    if (k == StepKind::Down) return false;
  return true;
}

std::string Subexpression::mask_string() const {
  std::string s;
  for (bool b : mask_) s += b ? '1' : '0';
  return s;
}

Subexpression parse_subexpression(const Word& base, std::string_view bits) {
  std::vector<bool> mask;
  for (char c : bits) {
    if (c == '0') mask.push_back(false);
    else if (c == '1') mask.push_back(true);
    else if (c != ' ') throw ParseError("mask must contain only 0 and 1");
  }
  return Subexpression(base, std::move(mask));
}

Subexpression positive_distinguished(const Permutation& v, const Word& w) {
  if (v.size() != w.n) throw Error("positive_distinguished: sizes differ");
  if (!evaluate_word(w).reduced) throw Error("positive_distinguished: word is not reduced");
  std::vector<bool> mask(w.size(), false);
  Permutation p = v;
  for (int j = w.size() - 1; j >= 0; --j) {
    int i = w.letters[j];
    if (p.has_right_descent(i)) {
      mask[j] = true;
      p = p.times_simple(i);
    }
  }
  if (!p.is_identity())
    throw Error(v.to_string() + " is not below " + evaluate_word(w).product.to_string() + " in Bruhat order");
  return Subexpression(w, std::move(mask));
}

std::vector<Subexpression> enumerate_distinguished(const Word& w, const std::optional<Permutation>& target) {
  if (!evaluate_word(w).reduced) throw Error("enumerate_distinguished: word is not reduced");
  std::vector<Subexpression> out;
  std::vector<bool> mask;
  std::function<void(const Permutation&)> rec = [&](const Permutation& p) {
    const int j = static_cast<int>(mask.size());
    if (j == w.size()) {
      if (!target || p == *target) out.emplace_back(w, mask);
      return;
    }
    int i = w.letters[j];
    if (!p.has_right_descent(i)) {
      mask.push_back(false);
      rec(p);
      mask.pop_back();
    }
    mask.push_back(true);
    rec(p.times_simple(i));
    mask.pop_back();
  };
  rec(Permutation::identity(w.n));
  return out;
}

std::int64_t RPolynomial::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string RPolynomial::to_string() const {
  std::string out;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    std::int64_t c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || d == 0) out += std::to_string(a);
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

bool RPolynomial::operator==(const RPolynomial& o) const {
  size_t m = std::max(coeffs.size(), o.coeffs.size());
  for (size_t i = 0; i < m; ++i) {
    std::int64_t a = i < coeffs.size() ? coeffs[i] : 0;
    std::int64_t b = i < o.coeffs.size() ? o.coeffs[i] : 0;
    if (a != b) return false;
  }
  return true;
}

RPolynomial r_polynomial(const Permutation& v, const Word& w) {
  RPolynomial r;
  for (const auto& s : enumerate_distinguished(w, v)) {
    std::vector<std::int64_t> term{1};
    for (auto k : s.kinds()) {
      std::vector<std::int64_t> next(term.size() + 1, 0);
      for (size_t d = 0; d < term.size(); ++d) {
        if (k == StepKind::Stay) {  // times (q - 1)
          next[d + 1] += term[d];
          next[d] -= term[d];
        } else if (k == StepKind::Down) {  // times q
          next[d + 1] += term[d];
        } else {
          next[d] += term[d];
        }
      }
      term = std::move(next);
    }
    if (r.coeffs.size() < term.size()) r.coeffs.resize(term.size(), 0);
    for (size_t d = 0; d < term.size(); ++d) r.coeffs[d] += term[d];
  }
  while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
  return r;
}

}  // namespace grasstropic::weyl
