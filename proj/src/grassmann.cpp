#include "grasstropic/grassmann.hpp"

#include <algorithm>
#include <set>

namespace grasstropic::grassmann {

using diagrams::Box;
using diagrams::Fill;
using diagrams::GoDiagram;
using weyl::Permutation;
using weyl::StepKind;

namespace {

// Right-multiplies g by phi_i([[a, b], [c, d]]).
void times_block(PolyMatrix& g, int i, const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  const int n = g.rows();
  const int s = n - i - 1, t = n - i;  // 0-based rows/columns of the block
  for (int r = 0; r < n; ++r) {
    Polynomial gs = g(r, s), gt = g(r, t);
    if (gs.is_zero() && gt.is_zero()) continue;
    g(r, s) = gs * a + gt * c;
    g(r, t) = gs * b + gt * d;
  }
}

Subset top_k(const Permutation& p, int k) {
  Subset s;
  for (int j = p.size(); j > p.size() - k; --j) s.push_back(j);
  return p.apply(s);
}

template <class T>
PluckerVector<T> laplace_minors(const Matrix<T>& a) {
  const int k = a.rows(), n = a.cols();
  // minors[mask] for masks with popcount r, rows 0..r-1
  std::vector<T> prev(1u << n), cur(1u << n);
  prev[0] = T(1);
  std::vector<unsigned> level{0};
  for (int r = 0; r < k; ++r) {
    std::vector<unsigned> next;
    std::set<unsigned> seen;
    for (unsigned m : level)
      for (int j = 0; j < n; ++j)
        if (!(m >> j & 1u) && seen.insert(m | 1u << j).second) next.push_back(m | 1u << j);
    for (unsigned m : next) {
      T acc = T(0);
      int pos = 0;
      for (int j = 0; j < n; ++j) {
        if (!(m >> j & 1u)) continue;
        // column j is at position pos within the subset; expand along row r
        const T& entry = a(r, j);
        if (!(entry == T(0))) {
          const T& sub = prev[m & ~(1u << j)];
          if ((r + pos) % 2) acc -= entry * sub;
          else acc += entry * sub;
        }
        ++pos;
      }
      cur[m] = acc;
    }
    std::swap(prev, cur);
    level = std::move(next);
  }
  PluckerVector<T> out;
  for (const auto& s : k_subsets(n, k)) {
    unsigned m = 0;
    for (int x : s) m |= 1u << (x - 1);
    out[s] = prev[m];
  }
  return out;
}

template <class T>
void require_nonzero(const PluckerVector<T>& p) {
  for (const auto& [s, v] : p)
    if (!(v == T(0))) return;
  throw Error("matrix is rank deficient: every maximal minor vanishes");
}

}  // namespace

PolyMatrix build_g(const weyl::Subexpression& sub) {
  const int n = sub.base().n;
  PolyMatrix g = PolyMatrix::identity(n);
  auto kinds = sub.kinds();
  const Polynomial zero, one(1L), minus_one(-1L);
  for (int l = 0; l < sub.size(); ++l) {
    int i = sub.base().letters[l];
    switch (kinds[l]) {
      case StepKind::Up:  // s_i
        times_block(g, i, zero, minus_one, one, zero);
        break;
      case StepKind::Stay:  // y_i(p_l)
        times_block(g, i, one, zero, Polynomial::variable({'p', l + 1}), one);
        break;
      case StepKind::Down:  // x_i(m_l) s_i^{-1} = [[1, m], [0, 1]] [[0, 1], [-1, 0]]
        times_block(g, i, -Polynomial::variable({'m', l + 1}), one, minus_one, zero);
        break;
    }
  }
  return g;
}

PolyMatrix build_g(const weyl::Word& w, const GoDiagram& d) {
  if (!(w == diagrams::shape_word(d.shape())))
    throw Error("word " + weyl::format_word(w) + " does not match the diagram shape " + d.shape().to_string());
  return build_g(d.subexpression());
}

PolyMatrix build_g(const GoDiagram& d) { return build_g(d.subexpression()); }

PolyMatrix project(const PolyMatrix& g, int k) {
  const int n = g.rows();
  if (g.cols() != n) throw Error("project: g must be square");
  if (k < 0 || k > n) throw Error("project: k out of range");
  PolyMatrix a(k, n);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < n; ++j) a(r, j) = g(n - 1 - j, k - 1 - r);
  return a;
}

PolyMatrix component_matrix(const GoDiagram& d) { return project(build_g(d), d.k()); }

PluckerVector<Polynomial> pluckers(const PolyMatrix& a) {
  if (a.cols() > 20) throw Error("pluckers: too many columns");
  auto p = laplace_minors(a);
  require_nonzero(p);
  return p;
}

PluckerVector<Rational> pluckers(const RationalMatrix& a) {
  PluckerVector<Rational> out;
  for (const auto& s : k_subsets(a.cols(), a.rows())) {
    RationalMatrix m(a.rows(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.rows(); ++c) m(r, c) = a(r, s[c] - 1);
    out[s] = determinant(std::move(m));
  }
  require_nonzero(out);
  return out;
}

PluckerVector<Rational> evaluate(const PluckerVector<Polynomial>& p, const Assignment& at) {
  PluckerVector<Rational> out;
  for (const auto& [s, v] : p) out[s] = v.evaluate(at);
  return out;
}

LexExtremes lex_extremes(const PluckerVector<Polynomial>& p, const GoDiagram& d) {
  LexExtremes ex;
  bool found = false;
  for (const auto& [s, v] : p) {
    if (v.is_zero()) continue;
    if (!found) {
      ex.I = s;
      ex.delta_I = v;
      found = true;
    }
    ex.I_prime = s;
    ex.delta_I_prime = v;
  }
  if (!found) throw Error("lex_extremes: all Plucker coordinates vanish");
  const int k = d.k();
  Subset expect_I = top_k(d.w(), k), expect_I_prime = top_k(d.v(), k);
  auto sub = d.subexpression();
  Polynomial expect_delta(sub.positions(StepKind::Down).size() % 2 ? -1L : 1L);
  for (int l : sub.positions(StepKind::Stay)) expect_delta = expect_delta * Polynomial::variable({'p', l});
  if (ex.I != expect_I) throw Error("lex_extremes: minimal index set " + subset_to_string(ex.I) + " differs from w-prediction " + subset_to_string(expect_I));
  if (ex.I_prime != expect_I_prime)
    throw Error("lex_extremes: maximal index set " + subset_to_string(ex.I_prime) + " differs from v-prediction " + subset_to_string(expect_I_prime));
  if (!(ex.delta_I == expect_delta)) throw Error("lex_extremes: Delta_I = " + ex.delta_I.to_string() + ", expected " + expect_delta.to_string());
  if (!(ex.delta_I_prime == Polynomial(1L))) throw Error("lex_extremes: Delta_I' = " + ex.delta_I_prime.to_string() + ", expected 1");
  return ex;
}

BoxPlucker plucker_at_box(const GoDiagram& d, Box b) {
  const auto& sh = d.shape();
  if (!sh.contains(b)) throw Error("plucker_at_box: box outside the diagram");
  const int n = d.n();
  Permutation v_in = Permutation::identity(n), w_in = Permutation::identity(n);
  Polynomial value(1L);
  for (Box c : diagrams::canonical_reading_order(sh)) {
    Fill f = d.at(c);
    if (c.row >= b.row && c.col >= b.col) {
      int i = sh.generator(c);
      w_in = w_in.times_simple(i);
      if (f != Fill::Blank) v_in = v_in.times_simple(i);
    } else if (f == Fill::Black) {
      value = -value;
    } else if (f == Fill::Blank) {
      value = value * Polynomial::variable({'p', d.reading_index(c)});
    }
  }
  Subset I = top_k(d.w(), d.k());
  return {(v_in * w_in.inverse()).apply(I), value};
}

bool satisfies_exchange_axiom(const std::vector<Subset>& bases) {
  std::set<Subset> all(bases.begin(), bases.end());
  for (const auto& a : bases)
    for (const auto& b : bases)
      for (int x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) continue;
        bool ok = false;
        for (int y : b) {
          if (std::binary_search(a.begin(), a.end(), y)) continue;
          Subset c;
          for (int z : a)
            if (z != x) c.push_back(z);
          c.push_back(y);
          std::sort(c.begin(), c.end());
          if (all.count(c)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
  return true;
}

Matroid::Matroid(int k, int n, std::vector<Subset> bases) : k_(k), n_(n), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw Error("matroid has no bases");
  for (const auto& s : bases_) {
    if (static_cast<int>(s.size()) != k) throw Error("matroid basis of the wrong size");
    for (int x : s)
      if (x < 1 || x > n) throw Error("matroid basis element out of range");
  }
  if (!satisfies_exchange_axiom(bases_)) throw Error("basis family violates the exchange axiom");
}

bool Matroid::contains(const Subset& s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

Matroid matroid_of(const RationalMatrix& a) { return matroid_of(pluckers(a), a.cols()); }

Matroid matroid_of(const PolyMatrix& a) { return matroid_of(pluckers(a), a.cols()); }

diagrams::GrassmannNecklace necklace_of(const Matroid& m) {
  const int n = m.n();
  std::vector<Subset> sets;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> best;
    const Subset* arg = nullptr;
    for (const auto& s : m.bases()) {
      std::vector<int> key;
      for (int x : s) key.push_back((x - i + n) % n);
      std::sort(key.begin(), key.end());
      if (!arg || key < best) {
        best = key;
        arg = &s;
      }
    }
    sets.push_back(*arg);
  }
  return diagrams::GrassmannNecklace(n, sets);
}

diagrams::GrassmannNecklace necklace_of(const RationalMatrix& a) { return necklace_of(matroid_of(a)); }

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::TotallyPositive: return "TP";
    case Positivity::TotallyNonnegative: return "TNN";
    default: return "neither";
  }
}

Positivity tnn_status(const PluckerVector<Rational>& p) {
  int sign = 0;
  bool any_zero = false, any_wrong = false;
  for (const auto& [s, v] : p) {
    int sg = sgn(v);
    if (sg == 0) {
      any_zero = true;
      continue;
    }
    if (sign == 0) sign = sg;
    if (sg != sign) any_wrong = true;
  }
  if (any_wrong) return Positivity::Neither;
  return any_zero ? Positivity::TotallyNonnegative : Positivity::TotallyPositive;
}

Positivity tnn_status(const RationalMatrix& a) { return tnn_status(pluckers(a)); }

namespace {

std::set<int> variable_codes(const PolyMatrix& m) {
  std::set<int> codes;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (auto v : m(r, c).variables()) codes.insert(v.code());
  return codes;
}

}  // namespace

Assignment random_assignment(const PolyMatrix& m, std::mt19937_64& rng, bool positive_p) {
  Assignment a;
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), coin(0, 1);
  for (int code : variable_codes(m)) {
    Variable v = Variable::from_code(code);
    const int a_num = num(rng), a_den = den(rng);
    Rational q(a_num, a_den);
    q.canonicalize();
    if (!(positive_p && v.kind == 'p') && coin(rng)) q = -q;
    a.set(v, q);
  }
  return a;
}

Assignment constant_assignment(const PolyMatrix& m, const Rational& p, const Rational& mval) {
  Assignment a;
  for (int code : variable_codes(m)) {
    Variable v = Variable::from_code(code);
    a.set(v, v.kind == 'p' ? p : mval);
  }
  return a;
}

}  // namespace grasstropic::grassmann
