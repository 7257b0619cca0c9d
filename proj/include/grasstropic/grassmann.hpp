#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "grasstropic/diagrams.hpp"
#include "grasstropic/polynomial.hpp"
#include "grasstropic/weyl.hpp"

namespace grasstropic::grassmann {

// Matrix g = g_1 ... g_m of a distinguished subexpression. Factor l is
// x_i(m_l) s_i^{-1} on a descending step, y_i(p_l) on an omitted letter and s_i
// on an ascending step, where phi_i places its 2x2 block on rows/columns
// n-i, n-i+1 (rows counted from the top, 1-based).
PolyMatrix build_g(const weyl::Subexpression& sub);
PolyMatrix build_g(const weyl::Word& w, const diagrams::GoDiagram& d);
PolyMatrix build_g(const diagrams::GoDiagram& d);

// A(a, j) = g(n+1-j, k+1-a): the first k columns of g, read bottom-up, become
// the rows of A from left to right.
PolyMatrix project(const PolyMatrix& g, int k);

// k x n matrix of the Deodhar component of a Go-diagram.
PolyMatrix component_matrix(const diagrams::GoDiagram& d);

template <class T>
using PluckerVector = std::map<Subset, T>;

// All C(n,k) maximal minors. Throws if every minor vanishes.
PluckerVector<Polynomial> pluckers(const PolyMatrix& a);
PluckerVector<Rational> pluckers(const RationalMatrix& a);
PluckerVector<Rational> evaluate(const PluckerVector<Polynomial>& p, const Assignment& at);

struct LexExtremes {
  Subset I;        // lexicographically minimal nonzero index set
  Subset I_prime;  // lexicographically maximal nonzero index set
  Polynomial delta_I;
  Polynomial delta_I_prime;
};

// Computes both extremes from the Plucker vector and checks them against the
// closed forms of the diagram: I = w{n..n-k+1}, I' = v{n..n-k+1},
// Delta_I = (-1)^{#black} prod p, Delta_I' = 1. Throws on a mismatch.
LexExtremes lex_extremes(const PluckerVector<Polynomial>& p, const diagrams::GoDiagram& d);

struct BoxPlucker {
  Subset I_b;
  Polynomial value;  // product of the labels of the boxes outside the SE quadrant of b
};
BoxPlucker plucker_at_box(const diagrams::GoDiagram& d, diagrams::Box b);

class Matroid {
 public:
  Matroid(int k, int n, std::vector<Subset> bases);  // checks the exchange axiom

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool contains(const Subset& s) const;
  bool operator==(const Matroid&) const = default;

 private:
  int k_, n_;
  std::vector<Subset> bases_;  // lexicographic
};

bool satisfies_exchange_axiom(const std::vector<Subset>& bases);

template <class T>
Matroid matroid_of(const PluckerVector<T>& p, int n) {
  std::vector<Subset> bases;
  int k = 0;
  for (const auto& [s, v] : p) {
    k = static_cast<int>(s.size());
    if (!(v == T(0))) bases.push_back(s);
  }
  return Matroid(k, n, bases);
}
Matroid matroid_of(const RationalMatrix& a);
Matroid matroid_of(const PolyMatrix& a);  // bases are the minors that are nonzero polynomials

diagrams::GrassmannNecklace necklace_of(const Matroid& m);
diagrams::GrassmannNecklace necklace_of(const RationalMatrix& a);

enum class Positivity { TotallyPositive, TotallyNonnegative, Neither };
std::string to_string(Positivity p);

// Sign is fixed so that the lexicographically minimal nonzero minor is positive.
Positivity tnn_status(const RationalMatrix& a);
Positivity tnn_status(const PluckerVector<Rational>& p);

// Random nonzero rational value for every variable of the matrix entries.
// Values are n/d with |n| <= 9, 1 <= d <= 4, drawn from the given engine.
Assignment random_assignment(const PolyMatrix& m, std::mt19937_64& rng, bool positive_p = false);
// All p_i = p and all m_i = m.
Assignment constant_assignment(const PolyMatrix& m, const Rational& p, const Rational& mval);

}  // namespace grasstropic::grassmann
