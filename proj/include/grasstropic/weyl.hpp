#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grasstropic/rational.hpp"

namespace grasstropic::weyl {

// Permutation of {1..n} in one-line notation. Products compose right-to-left:
// (u * v)(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation simple(int i, int n);  // s_i swaps i and i+1

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  int length() const;  // number of inversions
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation times_simple(int i) const;  // this * s_i, swaps positions i, i+1
  bool has_right_descent(int i) const { return images_[i - 1] > images_[i]; }
  std::vector<int> right_descents() const;
  bool is_identity() const;

  // Sorted image of a subset.
  Subset apply(const Subset& s) const;

  std::string to_string() const;  // "(4,6,7,1,3,2,5)"
  static Permutation parse(std::string_view text);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct Word {
  int n = 0;
  std::vector<int> letters;  // each in 1..n-1

  int size() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;
};

// Accepts "s2s3s1", "2 3 1" or "2,3,1".
Word parse_word(std::string_view text, int n);
std::string format_word(const Word& w);  // "s2s3s1"

struct WordValue {
  Permutation product;
  bool reduced = false;
};
WordValue evaluate_word(const Word& w);

bool bruhat_leq(const Permutation& v, const Permutation& w);

// Minimal-length coset representatives of S_n / (S_k x S_{n-k}): permutations
// whose only possible descent is at position n-k. Lexicographic by images.
std::vector<Permutation> parabolic_min_reps(int k, int n);

std::vector<Word> reduced_words(const Permutation& w);

enum class StepKind { Up, Stay, Down };  // kept and ascending, omitted, kept and descending

class Subexpression {
 public:
  // The base word must be reduced; mask[j] true keeps letter j.
  Subexpression(Word base, std::vector<bool> mask);

  const Word& base() const { return base_; }
  const std::vector<bool>& mask() const { return mask_; }
  int size() const { return base_.size(); }

  std::vector<Permutation> prefixes() const;  // v_(0), ..., v_(m)
  Permutation product() const;
  std::vector<StepKind> kinds() const;
  std::vector<int> positions(StepKind kind) const;  // 1-based
  bool is_distinguished() const;
  bool is_positive() const;  // distinguished with no descending step

  std::string mask_string() const;  // "011101"

 private:
  Word base_;
  std::vector<bool> mask_;
};

Subexpression parse_subexpression(const Word& base, std::string_view bits);

// Unique positive distinguished subexpression for v in the reduced word w.
// Throws if v is not below the product of w.
Subexpression positive_distinguished(const Permutation& v, const Word& w);

// Distinguished subexpressions in lexicographic mask order (omission before
// keeping). With a target, only those whose product is the target.
std::vector<Subexpression> enumerate_distinguished(const Word& w,
                                                   const std::optional<Permutation>& target = std::nullopt);

// Integer polynomial in q, coeffs[i] multiplies q^i.
struct RPolynomial {
  std::vector<std::int64_t> coeffs;

  std::int64_t evaluate(std::int64_t q) const;
  std::string to_string() const;
  bool operator==(const RPolynomial& o) const;
};

RPolynomial r_polynomial(const Permutation& v, const Word& w);

}  // namespace grasstropic::weyl
