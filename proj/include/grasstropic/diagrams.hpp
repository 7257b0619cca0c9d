#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "grasstropic/rational.hpp"
#include "grasstropic/weyl.hpp"

namespace grasstropic::diagrams {

// Box in a k x (n-k) rectangle, 1-based, row 1 on top, column 1 on the left.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// Young diagram inside a k x (n-k) rectangle, justified to the top-left.
class ShapeIdeal {
 public:
  ShapeIdeal(int k, int n, std::vector<int> row_lengths);  // row_lengths has k entries, weakly decreasing
  static ShapeIdeal full(int k, int n);
  static ShapeIdeal from_vertical_steps(int k, int n, const Subset& steps);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& row_lengths() const { return rows_; }
  int row_length(int r) const { return rows_[r - 1]; }
  int column_height(int c) const;
  int size() const;  // number of boxes
  bool contains(Box b) const;

  // Label of the simple reflection attached to a box.
  int generator(Box b) const { return (n_ - k_) - b.col + b.row; }

  // Labels 1..n along the boundary path from the NE to the SW corner.
  int row_label(int r) const;
  int column_label(int c) const;
  Subset vertical_steps() const;

  std::string to_string() const;  // "[5,5,4,2] in 4x5"
  bool operator==(const ShapeIdeal&) const = default;

 private:
  int k_, n_;
  std::vector<int> rows_;
  std::vector<int> row_labels_, col_labels_;
};

std::vector<ShapeIdeal> all_shapes(int k, int n);

using ReadingOrder = std::vector<Box>;

// Rows from bottom to top, each row right to left.
ReadingOrder canonical_reading_order(const ShapeIdeal& shape);
// A box may be read only after every box strictly to its right in its row and
// strictly below it in its column.
bool is_reading_order(const ShapeIdeal& shape, const ReadingOrder& order);
std::vector<ReadingOrder> reading_orders(const ShapeIdeal& shape, std::size_t limit = 0);
weyl::Word word_of(const ShapeIdeal& shape, const ReadingOrder& order);
weyl::Word shape_word(const ShapeIdeal& shape);  // canonical order
weyl::Permutation w_of_shape(const ShapeIdeal& shape);

enum class Fill : char { Blank = '.', White = 'o', Black = 'x' };

class GoDiagram;

// Decorated permutation: fixed points carry color +1 or -1.
struct DecoratedPermutation {
  weyl::Permutation perm;
  std::vector<int> colors;  // size n, 0 at non-fixed positions

  int n() const { return perm.size(); }
  int k() const;  // number of weak excedances i <= perm(i) counted with colors
  Subset weak_excedances() const;
  std::string to_string() const;  // "(4,6,7,1,3,2,5)" plus fixed-point colors
  bool operator==(const DecoratedPermutation&) const = default;
};

class GoDiagram {
 public:
  // Validates that the filling is distinguished and colored consistently.
  GoDiagram(ShapeIdeal shape, std::vector<std::vector<Fill>> rows);

  static GoDiagram from_subexpression(const ShapeIdeal& shape, const ReadingOrder& order,
                                      const weyl::Subexpression& sub);
  static GoDiagram parse(std::string_view text);  // "k=3 n=7" then one line per row
  std::string to_text() const;

  const ShapeIdeal& shape() const { return shape_; }
  int k() const { return shape_.k(); }
  int n() const { return shape_.n(); }
  Fill at(Box b) const { return rows_[b.row - 1][b.col - 1]; }
  const std::vector<std::vector<Fill>>& rows() const { return rows_; }

  weyl::Subexpression subexpression(const ReadingOrder& order) const;
  weyl::Subexpression subexpression() const;  // canonical order
  weyl::Permutation v() const;
  weyl::Permutation w() const;
  bool has_black_stones() const;

  // 1-based index of a box in the canonical reading order.
  int reading_index(Box b) const;

  bool operator==(const GoDiagram&) const = default;

 private:
  ShapeIdeal shape_;
  std::vector<std::vector<Fill>> rows_;
};

weyl::Subexpression subexpr_of_go(const GoDiagram& d, const ReadingOrder& order);

// pi(D) = v w^{-1}; a fixed point is colored -1 when it lies in w({1..n-k}).
DecoratedPermutation decorated_pi_of_go(const GoDiagram& d);
// Row/column rule: fixed point labelling a row without blanks gets +1, a column without blanks -1.
DecoratedPermutation decorated_pi_by_rows_columns(const GoDiagram& d);

// Le-property on the plus-filling (blank -> +, stone -> 0).
bool is_le_diagram(const GoDiagram& d);

struct BoxLabel {
  enum Kind { One, MinusOne, Param } kind = One;
  int index = 0;  // for Param: p_index
  std::string to_string() const;
};
std::vector<std::vector<BoxLabel>> labeled_go_diagram(const GoDiagram& d);

// Every Go-diagram in a k x (n-k) rectangle, shapes in lexicographic order of
// their vertical steps, fillings in lexicographic mask order.
std::vector<GoDiagram> enumerate_go_diagrams(int k, int n);
void for_each_go_diagram(int k, int n, const std::function<void(const GoDiagram&)>& fn);

class GrassmannNecklace {
 public:
  GrassmannNecklace(int n, std::vector<Subset> sets);  // validates the shift axiom
  int n() const { return n_; }
  int k() const { return sets_.empty() ? 0 : static_cast<int>(sets_[0].size()); }
  const Subset& operator[](int i) const { return sets_[i - 1]; }  // I_i, 1-based
  const std::vector<Subset>& sets() const { return sets_; }
  std::string to_string() const;
  bool operator==(const GrassmannNecklace&) const = default;

 private:
  int n_;
  std::vector<Subset> sets_;
};

DecoratedPermutation necklace_to_perm(const GrassmannNecklace& necklace);
GrassmannNecklace perm_to_necklace(const DecoratedPermutation& pi);
DecoratedPermutation parse_decorated(std::string_view text);

}  // namespace grasstropic::diagrams
