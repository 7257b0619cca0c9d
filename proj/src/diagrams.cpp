#include "grasstropic/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace grasstropic::diagrams {

using weyl::Permutation;
using weyl::StepKind;
using weyl::Subexpression;
using weyl::Word;

ShapeIdeal::ShapeIdeal(int k, int n, std::vector<int> row_lengths) : k_(k), n_(n), rows_(std::move(row_lengths)) {
  if (k < 0 || k > n) throw Error("shape: need 0 <= k <= n");
  if (static_cast<int>(rows_.size()) != k) throw Error("shape: expected " + std::to_string(k) + " row lengths");
  for (int r = 0; r < k; ++r) {
    if (rows_[r] < 0 || rows_[r] > n - k) throw Error("shape: row length out of range");
    if (r > 0 && rows_[r] > rows_[r - 1]) throw Error("shape: row lengths must weakly decrease");
  }
  row_labels_.assign(k, 0);
  col_labels_.assign(n - k, 0);
  int x = n - k, r = 0, label = 1;
  while (r < k || x > 0) {
    if (r < k && rows_[r] == x) {
      row_labels_[r++] = label++;
    } else {
      col_labels_[--x] = label++;
    }
  }
}

ShapeIdeal ShapeIdeal::full(int k, int n) { return ShapeIdeal(k, n, std::vector<int>(k, n - k)); }

ShapeIdeal ShapeIdeal::from_vertical_steps(int k, int n, const Subset& steps) {
  if (static_cast<int>(steps.size()) != k) throw Error("shape: need k vertical steps");
  std::vector<int> rows;
  int x = n - k, label = 1;
  size_t next = 0;
  for (; label <= n; ++label) {
    if (next < steps.size() && steps[next] == label) {
      rows.push_back(x);
      ++next;
    } else {
      if (x == 0) throw Error("shape: invalid vertical step set " + subset_to_string(steps));
      --x;
    }
  }
  return ShapeIdeal(k, n, rows);
}

int ShapeIdeal::column_height(int c) const {
  int h = 0;
  while (h < k_ && rows_[h] >= c) ++h;
  return h;
}

int ShapeIdeal::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

bool ShapeIdeal::contains(Box b) const {
  return b.row >= 1 && b.row <= k_ && b.col >= 1 && b.col <= rows_[b.row - 1];
}

int ShapeIdeal::row_label(int r) const { return row_labels_[r - 1]; }
int ShapeIdeal::column_label(int c) const { return col_labels_[c - 1]; }

Subset ShapeIdeal::vertical_steps() const {
  Subset s(row_labels_.begin(), row_labels_.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::string ShapeIdeal::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int r = 0; r < k_; ++r) out << (r ? "," : "") << rows_[r];
  out << "] in " << k_ << 'x' << (n_ - k_);
  return out.str();
}

std::vector<ShapeIdeal> all_shapes(int k, int n) {
  std::vector<ShapeIdeal> out;
  for (const auto& s : k_subsets(n, k)) out.push_back(ShapeIdeal::from_vertical_steps(k, n, s));
  return out;
}

ReadingOrder canonical_reading_order(const ShapeIdeal& shape) {
  ReadingOrder order;
  for (int r = shape.k(); r >= 1; --r)
    for (int c = shape.row_length(r); c >= 1; --c) order.push_back({r, c});
  return order;
}

bool is_reading_order(const ShapeIdeal& shape, const ReadingOrder& order) {
  if (static_cast<int>(order.size()) != shape.size()) return false;
  std::map<Box, int> pos;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (!shape.contains(order[i]) || pos.count(order[i])) return false;
    pos[order[i]] = i;
  }
  for (const auto& [b, i] : pos) {
    Box right{b.row, b.col + 1}, below{b.row + 1, b.col};
    if (shape.contains(right) && pos[right] > i) return false;
    if (shape.contains(below) && pos[below] > i) return false;
  }
  return true;
}

std::vector<ReadingOrder> reading_orders(const ShapeIdeal& shape, std::size_t limit) {
  std::vector<ReadingOrder> out;
  // read[r] = number of boxes already read in row r, counted from the right.
  std::vector<int> read(shape.k() + 1, 0);
  ReadingOrder cur;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(cur.size()) == shape.size()) {
      out.push_back(cur);
      return !(limit && out.size() >= limit);
    }
    for (int r = shape.k(); r >= 1; --r) {
      int len = shape.row_length(r);
      if (read[r] == len) continue;
      int c = len - read[r];
      // the box below (r+1, c) must already be read, if present
      if (r < shape.k() && shape.row_length(r + 1) >= c && shape.row_length(r + 1) - read[r + 1] >= c) continue;
      cur.push_back({r, c});
      ++read[r];
      bool go = rec();
      --read[r];
      cur.pop_back();
      if (!go) return false;
    }
    return true;
  };
  rec();
  return out;
}

Word word_of(const ShapeIdeal& shape, const ReadingOrder& order) {
  if (!is_reading_order(shape, order)) throw Error("not a reading order of " + shape.to_string());
  Word w;
  w.n = shape.n();
  for (Box b : order) w.letters.push_back(shape.generator(b));
  return w;
}

Word shape_word(const ShapeIdeal& shape) { return word_of(shape, canonical_reading_order(shape)); }

Permutation w_of_shape(const ShapeIdeal& shape) { return weyl::evaluate_word(shape_word(shape)).product; }

int DecoratedPermutation::k() const { return static_cast<int>(weak_excedances().size()); }

Subset DecoratedPermutation::weak_excedances() const {
  Subset s;
  for (int i = 1; i <= n(); ++i)
    if (perm(i) > i || (perm(i) == i && colors[i - 1] == 1)) s.push_back(i);
  return s;
}

std::string DecoratedPermutation::to_string() const {
  std::string s = perm.to_string();
  std::string dec;
  for (int i = 1; i <= n(); ++i)
    if (perm(i) == i) dec += (dec.empty() ? "" : ",") + std::to_string(i) + (colors[i - 1] > 0 ? ":+1" : ":-1");
  if (!dec.empty()) s += " [" + dec + "]";
  return s;
}

namespace {

Fill fill_of_char(char c) {
  switch (c) {
    case '.': return Fill::Blank;
    case 'o': return Fill::White;
    case 'x': return Fill::Black;
    default: throw ParseError(std::string("unknown diagram cell '") + c + "'");
  }
}

}  // namespace

GoDiagram::GoDiagram(ShapeIdeal shape, std::vector<std::vector<Fill>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.k()) throw Error("diagram: expected " + std::to_string(shape_.k()) + " rows");
  for (int r = 1; r <= shape_.k(); ++r)
    if (static_cast<int>(rows_[r - 1].size()) != shape_.row_length(r)) throw Error("diagram: row " + std::to_string(r) + " does not match the shape");
  auto order = canonical_reading_order(shape_);
  std::vector<bool> mask;
  for (Box b : order) mask.push_back(at(b) != Fill::Blank);
  Subexpression sub(word_of(shape_, order), mask);
  if (!sub.is_distinguished()) throw Error("diagram: filling is not distinguished");
  auto kinds = sub.kinds();
  for (size_t j = 0; j < order.size(); ++j) {
    Fill f = at(order[j]);
    if ((f == Fill::White && kinds[j] != StepKind::Up) || (f == Fill::Black && kinds[j] != StepKind::Down))
      throw Error("diagram: stone color at row " + std::to_string(order[j].row) + ", column " +
                  std::to_string(order[j].col) + " is inconsistent");
  }
}

GoDiagram GoDiagram::from_subexpression(const ShapeIdeal& shape, const ReadingOrder& order, const Subexpression& sub) {
  if (!(sub.base() == word_of(shape, order))) throw Error("subexpression base word does not match the reading order");
  if (!sub.is_distinguished()) throw Error("subexpression is not distinguished");
  std::vector<std::vector<Fill>> rows(shape.k());
  for (int r = 1; r <= shape.k(); ++r) rows[r - 1].assign(shape.row_length(r), Fill::Blank);
  auto kinds = sub.kinds();
  for (size_t j = 0; j < order.size(); ++j) {
    Fill f = kinds[j] == StepKind::Up ? Fill::White : kinds[j] == StepKind::Down ? Fill::Black : Fill::Blank;
    rows[order[j].row - 1][order[j].col - 1] = f;
  }
  return GoDiagram(shape, std::move(rows));
}

GoDiagram GoDiagram::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int k = -1, n = -1, line_no = 0;
  struct Row {
    std::vector<Fill> fills;
  };
  std::vector<Row> lines;
  auto where = [&](int col) { return "line " + std::to_string(line_no) + ", column " + std::to_string(col) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (k < 0) {
      std::string t;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      if (t.empty()) continue;
      if (std::sscanf(t.c_str(), "k=%dn=%d", &k, &n) != 2) throw ParseError(where(1) + "diagram header must look like 'k=3 n=7'");
      if (k < 1 || n <= k) throw ParseError(where(1) + "diagram header needs 1 <= k < n");
      continue;
    }
    Row row;
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      try {
        row.fills.push_back(fill_of_char(c));
      } catch (const ParseError& e) {
        throw ParseError(where(static_cast<int>(i) + 1) + e.what());
      }
    }
    lines.push_back(std::move(row));
  }
  if (k < 0) throw ParseError("missing diagram header");
  while (!lines.empty() && lines.back().fills.empty()) lines.pop_back();
  if (static_cast<int>(lines.size()) > k) throw ParseError("diagram has more than k rows");
  lines.resize(k);
  std::vector<int> lengths;
  std::vector<std::vector<Fill>> rows;
  for (auto& l : lines) {
    lengths.push_back(static_cast<int>(l.fills.size()));
    rows.push_back(std::move(l.fills));
  }
  return GoDiagram(ShapeIdeal(k, n, lengths), std::move(rows));
}

std::string GoDiagram::to_text() const {
  std::string s = "k=" + std::to_string(k()) + " n=" + std::to_string(n()) + "\n";
  for (const auto& row : rows_) {
    for (Fill f : row) s += static_cast<char>(f);
    s += '\n';
  }
  return s;
}

Subexpression GoDiagram::subexpression(const ReadingOrder& order) const {
  std::vector<bool> mask;
  for (Box b : order) mask.push_back(at(b) != Fill::Blank);
  return Subexpression(word_of(shape_, order), mask);
}

Subexpression GoDiagram::subexpression() const { return subexpression(canonical_reading_order(shape_)); }

Permutation GoDiagram::v() const { return subexpression().product(); }

Permutation GoDiagram::w() const { return w_of_shape(shape_); }

bool GoDiagram::has_black_stones() const {
  for (const auto& row : rows_)
    for (Fill f : row)
      if (f == Fill::Black) return true;
  return false;
}

int GoDiagram::reading_index(Box b) const {
  if (!shape_.contains(b)) throw Error("box outside the diagram");
  int idx = 0;
  for (int r = shape_.k(); r > b.row; --r) idx += shape_.row_length(r);
  return idx + (shape_.row_length(b.row) - b.col) + 1;
}

Subexpression subexpr_of_go(const GoDiagram& d, const ReadingOrder& order) { return d.subexpression(order); }

DecoratedPermutation decorated_pi_of_go(const GoDiagram& d) {
  Permutation w = d.w();
  Permutation pi = d.v() * w.inverse();
  std::vector<int> colors(d.n(), 0);
  std::vector<bool> low(d.n() + 1, false);
  for (int i = 1; i <= d.n() - d.k(); ++i) low[w(i)] = true;
  for (int i = 1; i <= d.n(); ++i)
    if (pi(i) == i) colors[i - 1] = low[i] ? -1 : 1;
  return {pi, colors};
}

DecoratedPermutation decorated_pi_by_rows_columns(const GoDiagram& d) {
  Permutation pi = d.v() * d.w().inverse();
  std::vector<int> colors(d.n(), 0);
  const auto& sh = d.shape();
  for (int r = 1; r <= d.k(); ++r) {
    bool blank = false;
    for (int c = 1; c <= sh.row_length(r); ++c) blank |= d.at({r, c}) == Fill::Blank;
    int label = sh.row_label(r);
    if (!blank && pi(label) == label) colors[label - 1] = 1;
  }
  for (int c = 1; c <= d.n() - d.k(); ++c) {
    bool blank = false;
    for (int r = 1; r <= sh.column_height(c); ++r) blank |= d.at({r, c}) == Fill::Blank;
    int label = sh.column_label(c);
    if (!blank && pi(label) == label) colors[label - 1] = -1;
  }
  for (int i = 1; i <= d.n(); ++i)
    if (pi(i) == i && colors[i - 1] == 0) throw Error("fixed point " + std::to_string(i) + " has no empty row or column");
  return {pi, colors};
}

bool is_le_diagram(const GoDiagram& d) {
  bool no_black = !d.has_black_stones();
  const auto& sh = d.shape();
  bool le = true;
  for (int r = 1; r <= d.k() && le; ++r)
    for (int c = 1; c <= sh.row_length(r) && le; ++c) {
      if (d.at({r, c}) == Fill::Blank) continue;
      bool plus_above = false, plus_left = false;
      for (int a = 1; a < r; ++a) plus_above |= d.at({a, c}) == Fill::Blank;
      for (int a = 1; a < c; ++a) plus_left |= d.at({r, a}) == Fill::Blank;
      if (plus_above && plus_left) le = false;
    }
  if (le != no_black) throw Error("internal: Le-property and absence of black stones disagree");
  return no_black;
}

std::string BoxLabel::to_string() const {
  switch (kind) {
    case One: return "1";
    case MinusOne: return "-1";
    default: return "p" + std::to_string(index);
  }
}

std::vector<std::vector<BoxLabel>> labeled_go_diagram(const GoDiagram& d) {
  std::vector<std::vector<BoxLabel>> out(d.k());
  for (int r = 1; r <= d.k(); ++r)
    for (int c = 1; c <= d.shape().row_length(r); ++c) {
      Fill f = d.at({r, c});
      BoxLabel l;
      if (f == Fill::White) l.kind = BoxLabel::One;
      else if (f == Fill::Black) l.kind = BoxLabel::MinusOne;
      else {
        l.kind = BoxLabel::Param;
        l.index = d.reading_index({r, c});
      }
      out[r - 1].push_back(l);
    }
  return out;
}

void for_each_go_diagram(int k, int n, const std::function<void(const GoDiagram&)>& fn) {
  if (k < 1 || k >= n) throw Error("enumerate_go_diagrams: need 1 <= k < n");
  for (const auto& shape : all_shapes(k, n)) {
    auto order = canonical_reading_order(shape);
    for (const auto& sub : weyl::enumerate_distinguished(word_of(shape, order)))
      fn(GoDiagram::from_subexpression(shape, order, sub));
  }
}

std::vector<GoDiagram> enumerate_go_diagrams(int k, int n) {
  std::vector<GoDiagram> out;
  for_each_go_diagram(k, n, [&](const GoDiagram& d) { out.push_back(d); });
  return out;
}

GrassmannNecklace::GrassmannNecklace(int n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  if (static_cast<int>(sets_.size()) != n) throw Error("necklace: expected n sets");
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (s.size() != sets_[0].size()) throw Error("necklace: sets have different sizes");
    for (int x : s)
      if (x < 1 || x > n) throw Error("necklace: element out of range");
  }
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = sets_[i - 1];
    const Subset& next = sets_[i % n];
    bool has_i = std::binary_search(cur.begin(), cur.end(), i);
    Subset rest;
    for (int x : cur)
      if (x != i) rest.push_back(x);
    if (has_i) {
      // next = cur - {i} + {j} for some j
      Subset diff;
      std::set_difference(rest.begin(), rest.end(), next.begin(), next.end(), std::back_inserter(diff));
      if (!diff.empty()) throw Error("necklace: shift axiom fails at position " + std::to_string(i));
    } else if (cur != next) {
      throw Error("necklace: shift axiom fails at position " + std::to_string(i));
    }
  }
}

std::string GrassmannNecklace::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) s += (i ? ", " : "") + subset_compact(sets_[i]);
  return s + ")";
}

DecoratedPermutation necklace_to_perm(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<int> im(n, 0), colors(n, 0);
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = necklace[i];
    const Subset& next = necklace[i % n + 1];
    bool has_i = std::binary_search(cur.begin(), cur.end(), i);
    int j = i;
    if (has_i) {
      for (int x : next)
        if (!std::binary_search(cur.begin(), cur.end(), x)) j = x;
    }
    if (j != i) {
      im[j - 1] = i;
    } else {
      im[i - 1] = i;
      colors[i - 1] = has_i ? 1 : -1;
    }
  }
  return {Permutation(im), colors};
}

GrassmannNecklace perm_to_necklace(const DecoratedPermutation& pi) {
  const int n = pi.n();
  std::vector<Subset> sets(n);
  for (int j = 1; j <= n; ++j) {
    int p = pi.perm(j);
    for (int r = 1; r <= n; ++r) {
      bool in;
      if (p == j) {
        in = pi.colors[j - 1] == 1;
      } else {
        // r in the cyclic interval (p, j]
        int a = (r - p + n) % n, b = (j - p + n) % n;
        in = a >= 1 && a <= b;
      }
      if (in) sets[r - 1].push_back(j);
    }
  }
  return GrassmannNecklace(n, std::move(sets));
}

DecoratedPermutation parse_decorated(std::string_view text) {
  std::string s(text);
  std::string perm_part = s, dec_part;
  auto br = s.find('[');
  if (br != std::string::npos && s.find('(') != std::string::npos && br > s.find(')')) {
    perm_part = s.substr(0, br);
    auto close = s.find(']', br);
    if (close == std::string::npos) throw ParseError("unterminated decoration");
    dec_part = s.substr(br + 1, close - br - 1);
  }
  Permutation p = Permutation::parse(perm_part);
  std::vector<int> colors(p.size(), 0);
  std::istringstream in(dec_part);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("decoration items look like '3:+1'");
    int i = std::stoi(item.substr(0, colon));
    int c = std::stoi(item.substr(colon + 1));
    if (i < 1 || i > p.size() || p(i) != i || (c != 1 && c != -1)) throw ParseError("bad decoration '" + item + "'");
    colors[i - 1] = c;
  }
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i && colors[i - 1] == 0) throw ParseError("fixed point " + std::to_string(i) + " needs a color");
  return {p, colors};
}

}  // namespace grasstropic::diagrams
