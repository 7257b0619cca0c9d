#include "doctest.h"

#include <set>

#include "grasstropic/diagrams.hpp"
#include "oracles.hpp"

using namespace grasstropic;
using namespace grasstropic::diagrams;

TEST_SUITE("diagrams") {
  TEST_CASE("shape words use the row-wise reading order") {
    auto shape = ShapeIdeal(2, 5, {3, 3});
    CHECK(weyl::format_word(shape_word(shape)) == "s2s3s4s1s2s3");
    auto order = canonical_reading_order(shape);
    CHECK(order.front() == Box{2, 3});
    CHECK(order.back() == Box{1, 1});
    CHECK(is_reading_order(shape, order));
    CHECK(static_cast<long>(all_shapes(3, 6).size()) == oracle::binomial(6, 3));
  }

  TEST_CASE("boundary labels run from northeast to southwest") {
    auto shape = ShapeIdeal(3, 7, {4, 4, 4});
    std::set<int> labels;
    for (int r = 1; r <= 3; ++r) labels.insert(shape.row_label(r));
    for (int c = 1; c <= 4; ++c) labels.insert(shape.column_label(c));
    CHECK(labels.size() == 7);
    CHECK(shape.vertical_steps() == Subset{1, 2, 3});
  }

  TEST_CASE("Go-diagram counts equal distinguished subexpressions of every shape") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k) {
        long brute = 0;
        for (const auto& shape : all_shapes(k, n)) {
          auto w = shape_word(shape);
          for (long mask = 0; mask < (1L << w.size()); ++mask) {
            std::vector<bool> m(w.size());
            for (int j = 0; j < w.size(); ++j) m[j] = mask >> j & 1;
            // a stone is a kept letter; blank boxes are omitted letters
            brute += oracle::distinguished(w, m);
          }
        }
        CHECK(static_cast<long>(enumerate_go_diagrams(k, n).size()) == brute);
      }
  }

  TEST_CASE("Le-diagrams are in bijection with decorated permutations") {
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k < n; ++k) {
        std::set<std::string> seen;
        long le = 0;
        for_each_go_diagram(k, n, [&](const GoDiagram& d) {
          if (!is_le_diagram(d)) return;
          ++le;
          auto pi = decorated_pi_of_go(d);
          CHECK(pi.k() == k);
          seen.insert(pi.to_string());
        });
        CHECK(le == oracle::decorated_count(k, n));
        CHECK(static_cast<long>(seen.size()) == le);
      }
  }

  TEST_CASE("both descriptions of fixed-point colors agree") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k)
        for_each_go_diagram(k, n, [&](const GoDiagram& d) {
          CHECK(decorated_pi_of_go(d) == decorated_pi_by_rows_columns(d));
        });
  }

  TEST_CASE("v and w do not depend on the reading order") {
    auto d = GoDiagram::parse("k=3 n=7\noxx.\nx.oo\n.o.o");
    auto orders = reading_orders(d.shape(), 50);
    CHECK(orders.size() == 50);
    for (const auto& order : orders) {
      auto sub = subexpr_of_go(d, order);
      CHECK(sub.is_distinguished());
      CHECK(sub.product() == d.v());
      CHECK(evaluate_word(sub.base()).product == d.w());
      CHECK(GoDiagram::from_subexpression(d.shape(), order, sub) == d);
    }
  }

  TEST_CASE("Gr(3,7) example") {
    auto d = GoDiagram::parse("k=3 n=7\noxx.\nx.oo\n.o.o");
    CHECK(weyl::format_word(shape_word(d.shape())) == "s3s4s5s6s2s3s4s5s1s2s3s4");
    CHECK(d.subexpression().mask_string() == "101011010111");
    CHECK(decorated_pi_of_go(d).perm == weyl::Permutation({4, 6, 7, 1, 3, 2, 5}));
    std::vector<std::string> want{"1", "-1", "-1", "p9", "-1", "p7", "1", "1", "p4", "1", "p2", "1"};
    std::vector<std::string> got;
    for (const auto& row : labeled_go_diagram(d))
      for (const auto& b : row) got.push_back(b.to_string());
    CHECK(got == want);
  }

  TEST_CASE("necklace of type (4,9) maps to (6,7,1,2,8,3,9,4,5)") {
    std::vector<Subset> sets;
    for (const char* s : {"1257", "2357", "3457", "4567", "5678", "6789", "1789", "1289", "1259"}) sets.push_back(parse_subset(s));
    GrassmannNecklace neck(9, sets);
    auto pi = necklace_to_perm(neck);
    CHECK(pi.perm == weyl::Permutation({6, 7, 1, 2, 8, 3, 9, 4, 5}));
    CHECK(pi.weak_excedances() == Subset{1, 2, 5, 7});
    CHECK(perm_to_necklace(pi) == neck);
  }

  TEST_CASE("every necklace round trips through its decorated permutation") {
    for (int n = 1; n <= 6; ++n) {
      long total = 0;
      for (int k = 0; k <= n; ++k) {
        auto all = oracle::necklaces(k, n);
        total += static_cast<long>(all.size());
        CHECK(static_cast<long>(all.size()) == oracle::decorated_count(k, n));
        for (const auto& sets : all) {
          GrassmannNecklace neck(n, sets);
          auto pi = necklace_to_perm(neck);
          CHECK(pi.k() == k);
          CHECK(pi.weak_excedances() == sets.front());
          CHECK(perm_to_necklace(pi) == neck);
        }
      }
      long decorated = 0;
      for (int k = 0; k <= n; ++k) decorated += oracle::decorated_count(k, n);
      CHECK(total == decorated);
    }
  }

  TEST_CASE("malformed input is rejected with a position") {
    CHECK_THROWS_AS(GoDiagram::parse("k=2 n=4\n.q\n.."), ParseError);
    try {
      GoDiagram::parse("k=2 n=4\n.q\n..");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2, column 2") != std::string::npos);
    }
    CHECK_THROWS(GoDiagram::parse("k=2 n=4\nx.\n.."));  // not distinguished
    CHECK_THROWS_AS(GoDiagram::parse("n=4"), ParseError);
    CHECK_THROWS(GrassmannNecklace(3, {{1}, {1}, {3}}));
    CHECK(parse_decorated("(1,3,2)[1:+1]").colors == std::vector<int>{1, 0, 0});
    CHECK_THROWS_AS(parse_decorated("(1,3,2)"), ParseError);
  }
}
