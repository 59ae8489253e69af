#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qoc/catalog.hpp>
#include <qoc/error.hpp>
#include <qoc/group.hpp>

using namespace qoc;

namespace {

// Independent structural check by direct triple loop.
void check_structure(const GroupTable& g) {
  for (int j = 0; j < g.n; ++j) {
    CHECK(g.mul(0, j) == j);
    CHECK(g.mul(j, 0) == j);
  }
  for (int i = 0; i < g.n; ++i) {
    std::vector<bool> row(std::size_t(g.n), false), col(std::size_t(g.n), false);
    for (int j = 0; j < g.n; ++j) {
      row[std::size_t(g.mul(i, j))] = true;
      col[std::size_t(g.mul(j, i))] = true;
    }
    for (int j = 0; j < g.n; ++j) {
      CHECK(row[std::size_t(j)]);
      CHECK(col[std::size_t(j)]);
    }
  }
  bool assoc = true;
  for (int i = 0; i < g.n && assoc; ++i)
    for (int j = 0; j < g.n && assoc; ++j)
      for (int k = 0; k < g.n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
          assoc = false;
          break;
        }
  CHECK(assoc);
  for (int i = 0; i < g.n; ++i) CHECK(g.mul(i, g.inverse(i)) == 0);
}

}  // namespace

TEST_CASE("cyclic groups") {
  GroupTable c1 = build_cyclic(1);
  CHECK(c1.n == 1);
  CHECK(c1.mul(0, 0) == 0);

  GroupTable c6 = build_cyclic(6);
  CHECK(c6.order_multiset() == std::vector<int>{1, 2, 3, 3, 6, 6});
  check_structure(c6);
}

TEST_CASE("dihedral groups") {
  GroupTable d6 = build_dihedral(3);
  CHECK(d6.n == 6);
  CHECK(d6.order_multiset() == std::vector<int>{1, 2, 2, 2, 3, 3});
  CHECK(d6.mul(1, 3) != d6.mul(3, 1));
  check_structure(d6);

  GroupTable d10 = build_dihedral(5);
  CHECK(d10.n == 10);
  int involutions = 0;
  for (int i = 1; i < d10.n; ++i) involutions += d10.element_order(i) == 2;
  CHECK(involutions == 5);
}

TEST_CASE("dicyclic groups") {
  GroupTable q12 = build_dicyclic(1);
  CHECK(q12.n == 12);
  // a = index 1 (order 6), b = index 6 (order 4).
  CHECK(q12.element_order(1) == 6);
  CHECK(q12.element_order(6) == 4);
  CHECK(q12.center() == std::vector<int>{0, 3});  // <a^3>
  check_structure(q12);

  GroupTable q20 = build_dicyclic(2);
  CHECK(q20.n == 20);
  int involutions = 0;
  for (int i = 1; i < q20.n; ++i) involutions += q20.element_order(i) == 2;
  CHECK(involutions == 1);
  // Cyclic subgroup of index 2 generated by an order-(4t+2) element.
  CHECK(q20.element_order(1) == 10);
}

TEST_CASE("build_from_table validates") {
  CHECK(build_from_table({{0}}).n == 1);
  CHECK(build_from_table({{0, 1}, {1, 0}}).n == 2);

  // C6 with rows 2 and 3 swapped: still Latin, no longer associative.
  GroupTable c6 = build_cyclic(6);
  std::vector<std::vector<int>> raw(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) raw[std::size_t(i)][std::size_t(j)] = c6.mul(i, j);
  std::swap(raw[2], raw[3]);
  CHECK_THROWS_AS(build_from_table(raw), Error);

  // Identity not first.
  CHECK_THROWS_AS(build_from_table({{1, 0}, {0, 1}}), Error);
}

TEST_CASE("direct products") {
  GroupTable k4 = direct_product(build_cyclic(2), build_cyclic(2));
  CHECK(k4.order_multiset() == std::vector<int>{1, 2, 2, 2});

  GroupTable c2c3 = direct_product(build_cyclic(2), build_cyclic(3));
  CHECK(c2c3.order_multiset() == build_cyclic(6).order_multiset());

  GroupTable triv = direct_product(build_cyclic(1), build_cyclic(6));
  CHECK(triv.table == build_cyclic(6).table);
}

TEST_CASE("isomorphism testing") {
  GroupTable c6 = build_cyclic(6);
  GroupTable d6 = build_dihedral(3);
  CHECK(is_isomorphic_small(c6, direct_product(build_cyclic(2), build_cyclic(3))));
  CHECK_FALSE(is_isomorphic_small(c6, d6));
  CHECK_FALSE(is_isomorphic_small(build_dicyclic(1), build_cyclic(12)));

  // Reflexive and symmetric over a fixed set of groups of order <= 28.
  std::vector<GroupTable> gs;
  for (int order : {6, 10, 14, 18, 22, 26})
    for (GroupTable& g : catalog_groups(order)) gs.push_back(std::move(g));
  gs.push_back(build_dicyclic(1));
  gs.push_back(build_dicyclic(2));
  gs.push_back(build_dicyclic(3));
  for (const GroupTable& g : gs) CHECK(is_isomorphic_small(g, g));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      CHECK(is_isomorphic_small(gs[i], gs[j]) == is_isomorphic_small(gs[j], gs[i]));

  GroupTable big1 = direct_product(build_cyclic(11), build_cyclic(11));
  CHECK_THROWS_AS(is_isomorphic_small(big1, big1), Error);
}

TEST_CASE("catalog is complete and non-redundant") {
  const std::vector<std::pair<int, int>> expected_counts{
      {6, 2}, {10, 2}, {14, 2}, {18, 5}, {22, 2},
      {26, 2}, {30, 4}, {34, 2}, {38, 2}, {42, 6}};
  CHECK(catalog_orders().size() == expected_counts.size());
  for (auto [order, count] : expected_counts) {
    std::vector<GroupTable> gs = catalog_groups(order);
    CHECK(int(gs.size()) == count);
    for (const GroupTable& g : gs) {
      CHECK(g.n == order);
      check_structure(g);
    }
    // Pairwise non-isomorphic.
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        CHECK_FALSE(is_isomorphic_small(gs[i], gs[j]));
  }
  CHECK_THROWS_AS(catalog_groups(12), Error);
}

TEST_CASE("metacyclic and generalized dihedral constructors") {
  GroupTable f21 = build_metacyclic(7, 3, 2);
  CHECK(f21.n == 21);
  CHECK_FALSE(f21.is_abelian());

  GroupTable f42 = build_metacyclic(7, 6, 3);
  CHECK(f42.n == 42);
  CHECK(f42.center().size() == 1);

  CHECK_THROWS_AS(build_metacyclic(7, 3, 3), Error);  // 3^3 != 1 mod 7

  GroupTable dih9 = build_generalized_dihedral(build_cyclic(9));
  CHECK(is_isomorphic_small(dih9, build_dihedral(9)));
  CHECK_THROWS_AS(build_generalized_dihedral(build_dihedral(3)), Error);
}

TEST_CASE("minimal generating sets generate") {
  for (int order : {6, 18}) {
    for (const GroupTable& g : catalog_groups(order)) {
      std::vector<int> gens = minimal_generating_set(g);
      CHECK(gens.size() <= 3);
      // Regenerate by closure.
      std::vector<bool> in(std::size_t(g.n), false);
      std::vector<int> frontier{0};
      in[0] = true;
      for (int s : gens)
        if (!in[std::size_t(s)]) {
          in[std::size_t(s)] = true;
          frontier.push_back(s);
        }
      for (std::size_t h = 0; h < frontier.size(); ++h)
        for (int s : gens) {
          int y = g.mul(frontier[h], s);
          if (!in[std::size_t(y)]) {
            in[std::size_t(y)] = true;
            frontier.push_back(y);
          }
        }
      CHECK(int(frontier.size()) == g.n);
    }
  }
}
