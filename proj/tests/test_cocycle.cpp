#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <qoc/cocycle.hpp>
#include <qoc/error.hpp>
#include <qoc/group.hpp>
#include <random>

#include "oracles.hpp"

using namespace qoc;

namespace {

GroupPtr shared(GroupTable g) {
  return std::make_shared<const GroupTable>(std::move(g));
}

}  // namespace

TEST_CASE("brute-force enumeration matches the GF(2) solver at order 6") {
  for (GroupTable raw : {build_cyclic(6), build_dihedral(3)}) {
    GroupPtr g = shared(std::move(raw));
    std::vector<SignMatrix> brute = oracle::enumerate_cocycles_bruteforce(*g);
    CHECK(brute.size() == 32);  // dim Z^2 = 5

    CocycleSpace space = cocycle_space(g);
    CHECK(space.dim_z2() == 5);
    CHECK(space.coboundary_dim() == 4);
    CHECK(space.h2_reps().size() == 1);

    // The span of the computed basis must equal the brute-force set.
    std::vector<SignMatrix> spanned;
    for (uint64_t v = 0; v < 32; ++v) {
      BitVec c(5);
      for (int i = 0; i < 5; ++i)
        if ((v >> i) & 1) c.set(std::size_t(i), true);
      spanned.push_back(space.from_coeffs(c).signs);
    }
    auto key = [](const SignMatrix& m) { return m.a; };
    std::vector<std::vector<int8_t>> a, b;
    for (const auto& m : brute) a.push_back(key(m));
    for (const auto& m : spanned) b.push_back(key(m));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("is_cocycle") {
  GroupPtr c6 = shared(build_cyclic(6));
  SignMatrix ones(6, 1);
  CHECK(is_cocycle(ones, *c6));

  SignMatrix flipped = ones;
  flipped.put(2, 3, -1);
  CHECK_FALSE(is_cocycle(flipped, *c6));
  CHECK_FALSE(oracle::naive_is_cocycle(flipped, *c6));

  CHECK_THROWS_AS(is_cocycle(SignMatrix(5, 1), *c6), Error);
}

TEST_CASE("coboundary formula") {
  GroupPtr c6 = shared(build_cyclic(6));
  std::vector<int8_t> phi{1, -1, 1, 1, 1, 1};
  Cocycle d = coboundary(c6, phi);
  CHECK(is_cocycle(d.signs, *c6));
  // dphi(g1,g1) = phi(g1)^-2 phi(g2) = phi(g2); index arithmetic: 1+1=2.
  CHECK(d.at(1, 1) == phi[2]);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      CHECK(d.at(g, h) ==
            phi[std::size_t(g)] * phi[std::size_t(h)] * phi[std::size_t((g + h) % 6)]);

  // Trivial phi gives the all-ones cocycle.
  Cocycle triv = coboundary(c6, std::vector<int8_t>(6, 1));
  CHECK(triv.signs == SignMatrix(6, 1));

  std::vector<int8_t> bad{-1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(coboundary(c6, bad), Error);
}

TEST_CASE("every row of a coboundary matrix is even") {
  std::mt19937_64 rng(7);
  for (GroupTable raw : {build_cyclic(6), build_dihedral(5), build_dihedral(7)}) {
    GroupPtr g = shared(std::move(raw));
    for (int it = 0; it < 50; ++it) {
      Cocycle d = coboundary(g, oracle::random_phi(g->n, rng));
      for (int i = 0; i < g->n; ++i) CHECK(d.signs.row_even(i));
    }
  }
}

TEST_CASE("cocyclic matrix basics") {
  GroupPtr c2 = shared(build_cyclic(2));
  CocycleSpace space = cocycle_space(c2);
  // Unique normalized non-coboundary cocycle over C2.
  REQUIRE(space.h2_reps().size() == 1);
  const SignMatrix& m = space.h2_reps()[0].signs;
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == -1);

  // Normalization: first row and column all +1 for any basis element.
  GroupPtr d6 = shared(build_dihedral(3));
  CocycleSpace sd6 = cocycle_space(d6);
  for (int i = 0; i < sd6.dim_z2(); ++i) {
    Cocycle psi = sd6.basis_cocycle(i);
    CHECK(psi.signs.first_row_all_plus());
    CHECK(psi.signs.first_col_all_plus());
  }
}

TEST_CASE("cocycle space dimensions across the catalog-sized groups") {
  for (int order : {6, 10}) {
    for (GroupTable raw : {build_cyclic(order), build_dihedral(order / 2)}) {
      GroupPtr g = shared(std::move(raw));
      CocycleSpace space = cocycle_space(g);
      CHECK(space.dim_z2() == order - 1);
      CHECK(space.dim_h2() == 1);
      // Every element of the span is a cocycle; every coboundary lies in
      // the coboundary block.
      std::mt19937_64 rng(static_cast<uint64_t>(order));
      for (int it = 0; it < 20; ++it) {
        BitVec c(std::size_t(space.dim_z2()));
        for (int i = 0; i < space.dim_z2(); ++i)
          if (rng() & 1) c.set(std::size_t(i), true);
        Cocycle psi = space.from_coeffs(c);
        CHECK(is_cocycle(psi.signs, *g));
        Cocycle d = coboundary(g, oracle::random_phi(g->n, rng));
        CHECK(space.is_coboundary_element(d));
        auto coeffs = space.coeffs_of(d);
        REQUIRE(coeffs.has_value());
        for (int i = space.coboundary_dim(); i < space.dim_z2(); ++i)
          CHECK_FALSE(coeffs->get(std::size_t(i)));
      }
    }
  }
  CHECK_THROWS_AS(cocycle_space(shared(build_cyclic(46))), Error);
}

TEST_CASE("shift action") {
  GroupPtr d6 = shared(build_dihedral(3));
  CocycleSpace space = cocycle_space(d6);
  Cocycle psi = space.h2_reps()[0];

  // Shift by the identity fixes psi.
  CHECK(shift(psi, 0).signs == psi.signs);

  // Composition law: shift(shift(psi,a),b) = shift(psi, ab), exhaustively
  // at order 6 over the whole space.
  for (uint64_t v = 0; v < 32; ++v) {
    BitVec c(5);
    for (int i = 0; i < 5; ++i)
      if ((v >> i) & 1) c.set(std::size_t(i), true);
    Cocycle x = space.from_coeffs(c);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        CHECK(shift(shift(x, a), b).signs == shift(x, d6->mul(a, b)).signs);
  }

  // Shift stays in the cohomology class: only coboundary coordinates move.
  for (int a = 0; a < 6; ++a) {
    Cocycle s = shift(psi, a);
    auto coeffs = space.coeffs_of(s);
    REQUIRE(coeffs.has_value());
    for (int i = space.coboundary_dim(); i < space.dim_z2(); ++i)
      CHECK(coeffs->get(std::size_t(i)) ==
            psi.coeffs->get(std::size_t(i)));
  }

  // Orbit closure: applying any further shift lands inside the orbit.
  std::vector<Cocycle> orbit = shift_orbit(psi);
  for (const Cocycle& o : orbit)
    for (int a = 0; a < 6; ++a) {
      Cocycle s = shift(o, a);
      bool inside = false;
      for (const Cocycle& p : orbit)
        if (p.signs == s.signs) inside = true;
      CHECK(inside);
    }
}

TEST_CASE("shifted row sums are +-(original non-initial row sums)") {
  std::mt19937_64 rng(11);
  for (GroupTable raw : {build_cyclic(10), build_dihedral(5)}) {
    GroupPtr g = shared(std::move(raw));
    CocycleSpace space = cocycle_space(g);
    for (int it = 0; it < 10; ++it) {
      BitVec c(std::size_t(space.dim_z2()));
      for (int i = 0; i < space.dim_z2(); ++i)
        if (rng() & 1) c.set(std::size_t(i), true);
      Cocycle psi = space.from_coeffs(c);
      std::vector<long long> sums;
      for (int i = 1; i < g->n; ++i) sums.push_back(psi.signs.row_sum(i));
      for (int a = 0; a < g->n; ++a) {
        Cocycle s = shift(psi, a);
        for (int i = 1; i < g->n; ++i) {
          long long rs = s.signs.row_sum(i);
          bool matches = false;
          for (long long v : sums) matches = matches || v == rs || v == -rs;
          CHECK(matches);
        }
      }
    }
  }
}

TEST_CASE("reorder_cocycle preserves the cocycle property") {
  GroupPtr d6 = shared(build_dihedral(3));
  CocycleSpace space = cocycle_space(d6);
  Cocycle psi = space.h2_reps()[0];
  std::vector<int> perm{0, 2, 1, 4, 3, 5};
  GroupPtr re = shared(reorder_group(*d6, perm));
  Cocycle moved = reorder_cocycle(psi, perm, re);
  CHECK(is_cocycle(moved.signs, *re));
}
