// Dev-only exploration binary; not registered with ctest.
#include <algorithm>
#include <iostream>
#include <qoc/catalog.hpp>
#include <qoc/cocycle.hpp>
#include <qoc/extension.hpp>
#include <qoc/group.hpp>
#include <qoc/matrix.hpp>
#include <qoc/orthogonality.hpp>
#include <qoc/search.hpp>

using namespace qoc;

namespace {
GroupPtr shared(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

// Paper's 12x12 Phi, top-left 6x6 block A -> M = 2A-J.
const int kPhiA[6][6] = {
    {1, 1, 1, 1, 1, 1},
    {1, 0, 0, 1, 1, 1},
    {1, 0, 1, 0, 0, 0},
    {1, 1, 0, 0, 1, 0},
    {1, 1, 0, 0, 0, 1},
    {1, 1, 0, 1, 0, 0},
};
}  // namespace

int main() {
  // 1. QO counts per class at orders 6 and 10.
  for (int order : {6, 10}) {
    for (GroupTable raw : catalog_groups(order)) {
      GroupPtr g = shared(std::move(raw));
      SearchParams p;
      p.witness_cap = 1000;
      SearchReport rep = search_quasi_orthogonal(g, p);
      std::cout << g->name << ": ";
      for (auto& c : rep.classes)
        std::cout << c.label << "=" << c.qo_count << " ";
      std::cout << "witness_orbits=" << rep.witnesses.size() << "\n";
    }
  }

  // 2. Is the paper's M a cocycle over our D6 (any relabeling)?
  SignMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m.put(i, j, int8_t(2 * kPhiA[i][j] - 1));
  GroupPtr d6 = shared(build_dihedral(3));
  std::cout << "paper M RE=" << row_excess(m) << " e=" << even_row_count(m) << "\n";
  std::cout << "direct cocycle over D6? " << is_cocycle(m, *d6) << "\n";
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  int found = 0;
  do {
    if (perm[0] != 0) continue;
    SignMatrix relabeled(6);
    bool ok = true;
    // relabeled[i][j] = M[pos of our element i in paper order][...]:
    // try M as psi over D6 with paper ordering perm: psi(perm[i],perm[j]) = M[i][j]
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        relabeled.put(perm[std::size_t(i)], perm[std::size_t(j)], m.at(i, j));
    if (is_cocycle(relabeled, *d6)) {
      ++found;
      if (found <= 3) {
        std::cout << "cocycle under perm ";
        for (int x : perm) std::cout << x;
        std::cout << "\n";
      }
    }
    (void)ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  std::cout << "total relabelings making paper M cocyclic over D6: " << found << "\n";

  // 3. Egan construction q=3 and q=7.
  for (int q : {3, 7}) {
    SignMatrix e = circulant_core_matrix(q);
    std::cout << "egan q=" << q << " RE=" << row_excess(e)
              << " e=" << even_row_count(e) << " gram_block=" << gram_block_form(e)
              << "\n";
  }

  // 4. Maxdet at order 6.
  for (GroupTable raw : catalog_groups(6)) {
    GroupPtr g = shared(std::move(raw));
    MaxdetResult res = maxdet_search(g);
    std::cout << "maxdet " << g->name << " best=" << res.best_abs_det
              << " meets_ew=" << res.meets_ew
              << " all_best_qo=" << res.all_best_quasi_orthogonal << "\n";
  }

  // 5. C7 difference sets, k=3.
  auto ds = ordinary_difference_set_search(build_cyclic(7), 3);
  std::cout << "C7 k=3 difference sets: " << ds.size() << "\n";

  // 6. Dimension law quick pass over the catalog.
  for (int order : catalog_orders()) {
    for (GroupTable raw : catalog_groups(order)) {
      GroupPtr g = shared(std::move(raw));
      CocycleSpace sp = cocycle_space(g);
      std::cout << g->name << " dimZ2=" << sp.dim_z2()
                << " cb=" << sp.coboundary_dim() << "\n";
    }
  }
  return 0;
}
