#include "qoc/catalog.hpp"

#include "qoc/error.hpp"

namespace qoc {

const std::vector<int>& catalog_orders() {
  static const std::vector<int> orders{6, 10, 14, 18, 22, 26, 30, 34, 38, 42};
  return orders;
}

std::vector<GroupTable> catalog_groups(int order) {
  auto named = [](GroupTable g, const char* name) {
    g.name = name;
    return g;
  };
  switch (order) {
    case 6:
      return {build_cyclic(6), build_dihedral(3)};
    case 10:
      return {build_cyclic(10), build_dihedral(5)};
    case 14:
      return {build_cyclic(14), build_dihedral(7)};
    case 18:
      return {build_cyclic(18), build_dihedral(9),
              named(direct_product(build_cyclic(3), build_cyclic(6)), "C3xC6"),
              named(direct_product(build_cyclic(3), build_dihedral(3)), "C3xD6"),
              named(build_generalized_dihedral(
                        direct_product(build_cyclic(3), build_cyclic(3))),
                    "Dih(C3xC3)")};
    case 22:
      return {build_cyclic(22), build_dihedral(11)};
    case 26:
      return {build_cyclic(26), build_dihedral(13)};
    case 30:
      return {build_cyclic(30), build_dihedral(15),
              named(direct_product(build_cyclic(5), build_dihedral(3)), "C5xD6"),
              named(direct_product(build_cyclic(3), build_dihedral(5)), "C3xD10")};
    case 34:
      return {build_cyclic(34), build_dihedral(17)};
    case 38:
      return {build_cyclic(38), build_dihedral(19)};
    case 42:
      return {build_cyclic(42), build_dihedral(21),
              named(direct_product(build_cyclic(7), build_dihedral(3)), "C7xD6"),
              named(direct_product(build_cyclic(3), build_dihedral(7)), "C3xD14"),
              // Frobenius group of order 42 (C7 x| C6, 3 a primitive root mod 7)
              named(build_metacyclic(7, 6, 3), "F42"),
              named(direct_product(build_cyclic(2), build_metacyclic(7, 3, 2)),
                    "C2xF21")};
    default:
      throw Error(ErrorCode::ParameterMismatch,
                  "order " + std::to_string(order) + " is not in the catalog");
  }
}

}  // namespace qoc
