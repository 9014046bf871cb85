#pragma once

#include <string>
#include <vector>

#include "pilift/group.hpp"

namespace pilift::builtin {

Group cyclic(std::size_t n);
/// Dihedral group of the given order (order = 2n, acting on n points).
Group dihedral(std::size_t order);
Group symmetric(std::size_t n);
Group alternating(std::size_t n);
/// Heisenberg group of order 27 and exponent 3, as affine maps
/// (u, v) -> (u + a, v + b*u + c) of F_3^2 on 9 points.
Group extraspecial_27_exponent3();
/// Points (u, v) of F_3^2 are numbered 3*u + v, 0-based.
std::size_t heisenberg_point(std::size_t u, std::size_t v);
Group quaternion8();
Group frobenius21();     // C7 x| C3
Group frobenius20();     // C5 x| C4
Group dicyclic12();      // C3 x| C4
Group sl2_3();           // SL(2,3) on the 8 non-zero vectors of F_3^2
Group gl2_3();           // GL(2,3) on the same 8 points
/// Disjoint-union direct product.
Group direct_product(const Group& a, const Group& b);
/// C7^2 x| E(27) on 58 points: E acts on the first C7 factor with kernel
/// M1 = {a = 0} and on the second with kernel M2 = {b = 0}.
Group section4_group();

/// Resolves names such as "s3", "c6", "d8", "a4", "e27", "section4", "sl23",
/// "c2xc2", "c3xs3". Throws std::invalid_argument for unknown names.
Group by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace pilift::builtin
