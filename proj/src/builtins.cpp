#include "pilift/builtins.hpp"

#include <cctype>
#include <stdexcept>

namespace pilift::builtin {

namespace {

using Point = Permutation::Point;

Permutation from_map(std::size_t degree, const auto& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Permutation cycle(std::size_t degree, std::size_t first, std::size_t last) {
  return from_map(degree, [&](std::size_t i) {
    if (i < first || i > last) return i;
    return i == last ? first : i + 1;
  });
}

// Matrix [[a, b], [c, d]] over F_3 acting on the non-zero column vectors.
Permutation f3_matrix(int a, int b, int c, int d) {
  std::vector<std::pair<int, int>> vectors;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != 0 || y != 0) vectors.emplace_back(x, y);
    }
  }
  auto index = [&](int x, int y) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i] == std::make_pair(((x % 3) + 3) % 3, ((y % 3) + 3) % 3)) return i;
    }
    throw std::logic_error("vector lookup");
  };
  return from_map(8, [&](std::size_t i) {
    const auto [x, y] = vectors[i];
    return index(a * x + b * y, c * x + d * y);
  });
}

}  // namespace

Group cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n == 1) return Group::from_generators(1, {});
  return Group::from_generators(n, {cycle(n, 0, n - 1)});
}

Group dihedral(std::size_t order) {
  if (order < 4 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even and at least 4");
  const std::size_t n = order / 2;
  if (n == 2) return Group::from_cycle_text(4, {"(1 2)", "(3 4)"});
  auto rotation = cycle(n, 0, n - 1);
  auto reflection = from_map(n, [n](std::size_t i) { return (n - i) % n; });
  return Group::from_generators(n, {rotation, reflection});
}

Group symmetric(std::size_t n) {
  if (n == 0 || n > 7) throw std::invalid_argument("symmetric group degree out of range");
  if (n == 1) return Group::from_generators(1, {});
  if (n == 2) return Group::from_cycle_text(2, {"(1 2)"});
  return Group::from_generators(n, {cycle(n, 0, 1), cycle(n, 0, n - 1)});
}

Group alternating(std::size_t n) {
  if (n == 0 || n > 7) throw std::invalid_argument("alternating group degree out of range");
  if (n < 3) return Group::from_generators(n, {});
  auto three = cycle(n, 0, 2);
  if (n == 3) return Group::from_generators(n, {three});
  auto long_cycle = n % 2 == 1 ? cycle(n, 0, n - 1) : cycle(n, 1, n - 1);
  return Group::from_generators(n, {three, long_cycle});
}

std::size_t heisenberg_point(std::size_t u, std::size_t v) { return 3 * (u % 3) + (v % 3); }

Group extraspecial_27_exponent3() {
  auto x = from_map(9, [](std::size_t p) { return heisenberg_point(p / 3 + 1, p % 3); });
  auto y = from_map(9, [](std::size_t p) { return heisenberg_point(p / 3, p % 3 + p / 3); });
  return Group::from_generators(9, {x, y});
}

Group quaternion8() { return Group::from_cycle_text(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}); }

Group frobenius21() {
  return Group::from_generators(7, {cycle(7, 0, 6), from_map(7, [](std::size_t i) { return (2 * i) % 7; })});
}

Group frobenius20() {
  return Group::from_generators(5, {cycle(5, 0, 4), from_map(5, [](std::size_t i) { return (2 * i) % 5; })});
}

Group dicyclic12() { return Group::from_cycle_text(7, {"(1 2 3)", "(1 2)(4 5 6 7)"}); }

Group sl2_3() { return Group::from_generators(8, {f3_matrix(1, 1, 0, 1), f3_matrix(1, 0, 1, 1)}); }

Group gl2_3() {
  return Group::from_generators(8, {f3_matrix(1, 1, 0, 1), f3_matrix(1, 0, 1, 1), f3_matrix(2, 0, 0, 1)});
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    gens.push_back(from_map(degree, [&](std::size_t i) { return i < a.degree() ? g[i] : i; }));
  }
  for (const auto& g : b.generators()) {
    gens.push_back(from_map(degree, [&](std::size_t i) { return i < a.degree() ? i : a.degree() + g[i - a.degree()]; }));
  }
  return Group::from_generators(degree, std::move(gens), std::max(kDefaultOrderCap, a.order() * b.order()));
}

Group section4_group() {
  const Group v = Group::from_generators(14, {cycle(14, 0, 6), cycle(14, 7, 13)});
  const Group e = extraspecial_27_exponent3();
  const auto& g1 = v.generators()[0];
  const auto& g2 = v.generators()[1];
  // x = (a=1, b=0) squares the V1 generator; y = (a=0, b=1) squares the V2 one.
  std::vector<Automorphism> action{
      Automorphism{{g1 * g1, g2}},
      Automorphism{{g1, g2 * g2}},
  };
  return semidirect_product(v, e, action);
}

std::vector<std::string> names() {
  return {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c12", "c2xc2", "d8", "d10", "d12", "q8", "s3", "s4", "s5",
          "a4", "a5", "f20", "f21", "dic12", "sl23", "gl23", "c3xs3", "e27", "section4"};
}

Group by_name(const std::string& raw) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "e27" || name == "extraspecial27") return extraspecial_27_exponent3();
  if (name == "section4") return section4_group();
  if (name == "q8") return quaternion8();
  if (name == "f21") return frobenius21();
  if (name == "f20") return frobenius20();
  if (name == "dic12") return dicyclic12();
  if (name == "sl23") return sl2_3();
  if (name == "gl23") return gl2_3();
  if (auto x = name.find('x'); x != std::string::npos && x > 0) {
    return direct_product(by_name(name.substr(0, x)), by_name(name.substr(x + 1)));
  }
  if (name.size() >= 2 && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t n = std::stoul(name.substr(1));
    switch (name[0]) {
      case 'c': return cyclic(n);
      case 'd': return dihedral(n);
      case 's': return symmetric(n);
      case 'a': return alternating(n);
      default: break;
    }
  }
  throw std::invalid_argument("unknown builtin group '" + raw + "'");
}

}  // namespace pilift::builtin
