#pragma once

#include <string>
#include <vector>

#include "isometry.hpp"

// bundled isometries of E10 = U + E8 (basis: e, f of U, then the E8 simple roots)
namespace zeroent::fixtures {

inline IntVec unit(std::size_t n, std::size_t i) {
  IntVec v(n, Int(0));
  v.at(i) = 1;
  return v;
}

inline LatticeIsometry identity_e10() {
  Lattice l = standard_lattice("E10");
  return {l, IntMatrix::identity(l.rank())};
}

struct TransvectionFixture {
  std::string name;
  IntVec f, e;
  LatticeIsometry g;
};

// T(f, e) for f in {e_U, f_U} and e running over the E8 simple roots and two longer vectors
inline std::vector<TransvectionFixture> transvections_e10() {
  Lattice l = standard_lattice("E10");
  std::vector<TransvectionFixture> out;
  for (std::size_t fi : {0u, 1u}) {
    std::vector<std::pair<std::string, IntVec>> es;
    for (std::size_t k = 2; k < 10; ++k) es.push_back({"alpha" + std::to_string(k - 2), unit(10, k)});
    IntVec s(10, Int(0)), w(10, Int(0));
    for (std::size_t k = 2; k < 10; ++k) s[k] = 1;  // norm -2 * 8 + 2 * 7 = -2
    w[2] = 1;
    w[4] = 1;  // two orthogonal roots, norm -4
    es.push_back({"sum", s});
    es.push_back({"a0+a2", w});
    for (auto& [en, e] : es) {
      IntVec f = unit(10, fi);
      out.push_back({std::string(fi == 0 ? "T(e_U," : "T(f_U,") + en + ")", f, e, eichler_transvection(l, f, e)});
    }
  }
  return out;
}

// T(e_U, alpha0) * T(f_U, alpha1); golden data from an independent char-poly computation
struct HyperbolicFixture {
  LatticeIsometry g;
  IntPoly golden_char_poly;   // (x-1)^6 (x^4 - 3x^3 + x^2 - 3x + 1)
  IntPoly golden_min_poly;    // x^4 - 3x^3 + x^2 - 3x + 1
  std::string golden_lambda;  // 40 digits
};

inline HyperbolicFixture hyperbolic_e10() {
  Lattice l = standard_lattice("E10");
  auto g = eichler_transvection(l, unit(10, 0), unit(10, 2)) * eichler_transvection(l, unit(10, 1), unit(10, 3));
  IntPoly salem{1, -3, 1, -3, 1};
  IntPoly lin{-1, 1};
  IntPoly cp = salem;
  for (int i = 0; i < 6; ++i) cp = cp * lin;
  return {g, cp, salem, "2.965572633988663388290098793663095266703"};
}

}  // namespace zeroent::fixtures
