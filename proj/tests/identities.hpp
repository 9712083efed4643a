#pragma once

#include <functional>
#include <string>
#include <vector>

#include "braidvar/matrix.hpp"
#include "braidvar/weave.hpp"
#include "support.hpp"

namespace braidvar::test {

struct Identity {
  std::string name;
  std::function<bool()> holds;
};

inline SquareMatrix block2(int i, const Scalar& a, const Scalar& b, const Scalar& d, int n) {
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = a;
  m(i, i + 1) = b;
  m(i + 1, i + 1) = d;
  return m;
}

inline SquareMatrix chi_at(int i, int k, const Scalar& a, const Scalar& b, int n) {
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = a;
  m(k, k) = b;
  return m;
}

// Exact symbolic matrix identities behind the weave vertices, the framing
// moves and the MCS moves.
inline std::vector<Identity> matrix_identities() {
  const Scalar z = v("z1"), w = v("z2"), z1 = v("z1"), z2 = v("z2"), z3 = v("z3");
  const Scalar a = v("a1"), b = v("b1");
  const Scalar x = v("x1"), y = v("y1");
  auto B = [](int i, const Scalar& s, int n) { return braid_matrix(i, s, n); };
  std::vector<Identity> out;

  // Weave vertices.
  for (int n : {3, 4}) {
    for (int i = 1; i + 1 < n; ++i) {
      out.push_back({"weave hexavalent up n=" + std::to_string(n) + " i=" + std::to_string(i), [=] {
                       return B(i, z3, n) * B(i + 1, z2, n) * B(i, z1, n) ==
                              B(i + 1, z1, n) * B(i, z2 - z1 * z3, n) * B(i + 1, z3, n);
                     }});
      out.push_back({"weave hexavalent down n=" + std::to_string(n) + " i=" + std::to_string(i), [=] {
                       return B(i + 1, z3, n) * B(i, z2, n) * B(i + 1, z1, n) ==
                              B(i, z1, n) * B(i + 1, z2 + z1 * z3, n) * B(i, z3, n);
                     }});
    }
  }
  out.push_back({"weave distant", [=] { return B(1, z, 4) * B(3, w, 4) == B(3, w, 4) * B(1, z, 4); }});
  for (int n : {2, 3}) {
    out.push_back({"weave trivalent n=" + std::to_string(n), [=] {
                     SquareMatrix V = block2(1, -z2.inverse(), Scalar(1L), z2, n);
                     return B(1, z2, n) * B(1, z1, n) == V * B(1, z1 + z2.inverse(), n);
                   }});
    out.push_back({"weave cup n=" + std::to_string(n), [=] {
                     return B(1, Scalar(0L), n) * B(1, z1, n) == block2(1, Scalar(1L), z1, Scalar(1L), n);
                   }});
  }
  for (int i : {1, 2}) {
    out.push_back({"weave virtual vertex i=" + std::to_string(i), [=] {
                     const int n = 3;
                     SquareMatrix V(n);
                     for (int r = 1; r <= n; ++r)
                       for (int c = r; c <= n; ++c) V(r, c) = Scalar::var(Var{'a', 10 * r + c});
                     const Scalar wv = (V(i, i + 1) + z * V(i + 1, i + 1)) / V(i, i);
                     SquareMatrix Vp = B(i, z, n) * V * B(i, wv, n).inverse();
                     SquareMatrix pushed = V;
                     const Scalar got = push_through_letter(pushed, i, z);
                     return Vp.is_upper_triangular() && got == wv && pushed == Vp && B(i, z, n) * V == Vp * B(i, wv, n);
                   }});
  }

  // Framing moves, n = 5 and i = 2 leaves room on both sides.
  {
    const int n = 5, i = 2;
    out.push_back({"marked points (1) with swapped entries", [=] {
                     return B(i, z, n) * chi_at(i, i + 1, a, b, n) == chi_at(i, i + 1, b, a, n) * B(i, b / a * z, n);
                   }});
    for (int k : {1, 4, 5}) {
      out.push_back({"marked points (2) k=" + std::to_string(k),
                     [=] { return B(i, z, n) * chi_at(i, k, a, b, n) == chi_at(i + 1, k, a, b, n) * B(i, z / a, n); }});
      out.push_back({"marked points (3) k=" + std::to_string(k),
                     [=] { return B(i, z, n) * chi_at(i + 1, k, a, b, n) == chi_at(i, k, a, b, n) * B(i, a * z, n); }});
    }
    const int k = 3;
    for (int j : {1, 5}) {
      out.push_back({"marked points (4) i=" + std::to_string(j),
                     [=] { return B(k, z, n) * chi_at(j, k, a, b, n) == chi_at(j, k + 1, a, b, n) * B(k, z / b, n); }});
      out.push_back({"marked points (5) i=" + std::to_string(j),
                     [=] { return B(k, z, n) * chi_at(j, k + 1, a, b, n) == chi_at(j, k, a, b, n) * B(k, b * z, n); }});
    }
    out.push_back({"marked points (6)",
                   [=] { return B(3, z, n) * chi_at(1, 2, a, b, n) == chi_at(1, 2, a, b, n) * B(3, z, n); }});
    out.push_back({"marked points (6) far", [=] {
                     return B(1, z, n) * chi_at(4, 5, a, b, n) == chi_at(4, 5, a, b, n) * B(1, z, n);
                   }});
  }

  // MCS moves as atom words; handleslide left of each crossing.
  out.push_back({"MCS distant", [=] {
                   std::vector<Atom> before{Handleslide{1, 2, x}, Crossing{1}, Handleslide{3, 4, y}, Crossing{3}};
                   std::vector<Atom> after{Handleslide{3, 4, y}, Crossing{3}, Handleslide{1, 2, x}, Crossing{1}};
                   return compose(before, 4) == compose(after, 4);
                 }});
  for (bool up : {true, false}) {
    out.push_back({std::string("MCS hexavalent ") + (up ? "up" : "down"), [=] {
                     const int p = up ? 1 : 2, q = up ? 2 : 1;
                     auto pair = [](int i) { return std::pair{i, i + 1}; };
                     auto H = [&](int i, const Scalar& s) { return Handleslide{pair(i).first, pair(i).second, s}; };
                     std::vector<Atom> before{H(p, z1), Crossing{p}, H(q, z2), Crossing{q}, H(p, z3), Crossing{p}};
                     const Scalar mid = up ? z2 - z1 * z3 : z2 + z1 * z3;
                     std::vector<Atom> after{H(q, z3), Crossing{q}, H(p, mid), Crossing{p}, H(q, z1), Crossing{q}};
                     return compose(before, 3) == compose(after, 3);
                   }});
  }
  for (int n : {2, 3}) {
    out.push_back({"MCS trivalent n=" + std::to_string(n), [=] {
                     std::vector<Atom> before{Handleslide{1, 2, x}, Crossing{1}, Handleslide{1, 2, y}, Crossing{1}};
                     std::vector<Atom> after{Handleslide{1, 2, x + y.inverse()}, Crossing{1}, Handleslide{1, 2, -y},
                                             MarkedPoint{1, -y.inverse()}, MarkedPoint{2, y}};
                     return compose(before, n) == compose(after, n);
                   }});
    out.push_back({"MCS cup n=" + std::to_string(n), [=] {
                     std::vector<Atom> before{Handleslide{1, 2, x}, Crossing{1}, Handleslide{1, 2, Scalar(0L)}, Crossing{1}};
                     std::vector<Atom> after{Handleslide{1, 2, x}, MarkedPoint{1, Scalar(1L)}, MarkedPoint{2, Scalar(1L)}};
                     return compose(before, n) == compose(after, n);
                   }});
    out.push_back({"MCS-SR trivalent n=" + std::to_string(n), [=] {
                     const Scalar av = x + y.inverse();
                     const Scalar bv = av.inverse() - y;
                     std::vector<Atom> before{Handleslide{1, 2, x}, Crossing{1}, Handleslide{1, 2, y}, Crossing{1}};
                     std::vector<Atom> after{Handleslide{1, 2, av},          Crossing{1},
                                             Handleslide{1, 2, -av.inverse()}, Handleslide{1, 2, bv},
                                             MarkedPoint{1, -y.inverse()},    MarkedPoint{2, y}};
                     return compose(before, n) == compose(after, n);
                   }});
  }
  return out;
}

}  // namespace braidvar::test
