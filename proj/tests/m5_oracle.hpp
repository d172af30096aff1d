#pragma once

// Automorphisms of M5 (basis G1, F1, F2, Pt, Dt), eliminated by hand.
//
// With A upper triangular and A[q_i,q_j] = [A q_i, A q_j], the nonzero components are
//   (4,5,4)  a44 - a44*a55           -> a55 = 1            (a44 != 0)
//   (4,5,3)  2*a34*a55 + a34         -> a34 = 0
//   (3,4,2)  2*a33*a44 - 2*a22       -> a22 = a33*a44
//   (2,4,1)  a22*a44 - a11           -> a11 = a33*a44^2
//   (2,5,1)  a22*a45 - a12           -> a12 = a33*a44*a45
//   (3,4,1)  a23*a44 - 2*a12         -> a23 = 2*a33*a45    (a44 != 0)
//   (3,5,1)  a23*a45 - 2*a13         -> a13 = a33*a45^2
//   (4,5,2)  a24*a55 + a24 + 2*a34*a45 - 2*a35*a44  -> a24 = a35*a44
//   (4,5,1)  a14 + a24*a45 - a25*a44 -> a14 = a25*a44 - a24*a45
// and (2,5,2), (3,5,2), (3,5,3) then hold identically. Six entries stay free:
// a15, a25, a33, a35, a44, a45, with a33*a44 != 0.

#include "lieaut/linalg.hpp"

namespace testing {

struct M5Params {
    lieaut::Rational a15, a25, a33, a35, a44, a45;
};

inline lieaut::Matrix m5_hand_automorphism(const M5Params& p) {
    using lieaut::Matrix;
    using lieaut::Rational;
    const Rational a24 = p.a35 * p.a44;
    Matrix a(5, 5);
    a(0, 0) = p.a33 * p.a44 * p.a44;
    a(0, 1) = p.a33 * p.a44 * p.a45;
    a(0, 2) = p.a33 * p.a45 * p.a45;
    a(0, 3) = p.a25 * p.a44 - a24 * p.a45;
    a(0, 4) = p.a15;
    a(1, 1) = p.a33 * p.a44;
    a(1, 2) = 2 * p.a33 * p.a45;
    a(1, 3) = a24;
    a(1, 4) = p.a25;
    a(2, 2) = p.a33;
    a(2, 4) = p.a35;
    a(3, 3) = p.a44;
    a(3, 4) = p.a45;
    a(4, 4) = 1;
    return a;
}

}  // namespace testing
