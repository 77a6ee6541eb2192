#pragma once

#include <utility>

#include "adem/algebra.hpp"

namespace adem {

/// Left action of the opposite Steenrod algebra, peeling the leftmost
/// letter of each monomial:
///   Sq^a Q^b     = C(b-a, a) Q^{b-a};
///   Sq^a (Q^0 r) = Q^0 Sq^a(r);
///   Sq^a (Q^b r) = sum_t C(b-a, a-2t) Q^{b-a+t} Sq^t(r)  for b > 0,
/// with Q^j = 0 for j < 0. For U and R the raw result is reduced to
/// normal form. A2 is rejected: it is not closed under this action.
/// Homogeneous input of degree d maps to degree d - a.
Element sq_act(long long a, const Element& x, AlgebraId alg,
               long long max_steps = kDefaultRewriteCap);

/// y_{k,i}^b, a power of the dual generator y_{k,i} = (x_{k,i})*.
struct DualGeneratorPower {
    int k = 1;
    int i = 1;
    long long exponent = 0;

    friend bool operator==(const DualGeneratorPower&, const DualGeneratorPower&) = default;
};

/// Sq^a y_{k,i}^b = C(b, a) y_{k,i}^{b+a}; returns the mod-2 coefficient
/// together with the shifted power.
std::pair<int, DualGeneratorPower> sq_act_dual(long long a, const DualGeneratorPower& y);

}  // namespace adem
