#pragma once

#include <vector>

#include "adem/algebra.hpp"

namespace adem {

inline constexpr long long kDefaultLiftCap = 10'000;

/// phi_k: R[k] -> R[k+1], Q^I -> Q^I Q^0 reduced in R. Input sequences
/// must be length-k R-basis monomials.
Element phi_R(int k, const Element& x);

/// Closed form of phi_k on a basis monomial: zero when any entry is odd;
/// otherwise S = sum 2a_i I_{k,i} maps to sum a_i I_{k+1,i+1}.
Element phi_R_fast(int k, const Sequence& s);

/// phi_{k+n-1} ... phi_k applied to Q^S padded with n zeros, computed by
/// normalizing the padded word in R[k+n]. Requires every coefficient of
/// the I-decomposition of S to be divisible by 2^n.
Element stabilize(const Sequence& s, int n);

/// phi_k: U[k] -> A2(k), Q^I Q^0...Q^0 -> Q^I (strip zeros, reduce in A2).
Element phi_U_to_A2(const Element& x, int k);

/// pi_k: A2(k) -> R[k], right-pad each sequence with zeros to length k and
/// reduce in R. Sequences longer than k are rejected.
Element pi(int k, const Element& x);

/// Constructive section of pi_k on a length-k R-basis monomial I: returns
/// a set K of A2-admissible sequences with pi(k, K) = {I}. Each round
/// takes the minimal residual monomial M, adds the sequence J(M) with
/// b_{t+1} = 2^t (a_0 + ... + a_t) built from the I-coordinates of M, and
/// recomputes the residual pi(k, K) symmetric-difference {I}; the extra
/// terms of each J(M) reduce to monomials strictly above M, so the
/// residual minimum climbs and the loop terminates.
Element lift(int k, const Sequence& seq, long long max_steps = kDefaultLiftCap);

/// A class in the direct limit of the R[k] under phi: a level together
/// with a representative of length-level R-basis monomials.
struct LimitClass {
    int level = 1;
    Element rep;

    friend bool operator==(const LimitClass&, const LimitClass&) = default;
};

/// Transports a class to a higher level by iterating phi.
LimitClass limit_inject(const LimitClass& c, int target_k);

/// All R-basis sequences J' of length k and degree 2^{k+1}-2^{i+1}+2^m
/// whose image under Sq^{2^m} in R contains 2 I_{k,i}.
std::vector<Sequence> sq_claim_witnesses(int k, int i, int m);

}  // namespace adem
