#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "adem/algebra.hpp"

namespace adem {

/// xi^Lambda = prod_i y_{k,i}^{lambda_i}, a monomial in the polynomial
/// dual of the length-k component; exponents[i-1] = lambda_i. Every
/// y_{k,i} has degree 1, so the degree is sum lambda_i.
struct DualMonomial {
    int k = 1;
    std::vector<long long> exponents;

    long long degree() const;
    friend bool operator==(const DualMonomial&, const DualMonomial&) = default;
};

/// Lambda(I) = sum lambda_i I(x_{k,i}): the sequence carrying lambda_i at
/// position i from the right.
Sequence lambda_sequence(const DualMonomial& xi);

/// Kronecker pairing <xi^Lambda, Q^J>: expand the (sum lambda_i)-fold
/// iterated coproduct of Q^J and count mod 2 the tuples matching the
/// multiset of factors {x_{k,i} with multiplicity lambda_i} in a fixed
/// order (cocommutativity makes the order immaterial mod 2). Returns 0 on
/// degree mismatch; length mismatch is a domain error.
int pair(const DualMonomial& xi, const Sequence& j);

/// Full pairing table in one degree: rows are the dual monomials, columns
/// the length-k monomials, both sorted by the sequence order (rows via
/// lambda_sequence, which aligns the diagonal index-wise).
struct PairingMatrix {
    int k = 1;
    long long degree = 0;
    std::vector<DualMonomial> row_labels;
    std::vector<Sequence> col_labels;
    std::vector<std::vector<std::uint8_t>> bits;
    bool unitriangular = false;  // diagonal 1s, zero strictly below
    bool invertible = false;     // full rank over F2

    int size() const { return static_cast<int>(row_labels.size()); }
};

PairingMatrix pairing_matrix(int k, long long degree);

/// Coefficients of prod_i (1 - q^{d_i})^{-1} through max_degree.
std::vector<unsigned long long> poincare_series(const std::vector<long long>& generator_degrees,
                                                int max_degree);

/// Label y_{k,i}; i = 0 names the unit of the length-k dual component.
struct DualGenerator {
    int k = 1;
    int i = 0;

    friend auto operator<=>(const DualGenerator&, const DualGenerator&) = default;
};

/// Coproduct of y_{k,i} computed from the concatenation splittings of
/// x_{k,i}: each factorization across lengths (k-t, t) contributes the
/// dual pair of its factors.
std::set<std::pair<DualGenerator, DualGenerator>> dual_coproduct_y(int k, int i);

/// Rank of a 0/1 matrix over F2 (Gaussian elimination on a copy).
int gf2_rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace adem
