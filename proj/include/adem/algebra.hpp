#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "adem/element.hpp"

namespace adem {

/// Quotients of the free algebra F0 on Q^0, Q^1, ...:
///   F0  the free algebra itself
///   F   F0 / (Q^0 - 1)
///   A2  F modulo the cohomology Adem relations (the Steenrod algebra)
///   U   F0 modulo the negative-excess ideal
///   R   U modulo the homology Adem relations (the Dyer-Lashof algebra)
enum class AlgebraId { F0, F, A2, U, R };

using Coeffs = std::vector<long long>;

/// Raised when a rewrite-step or iteration guard trips. The guards exist
/// to surface implementation bugs; no well-formed input reaches them.
struct step_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultRewriteCap = 1'000'000;

/// Basis predicate. A2: entries >= 1 and each at least twice its right
/// neighbour. R: each entry at most twice its right neighbour and excess
/// >= 0. U: every suffix has nonnegative excess. F0 and F have no
/// admissibility notion and are rejected.
bool is_admissible(const Sequence& s, AlgebraId alg);

/// Unique basis representation of the class of x:
///   F0  identity;
///   F   delete all zero entries (Q^0 = 1);
///   A2  delete zeros, then rewrite the rightmost pair (i, j) with
///       0 < i < 2j via Q^i Q^j = sum_{c=0}^{i/2} C(j-c-1, i-2c)
///       Q^{i+j-c} Q^c until admissible;
///   U   drop every monomial having a suffix of negative excess;
///   R   rewrite the rightmost pair (r, s) with r > 2s via
///       Q^r Q^s = sum_{t>0} C(t-s-1, 2t-r) Q^{r+s-t} Q^t and drop
///       monomials with a negative-excess suffix.
Element normalize(const Element& x, AlgebraId alg, long long max_steps = kDefaultRewriteCap);

/// Applies normalize to every component of every tuple and expands.
TensorElement normalize_components(const TensorElement& t, AlgebraId alg,
                                   long long max_steps = kDefaultRewriteCap);

/// All basis sequences of the given degree, sorted by compare. F0, U and R
/// need a length; for F and A2 the length is an optional cap.
std::vector<Sequence> basis(AlgebraId alg, long long degree,
                            std::optional<int> length = std::nullopt);

/// I_{k,t} = (2^{k-1}-2^{t-1}, ..., 2^{k-t}-1, 2^{k-t-1}, ..., 1) for
/// 0 <= t <= k-1, with the 2^{-1} adjustment omitted at t = 0. Degree
/// 2^k - 2^t; excess 1 for t = 0 and 0 otherwise.
Sequence basis_vector_I(int k, int t);

/// J_{k,t} = (2^{t-1}, ..., 2, 1, 1, 0, ..., 0) of length k, degree 2^t;
/// the nonzero block has t+1 entries, so 1 <= t <= k-1.
Sequence basis_vector_J(int k, int t);

/// (2^n, ..., 2, 1), the primitive admissible monomial of degree 2^{n+1}-1.
Sequence milnor_primitive(int n);

/// Coordinates (n_1, ..., n_k) of an A2-admissible sequence of length <= k
/// over the primitives: S right-padded with zeros to length k satisfies
/// n_{k-t} = s_{t+1} - 2 s_t. Inverse of milnor_compose.
Coeffs milnor_decompose(const Sequence& s, int k);

/// sum n_i S_{i,i} with each primitive right-padded with zeros to length
/// k, zeros stripped from the result.
Sequence milnor_compose(const Coeffs& n, int k);

/// The unique (a_0, ..., a_{k-1}) with S = sum a_t I_{k,t}, solved by
/// back-substitution from the rightmost entry; e(S) = a_0.
Coeffs madsen_decompose(const Sequence& s);

Sequence madsen_compose(const Coeffs& a, int k);

/// Nonnegative solution of S = sum_{t=1}^{k-1} a_t J_{k,t} when one
/// exists; domain error otherwise.
Coeffs u_decompose(const Sequence& s, int k);

}  // namespace adem
