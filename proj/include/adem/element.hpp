#pragma once

#include <map>
#include <set>
#include <vector>

#include "adem/sequence.hpp"

namespace adem {

/// F2-linear combination of monomials: a sequence is present iff its
/// coefficient is 1, so addition is symmetric difference. The empty set is
/// 0 and {()} is 1.
using Element = std::set<Sequence>;

/// Element of a tensor power of F0. Every tuple has the declared arity;
/// set semantics give mod-2 cancellation.
struct TensorElement {
    int arity = 1;
    std::set<std::vector<Sequence>> terms;

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// Mod-2 insertion: adding a term twice removes it.
template <class T>
void toggle(std::set<T>& terms, T value) {
    auto [it, inserted] = terms.insert(std::move(value));
    if (!inserted)
        terms.erase(it);
}

Element add(Element a, const Element& b);

/// Bilinear extension of juxtaposition: a's sequences to the left of b's.
Element multiply(const Element& a, const Element& b);

/// psi(Q^i) = sum_{t=0}^{i} Q^{i-t} (x) Q^t, extended multiplicatively.
/// Both sides of every output pair keep the length of the source monomial.
TensorElement coproduct(const Element& x);

/// Iterated coproduct psi(lambda); lambda = 1 returns x as 1-tuples.
TensorElement iterated_coproduct(const Element& x, int lambda);

/// Counts mod 2 the all-zero sequences of x.
int augmentation(const Element& x);

/// x_{k,0} is the all-zero length-k sequence; x_{k,i} (1 <= i <= k) has a
/// single 1 at position i from the right.
Sequence primitive_x(int k, int i);

/// True iff psi(x) = x (x) g + g (x) x with g = (Q^0)^k, the grouplike of
/// the length-k component. Requires every sequence of x to have length k.
bool is_primitive(const Element& x, int k);

Element pad_left(const Element& x);      // Q^I -> Q^0 Q^I
Element append_right(const Element& x);  // Q^I -> Q^I Q^0

/// Partition of the terms by sequence length.
std::map<int, Element> component_split(const Element& x);

}  // namespace adem
