#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "adem/element.hpp"

namespace adem {

inline constexpr long long kDefaultMaxSuperscript = 1LL << 20;

/// Parse failure carrying the byte offset of the offending character.
struct parse_error : std::runtime_error {
    std::size_t position;

    parse_error(const std::string& what, std::size_t pos);
};

/// Grammar: element := '0' | term ('+' term)* ; term := '1' | qfactor+ ;
/// qfactor := 'Q' '^'? uint. Whitespace between factors is optional.
/// '1' is the empty sequence, '0' the empty element; duplicate terms
/// cancel mod 2.
Element parse_element(std::string_view text, long long max_superscript = kDefaultMaxSuperscript);

enum class Style { text, json };

/// Text: terms sorted by the sequence order, factors printed "Q^i" and
/// joined by spaces, with "0" and "1" for the empty element and the unit.
/// Json: {"terms": [[i_k,...,i_1], ...]} in the same order.
std::string format_element(const Element& x, Style style = Style::text);

std::string format_sequence(const Sequence& s);  // "Q^3 Q^2"; "1" when empty

std::string format_tensor(const TensorElement& t);

}  // namespace adem
