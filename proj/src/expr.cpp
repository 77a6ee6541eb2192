#include "adem/expr.hpp"

#include <cctype>

#include "json.hpp"

namespace adem {

parse_error::parse_error(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Scanner {
public:
    Scanner(std::string_view text, long long bound) : text_(text), bound_(bound) {}

    Element run() {
        skip_ws();
        if (done())
            throw parse_error("empty input", pos_);
        if (peek() == '0') {
            ++pos_;
            expect_end();
            return {};
        }
        Element out;
        toggle(out, term());
        skip_ws();
        while (!done() && peek() == '+') {
            ++pos_;
            toggle(out, term());
            skip_ws();
        }
        expect_end();
        return out;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    void expect_end() {
        skip_ws();
        if (!done())
            throw parse_error("unexpected character", pos_);
    }

    Sequence term() {
        skip_ws();
        if (done())
            throw parse_error("expected a term", pos_);
        if (peek() == '1') {
            ++pos_;
            return Sequence{};
        }
        Sequence s;
        while (true) {
            skip_ws();
            if (done() || peek() != 'Q')
                break;
            ++pos_;
            if (!done() && peek() == '^')
                ++pos_;
            s.entries.push_back(superscript());
        }
        if (s.entries.empty())
            throw parse_error("expected '1' or a Q factor", pos_);
        return s;
    }

    long long superscript() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a superscript", pos_);
        const std::size_t start = pos_;
        long long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > bound_)
                throw parse_error("superscript exceeds the configured bound", start);
            ++pos_;
        }
        return value;
    }

    std::string_view text_;
    long long bound_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, long long max_superscript) {
    return Scanner(text, max_superscript).run();
}

std::string format_sequence(const Sequence& s) {
    if (s.length() == 0)
        return "1";
    std::string out;
    for (int j = 0; j < s.length(); ++j) {
        if (j > 0)
            out += ' ';
        out += "Q^" + std::to_string(s.entries[static_cast<std::size_t>(j)]);
    }
    return out;
}

std::string format_element(const Element& x, Style style) {
    if (style == Style::json) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const Sequence& s : x)
            terms.push_back(s.entries);
        nlohmann::ordered_json out;
        out["terms"] = std::move(terms);
        return out.dump();
    }
    if (x.empty())
        return "0";
    std::string out;
    for (const Sequence& s : x) {
        if (!out.empty())
            out += " + ";
        out += format_sequence(s);
    }
    return out;
}

std::string format_tensor(const TensorElement& t) {
    if (t.terms.empty())
        return "0";
    std::string out;
    for (const auto& tuple : t.terms) {
        if (!out.empty())
            out += " + ";
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            if (j > 0)
                out += " (x) ";
            // Q^0 is a genuine letter here, so format the factor directly.
            out += tuple[j].length() == 0 ? "1" : format_sequence(tuple[j]);
        }
    }
    return out;
}

}  // namespace adem
