#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "adem/duality.hpp"
#include "adem/expr.hpp"
#include "adem/limits.hpp"
#include "adem/steenrod_action.hpp"
#include "adem/verify.hpp"

using nlohmann::ordered_json;

namespace {

// Command-line misuse that CLI11 cannot see (flag combinations, modes).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, adem::AlgebraId> kAlgebraNames{
    {"f0", adem::AlgebraId::F0}, {"f", adem::AlgebraId::F}, {"a2", adem::AlgebraId::A2},
    {"u", adem::AlgebraId::U},   {"r", adem::AlgebraId::R},
};

ordered_json element_json(const adem::Element& x) {
    ordered_json terms = ordered_json::array();
    for (const adem::Sequence& s : x)
        terms.push_back(s.entries);
    ordered_json out;
    out["terms"] = std::move(terms);
    return out;
}

ordered_json tensor_json(const adem::TensorElement& t) {
    ordered_json terms = ordered_json::array();
    for (const auto& tuple : t.terms) {
        ordered_json entry = ordered_json::array();
        for (const adem::Sequence& s : tuple)
            entry.push_back(s.entries);
        terms.push_back(std::move(entry));
    }
    ordered_json out;
    out["arity"] = t.arity;
    out["terms"] = std::move(terms);
    return out;
}

ordered_json coeffs_json(const adem::Coeffs& c) {
    return ordered_json(c);
}

void emit(bool as_json, const std::string& command, const ordered_json& inputs,
          const ordered_json& result, const std::string& text,
          const ordered_json& checks = ordered_json::array()) {
    if (as_json) {
        ordered_json report;
        report["command"] = command;
        report["inputs"] = inputs;
        report["result"] = result;
        report["checks"] = checks;
        std::cout << report.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
}

adem::Sequence single_monomial(const adem::Element& x, const char* verb) {
    if (x.size() != 1)
        throw std::domain_error(std::string(verb) + " expects a single monomial");
    return *x.begin();
}

std::string coeffs_text(const adem::Coeffs& c) {
    std::string out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j > 0)
            out += ' ';
        out += std::to_string(c[j]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for the mod-2 Steenrod and Dyer-Lashof algebras as quotients of the free algebra on Q^0, Q^1, ..."};
    app.require_subcommand(1);

    std::string algebra;
    std::string style;
    std::string input;
    long long sq = 0;
    int length = 0;
    long long degree = -1;
    long long max_degree = 0;
    std::string lambda_text;
    bool as_json = false;
    bool check_dual = false;
    long long max_steps = -1;  // -1: per-verb default
    long long max_superscript = adem::kDefaultMaxSuperscript;

    const auto algebra_check = CLI::IsMember(
        std::vector<std::string>{"f0", "f", "a2", "u", "r"}, CLI::ignore_case);

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_flag("--json", as_json, "emit a JSON report");
        sub->add_option("--max-steps", max_steps, "rewrite/iteration guard for this command");
        sub->add_option("--max-superscript", max_superscript, "largest accepted superscript");
        if (with_input)
            sub->add_option("input", input, "element expression, e.g. \"Q3 Q2 + Q^5\"")->required();
    };

    CLI::App* c_normalize = app.add_subcommand("normalize", "reduce an element to its basis representation");
    c_normalize->add_option("--algebra", algebra, "target algebra")->required()->check(algebra_check);
    add_common(c_normalize, true);

    CLI::App* c_coproduct = app.add_subcommand("coproduct", "coproduct, optionally reduced componentwise");
    c_coproduct->add_option("--algebra", algebra, "reduce components in this algebra")->check(algebra_check);
    add_common(c_coproduct, true);

    CLI::App* c_excess = app.add_subcommand("excess", "excess of a monomial");
    add_common(c_excess, true);

    CLI::App* c_action = app.add_subcommand("action", "apply Sq^a via the opposite Steenrod action");
    c_action->add_option("--sq", sq, "the exponent a of Sq^a")->required()->check(CLI::NonNegativeNumber);
    c_action->add_option("--algebra", algebra, "algebra to act in")->required()->check(algebra_check);
    add_common(c_action, true);

    CLI::App* c_basis = app.add_subcommand("basis", "list the basis sequences of one degree");
    c_basis->add_option("--algebra", algebra, "algebra")->required()->check(algebra_check);
    c_basis->add_option("--degree", degree, "degree")->required()->check(CLI::NonNegativeNumber);
    c_basis->add_option("--length", length, "length (cap for f and a2)");
    add_common(c_basis, false);

    CLI::App* c_dims = app.add_subcommand("dims", "dimension table degree -> dim");
    c_dims->add_option("--algebra", algebra, "algebra")->required()->check(algebra_check);
    c_dims->add_option("--max-degree", max_degree, "largest degree")->required()->check(CLI::NonNegativeNumber);
    c_dims->add_option("--length", length, "length (cap for f and a2)");
    c_dims->add_flag("--check-dual", check_dual, "compare against the dual polynomial series");
    add_common(c_dims, false);

    CLI::App* c_pair = app.add_subcommand("pair", "Kronecker pairing against a dual monomial, or a full pairing matrix");
    c_pair->add_option("--length", length, "component length k")->required()->check(CLI::PositiveNumber);
    c_pair->add_option("--lambda", lambda_text, "exponents lambda_1,...,lambda_k of the dual monomial");
    c_pair->add_option("--degree", degree, "degree for matrix mode")->check(CLI::NonNegativeNumber);
    add_common(c_pair, false);
    c_pair->add_option("input", input, "monomial to pair against (with --lambda)");

    CLI::App* c_decompose = app.add_subcommand("decompose", "coefficient vector of an admissible monomial");
    c_decompose->add_option("--style", style, "decomposition style")->required()
        ->check(CLI::IsMember(std::vector<std::string>{"madsen", "milnor"}, CLI::ignore_case));
    c_decompose->add_option("--length", length, "length k (milnor style)");
    add_common(c_decompose, true);

    CLI::App* c_lift = app.add_subcommand("lift", "lift a Dyer-Lashof basis monomial through pi");
    c_lift->add_option("--length", length, "component length k")->required()->check(CLI::PositiveNumber);
    add_common(c_lift, true);

    CLI::App* c_pi = app.add_subcommand("pi", "project from the Steenrod side to R[k]");
    c_pi->add_option("--length", length, "component length k")->required()->check(CLI::PositiveNumber);
    add_common(c_pi, true);

    CLI::App* c_phi = app.add_subcommand("phi", "structure map: r raises R[k] to R[k+1], u maps U[k] onto A2(k)");
    c_phi->add_option("--algebra", algebra, "which phi (r or u)")->required()->check(algebra_check);
    c_phi->add_option("--length", length, "component length k")->required()->check(CLI::PositiveNumber);
    add_common(c_phi, true);

    CLI::App* c_verify = app.add_subcommand("verify", "run the full self-verification suite");
    add_common(c_verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const long long rewrite_cap = max_steps < 0 ? adem::kDefaultRewriteCap : max_steps;
    const long long lift_cap = max_steps < 0 ? adem::kDefaultLiftCap : max_steps;
    auto algebra_id = [&] { return kAlgebraNames.at(algebra); };

    try {
        if (app.got_subcommand(c_normalize)) {
            const adem::Element x = adem::parse_element(input, max_superscript);
            const adem::Element result = adem::normalize(x, algebra_id(), rewrite_cap);
            emit(as_json, "normalize", {{"algebra", algebra}, {"element", element_json(x)}},
                 element_json(result), adem::format_element(result));
        } else if (app.got_subcommand(c_coproduct)) {
            const adem::Element x = adem::parse_element(input, max_superscript);
            adem::TensorElement t = adem::coproduct(x);
            if (!algebra.empty())
                t = adem::normalize_components(t, algebra_id(), rewrite_cap);
            emit(as_json, "coproduct", {{"algebra", algebra}, {"element", element_json(x)}},
                 tensor_json(t), adem::format_tensor(t));
        } else if (app.got_subcommand(c_excess)) {
            const adem::Sequence s =
                single_monomial(adem::parse_element(input, max_superscript), "excess");
            const adem::Excess e = adem::excess(s);
            const std::string text = e.infinite ? "inf" : std::to_string(e.value);
            emit(as_json, "excess", {{"monomial", s.entries}},
                 e.infinite ? ordered_json("inf") : ordered_json(e.value), text);
        } else if (app.got_subcommand(c_action)) {
            const adem::Element x = adem::parse_element(input, max_superscript);
            const adem::Element result = adem::sq_act(sq, x, algebra_id(), rewrite_cap);
            emit(as_json, "action",
                 {{"sq", sq}, {"algebra", algebra}, {"element", element_json(x)}},
                 element_json(result), adem::format_element(result));
        } else if (app.got_subcommand(c_basis)) {
            const adem::AlgebraId alg = algebra_id();
            std::optional<int> len;
            if (c_basis->count("--length"))
                len = length;
            else if (alg == adem::AlgebraId::F0 || alg == adem::AlgebraId::U || alg == adem::AlgebraId::R)
                throw usage_error("--length is required for f0, u and r");
            const auto sequences = adem::basis(alg, degree, len);
            std::string text;
            ordered_json rows = ordered_json::array();
            for (const adem::Sequence& s : sequences) {
                if (!text.empty())
                    text += '\n';
                text += adem::format_sequence(s);
                rows.push_back(s.entries);
            }
            if (sequences.empty())
                text = "(empty)";
            emit(as_json, "basis", {{"algebra", algebra}, {"degree", degree}},
                 ordered_json{{"sequences", rows}}, text);
        } else if (app.got_subcommand(c_dims)) {
            const adem::AlgebraId alg = algebra_id();
            std::optional<int> len;
            if (c_dims->count("--length"))
                len = length;
            else if (alg == adem::AlgebraId::F0 || alg == adem::AlgebraId::U || alg == adem::AlgebraId::R)
                throw usage_error("--length is required for f0, u and r");
            std::vector<unsigned long long> series;
            if (check_dual) {
                std::vector<long long> gens;
                if (alg == adem::AlgebraId::A2) {
                    for (long long g = 1; g <= max_degree; g = 2 * g + 1)
                        gens.push_back(g);
                } else if (alg == adem::AlgebraId::R) {
                    for (int u = 0; u <= *len - 1; ++u)
                        gens.push_back((1LL << *len) - (1LL << u));
                } else {
                    throw usage_error("--check-dual is supported for a2 and r only");
                }
                series = adem::poincare_series(gens, static_cast<int>(max_degree));
            }
            std::string text;
            ordered_json rows = ordered_json::array();
            for (long long d = 0; d <= max_degree; ++d) {
                const auto dim = adem::basis(alg, d, len).size();
                ordered_json row{{"degree", d}, {"dim", dim}};
                std::string line = std::to_string(d) + " " + std::to_string(dim);
                if (check_dual) {
                    const auto expected = series[static_cast<std::size_t>(d)];
                    row["series"] = expected;
                    row["match"] = dim == expected;
                    line += " " + std::to_string(expected) + (dim == expected ? " ok" : " MISMATCH");
                }
                rows.push_back(std::move(row));
                if (!text.empty())
                    text += '\n';
                text += line;
            }
            emit(as_json, "dims", {{"algebra", algebra}, {"max_degree", max_degree}}, rows, text);
        } else if (app.got_subcommand(c_pair)) {
            std::vector<long long> lambda;
            if (!lambda_text.empty()) {
                std::size_t start = 0;
                while (start <= lambda_text.size()) {
                    const std::size_t comma = lambda_text.find(',', start);
                    const std::string piece =
                        lambda_text.substr(start, comma == std::string::npos ? comma : comma - start);
                    try {
                        lambda.push_back(std::stoll(piece));
                    } catch (const std::exception&) {
                        throw usage_error("--lambda expects a comma-separated integer list");
                    }
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
            }
            if (!lambda.empty()) {
                if (static_cast<int>(lambda.size()) != length)
                    throw usage_error("--lambda needs exactly --length entries");
                if (input.empty())
                    throw usage_error("pair with --lambda needs a monomial argument");
                const adem::Sequence s =
                    single_monomial(adem::parse_element(input, max_superscript), "pair");
                const int bit = adem::pair(adem::DualMonomial{length, lambda}, s);
                emit(as_json, "pair",
                     {{"length", length}, {"lambda", lambda}, {"monomial", s.entries}},
                     ordered_json(bit), std::to_string(bit));
            } else if (degree >= 0) {
                const adem::PairingMatrix m = adem::pairing_matrix(length, degree);
                std::string text = "size=" + std::to_string(m.size()) +
                                   " unitriangular=" + (m.unitriangular ? "yes" : "no") +
                                   " invertible=" + (m.invertible ? "yes" : "no");
                ordered_json rows = ordered_json::array();
                for (const auto& row : m.bits) {
                    std::string bits;
                    for (auto b : row)
                        bits += b ? '1' : '0';
                    text += '\n' + bits;
                    rows.push_back(bits);
                }
                emit(as_json, "pair", {{"length", length}, {"degree", degree}},
                     ordered_json{{"size", m.size()},
                                  {"unitriangular", m.unitriangular},
                                  {"invertible", m.invertible},
                                  {"rows", rows}},
                     text);
            } else {
                throw usage_error("pair needs --lambda with a monomial, or --degree for matrix mode");
            }
        } else if (app.got_subcommand(c_decompose)) {
            const adem::Sequence s =
                single_monomial(adem::parse_element(input, max_superscript), "decompose");
            adem::Coeffs coeffs;
            if (style == "madsen") {
                coeffs = adem::madsen_decompose(s);
            } else {
                if (!c_decompose->count("--length"))
                    throw usage_error("milnor decomposition needs --length");
                coeffs = adem::milnor_decompose(s, length);
            }
            emit(as_json, "decompose", {{"style", style}, {"monomial", s.entries}},
                 coeffs_json(coeffs), coeffs_text(coeffs));
        } else if (app.got_subcommand(c_lift)) {
            const adem::Sequence s =
                single_monomial(adem::parse_element(input, max_superscript), "lift");
            const adem::Element result = adem::lift(length, s, lift_cap);
            emit(as_json, "lift", {{"length", length}, {"monomial", s.entries}},
                 element_json(result), adem::format_element(result));
        } else if (app.got_subcommand(c_pi)) {
            const adem::Element x = adem::parse_element(input, max_superscript);
            const adem::Element result = adem::pi(length, x);
            emit(as_json, "pi", {{"length", length}, {"element", element_json(x)}},
                 element_json(result), adem::format_element(result));
        } else if (app.got_subcommand(c_phi)) {
            const adem::Element x = adem::parse_element(input, max_superscript);
            const adem::AlgebraId alg = algebra_id();
            adem::Element result;
            if (alg == adem::AlgebraId::R)
                result = adem::phi_R(length, x);
            else if (alg == adem::AlgebraId::U)
                result = adem::phi_U_to_A2(x, length);
            else
                throw usage_error("phi takes --algebra r or --algebra u");
            emit(as_json, "phi", {{"algebra", algebra}, {"length", length}, {"element", element_json(x)}},
                 element_json(result), adem::format_element(result));
        } else if (app.got_subcommand(c_verify)) {
            const auto checks = adem::run_verification();
            std::size_t passed = 0;
            std::string text;
            ordered_json check_rows = ordered_json::array();
            for (const adem::CheckResult& c : checks) {
                passed += c.pass ? 1 : 0;
                if (!text.empty())
                    text += '\n';
                text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + " (" + c.detail + ")";
                check_rows.push_back(
                    ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            }
            text += "\npassed " + std::to_string(passed) + "/" + std::to_string(checks.size());
            emit(as_json, "verify", ordered_json::object(),
                 ordered_json{{"passed", passed}, {"total", checks.size()}}, text, check_rows);
            return passed == checks.size() ? 0 : 1;
        }
        return 0;
    } catch (const adem::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const adem::step_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
