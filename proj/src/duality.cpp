#include "adem/duality.hpp"

#include <stdexcept>
#include <utility>

namespace adem {

namespace {

// The fixed factor order: lambda_1 copies of x_{k,1}, then lambda_2
// copies of x_{k,2}, and so on.
std::vector<Sequence> factor_tuple(const DualMonomial& xi) {
    std::vector<Sequence> factors;
    for (int i = 1; i <= xi.k; ++i) {
        const long long count = xi.exponents[static_cast<std::size_t>(i - 1)];
        for (long long c = 0; c < count; ++c)
            factors.push_back(primitive_x(xi.k, i));
    }
    return factors;
}

void validate(const DualMonomial& xi) {
    if (xi.k < 1 || static_cast<int>(xi.exponents.size()) != xi.k)
        throw std::invalid_argument("dual monomial needs k >= 1 exponents");
    for (long long v : xi.exponents)
        if (v < 0)
            throw std::invalid_argument("dual monomial exponents must be nonnegative");
}

}  // namespace

long long DualMonomial::degree() const {
    long long d = 0;
    for (long long v : exponents)
        d += v;
    return d;
}

Sequence lambda_sequence(const DualMonomial& xi) {
    validate(xi);
    Sequence s;
    s.entries.assign(static_cast<std::size_t>(xi.k), 0);
    for (int i = 1; i <= xi.k; ++i)
        s.entries[static_cast<std::size_t>(xi.k - i)] = xi.exponents[static_cast<std::size_t>(i - 1)];
    return s;
}

int pair(const DualMonomial& xi, const Sequence& j) {
    validate(xi);
    if (j.length() != xi.k)
        throw std::domain_error("pairing requires a sequence of length k");
    const long long lambda = xi.degree();
    if (j.degree() != lambda)
        return 0;
    if (lambda == 0)
        return j.all_zero() ? 1 : 0;
    const TensorElement expansion = iterated_coproduct(Element{j}, static_cast<int>(lambda));
    return expansion.terms.count(factor_tuple(xi)) ? 1 : 0;
}

PairingMatrix pairing_matrix(int k, long long degree) {
    if (k < 1 || degree < 0)
        throw std::invalid_argument("pairing_matrix requires k >= 1 and degree >= 0");
    PairingMatrix m;
    m.k = k;
    m.degree = degree;
    m.col_labels = basis(AlgebraId::F0, degree, k);
    for (const Sequence& s : m.col_labels) {
        DualMonomial xi;
        xi.k = k;
        xi.exponents.resize(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i)
            xi.exponents[static_cast<std::size_t>(i - 1)] = s.at_from_right(i);
        m.row_labels.push_back(std::move(xi));
    }
    const int n = m.size();
    m.bits.assign(static_cast<std::size_t>(n), std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    // One coproduct expansion per column, shared across the rows.
    for (int c = 0; c < n; ++c) {
        const Sequence& j = m.col_labels[static_cast<std::size_t>(c)];
        if (degree == 0) {
            for (int r = 0; r < n; ++r)
                m.bits[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    static_cast<std::uint8_t>(pair(m.row_labels[static_cast<std::size_t>(r)], j));
            continue;
        }
        const TensorElement expansion = iterated_coproduct(Element{j}, static_cast<int>(degree));
        for (int r = 0; r < n; ++r) {
            const bool hit = expansion.terms.count(factor_tuple(m.row_labels[static_cast<std::size_t>(r)])) > 0;
            m.bits[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = hit ? 1 : 0;
        }
    }
    m.unitriangular = true;
    for (int r = 0; r < n && m.unitriangular; ++r) {
        if (m.bits[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] != 1)
            m.unitriangular = false;
        for (int c = 0; c < r; ++c)
            if (m.bits[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                m.unitriangular = false;
    }
    m.invertible = gf2_rank(m.bits) == n;
    return m;
}

std::vector<unsigned long long> poincare_series(const std::vector<long long>& generator_degrees,
                                                int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("max_degree must be nonnegative");
    for (long long d : generator_degrees)
        if (d < 1)
            throw std::invalid_argument("generator degrees must be positive");
    std::vector<unsigned long long> coeffs(static_cast<std::size_t>(max_degree + 1), 0);
    coeffs[0] = 1;
    for (long long d : generator_degrees) {
        if (d > max_degree)
            continue;
        for (int j = static_cast<int>(d); j <= max_degree; ++j)
            coeffs[static_cast<std::size_t>(j)] += coeffs[static_cast<std::size_t>(j - d)];
    }
    return coeffs;
}

namespace {

// Classifies a monomial that is all zeros or carries a single 1: returns
// the position of the 1 from the right, or 0 for the grouplike.
int x_index(const Sequence& s) {
    int index = 0;
    for (int t = 1; t <= s.length(); ++t) {
        if (s.at_from_right(t) == 1)
            index = t;
    }
    return index;
}

}  // namespace

std::set<std::pair<DualGenerator, DualGenerator>> dual_coproduct_y(int k, int i) {
    if (k < 1 || i < 1 || i > k)
        throw std::out_of_range("dual_coproduct_y requires 1 <= i <= k");
    const Sequence x = primitive_x(k, i);
    std::set<std::pair<DualGenerator, DualGenerator>> out;
    for (int t = 1; t <= k - 1; ++t) {
        Sequence left, right;
        left.entries.assign(x.entries.begin(), x.entries.end() - t);
        right.entries.assign(x.entries.end() - t, x.entries.end());
        out.insert({DualGenerator{k - t, x_index(left)}, DualGenerator{t, x_index(right)}});
    }
    return out;
}

int gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
    const std::size_t nrows = rows.size();
    if (nrows == 0)
        return 0;
    const std::size_t ncols = rows.front().size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r != row && rows[r][col]) {
                for (std::size_t c = col; c < ncols; ++c)
                    rows[r][c] ^= rows[row][c];
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace adem
