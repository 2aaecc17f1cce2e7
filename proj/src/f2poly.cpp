#include "bott/f2poly.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <utility>

namespace bott::f2 {

Monomial::Monomial(std::vector<std::uint16_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) {
        throw DimensionError("variable index " + std::to_string(i + 1) + " exceeds " +
                             std::to_string(num_vars) + " variables");
    }
    Monomial m(num_vars);
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) {
        throw DimensionError("monomial variable counts differ");
    }
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
        return c;
    }
    // Larger leading exponent first.
    return std::lexicographical_compare_three_way(b.exps_.begin(), b.exps_.end(),
                                                  a.exps_.begin(), a.exps_.end());
}

Poly Poly::one(std::size_t num_vars) {
    Poly p(num_vars);
    p.terms_.insert(Monomial::one(num_vars));
    return p;
}

Poly Poly::monomial(const Monomial& m) {
    Poly p(m.num_vars());
    p.terms_.insert(m);
    return p;
}

int Poly::degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->degree());
}

void Poly::toggle(const Monomial& m) {
    if (m.num_vars() != num_vars_) {
        throw DimensionError("monomial has " + std::to_string(m.num_vars()) +
                             " variables, polynomial has " + std::to_string(num_vars_));
    }
    if (auto it = terms_.find(m); it != terms_.end()) {
        terms_.erase(it);
    } else {
        terms_.insert(m);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.num_vars_ != num_vars_) {
        throw DimensionError("polynomial variable counts differ");
    }
    for (const auto& m : other.terms_) {
        toggle(m);
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    return truncated_multiply(a, b, std::numeric_limits<unsigned>::max());
}

LinearForm::LinearForm(std::size_t num_vars, std::uint64_t coeffs)
    : num_vars_(num_vars), coeffs_(coeffs) {
    if (num_vars > kMaxLinearVars) {
        throw DimensionError("linear forms support at most 64 variables");
    }
    if (num_vars < kMaxLinearVars && (coeffs >> num_vars) != 0) {
        throw DimensionError("linear form has coefficients beyond its variable count");
    }
}

bool LinearForm::evaluate(std::uint64_t point) const noexcept {
    return (std::popcount(coeffs_ & point) & 1) != 0;
}

Poly LinearForm::to_poly() const {
    Poly p(num_vars_);
    for (std::size_t i = 0; i < num_vars_; ++i) {
        if (coefficient(i)) {
            p.toggle(Monomial::variable(num_vars_, i));
        }
    }
    return p;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    if (a.num_vars_ != b.num_vars_) {
        throw DimensionError("linear form variable counts differ");
    }
    return LinearForm(a.num_vars_, a.coeffs_ ^ b.coeffs_);
}

Poly truncated_multiply(const Poly& a, const Poly& b, unsigned max_degree) {
    if (a.num_vars() != b.num_vars()) {
        throw DimensionError("polynomial variable counts differ");
    }
    Poly r(a.num_vars());
    for (const auto& x : a.terms()) {
        if (x.degree() > max_degree) {
            break;
        }
        for (const auto& y : b.terms()) {
            if (x.degree() + y.degree() > max_degree) {
                break;
            }
            r.toggle(x * y);
        }
    }
    return r;
}

Poly truncated_product(std::span<const Poly> factors, unsigned max_degree) {
    if (factors.empty()) {
        throw std::invalid_argument("truncated_product needs at least one factor");
    }
    const std::size_t d = factors.front().num_vars();
    Poly acc = Poly::one(d);
    for (const auto& f : factors) {
        if (f.num_vars() != d) {
            throw DimensionError("factors of truncated_product have different variable counts");
        }
        acc = truncated_multiply(acc, f, max_degree);
    }
    return acc;
}

Poly graded_component(const Poly& p, unsigned k) {
    Poly r(p.num_vars());
    for (const auto& m : p.terms()) {
        if (m.degree() == k) {
            r.toggle(m);
        }
    }
    return r;
}

std::string to_string(const Monomial& m) {
    if (m.degree() == 0) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        const auto e = m.exponent(i);
        if (e == 0) {
            continue;
        }
        s += 'x';
        s += std::to_string(i + 1);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto& m : p.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += to_string(m);
    }
    return s;
}

std::size_t degree2_dimension(std::size_t num_vars) noexcept {
    return num_vars * (num_vars + 1) / 2;
}

std::size_t degree2_index(std::size_t num_vars, std::size_t i, std::size_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    if (j >= num_vars) {
        throw DimensionError("degree-2 index out of range");
    }
    // Row i of the triangle starts after d + (d-1) + ... + (d-i+1) entries.
    return i * num_vars - i * (i - 1) / 2 + (j - i);
}

BitVector encode_degree2(const Poly& p) {
    const std::size_t d = p.num_vars();
    BitVector v(degree2_dimension(d));
    for (const auto& m : p.terms()) {
        if (m.degree() != 2) {
            throw DimensionError("encode_degree2 needs a homogeneous degree-2 polynomial, got " +
                                 to_string(m));
        }
        std::size_t idx[2];
        std::size_t k = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (auto e = m.exponent(i); e > 0; --e) {
                idx[k++] = i;
            }
        }
        v.flip(degree2_index(d, idx[0], idx[1]));
    }
    return v;
}

Poly decode_degree2(std::size_t num_vars, const BitVector& v) {
    if (v.size() != degree2_dimension(num_vars)) {
        throw DimensionError("degree-2 vector has the wrong length");
    }
    Poly p(num_vars);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
        for (std::size_t j = i; j < num_vars; ++j, ++idx) {
            if (v.test(idx)) {
                p.toggle(Monomial::variable(num_vars, i) * Monomial::variable(num_vars, j));
            }
        }
    }
    return p;
}

void Matrix::push_row(BitVector row) {
    if (row.size() != ncols_) {
        throw DimensionError("row has " + std::to_string(row.size()) + " columns, matrix has " +
                             std::to_string(ncols_));
    }
    rows_.push_back(std::move(row));
}

Matrix rref(Matrix m) {
    std::vector<BitVector> rows = m.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.ncols() && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].test(col)) {
                rows[r] ^= rows[rank];
            }
        }
        ++rank;
    }
    Matrix out(m.ncols());
    for (std::size_t r = 0; r < rank; ++r) {
        out.push_row(std::move(rows[r]));
    }
    return out;
}

bool in_row_space(const Matrix& reduced, const BitVector& v) {
    if (v.size() != reduced.ncols()) {
        throw DimensionError("vector length " + std::to_string(v.size()) +
                             " does not match matrix width " + std::to_string(reduced.ncols()));
    }
    BitVector rest = v;
    for (const auto& row : reduced.rows()) {
        if (rest.test(row.find_first())) {
            rest ^= row;
        }
    }
    return rest.none();
}

}  // namespace bott::f2
