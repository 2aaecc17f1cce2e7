#pragma once

// Polynomials over the two-element field, graded by total degree, and the
// bit-matrix linear algebra used on a single graded piece.

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bott {

/// Raised when operands disagree on the number of variables or a vector length.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

namespace f2 {

using BitVector = boost::dynamic_bitset<std::uint64_t>;

/// Largest variable count a LinearForm can hold.
inline constexpr std::size_t kMaxLinearVars = 64;

/// Exponent vector of a monomial x1^e1 ... xd^ed. The length is always d.
///
/// Ordering is graded lexicographic: lower total degree sorts first, and
/// within one degree the monomial with the larger leading exponent (x1
/// before x2, ...) sorts first. This is also the printing order.
class Monomial {
  public:
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps);

    static Monomial one(std::size_t num_vars) { return Monomial(num_vars); }
    /// The variable x_{i+1} (zero-based index i).
    static Monomial variable(std::size_t num_vars, std::size_t i);

    std::size_t num_vars() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    std::uint16_t exponent(std::size_t i) const { return exps_.at(i); }
    std::span<const std::uint16_t> exponents() const noexcept { return exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  private:
    std::vector<std::uint16_t> exps_;
    unsigned degree_ = 0;
};

class LinearForm;

/// Element of F2[x1..xd]. A term is present iff its coefficient is 1, so
/// adding a monomial that is already present removes it.
class Poly {
  public:
    explicit Poly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static Poly zero(std::size_t num_vars) { return Poly(num_vars); }
    static Poly one(std::size_t num_vars);
    static Poly monomial(const Monomial& m);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::set<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool contains(const Monomial& m) const { return terms_.contains(m); }
    /// Highest total degree, or -1 for the zero polynomial.
    int degree() const noexcept;

    /// Adds m with coefficient 1 (mod 2).
    void toggle(const Monomial& m);

    Poly& operator+=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) = default;

  private:
    std::size_t num_vars_;
    std::set<Monomial> terms_;
};

/// Homogeneous degree-1 form sum c_i x_i, coefficients packed in a word.
class LinearForm {
  public:
    explicit LinearForm(std::size_t num_vars, std::uint64_t coeffs = 0);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::uint64_t coeffs() const noexcept { return coeffs_; }
    bool coefficient(std::size_t i) const { return ((coeffs_ >> i) & 1U) != 0; }
    bool is_zero() const noexcept { return coeffs_ == 0; }

    /// Value at the F2 point whose coordinates are the bits of `point`.
    bool evaluate(std::uint64_t point) const noexcept;

    Poly to_poly() const;

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
    friend bool operator==(const LinearForm& a, const LinearForm& b) = default;

  private:
    std::size_t num_vars_;
    std::uint64_t coeffs_;
};

Poly truncated_multiply(const Poly& a, const Poly& b, unsigned max_degree);

/// Product of all factors with every term of degree > max_degree dropped.
/// Truncation happens after each multiplication.
Poly truncated_product(std::span<const Poly> factors, unsigned max_degree);

/// The degree-k homogeneous part of p.
Poly graded_component(const Poly& p, unsigned k);

/// Renders "1 + x1 + x1x3 + x3^2"; "0" for the zero polynomial.
std::string to_string(const Poly& p);
std::string to_string(const Monomial& m);

// Degree-2 coordinates: x_i x_j with i <= j in lexicographic order.

std::size_t degree2_dimension(std::size_t num_vars) noexcept;
std::size_t degree2_index(std::size_t num_vars, std::size_t i, std::size_t j);
BitVector encode_degree2(const Poly& p);
Poly decode_degree2(std::size_t num_vars, const BitVector& v);

/// Dense matrix over F2 stored as bit rows.
class Matrix {
  public:
    explicit Matrix(std::size_t ncols = 0) : ncols_(ncols) {}

    std::size_t ncols() const noexcept { return ncols_; }
    std::size_t nrows() const noexcept { return rows_.size(); }
    const std::vector<BitVector>& rows() const noexcept { return rows_; }
    const BitVector& row(std::size_t i) const { return rows_.at(i); }

    void push_row(BitVector row);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    std::size_t ncols_;
    std::vector<BitVector> rows_;
};

/// Reduced row echelon form. Columns are scanned left to right and the
/// first remaining row with a set bit becomes the pivot row. Zero rows are
/// dropped, so the row count of the result is the rank.
Matrix rref(Matrix m);

/// True iff v is a sum of rows of `reduced`, which must come from rref().
bool in_row_space(const Matrix& reduced, const BitVector& v);

}  // namespace f2
}  // namespace bott
