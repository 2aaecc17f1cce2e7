#pragma once

// Bott matrices, P-matrices over the Klein four-group D = {g0, g1, g2, g3},
// their cocycles, the characteristic ideal, Stiefel-Whitney classes, and the
// orientability / Kahler / Spin deciders built on them.
//
// Indices are zero-based throughout the API. Row and column masks pack
// entry j of a row (or entry i of a column) into bit j (bit i).

#include "bott/f2poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bott {

/// Largest matrix dimension; rows and columns are stored as 64-bit masks.
inline constexpr std::size_t kMaxDim = 64;

/// Input that violates a structural requirement. Parser errors carry the
/// 1-based line and column of the offending character when known.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::invalid_argument(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Two deciders that must agree did not. Always an implementation bug.
class InternalInconsistency : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Element of D. Label k names g_k: 0 identity, 1 half rotation,
/// 2 conjugation, 3 conjugation followed by half rotation. The pair
/// (alpha, beta) is 0:(0,0) 1:(1,1) 2:(1,0) 3:(0,1), and the group law is
/// XOR on pairs.
class DElement {
  public:
    constexpr DElement() = default;
    constexpr explicit DElement(unsigned label) : label_(static_cast<std::uint8_t>(label)) {
        if (label > 3) {
            throw ValidationError("D-group label must be 0..3, got " + std::to_string(label));
        }
    }

    static constexpr DElement from_pair(bool alpha, bool beta) {
        constexpr unsigned labels[2][2] = {{0, 3}, {2, 1}};
        return DElement(labels[alpha][beta]);
    }

    constexpr unsigned label() const noexcept { return label_; }
    constexpr bool alpha() const noexcept { return label_ == 1 || label_ == 2; }
    constexpr bool beta() const noexcept { return label_ == 1 || label_ == 3; }
    /// True for g2 and g3, which reverse the circle.
    constexpr bool reflects() const noexcept { return alpha() != beta(); }

    friend constexpr DElement operator*(DElement a, DElement b) {
        return from_pair(a.alpha() != b.alpha(), a.beta() != b.beta());
    }
    friend constexpr bool operator==(DElement a, DElement b) = default;

  private:
    std::uint8_t label_ = 0;
};

/// Strictly upper-triangular n x n matrix over F2.
class BottMatrix {
  public:
    explicit BottMatrix(std::size_t n);

    std::size_t dim() const noexcept { return rows_.size(); }
    bool operator()(std::size_t i, std::size_t j) const;
    /// Throws ValidationError when i >= j and value is true.
    void set(std::size_t i, std::size_t j, bool value);

    std::uint64_t row_mask(std::size_t i) const { return rows_.at(i); }
    std::uint64_t column_mask(std::size_t j) const;

    friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

  private:
    std::vector<std::uint64_t> rows_;
};

/// d x n matrix with entries in D, describing a diagonal action of Z_2^d
/// on the n-torus (row i is the i-th generator).
class PMatrix {
  public:
    PMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return alpha_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    DElement operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, DElement e);

    std::uint64_t alpha_mask(std::size_t i) const { return alpha_.at(i); }
    std::uint64_t beta_mask(std::size_t i) const { return beta_.at(i); }

    friend bool operator==(const PMatrix&, const PMatrix&) = default;

  private:
    std::size_t cols_;
    std::vector<std::uint64_t> alpha_;
    std::vector<std::uint64_t> beta_;
};

BottMatrix parse_bott(std::string_view text);
PMatrix parse_pmatrix(std::string_view text);

/// Row-major 0/1 digits, rows joined by '/'. parse_bott reads it back.
std::string serialize(const BottMatrix& a);
std::string serialize(const PMatrix& p);

/// P_A: ones on the diagonal, g2 where a_ij = 1, zero elsewhere.
PMatrix bott_to_p(const BottMatrix& a);
/// Inverse of bott_to_p on matrices of that shape, empty otherwise.
std::optional<BottMatrix> p_to_bott(const PMatrix& p);

/// Whether the D-sum of the rows in `row_subset` contains g1.
bool row_sum_has_one(const PMatrix& p, std::uint64_t row_subset);

/// The action is free iff every nonempty row subset sums to something
/// containing g1. Enumerates all 2^d - 1 subsets in Gray-code order.
bool is_free(const PMatrix& p);

/// Every row contains g2 or g3.
bool has_full_holonomy(const PMatrix& p);

struct Cocycles {
    std::vector<f2::LinearForm> alphas;
    std::vector<f2::LinearForm> betas;
};

/// alpha_j = sum_i alpha(P_ij) x_i and likewise for beta, one per column.
Cocycles cocycles(const PMatrix& p);

/// alpha_j + beta_j per column: the form whose value decides whether a
/// group element reverses coordinate j.
std::vector<f2::LinearForm> sign_forms(const PMatrix& p);

/// Degree-2 piece of the characteristic ideal <theta_1, ..., theta_n>.
struct IdealDegree2Basis {
    std::vector<f2::Poly> thetas;
    f2::Matrix reduced;

    std::size_t rank() const noexcept { return reduced.nrows(); }
    /// p must be homogeneous of degree 2 (or zero).
    bool contains(const f2::Poly& p) const;
};

/// theta_j = alpha_j * beta_j and the reduced basis of their span.
IdealDegree2Basis characteristic_ideal(const PMatrix& p);

/// prod_j (1 + alpha_j + beta_j) truncated at max_degree, not reduced
/// modulo the ideal.
f2::Poly sw_class(const PMatrix& p, unsigned max_degree = 2);

struct Orientability {
    bool orientable;
    f2::Poly w1;
};

Orientability is_orientable(const PMatrix& p);
Orientability is_orientable(const BottMatrix& a);

/// Columns of A partitioned into pairs of equal columns.
struct KahlerPairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    /// Smaller index of each pair.
    std::vector<std::size_t> representatives() const;

    friend bool operator==(const KahlerPairing&, const KahlerPairing&) = default;
};

/// Pairs the columns of A when every class of equal columns has even size.
/// Classes are ordered by least member and consecutive members are paired.
/// Odd dimension gives no pairing.
std::optional<KahlerPairing> is_kahler(const BottMatrix& a);

struct SpinVerdict {
    bool spin;
    f2::Poly w1;
    f2::Poly w2;
};

/// w1 = 0 and w2 in the degree-2 span of the thetas.
SpinVerdict spin_general(const PMatrix& p);
SpinVerdict spin_general(const BottMatrix& a);

struct ClosedFormVerdict {
    bool spin;
    /// S_i = sum over representatives k of a_ik, mod 2.
    std::vector<int> s_vector;
    /// Rows i with S_i odd and column i of A nonzero.
    std::vector<std::size_t> obstructed_rows;
};

/// Spin decision for a Kahler A from the parities S_i: Spin iff each row
/// has S_i even or a zero column i. Throws ValidationError if the pairing
/// does not match A.
ClosedFormVerdict spin_kahler_closed_form(const BottMatrix& a, const KahlerPairing& pairing);
/// Same, with one explicitly chosen representative per pair (in pair order).
ClosedFormVerdict spin_kahler_closed_form(const BottMatrix& a, const KahlerPairing& pairing,
                                          std::span<const std::size_t> representatives);

enum class SpinMethod { General, BothAgree };

struct ManifoldReport {
    std::size_t dimension = 0;
    bool free = false;
    bool holonomy_full = false;
    f2::Poly w1;
    bool orientable = false;
    std::optional<KahlerPairing> kahler;
    f2::Poly w2_raw;
    bool spin = false;
    SpinMethod spin_method = SpinMethod::General;
    std::optional<std::vector<int>> s_vector;
    std::vector<std::size_t> obstructed_rows;
};

/// Runs every decider on A. On Kahler input the closed form and the
/// general test are both evaluated, and the column-zero shortcut is
/// checked against ideal membership; any disagreement throws
/// InternalInconsistency.
ManifoldReport analyze(const BottMatrix& a);
/// For a P-matrix of Bott shape this is analyze(*p_to_bott(p)); otherwise
/// only the shape-independent deciders run.
ManifoldReport analyze(const PMatrix& p);

}  // namespace bott
