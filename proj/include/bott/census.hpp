#pragma once

// Exhaustive enumeration of n x n Bott matrices with classification counts
// and batch oracle checks.
//
// Matrix index k encodes the n(n-1)/2 upper cells in row-major order as a
// binary number whose most significant bit is cell (1,2).

#include "bott/bottcore.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bott::census {

/// Upper bound on n(n-1)/2.
inline constexpr std::size_t kMaxCells = 40;

class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A classification or oracle check failed on a matrix. `index` is the
/// smallest failing enumeration index and `reproducer` its serialization.
class OracleDisagreement : public std::runtime_error {
  public:
    OracleDisagreement(const std::string& what, std::uint64_t index, std::string reproducer)
        : std::runtime_error(what), index_(index), reproducer_(std::move(reproducer)) {}

    std::uint64_t index() const noexcept { return index_; }
    const std::string& reproducer() const noexcept { return reproducer_; }

  private:
    std::uint64_t index_;
    std::string reproducer_;
};

struct CensusRow {
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::uint64_t orientable = 0;
    std::uint64_t kahler = 0;
    std::uint64_t spin = 0;
    std::uint64_t kahler_and_spin = 0;
    std::uint64_t kahler_not_spin = 0;

    CensusRow& operator+=(const CensusRow& other);
    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Selects which matrices are listed. Unset fields match anything. Counts
/// always cover the full enumeration.
struct Filter {
    std::optional<bool> orientable;
    std::optional<bool> kahler;
    std::optional<bool> spin;

    bool matches(const ManifoldReport& r) const;
};

struct CensusConfig {
    std::size_t n = 1;
    Filter filter;
    bool emit_matrices = false;
    bool check_oracles = false;
};

struct CensusResult {
    CensusRow row;
    std::vector<BottMatrix> matrices;
};

/// 2^{n(n-1)/2}; throws SizeError past the guard.
std::uint64_t matrix_count(std::size_t n);
BottMatrix matrix_at(std::size_t n, std::uint64_t index);
std::uint64_t index_of(const BottMatrix& a);

/// Calls visit(index, matrix) for every index in [first, last).
void enumerate(std::size_t n, std::uint64_t first, std::uint64_t last,
               const std::function<void(std::uint64_t, const BottMatrix&)>& visit);
void enumerate(std::size_t n, const std::function<void(std::uint64_t, const BottMatrix&)>& visit);

/// Euclidean-motion oracle against the P-matrix predicates for one matrix.
struct CrossCheck {
    std::uint64_t subsets = 0;
    std::uint64_t disagreements = 0;
    std::string first_failure;
};

/// For every nonempty generator subset T: the fixed-point verdicts of
/// element_of(A, T) and realize(P_A, T) equal row_sum_has_one(P_A, T), and
/// the holonomy signs equal (-1)^{(alpha_j + beta_j)(T)}. Also checks that
/// has_full_holonomy(P_A) matches the generators having a reflection.
CrossCheck cross_check(const BottMatrix& a);

/// Worker count from BOTT_THREADS, else hardware concurrency (at least 1).
unsigned default_workers();

/// Splits the index space into `workers` contiguous ranges, classifies each
/// with analyze(), and sums the counts. The result does not depend on the
/// worker count. Throws OracleDisagreement for the smallest failing index.
CensusResult run_census(const CensusConfig& cfg, unsigned workers);

std::string csv_header();
std::string to_csv(const CensusRow& row);

}  // namespace bott::census
