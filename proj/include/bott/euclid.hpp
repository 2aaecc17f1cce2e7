#pragma once

// Exact affine motions x -> Dx + t with D diagonal (+-1 entries) and t in
// (1/2)Z^n, used as an independent check on the P-matrix criteria.

#include "bott/bottcore.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bott::euclid {

/// Generator subset: bit i selects s_{i+1} (or row i of a P-matrix).
using Subset = std::uint64_t;

class Motion {
  public:
    /// Identity on R^n.
    explicit Motion(std::size_t n);
    /// signs must be +-1; trans2 holds twice the translation vector.
    Motion(std::vector<int> signs, std::vector<long long> trans2);

    std::size_t dim() const noexcept { return signs_.size(); }
    const std::vector<int>& signs() const noexcept { return signs_; }
    const std::vector<long long>& trans2() const noexcept { return trans2_; }

    bool is_translation() const noexcept;
    Motion inverse() const;

    friend bool operator==(const Motion&, const Motion&) = default;

  private:
    std::vector<int> signs_;
    std::vector<long long> trans2_;
};

/// (g * h)(x) = g(h(x)).
Motion compose(const Motion& g, const Motion& h);
inline Motion operator*(const Motion& g, const Motion& h) { return compose(g, h); }
Motion square(const Motion& g);

/// s_i = (diag(1,...,1, (-1)^{a_{i,i+1}}, ..., (-1)^{a_{i,n}}), e_i / 2).
std::vector<Motion> generators(const BottMatrix& a);

/// s_{i1} * s_{i2} * ... for the selected generators in increasing order.
Motion element_of(const BottMatrix& a, Subset subset);

/// No fixed point on the torus R^n / Z^n: some coordinate is kept (sign +1)
/// and shifted by an odd multiple of 1/2.
bool acts_freely(const Motion& m);
bool acts_freely(const BottMatrix& a, Subset subset);

std::vector<int> holonomy_matrix(const BottMatrix& a, Subset subset);

/// Row i of P as a product of circle motions, one per coordinate:
/// g0 identity, g1 t -> t + 1/2, g2 t -> -t, g3 t -> -t + 1/2.
Motion row_motion(const PMatrix& p, std::size_t row);

/// Product of row_motion over the selected rows in increasing order.
Motion realize(const PMatrix& p, Subset rows);

}  // namespace bott::euclid
