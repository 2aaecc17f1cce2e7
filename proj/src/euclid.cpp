#include "bott/euclid.hpp"

#include <algorithm>
#include <string>

namespace bott::euclid {

Motion::Motion(std::size_t n) : signs_(n, 1), trans2_(n, 0) {}

Motion::Motion(std::vector<int> signs, std::vector<long long> trans2)
    : signs_(std::move(signs)), trans2_(std::move(trans2)) {
    if (signs_.size() != trans2_.size()) {
        throw DimensionError("motion sign and translation lengths differ");
    }
    if (!std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1 || s == -1; })) {
        throw ValidationError("motion signs must be +1 or -1");
    }
}

bool Motion::is_translation() const noexcept {
    return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

Motion Motion::inverse() const {
    // x = D^{-1}(y - t) = Dy - Dt since D is its own inverse.
    Motion r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        r.signs_[i] = signs_[i];
        r.trans2_[i] = -signs_[i] * trans2_[i];
    }
    return r;
}

Motion compose(const Motion& g, const Motion& h) {
    if (g.dim() != h.dim()) {
        throw DimensionError("cannot compose motions of dimension " + std::to_string(g.dim()) +
                             " and " + std::to_string(h.dim()));
    }
    std::vector<int> signs(g.dim());
    std::vector<long long> trans2(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        signs[i] = g.signs()[i] * h.signs()[i];
        trans2[i] = g.signs()[i] * h.trans2()[i] + g.trans2()[i];
    }
    return Motion(std::move(signs), std::move(trans2));
}

Motion square(const Motion& g) { return compose(g, g); }

std::vector<Motion> generators(const BottMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Motion> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> signs(n, 1);
        std::vector<long long> trans2(n, 0);
        for (std::size_t j = i + 1; j < n; ++j) {
            signs[j] = a(i, j) ? -1 : 1;
        }
        trans2[i] = 1;
        gens.emplace_back(std::move(signs), std::move(trans2));
    }
    return gens;
}

Motion element_of(const BottMatrix& a, Subset subset) {
    const auto gens = generators(a);
    Motion m(a.dim());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if ((subset >> i) & 1U) {
            m = m * gens[i];
        }
    }
    return m;
}

bool acts_freely(const Motion& m) {
    // Dx + t + z = x is solvable in coordinate i for some integer z unless
    // D_ii = 1 and t_i is not an integer.
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m.signs()[i] == 1 && (m.trans2()[i] % 2) != 0) {
            return true;
        }
    }
    return false;
}

bool acts_freely(const BottMatrix& a, Subset subset) { return acts_freely(element_of(a, subset)); }

std::vector<int> holonomy_matrix(const BottMatrix& a, Subset subset) {
    return element_of(a, subset).signs();
}

Motion row_motion(const PMatrix& p, std::size_t row) {
    const std::size_t n = p.cols();
    std::vector<int> signs(n, 1);
    std::vector<long long> trans2(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        switch (p(row, j).label()) {
            case 1:
                trans2[j] = 1;
                break;
            case 2:
                signs[j] = -1;
                break;
            case 3:
                signs[j] = -1;
                trans2[j] = 1;
                break;
            default:
                break;
        }
    }
    return Motion(std::move(signs), std::move(trans2));
}

Motion realize(const PMatrix& p, Subset rows) {
    Motion m(p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if ((rows >> i) & 1U) {
            m = m * row_motion(p, i);
        }
    }
    return m;
}

}  // namespace bott::euclid
