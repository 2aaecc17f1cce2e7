#include "bott/bottcore.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bott {
namespace {

void check_dim(std::size_t n, const char* what) {
    if (n == 0 || n > kMaxDim) {
        throw ValidationError(std::string(what) + " must be between 1 and " +
                              std::to_string(kMaxDim) + ", got " + std::to_string(n));
    }
}

f2::Monomial square_of(std::size_t d, std::size_t i) {
    const auto x = f2::Monomial::variable(d, i);
    return x * x;
}

}  // namespace

BottMatrix::BottMatrix(std::size_t n) : rows_(n, 0) { check_dim(n, "Bott matrix dimension"); }

bool BottMatrix::operator()(std::size_t i, std::size_t j) const {
    if (j >= dim()) {
        throw DimensionError("Bott matrix column index out of range");
    }
    return ((rows_.at(i) >> j) & 1U) != 0;
}

void BottMatrix::set(std::size_t i, std::size_t j, bool value) {
    if (i >= dim() || j >= dim()) {
        throw DimensionError("Bott matrix index out of range");
    }
    if (i >= j && value) {
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") of a Bott matrix must be 0");
    }
    const std::uint64_t bit = std::uint64_t{1} << j;
    rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t BottMatrix::column_mask(std::size_t j) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        m |= ((rows_[i] >> j) & 1U) << i;
    }
    return m;
}

PMatrix::PMatrix(std::size_t rows, std::size_t cols) : cols_(cols), alpha_(rows, 0), beta_(rows, 0) {
    check_dim(rows, "P-matrix row count");
    check_dim(cols, "P-matrix column count");
}

DElement PMatrix::operator()(std::size_t i, std::size_t j) const {
    if (j >= cols_) {
        throw DimensionError("P-matrix column index out of range");
    }
    return DElement::from_pair(((alpha_.at(i) >> j) & 1U) != 0, ((beta_.at(i) >> j) & 1U) != 0);
}

void PMatrix::set(std::size_t i, std::size_t j, DElement e) {
    if (i >= rows() || j >= cols_) {
        throw DimensionError("P-matrix index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << j;
    alpha_[i] = e.alpha() ? (alpha_[i] | bit) : (alpha_[i] & ~bit);
    beta_[i] = e.beta() ? (beta_[i] | bit) : (beta_[i] & ~bit);
}

PMatrix bott_to_p(const BottMatrix& a) {
    const std::size_t n = a.dim();
    PMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        p.set(i, i, DElement(1));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j)) {
                p.set(i, j, DElement(2));
            }
        }
    }
    return p;
}

std::optional<BottMatrix> p_to_bott(const PMatrix& p) {
    if (p.rows() != p.cols()) {
        return std::nullopt;
    }
    BottMatrix a(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const unsigned e = p(i, j).label();
            const bool ok = i == j ? e == 1 : (i > j ? e == 0 : (e == 0 || e == 2));
            if (!ok) {
                return std::nullopt;
            }
            if (e == 2) {
                a.set(i, j, true);
            }
        }
    }
    return a;
}

bool row_sum_has_one(const PMatrix& p, std::uint64_t row_subset) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if ((row_subset >> i) & 1U) {
            a ^= p.alpha_mask(i);
            b ^= p.beta_mask(i);
        }
    }
    return (a & b) != 0;
}

bool is_free(const PMatrix& p) {
    const std::size_t d = p.rows();
    if (d > 32) {
        throw DimensionError("is_free enumerates 2^d subsets and is limited to d <= 32");
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t k = 1; k < count; ++k) {
        // Gray code: step k flips row ctz(k).
        const auto row = static_cast<std::size_t>(std::countr_zero(k));
        a ^= p.alpha_mask(row);
        b ^= p.beta_mask(row);
        if ((a & b) == 0) {
            return false;
        }
    }
    return true;
}

bool has_full_holonomy(const PMatrix& p) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if ((p.alpha_mask(i) ^ p.beta_mask(i)) == 0) {
            return false;
        }
    }
    return true;
}

Cocycles cocycles(const PMatrix& p) {
    const std::size_t d = p.rows();
    Cocycles c;
    c.alphas.reserve(p.cols());
    c.betas.reserve(p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) {
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        for (std::size_t i = 0; i < d; ++i) {
            a |= ((p.alpha_mask(i) >> j) & 1U) << i;
            b |= ((p.beta_mask(i) >> j) & 1U) << i;
        }
        c.alphas.emplace_back(d, a);
        c.betas.emplace_back(d, b);
    }
    return c;
}

std::vector<f2::LinearForm> sign_forms(const PMatrix& p) {
    const Cocycles c = cocycles(p);
    std::vector<f2::LinearForm> forms;
    forms.reserve(c.alphas.size());
    for (std::size_t j = 0; j < c.alphas.size(); ++j) {
        forms.push_back(c.alphas[j] + c.betas[j]);
    }
    return forms;
}

bool IdealDegree2Basis::contains(const f2::Poly& p) const {
    return f2::in_row_space(reduced, f2::encode_degree2(p));
}

IdealDegree2Basis characteristic_ideal(const PMatrix& p) {
    const Cocycles c = cocycles(p);
    const std::size_t d = p.rows();
    IdealDegree2Basis ideal{{}, f2::Matrix(f2::degree2_dimension(d))};
    f2::Matrix generators(f2::degree2_dimension(d));
    for (std::size_t j = 0; j < p.cols(); ++j) {
        f2::Poly theta = c.alphas[j].to_poly() * c.betas[j].to_poly();
        generators.push_row(f2::encode_degree2(theta));
        ideal.thetas.push_back(std::move(theta));
    }
    ideal.reduced = f2::rref(std::move(generators));
    return ideal;
}

f2::Poly sw_class(const PMatrix& p, unsigned max_degree) {
    const std::size_t d = p.rows();
    std::vector<f2::Poly> factors;
    factors.reserve(p.cols());
    for (const auto& form : sign_forms(p)) {
        factors.push_back(f2::Poly::one(d) + form.to_poly());
    }
    return f2::truncated_product(factors, max_degree);
}

Orientability is_orientable(const PMatrix& p) {
    f2::Poly w1 = f2::graded_component(sw_class(p, 1), 1);
    const bool orientable = w1.is_zero();
    return {orientable, std::move(w1)};
}

Orientability is_orientable(const BottMatrix& a) { return is_orientable(bott_to_p(a)); }

std::vector<std::size_t> KahlerPairing::representatives() const {
    std::vector<std::size_t> reps;
    reps.reserve(pairs.size());
    for (const auto& [first, second] : pairs) {
        reps.push_back(std::min(first, second));
    }
    return reps;
}

std::optional<KahlerPairing> is_kahler(const BottMatrix& a) {
    const std::size_t n = a.dim();
    if (n % 2 != 0) {
        return std::nullopt;
    }
    // Classes appear in order of their least member.
    std::vector<std::vector<std::size_t>> classes;
    std::map<std::uint64_t, std::size_t> class_of;
    for (std::size_t j = 0; j < n; ++j) {
        const auto [it, inserted] = class_of.try_emplace(a.column_mask(j), classes.size());
        if (inserted) {
            classes.emplace_back();
        }
        classes[it->second].push_back(j);
    }
    KahlerPairing pairing;
    for (const auto& members : classes) {
        if (members.size() % 2 != 0) {
            return std::nullopt;
        }
        for (std::size_t k = 0; k < members.size(); k += 2) {
            pairing.pairs.emplace_back(members[k], members[k + 1]);
        }
    }
    return pairing;
}

SpinVerdict spin_general(const PMatrix& p) {
    const f2::Poly w = sw_class(p, 2);
    f2::Poly w1 = f2::graded_component(w, 1);
    f2::Poly w2 = f2::graded_component(w, 2);
    const bool spin = w1.is_zero() && characteristic_ideal(p).contains(w2);
    return {spin, std::move(w1), std::move(w2)};
}

SpinVerdict spin_general(const BottMatrix& a) { return spin_general(bott_to_p(a)); }

ClosedFormVerdict spin_kahler_closed_form(const BottMatrix& a, const KahlerPairing& pairing) {
    const auto reps = pairing.representatives();
    return spin_kahler_closed_form(a, pairing, reps);
}

ClosedFormVerdict spin_kahler_closed_form(const BottMatrix& a, const KahlerPairing& pairing,
                                          std::span<const std::size_t> representatives) {
    const std::size_t n = a.dim();
    if (n % 2 != 0 || pairing.pairs.size() * 2 != n) {
        throw ValidationError("a Kahler pairing of a " + std::to_string(n) +
                              "-dimensional matrix needs " + std::to_string(n / 2) + " pairs");
    }
    std::uint64_t seen = 0;
    for (const auto& [j, k] : pairing.pairs) {
        if (j >= n || k >= n || j == k) {
            throw ValidationError("pairing index out of range");
        }
        const std::uint64_t bits = (std::uint64_t{1} << j) | (std::uint64_t{1} << k);
        if ((seen & bits) != 0) {
            throw ValidationError("pairing does not partition the columns");
        }
        seen |= bits;
        if (a.column_mask(j) != a.column_mask(k)) {
            throw ValidationError("paired columns " + std::to_string(j + 1) + " and " +
                                  std::to_string(k + 1) + " differ");
        }
    }
    if (representatives.size() != pairing.pairs.size()) {
        throw ValidationError("need exactly one representative per pair");
    }
    std::uint64_t rep_mask = 0;
    for (std::size_t k = 0; k < representatives.size(); ++k) {
        const auto [first, second] = pairing.pairs[k];
        if (representatives[k] != first && representatives[k] != second) {
            throw ValidationError("representative " + std::to_string(representatives[k] + 1) +
                                  " is not in pair " + std::to_string(k + 1));
        }
        rep_mask |= std::uint64_t{1} << representatives[k];
    }

    ClosedFormVerdict v{true, std::vector<int>(n, 0), {}};
    for (std::size_t i = 0; i < n; ++i) {
        v.s_vector[i] = std::popcount(a.row_mask(i) & rep_mask) & 1;
        if (v.s_vector[i] != 0 && a.column_mask(i) != 0) {
            v.obstructed_rows.push_back(i);
        }
    }
    v.spin = v.obstructed_rows.empty();
    return v;
}

ManifoldReport analyze(const BottMatrix& a) {
    const std::size_t n = a.dim();
    const PMatrix p = bott_to_p(a);
    ManifoldReport r;
    r.dimension = n;
    r.free = is_free(p);
    r.holonomy_full = has_full_holonomy(p);

    const f2::Poly w = sw_class(p, 2);
    r.w1 = f2::graded_component(w, 1);
    r.w2_raw = f2::graded_component(w, 2);
    r.orientable = r.w1.is_zero();

    const IdealDegree2Basis ideal = characteristic_ideal(p);
    r.spin = r.orientable && ideal.contains(r.w2_raw);
    r.spin_method = SpinMethod::General;

    r.kahler = is_kahler(a);
    if (r.kahler) {
        if (!r.orientable) {
            throw InternalInconsistency("Kahler matrix " + serialize(a) + " has w1 = " +
                                        f2::to_string(r.w1));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const bool member = ideal.contains(f2::Poly::monomial(square_of(n, i)));
            if (member != (a.column_mask(i) == 0)) {
                throw InternalInconsistency("x" + std::to_string(i + 1) +
                                            "^2 membership disagrees with column inspection for " +
                                            serialize(a));
            }
        }
        ClosedFormVerdict cf = spin_kahler_closed_form(a, *r.kahler);
        if (cf.spin != r.spin) {
            throw InternalInconsistency("Spin deciders disagree on " + serialize(a));
        }
        r.spin_method = SpinMethod::BothAgree;
        r.s_vector = std::move(cf.s_vector);
        r.obstructed_rows = std::move(cf.obstructed_rows);
    }
    return r;
}

ManifoldReport analyze(const PMatrix& p) {
    if (auto a = p_to_bott(p)) {
        return analyze(*a);
    }
    ManifoldReport r;
    r.dimension = p.cols();
    r.free = is_free(p);
    r.holonomy_full = has_full_holonomy(p);
    SpinVerdict v = spin_general(p);
    r.w1 = std::move(v.w1);
    r.w2_raw = std::move(v.w2);
    r.orientable = r.w1.is_zero();
    r.spin = v.spin;
    r.spin_method = SpinMethod::General;
    return r;
}

}  // namespace bott
