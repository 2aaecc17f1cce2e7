// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "bott/census.hpp"
#include "bott/cli.hpp"
#include "bott/euclid.hpp"

#include <bit>
#include <cctype>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace bott;
using f2::Monomial;
using f2::Poly;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string data(const std::string& name) { return std::string(BOTT_TEST_DATA) + "/" + name; }

nlohmann::json run_json(const std::vector<std::string>& args, Outcome& o) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    o.require(code == 0, "cli exit code " + std::to_string(code) + ": " + err.str());
    return code == 0 ? nlohmann::json::parse(out.str()) : nlohmann::json();
}

Poly sq(std::size_t d, std::size_t i) {
    return Poly::monomial(Monomial::variable(d, i) * Monomial::variable(d, i));
}

// Reads sums such as "x1x3+x2x3+x3^2".
Poly parse_poly(std::size_t d, const std::string& text) {
    Poly p(d);
    std::stringstream terms(text);
    std::string term;
    while (std::getline(terms, term, '+')) {
        std::vector<std::uint16_t> e(d, 0);
        std::size_t pos = 0;
        while (pos < term.size()) {
            if (term[pos] != 'x') {
                ++pos;
                continue;
            }
            std::size_t end = pos + 1;
            while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end]))) {
                ++end;
            }
            const auto var = std::stoul(term.substr(pos + 1, end - pos - 1)) - 1;
            unsigned power = 1;
            if (end < term.size() && term[end] == '^') {
                std::size_t pe = end + 1;
                while (pe < term.size() && std::isdigit(static_cast<unsigned char>(term[pe]))) {
                    ++pe;
                }
                power = static_cast<unsigned>(std::stoul(term.substr(end + 1, pe - end - 1)));
                end = pe;
            }
            e.at(var) = static_cast<std::uint16_t>(e.at(var) + power);
            pos = end;
        }
        p.toggle(Monomial(e));
    }
    return p;
}

template <typename F>
void for_all_bott(std::size_t lo, std::size_t hi, F&& f) {
    for (std::size_t n = lo; n <= hi; ++n) {
        census::enumerate(n, [&](std::uint64_t, const BottMatrix& a) { f(a); });
    }
}

// ---------------------------------------------------------------------------

Outcome example1_reproduction() {
    Outcome o;
    const auto j = run_json({"check", "--pmat", "--json", data("example1_pmat.txt")}, o);
    if (!o.ok) {
        return o;
    }
    o.require(j["w2"] == "x3^2 + x4^2", "w2 = " + j["w2"].dump());
    o.require(j["w1"] == "0", "w1 = " + j["w1"].dump());
    o.require(j["kahler"] == true, "not Kahler");
    o.require(j["pairing"] == nlohmann::json::parse("[[1,2],[3,4],[5,6]]"),
              "pairing = " + j["pairing"].dump());
    o.require(j["spin"] == false, "spin = true");
    return o;
}

Outcome example2_reproduction() {
    Outcome o;
    const auto j = run_json({"check", "--json", data("example2_bott.txt")}, o);
    if (!o.ok) {
        return o;
    }
    o.require(j["sVector"] == nlohmann::json::parse("[0,0,1,1,0,0]"), "S = " + j["sVector"].dump());
    o.require(j["spin"] == false, "spin = true");

    const BottMatrix ex = parse_bott("001111/001111/000011/000011/000000/000000");
    const auto cf = spin_kahler_closed_form(ex, *is_kahler(ex));
    o.require(cf.obstructed_rows == std::vector<std::size_t>{2, 3},
              "obstruction not attributed to rows 3 and 4");
    for (std::size_t i : cf.obstructed_rows) {
        o.require(cf.s_vector[i] == 1 && ex.column_mask(i) != 0, "row " + std::to_string(i + 1));
    }
    return o;
}

Outcome ideal_fixture() {
    Outcome o;
    constexpr std::size_t d = 6;
    const IdealDegree2Basis ideal = characteristic_ideal(parse_pmatrix(
        "102222/012222/001022/000122/000010/000001"));
    // Generators as printed for the example.
    const std::vector<std::string> printed = {
        "x1^2",
        "x2^2",
        "x1x3+x2x3+x3^2",
        "x1x4+x2x4+x4^2",
        "x1x5+x2x5+x2x6+x4x5+x5^2",
        "x1x6+x2x6+x3x6+x4x6+x6^2",
    };
    for (std::size_t j : {0U, 1U, 2U, 3U, 5U}) {
        o.require(ideal.thetas[j] == parse_poly(d, printed[j]),
                  "theta" + std::to_string(j + 1) + " = " + f2::to_string(ideal.thetas[j]));
    }
    const Poly formula = parse_poly(d, "x5^2+x1x5+x2x5+x3x5+x4x5");
    o.require(ideal.thetas[4] == formula, "theta5 = " + f2::to_string(ideal.thetas[4]));
    // The printed theta5 has x2x6 where alpha5*beta5 has x3x5.
    const Poly diff = parse_poly(d, printed[4]) + ideal.thetas[4];
    o.require(diff == parse_poly(d, "x2x6+x3x5"), "printed theta5 differs by " + f2::to_string(diff));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::uint64_t matrices = 0;
    std::uint64_t subsets = 0;
    for_all_bott(1, 5, [&](const BottMatrix& a) {
        const census::CrossCheck c = census::cross_check(a);
        ++matrices;
        subsets += c.subsets;
        o.require(c.disagreements == 0, c.first_failure);
        o.require(is_free(bott_to_p(a)), serialize(a) + " not free");
    });
    o.require(matrices == 1 + 2 + 8 + 64 + 1024, "matrix count " + std::to_string(matrices));
    if (o.ok) {
        o.detail = std::to_string(matrices) + " matrices, " + std::to_string(subsets) + " subsets";
    }
    return o;
}

Outcome spin_decider_equivalence() {
    Outcome o;
    std::uint64_t kahler = 0;
    std::uint64_t choices = 0;
    for (std::size_t n : {4U, 6U}) {
        census::enumerate(n, [&](std::uint64_t, const BottMatrix& a) {
            const auto pairing = is_kahler(a);
            if (!pairing) {
                return;
            }
            ++kahler;
            const bool general = spin_general(a).spin;
            const std::size_t m = pairing->pairs.size();
            for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
                std::vector<std::size_t> reps;
                for (std::size_t k = 0; k < m; ++k) {
                    reps.push_back((choice >> k) & 1U ? pairing->pairs[k].second
                                                      : pairing->pairs[k].first);
                }
                ++choices;
                o.require(spin_kahler_closed_form(a, *pairing, reps).spin == general,
                          "disagreement on " + serialize(a));
            }
        });
    }
    if (o.ok) {
        o.detail = std::to_string(kahler) + " Kahler matrices, " + std::to_string(choices) +
                   " representative choices";
    }
    return o;
}

Outcome square_membership() {
    Outcome o;
    std::uint64_t checks = 0;
    for_all_bott(1, 5, [&](const BottMatrix& a) {
        const auto ideal = characteristic_ideal(bott_to_p(a));
        for (std::size_t i = 0; i < a.dim(); ++i) {
            ++checks;
            o.require(ideal.contains(sq(a.dim(), i)) == (a.column_mask(i) == 0),
                      serialize(a) + " row " + std::to_string(i + 1));
        }
    });
    if (o.ok) {
        o.detail = std::to_string(checks) + " memberships";
    }
    return o;
}

Outcome lemma_family() {
    Outcome o;
    std::ostringstream counts;
    for (std::size_t n : {6U, 8U, 10U, 12U}) {
        for (std::size_t k : {2U, 4U}) {
            const std::size_t width = 2 * k;
            std::uint64_t instances = 0;
            // Column sets J inside columns 2..n (zero-based 1..n-1).
            for (std::uint64_t j_mask = 0; j_mask < (std::uint64_t{1} << n); ++j_mask) {
                if ((j_mask & 1U) != 0 || static_cast<std::size_t>(std::popcount(j_mask)) != width) {
                    continue;
                }
                const auto lowest = static_cast<std::size_t>(std::countr_zero(j_mask));
                for (std::uint64_t c = 1; c < (std::uint64_t{1} << lowest); ++c) {
                    BottMatrix a(n);
                    for (std::size_t j = 0; j < n; ++j) {
                        if ((j_mask >> j) & 1U) {
                            for (std::size_t i = 0; i < lowest; ++i) {
                                if ((c >> i) & 1U) {
                                    a.set(i, j, true);
                                }
                            }
                        }
                    }
                    ++instances;
                    o.require(is_kahler(a).has_value(), serialize(a) + " not Kahler");
                    o.require(spin_general(a).spin, serialize(a) + " not Spin");
                }
            }
            counts << " n=" << n << ",k=" << k << ":" << instances;
        }
    }
    if (o.ok) {
        o.detail = "instances" + counts.str();
    }
    return o;
}

Outcome orientability() {
    Outcome o;
    for_all_bott(1, 5, [&](const BottMatrix& a) {
        bool even = true;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            even = even && std::popcount(a.row_mask(i)) % 2 == 0;
        }
        o.require(is_orientable(a).w1.is_zero() == even, serialize(a));
    });
    return o;
}

Outcome frobenius() {
    Outcome o;
    std::mt19937_64 rng(1000);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 1 + rng() % 16;
        const std::uint64_t coeffs = rng() & ((std::uint64_t{1} << d) - 1);
        const Poly f = Poly::one(d) + f2::LinearForm(d, coeffs).to_poly();
        const std::vector<Poly> factors{f, f};
        Poly expected = Poly::one(d);
        for (std::size_t i = 0; i < d; ++i) {
            if ((coeffs >> i) & 1U) {
                expected += sq(d, i);
            }
        }
        o.require(f2::truncated_product(factors, 2) == expected, "L = " + f2::to_string(f));
    }
    return o;
}

Outcome census_determinism() {
    Outcome o;
    const census::CensusConfig cfg{4, {}, true, true};
    const census::CensusResult base = census::run_census(cfg, 1);
    for (unsigned w : {2U, 8U}) {
        const census::CensusResult r = census::run_census(cfg, w);
        o.require(r.row == base.row, "counts differ with " + std::to_string(w) + " workers");
        o.require(r.matrices == base.matrices, "listing differs with " + std::to_string(w) + " workers");
    }
    o.require(base.matrices.size() == 64, "emitted " + std::to_string(base.matrices.size()));
    for (const auto& a : base.matrices) {
        const std::string line = serialize(a);
        o.require(parse_bott(line) == a && serialize(parse_bott(line)) == line, line);
    }
    if (o.ok) {
        o.detail = census::to_csv(base.row);
    }
    return o;
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // 0: no time bound
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "6-dim P-matrix example: w2, Kahler pairing, no Spin", 1.0, example1_reproduction},
        {"AC2", "S-vector (0,0,1,1,0,0), no Spin, rows 3 and 4", 1.0, example2_reproduction},
        {"AC3", "theta generators and the theta5 listing discrepancy", 0.0, ideal_fixture},
        {"AC4", "Euclidean oracle = P-row sums and cocycle holonomy, n <= 5", 30.0, oracle_equivalence},
        {"AC5", "closed-form Spin = general Spin on Kahler n = 4, 6", 120.0, spin_decider_equivalence},
        {"AC6", "x_i^2 in span(theta) iff column i is zero, n <= 5", 0.0, square_membership},
        {"AC7", "2k equal nonzero columns (k even) give Spin", 5.0, lemma_family},
        {"AC8", "w1 = 0 iff all row sums even, n <= 5", 0.0, orientability},
        {"AC9", "(1+L)^2 = 1 + L^2 for 1000 random L, d <= 16", 0.0, frobenius},
        {"AC10", "n = 4 census stable over 1/2/8 workers, lossless round trip", 0.0, census_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds);
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  (" << secs << " s)";
        if (!o.detail.empty()) {
            std::cout << "  [" << o.detail << "]";
        }
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
