#include "bott/census.hpp"

#include "bott/euclid.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>

namespace bott::census {

CensusRow& CensusRow::operator+=(const CensusRow& other) {
    total += other.total;
    orientable += other.orientable;
    kahler += other.kahler;
    spin += other.spin;
    kahler_and_spin += other.kahler_and_spin;
    kahler_not_spin += other.kahler_not_spin;
    return *this;
}

bool Filter::matches(const ManifoldReport& r) const {
    return (!orientable || *orientable == r.orientable) &&
           (!kahler || *kahler == r.kahler.has_value()) && (!spin || *spin == r.spin);
}

std::uint64_t matrix_count(std::size_t n) {
    if (n == 0) {
        throw SizeError("census dimension must be at least 1");
    }
    const std::size_t cells = n * (n - 1) / 2;
    if (cells > kMaxCells) {
        throw SizeError("dimension " + std::to_string(n) + " has " + std::to_string(cells) +
                        " free cells; the census is limited to " + std::to_string(kMaxCells));
    }
    return std::uint64_t{1} << cells;
}

BottMatrix matrix_at(std::size_t n, std::uint64_t index) {
    if (index >= matrix_count(n)) {
        throw SizeError("matrix index out of range");
    }
    BottMatrix a(n);
    std::size_t bit = n * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            --bit;
            a.set(i, j, ((index >> bit) & 1U) != 0);
        }
    }
    return a;
}

std::uint64_t index_of(const BottMatrix& a) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            index = (index << 1) | (a(i, j) ? 1U : 0U);
        }
    }
    return index;
}

void enumerate(std::size_t n, std::uint64_t first, std::uint64_t last,
               const std::function<void(std::uint64_t, const BottMatrix&)>& visit) {
    last = std::min(last, matrix_count(n));
    for (std::uint64_t k = first; k < last; ++k) {
        visit(k, matrix_at(n, k));
    }
}

void enumerate(std::size_t n, const std::function<void(std::uint64_t, const BottMatrix&)>& visit) {
    enumerate(n, 0, matrix_count(n), visit);
}

CrossCheck cross_check(const BottMatrix& a) {
    const std::size_t n = a.dim();
    if (n > 20) {
        throw SizeError("cross_check enumerates 2^n subsets and is limited to n <= 20");
    }
    const PMatrix p = bott_to_p(a);
    const auto forms = sign_forms(p);
    CrossCheck result;

    auto fail = [&](const std::string& why) {
        if (result.disagreements++ == 0) {
            result.first_failure = serialize(a) + ": " + why;
        }
    };

    const std::uint64_t count = std::uint64_t{1} << n;
    for (euclid::Subset t = 1; t < count; ++t) {
        ++result.subsets;
        const euclid::Motion m = euclid::element_of(a, t);
        const bool combinatorial = row_sum_has_one(p, t);
        if (euclid::acts_freely(m) != combinatorial) {
            fail("freeness differs for subset " + std::to_string(t));
        }
        if (euclid::acts_freely(euclid::realize(p, t)) != combinatorial) {
            fail("P-row realization freeness differs for subset " + std::to_string(t));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const int predicted = forms[j].evaluate(t) ? -1 : 1;
            if (m.signs()[j] != predicted) {
                fail("holonomy sign " + std::to_string(j + 1) + " differs for subset " +
                     std::to_string(t));
                break;
            }
        }
    }

    const auto gens = euclid::generators(a);
    const bool all_reflect = std::all_of(gens.begin(), gens.end(),
                                         [](const euclid::Motion& g) { return !g.is_translation(); });
    if (all_reflect != has_full_holonomy(p)) {
        fail("full-holonomy verdict differs");
    }
    return result;
}

unsigned default_workers() {
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BOTT_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            return static_cast<unsigned>(std::min<unsigned long>(cap, 1024));
        }
    }
    return hw;
}

namespace {

struct Chunk {
    CensusRow row;
    std::vector<BottMatrix> matrices;
    std::optional<std::uint64_t> failed_index;
    std::string failure;
};

void classify_range(const CensusConfig& cfg, std::uint64_t first, std::uint64_t last, Chunk& out) {
    out.row.n = cfg.n;
    try {
        enumerate(cfg.n, first, last, [&](std::uint64_t k, const BottMatrix& a) {
            if (out.failed_index) {
                return;
            }
            ManifoldReport r;
            try {
                r = analyze(a);
            } catch (const InternalInconsistency& e) {
                out.failed_index = k;
                out.failure = e.what();
                return;
            }
            if (cfg.check_oracles) {
                const CrossCheck c = cross_check(a);
                if (c.disagreements != 0 || !r.free) {
                    out.failed_index = k;
                    out.failure = c.disagreements != 0 ? c.first_failure
                                                       : serialize(a) + ": action is not free";
                    return;
                }
            }
            ++out.row.total;
            out.row.orientable += r.orientable;
            out.row.spin += r.spin;
            if (r.kahler) {
                ++out.row.kahler;
                (r.spin ? out.row.kahler_and_spin : out.row.kahler_not_spin) += 1;
            }
            if (cfg.emit_matrices && cfg.filter.matches(r)) {
                out.matrices.push_back(a);
            }
        });
    } catch (const std::exception& e) {
        out.failed_index = first;
        out.failure = e.what();
    }
}

}  // namespace

CensusResult run_census(const CensusConfig& cfg, unsigned workers) {
    const std::uint64_t count = matrix_count(cfg.n);
    const std::uint64_t chunks = std::clamp<std::uint64_t>(workers, 1, count);

    std::vector<Chunk> parts(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t first = count * c / chunks;
        const std::uint64_t last = count * (c + 1) / chunks;
        threads.emplace_back(classify_range, std::cref(cfg), first, last, std::ref(parts[c]));
    }
    for (auto& t : threads) {
        t.join();
    }

    CensusResult result;
    result.row.n = cfg.n;
    for (auto& part : parts) {
        // Ranges are in index order, so the first failing chunk holds the
        // smallest failing index.
        if (part.failed_index) {
            throw OracleDisagreement("census check failed at index " +
                                         std::to_string(*part.failed_index) + ": " + part.failure,
                                     *part.failed_index, serialize(matrix_at(cfg.n, *part.failed_index)));
        }
        result.row += part.row;
        std::move(part.matrices.begin(), part.matrices.end(), std::back_inserter(result.matrices));
    }
    return result;
}

std::string csv_header() { return "n,total,orientable,kahler,spin,kahler_and_spin,kahler_not_spin"; }

std::string to_csv(const CensusRow& row) {
    std::string s = std::to_string(row.n);
    for (std::uint64_t v : {row.total, row.orientable, row.kahler, row.spin, row.kahler_and_spin,
                            row.kahler_not_spin}) {
        s += ',';
        s += std::to_string(v);
    }
    return s;
}

}  // namespace bott::census
