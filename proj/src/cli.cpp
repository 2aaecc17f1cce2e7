#include "bott/cli.hpp"

#include "bott/census.hpp"
#include "bott/euclid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace bott::cli {
namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto i : v) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(i + 1);
    }
    return s;
}

std::string pairs_str(const KahlerPairing& k) {
    std::string s;
    for (const auto& [a, b] : k.pairs) {
        if (!s.empty()) {
            s += ' ';
        }
        s += "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
    }
    return s;
}

json pairs_json(const KahlerPairing& k) {
    json arr = json::array();
    for (const auto& [a, b] : k.pairs) {
        arr.push_back({a + 1, b + 1});
    }
    return arr;
}

void print_report(const ManifoldReport& r, std::ostream& out) {
    out << "dimension:     " << r.dimension << '\n';
    out << "free:          " << bool_str(r.free) << '\n';
    out << "holonomy full: " << bool_str(r.holonomy_full) << '\n';
    out << "orientable:    " << bool_str(r.orientable) << '\n';
    out << "w1:            " << f2::to_string(r.w1) << '\n';
    out << "w2:            " << f2::to_string(r.w2_raw) << '\n';
    out << "kahler:        " << bool_str(r.kahler.has_value());
    if (r.kahler) {
        out << "  pairs " << pairs_str(*r.kahler);
    }
    out << '\n';
    if (r.s_vector) {
        out << "S:            ";
        for (int s : *r.s_vector) {
            out << ' ' << s;
        }
        out << '\n';
    }
    out << "spin:          " << bool_str(r.spin)
        << (r.spin_method == SpinMethod::BothAgree ? "  (general and closed form agree)"
                                                   : "  (general)")
        << '\n';
    if (!r.obstructed_rows.empty()) {
        out << "obstruction:   rows " << join_indices(r.obstructed_rows)
            << " have odd S and a nonzero column\n";
    }
}

struct MatrixInput {
    std::string path;
    bool pmat = false;

    PMatrix load_p() const {
        const std::string text = read_input(path);
        return pmat ? parse_pmatrix(text) : bott_to_p(parse_bott(text));
    }

    BottMatrix load_bott() const {
        const std::string text = read_input(path);
        if (!pmat) {
            return parse_bott(text);
        }
        if (auto a = p_to_bott(parse_pmatrix(text))) {
            return *a;
        }
        throw ValidationError("P-matrix is not of the shape produced by a Bott matrix");
    }
};

int cmd_check(const MatrixInput& in, bool as_json, std::ostream& out) {
    const ManifoldReport r = in.pmat ? analyze(in.load_p()) : analyze(in.load_bott());
    if (as_json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        print_report(r, out);
    }
    return kExitOk;
}

int cmd_ideal(const MatrixInput& in, bool as_json, std::ostream& out) {
    const PMatrix p = in.load_p();
    const IdealDegree2Basis ideal = characteristic_ideal(p);
    std::vector<std::string> basis;
    for (const auto& row : ideal.reduced.rows()) {
        basis.push_back(f2::to_string(f2::decode_degree2(p.rows(), row)));
    }
    if (as_json) {
        json j;
        j["thetas"] = json::array();
        for (const auto& t : ideal.thetas) {
            j["thetas"].push_back(f2::to_string(t));
        }
        j["rank"] = ideal.rank();
        j["basis"] = basis;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    for (std::size_t k = 0; k < ideal.thetas.size(); ++k) {
        out << "theta" << k + 1 << " = " << f2::to_string(ideal.thetas[k]) << '\n';
    }
    out << "rank " << ideal.rank() << '\n';
    for (const auto& b : basis) {
        out << "  " << b << '\n';
    }
    return kExitOk;
}

int cmd_sw(const MatrixInput& in, unsigned max_degree, bool as_json, std::ostream& out) {
    const f2::Poly w = sw_class(in.load_p(), max_degree);
    if (as_json) {
        json j;
        j["maxDegree"] = max_degree;
        j["w"] = f2::to_string(w);
        out << j.dump(2) << '\n';
    } else {
        out << f2::to_string(w) << '\n';
    }
    return kExitOk;
}

int cmd_kahler(const MatrixInput& in, bool as_json, std::ostream& out) {
    const BottMatrix a = in.load_bott();
    const auto pairing = is_kahler(a);
    std::optional<ClosedFormVerdict> cf;
    if (pairing) {
        cf = spin_kahler_closed_form(a, *pairing);
    }
    if (as_json) {
        json j;
        j["kahler"] = pairing.has_value();
        j["pairing"] = pairing ? pairs_json(*pairing) : json(nullptr);
        j["sVector"] = cf ? json(cf->s_vector) : json(nullptr);
        j["spin"] = cf ? json(cf->spin) : json(nullptr);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "kahler: " << bool_str(pairing.has_value()) << '\n';
    if (pairing) {
        out << "pairs: " << pairs_str(*pairing) << '\n';
        out << "representatives: " << join_indices(pairing->representatives()) << '\n';
        out << "S:";
        for (int s : cf->s_vector) {
            out << ' ' << s;
        }
        out << '\n' << "spin: " << bool_str(cf->spin) << '\n';
        if (!cf->obstructed_rows.empty()) {
            out << "obstruction: rows " << join_indices(cf->obstructed_rows) << '\n';
        }
    }
    return kExitOk;
}

census::Filter parse_filter(const std::string& spec) {
    census::Filter f;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        const bool negate = item.front() == '!';
        const std::string name = negate ? item.substr(1) : item;
        if (name == "orientable") {
            f.orientable = !negate;
        } else if (name == "kahler") {
            f.kahler = !negate;
        } else if (name == "spin") {
            f.spin = !negate;
        } else {
            throw InputError("unknown filter '" + item + "' (use orientable, kahler, spin, or !name)");
        }
    }
    return f;
}

int cmd_census(const census::CensusConfig& cfg, bool csv, unsigned threads, std::ostream& out,
               std::ostream& err) {
    census::CensusResult res;
    try {
        res = census::run_census(cfg, threads == 0 ? census::default_workers() : threads);
    } catch (const census::OracleDisagreement& e) {
        err << "error: " << e.what() << '\n' << "reproducer: " << e.reproducer() << '\n';
        return kExitDisagreement;
    }
    const census::CensusRow& r = res.row;
    if (csv) {
        out << census::csv_header() << '\n' << census::to_csv(r) << '\n';
    } else {
        out << "n = " << r.n << ": " << r.total << " matrices\n"
            << "  orientable       " << r.orientable << '\n'
            << "  kahler           " << r.kahler << '\n'
            << "  spin             " << r.spin << '\n'
            << "  kahler and spin  " << r.kahler_and_spin << '\n'
            << "  kahler not spin  " << r.kahler_not_spin << '\n';
        if (cfg.check_oracles) {
            out << "  oracle checks passed\n";
        }
    }
    for (const auto& a : res.matrices) {
        out << serialize(a) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& path, std::optional<std::size_t> n, std::ostream& out,
               std::ostream& err) {
    std::uint64_t matrices = 0;
    std::uint64_t subsets = 0;
    std::uint64_t disagreements = 0;
    std::string first;
    auto check = [&](const BottMatrix& a) {
        const census::CrossCheck c = census::cross_check(a);
        ++matrices;
        subsets += c.subsets;
        if (c.disagreements != 0 && disagreements == 0) {
            first = c.first_failure;
        }
        disagreements += c.disagreements;
    };
    if (path) {
        check(parse_bott(read_input(*path)));
    } else {
        census::enumerate(*n, [&](std::uint64_t, const BottMatrix& a) { check(a); });
    }
    out << matrices << (matrices == 1 ? " matrix" : " matrices") << ", " << subsets
        << " subsets, " << disagreements << " disagreements\n";
    if (disagreements != 0) {
        err << "first disagreement: " << first << '\n';
        return kExitDisagreement;
    }
    return kExitOk;
}

}  // namespace

nlohmann::ordered_json to_json(const ManifoldReport& r) {
    json j;
    j["dimension"] = r.dimension;
    j["free"] = r.free;
    j["holonomyFull"] = r.holonomy_full;
    j["orientable"] = r.orientable;
    j["w1"] = f2::to_string(r.w1);
    j["w2"] = f2::to_string(r.w2_raw);
    j["kahler"] = r.kahler.has_value();
    j["pairing"] = r.kahler ? pairs_json(*r.kahler) : json(nullptr);
    j["sVector"] = r.s_vector ? json(*r.s_vector) : json(nullptr);
    j["spin"] = r.spin;
    j["spinMethod"] = r.spin_method == SpinMethod::BothAgree ? "both-agree" : "general";
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic classes and Spin/Kahler structures of real Bott manifolds", "bott"};
    app.require_subcommand(1);

    MatrixInput input;
    bool as_json = false;
    unsigned max_degree = 2;
    auto add_matrix_opts = [&](CLI::App* sub, bool allow_pmat) {
        sub->add_option("file", input.path, "matrix file ('-' for stdin)")->required();
        if (allow_pmat) {
            sub->add_flag("--pmat", input.pmat, "input is a P-matrix over {0,1,2,3}");
        }
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    auto* check = app.add_subcommand("check", "full report for one manifold");
    add_matrix_opts(check, true);
    auto* ideal = app.add_subcommand("ideal", "characteristic ideal generators and degree-2 basis");
    add_matrix_opts(ideal, true);
    auto* sw = app.add_subcommand("sw", "total Stiefel-Whitney class, truncated");
    add_matrix_opts(sw, true);
    sw->add_option("--max-degree", max_degree, "truncation degree")->capture_default_str();
    auto* kahler = app.add_subcommand("kahler", "Kahler pairing and closed-form Spin test");
    add_matrix_opts(kahler, true);

    census::CensusConfig cfg;
    bool csv = false;
    unsigned threads = 0;
    std::string filter;
    auto* census_cmd = app.add_subcommand("census", "classify every Bott matrix of dimension n");
    census_cmd->add_option("-n", cfg.n, "dimension")->required()->check(CLI::Range(1, 9));
    census_cmd->add_flag("--csv", csv, "CSV output");
    census_cmd->add_flag("--check-oracles", cfg.check_oracles,
                         "cross-check deciders and the Euclidean oracle on every matrix");
    census_cmd->add_flag("--emit", cfg.emit_matrices, "list matrices, one per line");
    census_cmd->add_option("--filter", filter,
                           "restrict --emit, e.g. kahler,!spin (orientable, kahler, spin)");
    census_cmd->add_option("--threads", threads, "worker count (default: BOTT_THREADS or all cores)");

    std::optional<std::string> verify_path;
    std::optional<std::size_t> verify_n;
    auto* verify = app.add_subcommand("verify", "Euclidean-motion oracle versus P-matrix criteria");
    auto* vfile = verify->add_option("file", verify_path, "Bott matrix file");
    auto* vn = verify->add_option("-n", verify_n, "check every matrix of this dimension")
                   ->check(CLI::Range(1, 9));
    vfile->excludes(vn);
    verify->require_option(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*check) {
            return cmd_check(input, as_json, out);
        }
        if (*ideal) {
            return cmd_ideal(input, as_json, out);
        }
        if (*sw) {
            return cmd_sw(input, max_degree, as_json, out);
        }
        if (*kahler) {
            return cmd_kahler(input, as_json, out);
        }
        if (*census_cmd) {
            cfg.filter = parse_filter(filter);
            return cmd_census(cfg, csv, threads, out, err);
        }
        if (*verify) {
            return cmd_verify(verify_path, verify_n, out, err);
        }
    } catch (const ValidationError& e) {
        err << "error: " << (verify_path ? *verify_path : input.path) << ": " << e.what() << '\n';
        return kExitInputError;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace bott::cli
