#include "springer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "springer/formats.hpp"
#include "springer/inversions.hpp"
#include "springer/partition.hpp"
#include "springer/poincare.hpp"
#include "springer/tableau.hpp"
#include "springer/toric.hpp"
#include "springer/verify.hpp"

namespace springer {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid " + what + " token '" + token + "'");
        }
    }
    return out;
}

std::string poly_string(const IntPolynomial& p) { return to_latex(p); }

std::string shifted_string(const ShiftedPolynomial& p) {
    if (p.poly.is_zero()) return "0";
    if (p.shift == 0) return poly_string(p.poly);
    return "t^{" + std::to_string(p.shift) + "} (" + poly_string(p.poly) + ")";
}

std::string shifted_csv(const ShiftedPolynomial& p) {
    std::string out = "degree,coefficient\n";
    for (int k = 0; k <= p.poly.degree(); ++k) {
        out += std::to_string(p.shift + k) + "," + std::to_string(p.poly.coeff(k)) + "\n";
    }
    return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

const char* kDocs =
    "subcommand reference (the identity each one computes)\n"
    "  rst list <shape>             row-strict tableaux of the shape, reading-word order;\n"
    "                               count = n!/prod(parts!)\n"
    "  tableau info <t>             I/J/K splitting of [n-1] by the position of i+1 relative\n"
    "                               to i; blocks; d = gcd(I u K u {n}) = gcd(block lengths);\n"
    "                               inversion/pair statistics with |pairs| = sum_i (i-1)*part_i\n"
    "  tableau quotient <t> <d>     merges the size-d blocks and relabels them in order;\n"
    "                               |t| = dim(shape) - dim(shape/d) + |t/d|\n"
    "  poincare springer <shape>    P(t) = sum over tableaux of t^|sigma|\n"
    "                               = sum over d | shape of t^(D_d) Q_{shape/d}(t)\n"
    "  poincare extended <shape>    P(t) = sum of d_sigma t^|sigma|\n"
    "                               = sum over d | shape of phi(d) t^(D_d) P_springer(shape/d)\n"
    "  poincare isotypic --char i   t^(D_d) P_springer(shape/d) for d = n/gcd(n,i) when\n"
    "                               d | shape, zero otherwise; checked against the cell sum\n"
    "  poincare lusztig --char i    stalk form of the same component, shifted by n^2 - n\n"
    "  cells <shape>                orbifold-paving cells (sigma, r) with r mod d_sigma;\n"
    "                               the center advances r by one\n"
    "  toric dstar                  gcd([n] minus J)\n"
    "  toric phi --c ...            sum of j*c_j mod d_star; classifies components\n"
    "  toric characters             0, q, 2q, ..., (d_star - 1)q with q = n/d_star\n"
    "  toric invariants --b ...     monomial invariance (b = a*(1,...,n-1) mod n off J) and\n"
    "                               the decomposition g = prod z_j^(m_j) * f\n"
    "  verify all [--n-max N]       exhaustive identity suites against brute-force oracles\n";

struct FrameOptions {
    int n = 0;
    std::string I_text, J_text, K_text;

    ToricFrame build(bool k_given) const {
        auto I = parse_int_list(I_text, "I");
        auto J = parse_int_list(J_text, "J");
        if (k_given) {
            return ToricFrame(n, I, J, parse_int_list(K_text, "K"));
        }
        // K defaults to the complement of I and J in [n-1].
        std::vector<char> taken(static_cast<std::size_t>(std::max(n, 1)), 0);
        for (int i : I) {
            if (i >= 1 && i < n) taken[static_cast<std::size_t>(i)] = 1;
        }
        for (int j : J) {
            if (j >= 1 && j < n) taken[static_cast<std::size_t>(j)] = 1;
        }
        std::vector<int> K;
        for (int i = 1; i <= n - 1; ++i) {
            if (!taken[static_cast<std::size_t>(i)]) K.push_back(i);
        }
        return ToricFrame(n, I, J, K);
    }
};

void add_frame_options(CLI::App* sub, FrameOptions& opts) {
    sub->add_option("--n", opts.n, "torus rank parameter n")->required();
    sub->add_option("--I", opts.I_text, "comma-separated I (free coordinates)");
    sub->add_option("--J", opts.J_text, "comma-separated J (coordinates pinned to 1)");
    sub->add_option("--K", opts.K_text,
                    "comma-separated K (coordinates pinned to 0); "
                    "defaults to the complement of I and J");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tableau combinatorics of Springer fibers and their extended "
                 "(orbifold-paved) counterparts"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv", "latex"}))
        ->envname("SPRINGER_FORMAT");
    std::string out_file;
    app.add_option("--out", out_file, "write output to a file instead of stdout");
    bool seed_docs = false;
    app.add_flag("--seed-docs", seed_docs, "print the subcommand-to-identity reference");

    // rst list
    auto* rst = app.add_subcommand("rst", "row-strict tableau enumeration");
    rst->fallthrough();
    std::string rst_shape;
    auto* rst_list = rst->add_subcommand("list", "list all tableaux of a shape");
    rst_list->fallthrough();
    rst_list->add_option("shape", rst_shape, "partition, e.g. 4,4,2,2 or 4^2,2^2")->required();

    // tableau info | quotient
    auto* tab = app.add_subcommand("tableau", "statistics of a single tableau");
    tab->fallthrough();
    std::string tab_text;
    auto* tab_info = tab->add_subcommand("info", "I/J/K, blocks, divisors, inversions, pairs");
    tab_info->fallthrough();
    tab_info->add_option("tableau", tab_text, "rows separated by '/', entries by ','")
        ->required();
    std::string quot_text;
    int quot_d = 1;
    auto* tab_quot = tab->add_subcommand("quotient", "quotient tableau by a divisor");
    tab_quot->fallthrough();
    tab_quot->add_option("tableau", quot_text, "rows separated by '/', entries by ','")
        ->required();
    tab_quot->add_option("d", quot_d, "divisor of the tableau")->required();

    // poincare springer | extended | isotypic | lusztig
    auto* poin = app.add_subcommand("poincare", "Poincare polynomials");
    poin->fallthrough();
    std::string poin_shape;
    int char_index = 0;
    CLI::App* poin_kind[4];
    const char* kind_names[4] = {"springer", "extended", "isotypic", "lusztig"};
    const char* kind_descs[4] = {
        "inversion generating function over the shape's tableaux",
        "d_sigma-weighted generating function (the extended fiber)",
        "isotypic component of the extended fiber for one character",
        "stalk polynomial of the character's sheaf (shift kept separate)"};
    for (int k = 0; k < 4; ++k) {
        poin_kind[k] = poin->add_subcommand(kind_names[k], kind_descs[k]);
        poin_kind[k]->fallthrough();
        poin_kind[k]->add_option("shape", poin_shape, "partition")->required();
        if (k >= 2) {
            poin_kind[k]->add_option("--char", char_index, "character index in 0..n-1");
        }
    }

    // cells
    auto* cells_cmd = app.add_subcommand("cells", "orbifold-paving cells of a shape");
    cells_cmd->fallthrough();
    std::string cells_shape;
    cells_cmd->add_option("shape", cells_shape, "partition")->required();

    // toric dstar | phi | characters | invariants
    auto* toric = app.add_subcommand("toric", "finite-group and character computations");
    toric->fallthrough();
    FrameOptions frame_opts;
    auto* toric_dstar = toric->add_subcommand("dstar", "gcd of [n] minus J");
    auto* toric_phi = toric->add_subcommand("phi", "component label of a c-tuple");
    auto* toric_chars = toric->add_subcommand("characters", "characters on the components");
    auto* toric_inv = toric->add_subcommand("invariants", "invariant-monomial queries");
    std::string c_text, b_text;
    for (CLI::App* sub : {toric_dstar, toric_phi, toric_chars, toric_inv}) {
        sub->fallthrough();
        add_frame_options(sub, frame_opts);
    }
    toric_phi->add_option("--c", c_text, "comma-separated residues aligned with ascending J")
        ->required();
    toric_inv->add_option("--c", c_text,
                          "comma-separated residues aligned with ascending J");
    toric_inv->add_option("--b", b_text, "comma-separated exponents of z_1..z_{n-1}")
        ->required();

    // verify all
    auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
    verify->fallthrough();
    int n_max = 6;
    auto* verify_all_cmd = verify->add_subcommand("all", "run every suite");
    verify_all_cmd->fallthrough();
    verify_all_cmd
        ->add_option("--n-max", n_max,
                     "size bound for the tableau/polynomial suites "
                     "(group suites cap at 6)")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("springer");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    int exit_code = 0;
    std::string output;

    try {
        if (seed_docs) {
            output = kDocs;
        } else if (rst_list->parsed()) {
            const Partition shape = parse_partition(rst_shape);
            if (format == "json") {
                json arr = json::array();
                std::int64_t count = 0;
                for_each_rst(shape, [&](const RowStrictTableau& t) {
                    arr.push_back(tableau_to_json(t));
                    ++count;
                });
                output = json{{"shape", shape.parts()}, {"count", count},
                              {"tableaux", arr}}.dump() + "\n";
            } else if (format == "csv") {
                std::string body = "index,tableau\n";
                std::int64_t idx = 0;
                for_each_rst(shape, [&](const RowStrictTableau& t) {
                    body += std::to_string(idx++) + "," + csv_quote(to_text(t)) + "\n";
                });
                output = body;
            } else if (format == "table") {
                std::string body;
                for_each_rst(shape, [&](const RowStrictTableau& t) {
                    body += to_text(t) + "\n";
                });
                output = body;
            } else {
                throw std::invalid_argument("format 'latex' not supported for rst list");
            }
        } else if (tab_info->parsed()) {
            const RowStrictTableau sigma = parse_tableau(tab_text);
            const IjkDecomposition ijk = ijk_decomposition(sigma);
            const auto blks = blocks(sigma);
            const int d = max_divisor(sigma);
            const PairSet inv = springer_inversions(sigma);
            const PairSet prs = springer_pairs(sigma);
            const PairSet itld = i_tilde(sigma);
            const auto w = w_sigma(sigma);
            const ToricFrame frame = cell_frame(sigma);
            if (format == "json") {
                json j{{"tableau", tableau_to_json(sigma)},
                       {"I", ijk.I},
                       {"J", ijk.J},
                       {"K", ijk.K},
                       {"blocks", blocks_to_json(blks)},
                       {"d_sigma", d},
                       {"divisor_set", divisor_set(sigma)},
                       {"inversions", pairset_to_json(inv)},
                       {"inversion_count", inv.size()},
                       {"pairs", pairset_to_json(prs)},
                       {"pair_count", prs.size()},
                       {"i_tilde", pairset_to_json(itld)},
                       {"w_sigma_inverse", w},
                       {"frame", frame_to_json(frame)}};
                output = j.dump() + "\n";
            } else if (format == "table") {
                std::ostringstream os;
                auto list = [](const std::vector<int>& v) {
                    std::string s;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (i) s += ',';
                        s += std::to_string(v[i]);
                    }
                    return s.empty() ? std::string("-") : s;
                };
                auto pair_list = [](const PairSet& ps) {
                    std::string s;
                    for (const auto& [i, j] : ps.pairs) {
                        if (!s.empty()) s += ' ';
                        s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                    return s.empty() ? std::string("-") : s;
                };
                os << "tableau: " << to_text(sigma) << "\n";
                os << "shape: " << to_text(sigma.shape()) << "\n";
                os << "I: " << list(ijk.I) << "\n";
                os << "J: " << list(ijk.J) << "\n";
                os << "K: " << list(ijk.K) << "\n";
                os << "blocks:";
                for (const Block& b : blks) {
                    os << " [" << b.first << ".." << b.last << " row " << b.row << "]";
                }
                os << "\n";
                os << "d_sigma: " << d << "\n";
                os << "divisors: " << list(divisor_set(sigma)) << "\n";
                os << "inversions (" << inv.size() << "): " << pair_list(inv) << "\n";
                os << "pairs (" << prs.size() << "): " << pair_list(prs) << "\n";
                os << "i_tilde: " << pair_list(itld) << "\n";
                os << "w_sigma_inverse: " << list(w) << "\n";
                os << "frame: n=" << frame.n << " I=" << list(frame.I)
                   << " J=" << list(frame.J) << " K=" << list(frame.K) << "\n";
                output = os.str();
            } else {
                throw std::invalid_argument("format '" + format +
                                            "' not supported for tableau info");
            }
        } else if (tab_quot->parsed()) {
            const RowStrictTableau sigma = parse_tableau(quot_text);
            const RowStrictTableau q = quotient_tableau(sigma, quot_d);
            if (format == "json") {
                output = tableau_to_json(q).dump() + "\n";
            } else if (format == "table") {
                output = to_text(q) + "\n";
            } else {
                throw std::invalid_argument("format '" + format +
                                            "' not supported for tableau quotient");
            }
        } else if (poin_kind[0]->parsed() || poin_kind[1]->parsed()) {
            const Partition shape = parse_partition(poin_shape);
            const IntPolynomial p = poin_kind[0]->parsed() ? springer_poincare(shape)
                                                           : extended_poincare(shape);
            if (format == "json") {
                output = polynomial_to_json(p).dump() + "\n";
            } else if (format == "csv") {
                output = to_csv(p);
            } else {
                output = poly_string(p) + "\n";  // table and latex coincide here
            }
        } else if (poin_kind[2]->parsed() || poin_kind[3]->parsed()) {
            const Partition shape = parse_partition(poin_shape);
            ShiftedPolynomial sp;
            if (poin_kind[3]->parsed()) {
                sp = lusztig_stalk_poincare(shape, char_index);
            } else {
                const int d = char_divisor(shape.n(), char_index);
                if (divides(d, shape)) {
                    sp = ShiftedPolynomial{
                        dim_shift(shape, d),
                        springer_poincare(quotient_partition(shape, d))};
                }
                isotypic_poincare(shape, char_index);  // runs the dual-route self-check
            }
            if (format == "json") {
                output = shifted_to_json(sp).dump() + "\n";
            } else if (format == "csv") {
                output = shifted_csv(sp);
            } else {
                output = shifted_string(sp) + "\n";
            }
        } else if (cells_cmd->parsed()) {
            const Partition shape = parse_partition(cells_shape);
            const auto cells = extended_cells(shape);
            if (format == "json") {
                output = json{{"shape", shape.parts()},
                              {"count", cells.size()},
                              {"cells", cells_to_json(cells)}}.dump() + "\n";
            } else if (format == "csv") {
                std::string body = "tableau,r,dim\n";
                for (const ExtendedCell& cell : cells) {
                    body += csv_quote(to_text(cell.tableau)) + "," +
                            std::to_string(cell.r) + "," + std::to_string(cell.dim) + "\n";
                }
                output = body;
            } else if (format == "table") {
                std::string body;
                for (const ExtendedCell& cell : cells) {
                    body += to_text(cell.tableau) + "  r=" + std::to_string(cell.r) +
                            "  dim=" + std::to_string(cell.dim) + "\n";
                }
                output = body;
            } else {
                throw std::invalid_argument("format 'latex' not supported for cells");
            }
        } else if (toric_dstar->parsed() || toric_phi->parsed() ||
                   toric_chars->parsed() || toric_inv->parsed()) {
            CLI::App* toric_sub = toric_dstar->parsed()   ? toric_dstar
                                  : toric_phi->parsed()   ? toric_phi
                                  : toric_chars->parsed() ? toric_chars
                                                          : toric_inv;
            const ToricFrame frame = frame_opts.build(toric_sub->count("--K") > 0);
            if (toric_dstar->parsed()) {
                const int d = d_star(frame);
                output = format == "json"
                             ? json{{"frame", frame_to_json(frame)}, {"d_star", d}}.dump() +
                                   "\n"
                             : "d_star = " + std::to_string(d) + "\n";
            } else if (toric_phi->parsed()) {
                const auto c = parse_int_list(c_text, "c");
                const ComponentIndex idx = phi(frame, c);
                output = format == "json"
                             ? json{{"frame", frame_to_json(frame)},
                                    {"c", c},
                                    {"r", idx.r},
                                    {"d_star", d_star(frame)}}.dump() + "\n"
                             : "r = " + std::to_string(idx.r) +
                                   " (mod d_star = " + std::to_string(d_star(frame)) + ")\n";
            } else if (toric_chars->parsed()) {
                const auto chars = component_characters(frame);
                if (format == "json") {
                    output = json{{"frame", frame_to_json(frame)},
                                  {"characters", chars}}.dump() + "\n";
                } else {
                    std::string s = "characters:";
                    for (int ch : chars) s += " " + std::to_string(ch);
                    output = s + "\n";
                }
            } else {
                const auto b_list = parse_int_list(b_text, "b");
                ExponentVector b{frame.n,
                                 std::vector<std::int64_t>(b_list.begin(), b_list.end())};
                const bool in_h = is_invariant_monomial(b, {});
                const bool in_hj = is_invariant_monomial(b, frame.J);
                json j{{"frame", frame_to_json(frame)},
                       {"b", exponents_to_json(b)},
                       {"H_invariant", in_h},
                       {"H_J_invariant", in_hj},
                       {"decomposition", nullptr}};
                std::string table = std::string("H-invariant: ") + (in_h ? "yes" : "no") +
                                    "\nH_J-invariant: " + (in_hj ? "yes" : "no") + "\n";
                if (in_hj) {
                    std::vector<int> c(frame.J.size(), 0);
                    if (toric_inv->count("--c") > 0) c = parse_int_list(c_text, "c");
                    const InvariantDecomposition dec =
                        invariant_sum_decomposition(b, frame.J, c);
                    j["decomposition"] = decomposition_to_json(dec);
                    table += "m:";
                    for (std::int64_t m : dec.m) table += " " + std::to_string(m);
                    table += "\ng:";
                    for (std::int64_t e : dec.g.exps) table += " " + std::to_string(e);
                    table += "\nscalar_exponent: " + std::to_string(dec.scalar_exponent) +
                             "\n";
                }
                output = format == "json" ? j.dump() + "\n" : table;
            }
        } else if (verify_all_cmd->parsed()) {
            const auto reports = verify_all(n_max, std::min(n_max, 6));
            bool all_pass = true;
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : reports) {
                    arr.push_back(report_to_json(r));
                    all_pass = all_pass && r.pass;
                }
                output = arr.dump() + "\n";
            } else {
                std::ostringstream os;
                for (const auto& r : reports) {
                    os << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  (" << r.range
                       << ")  " << static_cast<std::int64_t>(r.ms) << " ms\n";
                    if (!r.pass) {
                        os << "  counterexample: " << r.counterexample.dump() << "\n";
                    }
                    all_pass = all_pass && r.pass;
                }
                output = os.str();
            }
            if (!all_pass) exit_code = 1;
        } else {
            err << "error: a subcommand is required (try --help)\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 1;
    }

    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot open output file '" << out_file << "'\n";
            return 2;
        }
        f << output;
    } else {
        out << output;
    }
    return exit_code;
}

}  // namespace springer
