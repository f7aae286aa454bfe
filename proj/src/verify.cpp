#include "springer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "springer/formats.hpp"
#include "springer/inversions.hpp"
#include "springer/poincare.hpp"
#include "springer/polynomial.hpp"
#include "springer/toric.hpp"

namespace springer {

namespace {

using nlohmann::json;

class Stopwatch {
public:
    double ms() const {
        using namespace std::chrono;
        return duration<double, std::milli>(steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Direct test of Definition-level divisibility: the labels md+1 .. (m+1)d
// must occupy consecutive boxes of a single row, for every m.
bool splits_into_blocks(const RowStrictTableau& sigma, int d) {
    const int n = sigma.n();
    if (d < 1 || n % d != 0) return false;
    for (int start = 1; start <= n; start += d) {
        BoxPos prev = sigma.position_of(start);
        for (int t = start + 1; t < start + d; ++t) {
            const BoxPos cur = sigma.position_of(t);
            if (cur.row != prev.row || cur.col != prev.col + 1) return false;
            prev = cur;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> set_minus(const PairSet& a, const PairSet& b) {
    std::vector<std::pair<int, int>> out;
    std::set_difference(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                        std::back_inserter(out), std::greater<std::pair<int, int>>());
    return out;
}

json pairs_json(const std::vector<std::pair<int, int>>& ps) {
    json arr = json::array();
    for (const auto& [i, j] : ps) arr.push_back(json::array({i, j}));
    return arr;
}

}  // namespace

VerificationReport check_tableau_identities(int n_max) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "check_tableau_identities";
    rep.range = "all shapes with n <= " + std::to_string(n_max);
    rep.counterexample = nullptr;

    for (int n = 1; n <= n_max && rep.pass; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const std::int64_t dim = springer_dim(lambda);
            std::int64_t max_inv = -1;

            auto fail = [&](const RowStrictTableau& sigma, const char* identity, json extra) {
                rep.pass = false;
                json cex;
                cex["identity"] = identity;
                cex["n"] = n;
                cex["lambda"] = partition_to_json(lambda);
                cex["tableau"] = tableau_to_json(sigma);
                cex.update(extra);
                rep.counterexample = std::move(cex);
            };

            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                if (!rep.pass) return;

                const IjkDecomposition ijk = ijk_decomposition(sigma);
                const auto blks = blocks(sigma);
                const int d_sigma = max_divisor(sigma);

                int block_gcd = 0;
                for (const Block& b : blks) block_gcd = std::gcd(block_gcd, b.length());
                if (block_gcd != d_sigma) {
                    fail(sigma, "max divisor = gcd of block lengths",
                         json{{"gcd_blocks", block_gcd}, {"d_sigma", d_sigma}});
                    return;
                }

                std::vector<int> ends;
                for (const Block& b : blks) ends.push_back(b.last);
                std::sort(ends.begin(), ends.end());
                std::vector<int> expected = ijk.I;
                expected.insert(expected.end(), ijk.K.begin(), ijk.K.end());
                expected.push_back(n);
                std::sort(expected.begin(), expected.end());
                if (ends != expected) {
                    fail(sigma, "block boundaries sit exactly after I union K and n",
                         json{{"block_ends", ends}, {"I_union_K_union_n", expected}});
                    return;
                }

                const auto dset = divisor_set(sigma);
                for (int d = 1; d <= n; ++d) {
                    const bool listed =
                        std::binary_search(dset.begin(), dset.end(), d);
                    if (listed != splits_into_blocks(sigma, d)) {
                        fail(sigma, "divisor set matches the direct split test",
                             json{{"d", d}, {"listed", listed}});
                        return;
                    }
                }

                const PairSet inv = springer_inversions(sigma);
                const PairSet prs = springer_pairs(sigma);
                max_inv = std::max(max_inv, inv.size());

                if (prs.size() != dim) {
                    fail(sigma, "pair count equals fiber dimension",
                         json{{"pairs", prs.size()}, {"dim", dim}});
                    return;
                }

                const PairSet itld = i_tilde(sigma);
                if (itld.size() != static_cast<std::int64_t>(ijk.I.size()) ||
                    itld.size() > inv.size()) {
                    fail(sigma, "|I~| = |I| <= |sigma|",
                         json{{"i_tilde", itld.size()}, {"I", ijk.I.size()},
                              {"inversions", inv.size()}});
                    return;
                }
                for (const auto& [i, j] : itld.pairs) {
                    if (!inv.contains(i, j)) {
                        fail(sigma, "I~ is a subset of the inversions",
                             json{{"pair", json::array({i, j})}});
                        return;
                    }
                }
                for (const auto& [i, j] : inv.pairs) {
                    if (!prs.contains(i, j)) {
                        fail(sigma, "inversions are a subset of the pairs",
                             json{{"pair", json::array({i, j})}});
                        return;
                    }
                }

                for (int d : dset) {
                    const RowStrictTableau q = quotient_tableau(sigma, d);
                    if (q.shape() != quotient_partition(lambda, d)) {
                        fail(sigma, "quotient tableau has shape lambda/d", json{{"d", d}});
                        return;
                    }
                    const PairSet inv_q = springer_inversions(q);
                    const PairSet prs_q = springer_pairs(q);
                    if (prs.size() - inv.size() != prs_q.size() - inv_q.size()) {
                        fail(sigma, "pairs minus inversions is quotient-invariant",
                             json{{"d", d}, {"quotient", tableau_to_json(q)},
                                  {"lhs", prs.size() - inv.size()},
                                  {"rhs", prs_q.size() - inv_q.size()}});
                        return;
                    }
                    if (inv.size() !=
                        dim - springer_dim(q.shape()) + inv_q.size()) {
                        fail(sigma, "|sigma| = dim - dim(lambda/d) + |sigma/d|",
                             json{{"d", d}, {"quotient", tableau_to_json(q)},
                                  {"inv", inv.size()}, {"inv_q", inv_q.size()}});
                        return;
                    }
                    auto extra_q = set_minus(prs_q, inv_q);
                    for (auto& [i, j] : extra_q) {
                        i *= d;
                        j *= d;
                    }
                    std::sort(extra_q.begin(), extra_q.end(),
                              std::greater<std::pair<int, int>>());
                    const auto extra = set_minus(prs, inv);
                    if (extra_q != extra) {
                        fail(sigma, "(i,j) -> (di,dj) maps pairs-minus-inversions onto "
                                    "pairs-minus-inversions",
                             json{{"d", d}, {"mapped", pairs_json(extra_q)},
                                  {"direct", pairs_json(extra)}});
                        return;
                    }
                }
            });
            if (!rep.pass) break;

            if (max_inv != dim) {
                rep.pass = false;
                rep.counterexample =
                    json{{"identity", "fiber dimension equals max inversion count"},
                         {"n", n},
                         {"lambda", partition_to_json(lambda)},
                         {"max_inversions", max_inv},
                         {"dim", dim}};
                break;
            }
        }
    }
    rep.ms = sw.ms();
    return rep;
}

VerificationReport check_poincare_identities(int n_max) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "check_poincare_identities";
    rep.range = "all shapes with n <= " + std::to_string(n_max) + ", all characters";
    rep.counterexample = nullptr;

    for (int n = 1; n <= n_max && rep.pass; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            auto fail = [&](const char* identity, json extra) {
                rep.pass = false;
                json cex;
                cex["identity"] = identity;
                cex["n"] = n;
                cex["lambda"] = partition_to_json(lambda);
                cex.update(extra);
                rep.counterexample = std::move(cex);
            };

            const IntPolynomial p = springer_poincare(lambda);

            IntPolynomial unfold;
            for (int d : divisor_list(lambda)) {
                unfold += q_poly(quotient_partition(lambda, d))
                              .shifted(static_cast<int>(dim_shift(lambda, d)));
            }
            if (unfold != p) {
                fail("Springer polynomial unfolds over divisors",
                     json{{"lhs", polynomial_to_json(unfold)},
                          {"rhs", polynomial_to_json(p)}});
                break;
            }

            const IntPolynomial ext = extended_poincare(lambda);
            const auto cells = extended_cells(lambda);
            if (ext.at_one() != static_cast<std::int64_t>(cells.size())) {
                fail("cell count equals extended polynomial at t = 1",
                     json{{"cells", cells.size()}, {"at_one", ext.at_one()}});
                break;
            }
            IntPolynomial from_cells;
            for (const ExtendedCell& cell : cells) {
                from_cells.add_term(static_cast<int>(cell.dim), 1);
            }
            if (from_cells != ext) {
                fail("cell dimension multiset matches the extended polynomial",
                     json{{"lhs", polynomial_to_json(from_cells)},
                          {"rhs", polynomial_to_json(ext)}});
                break;
            }

            // Cells over one tableau are consecutive; the shift must cycle
            // through them with period d_sigma.
            bool cells_ok = true;
            for (std::size_t idx = 0; idx < cells.size() && cells_ok;) {
                const int d = max_divisor(cells[idx].tableau);
                for (int r = 0; r < d && cells_ok; ++r) {
                    const ExtendedCell& cell = cells[idx + static_cast<std::size_t>(r)];
                    if (cell.r != r || cell.tableau != cells[idx].tableau ||
                        z_shift(cell).r != (r + 1) % d) {
                        fail("center action cycles the cells over each tableau",
                             json{{"tableau", tableau_to_json(cell.tableau)}, {"r", cell.r}});
                        cells_ok = false;
                    }
                }
                idx += static_cast<std::size_t>(d);
            }
            if (!rep.pass) break;

            const EquivariantPolynomial eq = equivariant_poincare(lambda);
            if (eq.total() != ext) {
                fail("isotypic components sum to the extended polynomial",
                     json{{"lhs", polynomial_to_json(eq.total())},
                          {"rhs", polynomial_to_json(ext)}});
                break;
            }
            for (int i = 0; i < n && rep.pass; ++i) {
                try {
                    const IntPolynomial iso = isotypic_poincare(lambda, i);
                    if (iso != eq.by_char[static_cast<std::size_t>(i)]) {
                        fail("isotypic component agrees with the equivariant slot",
                             json{{"char", i},
                                  {"lhs", polynomial_to_json(iso)},
                                  {"rhs", polynomial_to_json(
                                              eq.by_char[static_cast<std::size_t>(i)])}});
                    }
                } catch (const std::logic_error& e) {
                    fail("cell-level and closed-form isotypic routes agree",
                         json{{"char", i}, {"what", e.what()}});
                }
            }
            if (!rep.pass) break;

            if (extended_poincare_totient(lambda) != ext) {
                fail("totient decomposition equals the extended polynomial",
                     json{{"lhs", polynomial_to_json(extended_poincare_totient(lambda))},
                          {"rhs", polynomial_to_json(ext)}});
                break;
            }

            if (p.degree() != springer_dim(lambda)) {
                fail("degree equals fiber dimension",
                     json{{"degree", p.degree()}, {"dim", springer_dim(lambda)}});
                break;
            }
            if (p.leading() != hook_length_count(lambda)) {
                fail("leading coefficient equals the hook-length count",
                     json{{"leading", p.leading()}, {"hook", hook_length_count(lambda)}});
                break;
            }
            if (p.at_one() != rst_count(lambda)) {
                fail("value at 1 equals the tableau count",
                     json{{"at_one", p.at_one()}, {"count", rst_count(lambda)}});
                break;
            }
        }
    }
    rep.ms = sw.ms();
    return rep;
}

VerificationReport orbit_oracle(const ToricFrame& frame) {
    Stopwatch sw;
    const int n = frame.n;
    if (n > 6) {
        throw std::invalid_argument("orbit oracle enumerates tuples; requires n <= 6");
    }
    VerificationReport rep;
    rep.check = "orbit_oracle";
    rep.range = "frame n=" + std::to_string(n) + ", |J|=" + std::to_string(frame.J.size());
    rep.counterexample = nullptr;

    const auto& J = frame.J;
    const int jsz = static_cast<int>(J.size());
    std::int64_t tuples = 1;
    for (int idx = 0; idx < jsz; ++idx) tuples *= n;

    auto decode = [&](std::int64_t t) {
        std::vector<int> c(static_cast<std::size_t>(jsz));
        for (int idx = 0; idx < jsz; ++idx) {
            c[static_cast<std::size_t>(idx)] = static_cast<int>(t % n);
            t /= n;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        std::int64_t t = 0;
        for (int idx = jsz - 1; idx >= 0; --idx) {
            t = t * n + c[static_cast<std::size_t>(idx)];
        }
        return t;
    };

    auto fail = [&](json cex) {
        rep.pass = false;
        cex["frame"] = frame_to_json(frame);
        rep.counterexample = std::move(cex);
    };

    // Generating set of H: (omega^{a_1}, ..., omega^{a_{n-1}}) with a = e_r
    // plus r in the last slot, for r = 1 .. n-2.  Their J-restrictions drive
    // the orbit closure, so the cost is O(#tuples x #generators).
    std::vector<std::vector<int>> gen_shift;
    for (int r = 1; r <= n - 2; ++r) {
        std::vector<int> a(static_cast<std::size_t>(n - 1), 0);
        a[static_cast<std::size_t>(r - 1)] = (a[static_cast<std::size_t>(r - 1)] + 1) % n;
        a[static_cast<std::size_t>(n - 2)] = (a[static_cast<std::size_t>(n - 2)] + r) % n;
        if (!in_H(GroupElement{n, a})) {
            fail(json{{"reason", "generator not in H"}, {"generator", a}});
            rep.ms = sw.ms();
            return rep;
        }
        std::vector<int> shift(static_cast<std::size_t>(jsz));
        for (int idx = 0; idx < jsz; ++idx) {
            shift[static_cast<std::size_t>(idx)] =
                a[static_cast<std::size_t>(J[static_cast<std::size_t>(idx)] - 1)];
        }
        gen_shift.push_back(std::move(shift));
    }

    // Union-find closure under the generator shifts.
    std::vector<std::int64_t> parent(static_cast<std::size_t>(tuples));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::int64_t(std::int64_t)> find = [&](std::int64_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](std::int64_t x, std::int64_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    };

    std::vector<int> c(static_cast<std::size_t>(jsz));
    for (std::int64_t t = 0; t < tuples; ++t) {
        c = decode(t);
        for (const auto& shift : gen_shift) {
            std::vector<int> moved = c;
            for (int idx = 0; idx < jsz; ++idx) {
                moved[static_cast<std::size_t>(idx)] =
                    (moved[static_cast<std::size_t>(idx)] +
                     shift[static_cast<std::size_t>(idx)]) % n;
            }
            unite(t, encode(moved));
        }
    }

    const int d = d_star(frame);
    std::vector<int> phi_of(static_cast<std::size_t>(tuples));
    for (std::int64_t t = 0; t < tuples; ++t) {
        phi_of[static_cast<std::size_t>(t)] = phi(frame, decode(t)).r;
    }

    // Orbits refine phi-fibers ...
    for (std::int64_t t = 0; t < tuples; ++t) {
        if (phi_of[static_cast<std::size_t>(t)] !=
            phi_of[static_cast<std::size_t>(find(t))]) {
            fail(json{{"reason", "same orbit, different phi"},
                      {"tuple", ctuple_to_json(J, decode(t))},
                      {"root", ctuple_to_json(J, decode(find(t)))},
                      {"phi", phi_of[static_cast<std::size_t>(t)]},
                      {"phi_root", phi_of[static_cast<std::size_t>(find(t))]}});
            rep.ms = sw.ms();
            return rep;
        }
    }
    // ... and the counts agree, so they coincide.
    std::vector<char> phi_seen(static_cast<std::size_t>(d), 0);
    std::int64_t orbit_count = 0;
    for (std::int64_t t = 0; t < tuples; ++t) {
        if (find(t) == t) ++orbit_count;
        phi_seen[static_cast<std::size_t>(phi_of[static_cast<std::size_t>(t)])] = 1;
    }
    std::int64_t phi_values = std::count(phi_seen.begin(), phi_seen.end(), 1);
    if (orbit_count != d || phi_values != d) {
        fail(json{{"reason", "orbit count or phi image differs from d_star"},
                  {"orbits", orbit_count},
                  {"phi_values", phi_values},
                  {"d_star", d}});
        rep.ms = sw.ms();
        return rep;
    }

    if (!J.empty() && J.front() == 1) {
        // The lift (omega, 1, ..., 1) adds one to c_1 and must advance the
        // component label by one.
        for (std::int64_t t = 0; t < tuples; ++t) {
            std::vector<int> moved = decode(t);
            moved[0] = (moved[0] + 1) % n;
            if (phi_of[static_cast<std::size_t>(encode(moved))] !=
                (phi_of[static_cast<std::size_t>(t)] + 1) % d) {
                fail(json{{"reason", "lift does not shift components by one"},
                          {"tuple", ctuple_to_json(J, decode(t))}});
                rep.ms = sw.ms();
                return rep;
            }
        }
    } else if (d != 1) {
        fail(json{{"reason", "1 not in J forces d_star = 1"}, {"d_star", d}});
        rep.ms = sw.ms();
        return rep;
    }

    rep.ms = sw.ms();
    return rep;
}

VerificationReport check_character_decomposition(const ToricFrame& frame) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "check_character_decomposition";
    rep.range = "frame n=" + std::to_string(frame.n);
    rep.counterexample = nullptr;

    const int n = frame.n;
    const int d = d_star(frame);

    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        perm[static_cast<std::size_t>(r)] = z_shift(ComponentIndex{frame, r}).r;
    }

    // Eigenvalue exponents of the permutation matrix: a cycle of length L
    // contributes the multiples of n/L.
    std::vector<int> exponents;
    std::vector<char> visited(static_cast<std::size_t>(d), 0);
    int cycle_count = 0;
    for (int start = 0; start < d; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++cycle_count;
        int len = 0;
        int cur = start;
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = 1;
            cur = perm[static_cast<std::size_t>(cur)];
            ++len;
        }
        if (n % len != 0) {
            rep.pass = false;
            rep.counterexample = json{{"reason", "cycle length does not divide n"},
                                      {"frame", frame_to_json(frame)},
                                      {"cycle_length", len}};
            rep.ms = sw.ms();
            return rep;
        }
        for (int k = 0; k < len; ++k) exponents.push_back(k * (n / len));
    }
    std::sort(exponents.begin(), exponents.end());

    std::vector<int> expected = component_characters(frame);
    std::sort(expected.begin(), expected.end());

    if (cycle_count != 1 || exponents != expected) {
        rep.pass = false;
        rep.counterexample = json{{"reason", "character multiset mismatch"},
                                  {"frame", frame_to_json(frame)},
                                  {"cycles", cycle_count},
                                  {"eigen_exponents", exponents},
                                  {"component_characters", expected}};
    }
    rep.ms = sw.ms();
    return rep;
}

VerificationReport check_invariant_monomials(int n_max) {
    Stopwatch sw;
    const int cap = std::min(n_max, 6);
    VerificationReport rep;
    rep.check = "check_invariant_monomials";
    rep.range = "n <= " + std::to_string(cap) + ", all J, all exponent vectors mod n";
    rep.counterexample = nullptr;

    for (int n = 1; n <= cap && rep.pass; ++n) {
        const int dims = n - 1;
        std::int64_t space = 1;
        for (int idx = 0; idx < dims; ++idx) space *= n;

        auto decode = [&](std::int64_t t) {
            std::vector<int> a(static_cast<std::size_t>(dims));
            for (int idx = 0; idx < dims; ++idx) {
                a[static_cast<std::size_t>(idx)] = static_cast<int>(t % n);
                t /= n;
            }
            return a;
        };

        // Full kernel of the big isogeny, then H by the defining congruence.
        std::vector<std::vector<int>> big;
        std::vector<std::vector<int>> members_H;
        for (std::int64_t t = 0; t < space; ++t) {
            auto a = decode(t);
            if (in_H(GroupElement{n, a})) members_H.push_back(a);
            big.push_back(std::move(a));
        }
        std::int64_t expected_H = 1;
        for (int e = 0; e < n - 2; ++e) expected_H *= n;
        if (static_cast<std::int64_t>(members_H.size()) != expected_H) {
            rep.pass = false;
            rep.counterexample = json{{"reason", "|H| differs from n^(n-2)"},
                                      {"n", n},
                                      {"count", members_H.size()},
                                      {"expected", expected_H}};
            break;
        }

        for (std::int64_t jmask = 0; jmask < (std::int64_t{1} << dims) && rep.pass;
             ++jmask) {
            std::vector<int> J;
            for (int j = 1; j <= dims; ++j) {
                if (jmask & (std::int64_t{1} << (j - 1))) J.push_back(j);
            }

            std::vector<const std::vector<int>*> members_HJ;
            for (const auto& a : members_H) {
                bool ok = true;
                for (int j : J) {
                    if (a[static_cast<std::size_t>(j - 1)] != 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) members_HJ.push_back(&a);
            }

            const int jsz = static_cast<int>(J.size());
            std::int64_t ctuples = 1;
            for (int idx = 0; idx < jsz; ++idx) ctuples *= n;

            for (std::int64_t bt = 0; bt < space && rep.pass; ++bt) {
                const auto& bvec = big[static_cast<std::size_t>(bt)];
                ExponentVector b{n, std::vector<std::int64_t>(bvec.begin(), bvec.end())};

                const bool pred = is_invariant_monomial(b, J);
                bool brute = true;
                for (const auto* a : members_HJ) {
                    std::int64_t dot = 0;
                    for (int r = 1; r <= dims; ++r) {
                        dot += b.exps[static_cast<std::size_t>(r - 1)] *
                               (*a)[static_cast<std::size_t>(r - 1)];
                    }
                    if (dot % n != 0) {
                        brute = false;
                        break;
                    }
                }
                if (pred != brute) {
                    rep.pass = false;
                    rep.counterexample =
                        json{{"reason", "congruence predicate disagrees with brute force"},
                             {"n", n},
                             {"J", J},
                             {"b", exponents_to_json(b)},
                             {"predicate", pred},
                             {"brute_force", brute}};
                    break;
                }
                if (!pred) continue;

                const std::vector<int> zeros(static_cast<std::size_t>(jsz), 0);
                const InvariantDecomposition dec = invariant_sum_decomposition(b, J, zeros);

                auto fail = [&](const char* reason) {
                    rep.pass = false;
                    rep.counterexample = json{{"reason", reason},
                                              {"n", n},
                                              {"J", J},
                                              {"b", exponents_to_json(b)},
                                              {"decomposition", decomposition_to_json(dec)}};
                };

                if (!is_invariant_monomial(dec.g, {})) {
                    fail("g is not H-invariant");
                    break;
                }
                if (dec.scalar_exponent != 0) {
                    fail("zero c-tuple must give scalar exponent 0");
                    break;
                }
                bool structure_ok = true;
                for (int r = 1; r <= dims; ++r) {
                    const bool in_J =
                        std::binary_search(J.begin(), J.end(), r);
                    const std::int64_t br = b.exps[static_cast<std::size_t>(r - 1)];
                    const std::int64_t gr = dec.g.exps[static_cast<std::size_t>(r - 1)];
                    if (!in_J && gr != br) structure_ok = false;
                }
                for (int idx = 0; idx < jsz; ++idx) {
                    const int j = J[static_cast<std::size_t>(idx)];
                    const std::int64_t m = dec.m[static_cast<std::size_t>(idx)];
                    const std::int64_t bj = b.exps[static_cast<std::size_t>(j - 1)];
                    if (m < 0 || m >= n) structure_ok = false;
                    if ((bj + m - static_cast<std::int64_t>(dec.proportionality_residue) * j) %
                            n != 0) {
                        structure_ok = false;
                    }
                    if (dec.g.exps[static_cast<std::size_t>(j - 1)] != bj + m) {
                        structure_ok = false;
                    }
                }
                if (!structure_ok) {
                    fail("multiplier structure violated");
                    break;
                }

                // One nonzero tuple through the full call path.
                if (jsz > 0) {
                    const std::vector<int> ones(static_cast<std::size_t>(jsz), 1);
                    const InvariantDecomposition dec1 =
                        invariant_sum_decomposition(b, J, ones);
                    std::int64_t msum = 0;
                    for (std::int64_t m : dec1.m) msum += m;
                    if (dec1.g != dec.g || dec1.m != dec.m ||
                        dec1.scalar_exponent != static_cast<int>(msum % n)) {
                        fail("scalar exponent wrong for the all-ones tuple");
                        break;
                    }
                }

                // Residual identity at z_j = omega^{c_j}, z_k = 0, for every
                // tuple: the evaluation of scalar * f - g must vanish, i.e.
                // scalar + sum c_j b_j = sum c_j (b_j + m_j) mod n.
                bool residual_ok = true;
                std::vector<int> ct(static_cast<std::size_t>(jsz), 0);
                for (std::int64_t t = 0; t < ctuples && residual_ok; ++t) {
                    std::int64_t rem = t;
                    std::int64_t scalar = 0;
                    std::int64_t lhs = 0;
                    std::int64_t rhs = 0;
                    for (int idx = 0; idx < jsz; ++idx) {
                        const int cj = static_cast<int>(rem % n);
                        rem /= n;
                        const int j = J[static_cast<std::size_t>(idx)];
                        const std::int64_t bj = b.exps[static_cast<std::size_t>(j - 1)];
                        const std::int64_t mj = dec.m[static_cast<std::size_t>(idx)];
                        scalar += cj * mj;
                        lhs += cj * bj;
                        rhs += cj * (bj + mj);
                        ct[static_cast<std::size_t>(idx)] = cj;
                    }
                    if ((scalar % n + lhs % n) % n != rhs % n) {
                        residual_ok = false;
                        rep.pass = false;
                        rep.counterexample =
                            json{{"reason", "residual identity fails at evaluation point"},
                                 {"n", n},
                                 {"J", J},
                                 {"b", exponents_to_json(b)},
                                 {"c", ctuple_to_json(J, ct)}};
                    }
                }
                if (!residual_ok) break;
            }
        }
    }
    rep.ms = sw.ms();
    return rep;
}

namespace {

// Every assignment of [n-1] into (I, J, K), for n = 1 .. cap.
VerificationReport sweep_frames(const char* name, int n_max,
                                const std::function<VerificationReport(const ToricFrame&)>& run) {
    Stopwatch sw;
    const int cap = std::min(n_max, 6);
    VerificationReport rep;
    rep.check = name;
    rep.counterexample = nullptr;

    std::int64_t frames = 0;
    for (int n = 1; n <= cap && rep.pass; ++n) {
        const int dims = n - 1;
        std::int64_t total = 1;
        for (int idx = 0; idx < dims; ++idx) total *= 3;
        for (std::int64_t t = 0; t < total && rep.pass; ++t) {
            std::vector<int> I, J, K;
            std::int64_t rem = t;
            for (int i = 1; i <= dims; ++i) {
                switch (rem % 3) {
                    case 0: I.push_back(i); break;
                    case 1: J.push_back(i); break;
                    default: K.push_back(i); break;
                }
                rem /= 3;
            }
            ++frames;
            VerificationReport sub = run(ToricFrame(n, I, J, K));
            if (!sub.pass) {
                rep.pass = false;
                rep.counterexample = sub.counterexample;
            }
        }
    }
    rep.range = "all 3^(n-1) frames per n, n <= " + std::to_string(cap) + " (" +
                std::to_string(frames) + " frames)";
    rep.ms = sw.ms();
    return rep;
}

}  // namespace

VerificationReport orbit_oracle_sweep(int n_max) {
    return sweep_frames("orbit_oracle_sweep", n_max,
                        [](const ToricFrame& f) { return orbit_oracle(f); });
}

VerificationReport character_decomposition_sweep(int n_max) {
    return sweep_frames("character_decomposition_sweep", n_max,
                        [](const ToricFrame& f) { return check_character_decomposition(f); });
}

std::vector<VerificationReport> verify_all(int n_max_tableau, int n_max_group) {
    std::vector<VerificationReport> out;
    out.push_back(check_tableau_identities(n_max_tableau));
    out.push_back(check_poincare_identities(n_max_tableau));
    out.push_back(orbit_oracle_sweep(n_max_group));
    out.push_back(character_decomposition_sweep(n_max_group));
    out.push_back(check_invariant_monomials(n_max_group));
    return out;
}

std::int64_t hook_length_count(const Partition& lambda) {
    const int n = lambda.n();
    if (n > 20) {
        throw std::invalid_argument("hook length count overflows 64 bits beyond n = 20");
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;

    const auto& parts = lambda.parts();
    std::int64_t hooks = 1;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 1; c <= parts[r]; ++c) {
            int arm = parts[r] - c;
            int leg = 0;
            for (std::size_t rr = r + 1; rr < parts.size(); ++rr) {
                if (parts[rr] >= c) ++leg;
            }
            hooks *= arm + leg + 1;
        }
    }
    return fact / hooks;
}

}  // namespace springer
