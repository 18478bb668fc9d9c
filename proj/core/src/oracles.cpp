#include "toricbv/oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toricbv/chart.hpp"
#include "toricbv/errors.hpp"
#include "toricbv/prng.hpp"

namespace toricbv {

std::vector<Weight> oracle_lattice_points(const WeightPolytope& p) {
    if (p.dim > 3) throw input_error("oracle_lattice_points: supported up to dimension 3");
    const std::size_t m = p.normals.size();
    const std::size_t n = p.dim;
    if (m < n) throw input_error("oracle_lattice_points: too few constraints for vertices");

    // Candidate vertices: solutions of every n-subset of tight constraints.
    std::vector<RatVec> vertices;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        RatMatrix a(n, n);
        RatVec b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a.at(r, c) = Rat(p.normals[idx[r]][c]);
            b[r] = p.bounds[idx[r]];
        }
        if (rank(a) == n) {
            const auto sol = solve_affine(a, b);
            bool feasible = true;
            for (std::size_t t = 0; t < m && feasible; ++t) {
                Rat v;
                for (std::size_t c = 0; c < n; ++c)
                    v += Rat(p.normals[t][c]) * sol->particular[c];
                if (v < p.bounds[t]) feasible = false;
            }
            if (feasible) vertices.push_back(sol->particular);
        }
        // next n-subset
        long i = static_cast<long>(n) - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (vertices.empty())
        throw input_error("oracle_lattice_points: no vertices (region empty or unbounded)");

    std::vector<Int> lo(n), hi(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rat mn = vertices[0][c], mx = vertices[0][c];
        for (const auto& v : vertices) {
            if (v[c] < mn) mn = v[c];
            if (v[c] > mx) mx = v[c];
        }
        lo[c] = mn.ceil();
        hi[c] = mx.floor();
    }

    std::vector<Weight> out;
    Weight cur(lo.begin(), lo.end());
    while (true) {
        bool inside = true;
        for (std::size_t t = 0; t < m && inside; ++t)
            if (pairing(cur, p.normals[t]) < p.bounds[t]) inside = false;
        if (inside) out.push_back(cur);
        long j = static_cast<long>(n) - 1;
        while (j >= 0) {
            if (cur[j] < hi[j]) {
                ++cur[j];
                for (std::size_t c = j + 1; c < n; ++c) cur[c] = lo[c];
                break;
            }
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

OracleReport oracle_contraction_lemma(int n, std::size_t trials, std::uint64_t seed) {
    if (n > 4) throw input_error("oracle_contraction_lemma: supported up to dimension 4");
    OracleReport report;
    report.name = "contraction-lemma";
    {
        std::ostringstream os;
        os << "n=" << n << " trials=" << trials << " seed=" << seed;
        report.instance = os.str();
    }
    SplitMix64 rng(seed);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Random integer matrix; its row space is F, with echelon basis rows.
        const std::size_t nrows = 1 + rng.below(n);
        RatMatrix raw(nrows, n);
        for (std::size_t r = 0; r < nrows; ++r)
            for (int c = 0; c < n; ++c) raw.at(r, c) = Rat(rng.range(-3, 3));
        const auto [red, pivots] = rref(raw);
        if (pivots.empty()) continue;  // zero subspace, nothing to wedge

        Multivector A = Multivector::scalar(Rat(1));
        std::vector<RatVec> basis_rows;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            basis_rows.push_back(red.row(r));
            A = wedge(A, Multivector::from_vector(red.row(r)));
        }

        const auto check = [&](const CharacterVector& alpha) {
            ++report.checked;
            bool annihilates = true;
            for (const auto& row : basis_rows)
                if (!dot(alpha, row).is_zero()) annihilates = false;
            const bool contraction_zero = contract(alpha, A).is_zero();
            if (annihilates != contraction_zero) {
                std::ostringstream os;
                os << "trial " << trial << ": alpha=" << to_string(alpha)
                   << " annihilates=" << annihilates
                   << " but contraction zero=" << contraction_zero;
                report.fail(os.str());
            }
        };

        // A generic covector...
        CharacterVector alpha(n);
        for (int c = 0; c < n; ++c) alpha[c] = Rat(rng.range(-3, 3));
        check(alpha);

        // ...and one from the annihilator of F, when it is nonzero.
        const auto ker = kernel_basis(RatMatrix::from_rows(basis_rows));
        if (!ker.empty()) {
            CharacterVector in_perp(n);
            for (const auto& kvec : ker) {
                const Rat coeff = Rat(rng.range(-2, 2));
                for (int c = 0; c < n; ++c) in_perp[c] += coeff * kvec[c];
            }
            check(in_perp);
        }
    }
    return report;
}

std::size_t AlgebraTables::global_index(int degree, std::size_t i) const {
    std::size_t offset = 0;
    for (int k = 0; k < degree; ++k) offset += dims[k];
    return offset + i;
}

int AlgebraTables::degree_of(std::size_t g) const {
    for (int k = 0; k <= n; ++k) {
        if (g < dims[k]) return k;
        g -= dims[k];
    }
    throw internal_error("degree_of: index out of range");
}

std::size_t AlgebraTables::local_index(std::size_t g) const {
    for (int k = 0; k <= n; ++k) {
        if (g < dims[k]) return g;
        g -= dims[k];
    }
    throw internal_error("local_index: index out of range");
}

AlgebraTables::Elem AlgebraTables::add(const Elem& a, const Elem& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree) throw internal_error("table add: degree mismatch");
    Elem out;
    out.degree = a.degree;
    std::size_t i = 0, j = 0;
    while (i < a.coords.size() || j < b.coords.size()) {
        if (j == b.coords.size() ||
            (i < a.coords.size() && a.coords[i].first < b.coords[j].first)) {
            out.coords.push_back(a.coords[i++]);
        } else if (i == a.coords.size() || b.coords[j].first < a.coords[i].first) {
            out.coords.push_back(b.coords[j++]);
        } else {
            const Rat sum = a.coords[i].second + b.coords[j].second;
            if (!sum.is_zero()) out.coords.emplace_back(a.coords[i].first, sum);
            ++i;
            ++j;
        }
    }
    return out;
}

AlgebraTables::Elem AlgebraTables::scale(const Rat& c, const Elem& a) const {
    if (c.is_zero()) return Elem{a.degree, {}};
    Elem out;
    out.degree = a.degree;
    for (const auto& [idx, v] : a.coords) out.coords.emplace_back(idx, c * v);
    return out;
}

AlgebraTables::Elem AlgebraTables::prod_elem(const Elem& a, const Elem& b) const {
    Elem out;
    out.degree = a.degree + b.degree;
    for (const auto& [ia, ca] : a.coords) {
        const std::size_t ga = global_index(a.degree, ia);
        for (const auto& [ib, cb] : b.coords) {
            const std::size_t gb = global_index(b.degree, ib);
            out = add(out, scale(ca * cb, prod(ga, gb)));
        }
    }
    if (out.coords.empty()) out.degree = a.degree + b.degree;
    return out;
}

AlgebraTables::Elem AlgebraTables::brak_elem(const Elem& a, const Elem& b) const {
    Elem out;
    out.degree = a.degree + b.degree >= 1 ? a.degree + b.degree - 1 : 0;
    for (const auto& [ia, ca] : a.coords) {
        const std::size_t ga = global_index(a.degree, ia);
        for (const auto& [ib, cb] : b.coords) {
            const std::size_t gb = global_index(b.degree, ib);
            out = add(out, scale(ca * cb, brak(ga, gb)));
        }
    }
    return out;
}

AlgebraTables::Elem AlgebraTables::unit(std::size_t g, int degree) const {
    Elem out;
    out.degree = degree;
    out.coords.emplace_back(local_index(g), Rat(1));
    return out;
}

AlgebraTables::Elem AlgebraTables::apply(const std::vector<RatMatrix>& matrices,
                                         const Elem& a) const {
    Elem out;
    out.degree = a.degree >= 1 ? a.degree - 1 : 0;
    if (a.degree < 1 || a.degree > n) return out;
    const RatMatrix& mat = matrices[a.degree - 1];
    RatVec dense(mat.rows());
    for (const auto& [i, c] : a.coords)
        for (std::size_t r = 0; r < mat.rows(); ++r) dense[r] += mat.at(r, i) * c;
    for (std::size_t r = 0; r < dense.size(); ++r)
        if (!dense[r].is_zero()) out.coords.emplace_back(r, dense[r]);
    return out;
}

AlgebraTables build_tables(const Variety& variety) {
    AlgebraTables t;
    t.n = variety.fan.dim;
    t.dims.resize(t.n + 1);
    for (int k = 0; k <= t.n; ++k) t.dims[k] = variety.basis.dim(k);
    t.total = variety.basis.total_dim();

    struct Ref {
        int degree;
        std::size_t index;
    };
    std::vector<Ref> refs;
    std::vector<WeightedPolyvector> elems;
    for (int k = 0; k <= t.n; ++k)
        for (std::size_t i = 0; i < t.dims[k]; ++i) {
            refs.push_back({k, i});
            const auto& e = variety.basis.entries(k)[i];
            elems.push_back(WeightedPolyvector::monomial(Variant::field, e.point,
                                                         e.multivector));
        }

    const auto to_elem = [&](const WeightedPolyvector& w, int degree) {
        AlgebraTables::Elem out;
        out.degree = degree;
        if (w.is_zero() || degree > t.n || degree < 0) return out;
        for (const auto& [I, A] : w.terms()) {
            const WeightBlock* block = variety.basis.block(I, degree);
            std::optional<RatVec> local =
                block ? block->coordinates(A, t.n) : std::nullopt;
            if (!local)
                throw internal_error("build_tables: product escaped its weight block");
            const std::size_t offset = *variety.basis.block_offset(I, degree);
            for (std::size_t i = 0; i < local->size(); ++i)
                if (!(*local)[i].is_zero())
                    out.coords.emplace_back(offset + i, (*local)[i]);
        }
        std::sort(out.coords.begin(), out.coords.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };

    t.product.resize(t.total * t.total);
    t.bracket.resize(t.total * t.total);
    for (std::size_t g1 = 0; g1 < t.total; ++g1) {
        for (std::size_t g2 = 0; g2 < t.total; ++g2) {
            const int dprod = refs[g1].degree + refs[g2].degree;
            const int dbrak = dprod >= 1 ? dprod - 1 : 0;
            t.product[g1 * t.total + g2] =
                to_elem(wedge_fields(elems[g1], elems[g2]), dprod);
            t.bracket[g1 * t.total + g2] =
                to_elem(schouten(elems[g1], elems[g2]), dbrak);
        }
    }
    return t;
}

namespace {

using Elem = AlgebraTables::Elem;

bool elems_equal(const Elem& a, const Elem& b) {
    if (a.coords.empty() && b.coords.empty()) return true;
    return a.degree == b.degree && a.coords == b.coords;
}

Rat sign_pow(long exponent) {
    return ((exponent % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1);
}

}  // namespace

std::vector<OracleReport> oracle_axioms(const AlgebraTables& tables,
                                        const std::vector<RatMatrix>* op_matrices,
                                        const AxiomBudget& budget) {
    std::vector<OracleReport> reports;
    const std::size_t total = tables.total;

    const auto describe = [&](std::size_t g) {
        std::ostringstream os;
        os << "deg " << tables.degree_of(g) << " #" << tables.local_index(g);
        return os.str();
    };

    // pairwise axioms: graded commutativity and graded anti-symmetry
    {
        OracleReport comm, anti;
        comm.name = "graded-commutativity";
        anti.name = "graded-anti-symmetry";
        for (std::size_t g1 = 0; g1 < total; ++g1) {
            const int k = tables.degree_of(g1);
            for (std::size_t g2 = 0; g2 < total; ++g2) {
                const int l = tables.degree_of(g2);
                ++comm.checked;
                if (!elems_equal(tables.prod(g1, g2),
                                 tables.scale(sign_pow(long(k) * l), tables.prod(g2, g1))))
                    comm.fail("pair (" + describe(g1) + ", " + describe(g2) + ")");
                ++anti.checked;
                if (!elems_equal(
                        tables.brak(g1, g2),
                        tables.scale(-sign_pow(long(k - 1) * (l - 1)), tables.brak(g2, g1))))
                    anti.fail("pair (" + describe(g1) + ", " + describe(g2) + ")");
            }
        }
        reports.push_back(std::move(comm));
        reports.push_back(std::move(anti));
    }

    // triple axioms under the budget
    OracleReport assoc, jacobi, leibniz;
    assoc.name = "associativity";
    jacobi.name = "graded-jacobi";
    leibniz.name = "leibniz";

    const auto check_triple = [&](std::size_t g1, std::size_t g2, std::size_t g3) {
        const int ka = tables.degree_of(g1);
        const int kb = tables.degree_of(g2);
        const int kc = tables.degree_of(g3);
        const Elem a = tables.unit(g1, ka);
        const Elem b = tables.unit(g2, kb);
        const Elem c = tables.unit(g3, kc);

        ++assoc.checked;
        if (!elems_equal(tables.prod_elem(a, tables.prod_elem(b, c)),
                         tables.prod_elem(tables.prod_elem(a, b), c)))
            assoc.fail("triple (" + describe(g1) + ", " + describe(g2) + ", " +
                       describe(g3) + ")");

        // (-1)^((ka-1)(kc-1)) [[a,b],c] + cyclic = 0
        ++jacobi.checked;
        Elem jac = tables.scale(sign_pow(long(ka - 1) * (kc - 1)),
                                tables.brak_elem(tables.brak_elem(a, b), c));
        jac = tables.add(jac, tables.scale(sign_pow(long(kb - 1) * (ka - 1)),
                                           tables.brak_elem(tables.brak_elem(b, c), a)));
        jac = tables.add(jac, tables.scale(sign_pow(long(kc - 1) * (kb - 1)),
                                           tables.brak_elem(tables.brak_elem(c, a), b)));
        if (!jac.coords.empty())
            jacobi.fail("triple (" + describe(g1) + ", " + describe(g2) + ", " +
                        describe(g3) + ")");

        // [a, b c] = [a,b] c + (-1)^((ka-1) kb) b [a,c]
        ++leibniz.checked;
        const Elem lhs = tables.brak_elem(a, tables.prod_elem(b, c));
        Elem rhs = tables.prod_elem(tables.brak_elem(a, b), c);
        rhs = tables.add(rhs, tables.scale(sign_pow(long(ka - 1) * kb),
                                           tables.prod_elem(b, tables.brak_elem(a, c))));
        if (!elems_equal(lhs, rhs))
            leibniz.fail("triple (" + describe(g1) + ", " + describe(g2) + ", " +
                         describe(g3) + ")");
    };

    if (total <= budget.exhaustive_limit) {
        for (std::size_t g1 = 0; g1 < total; ++g1)
            for (std::size_t g2 = 0; g2 < total; ++g2)
                for (std::size_t g3 = 0; g3 < total; ++g3) check_triple(g1, g2, g3);
    } else {
        SplitMix64 rng(budget.seed);
        for (std::size_t s = 0; s < budget.samples; ++s)
            check_triple(rng.below(total), rng.below(total), rng.below(total));
    }
    reports.push_back(std::move(assoc));
    reports.push_back(std::move(jacobi));
    reports.push_back(std::move(leibniz));

    if (op_matrices) {
        OracleReport square, generating, order2, equivalence;
        square.name = "operator-square-zero";
        generating.name = "operator-generates-bracket";
        order2.name = "operator-order-2";
        equivalence.name = "bv-definitions-equivalent";

        bool square_ok = true;
        for (int k = 2; k <= tables.n; ++k) {
            ++square.checked;
            if (!matmul((*op_matrices)[k - 2], (*op_matrices)[k - 1]).is_zero()) {
                square_ok = false;
                std::ostringstream os;
                os << "D.D != 0 out of degree " << k;
                square.fail(os.str());
            }
        }

        const auto D = [&](const Elem& x) { return tables.apply(*op_matrices, x); };

        bool generating_ok = true;
        for (std::size_t g1 = 0; g1 < total; ++g1) {
            const int k = tables.degree_of(g1);
            const Elem a = tables.unit(g1, k);
            for (std::size_t g2 = 0; g2 < total; ++g2) {
                const Elem b = tables.unit(g2, tables.degree_of(g2));
                ++generating.checked;
                Elem rhs = D(tables.prod_elem(a, b));
                rhs = tables.add(rhs, tables.scale(Rat(-1), tables.prod_elem(D(a), b)));
                rhs = tables.add(rhs, tables.scale(-sign_pow(k), tables.prod_elem(a, D(b))));
                rhs = tables.scale(sign_pow(k), rhs);
                if (!elems_equal(tables.brak(g1, g2), rhs)) {
                    generating_ok = false;
                    generating.fail("pair (" + describe(g1) + ", " + describe(g2) + ")");
                }
            }
        }

        bool order2_ok = true;
        const auto check_order2 = [&](std::size_t g1, std::size_t g2, std::size_t g3) {
            const int ka = tables.degree_of(g1);
            const int kb = tables.degree_of(g2);
            const Elem a = tables.unit(g1, ka);
            const Elem b = tables.unit(g2, kb);
            const Elem c = tables.unit(g3, tables.degree_of(g3));
            const Elem ab = tables.prod_elem(a, b);
            const Elem ac = tables.prod_elem(a, c);
            const Elem bc = tables.prod_elem(b, c);
            ++order2.checked;
            const Elem lhs = D(tables.prod_elem(ab, c));
            Elem rhs = tables.prod_elem(D(ab), c);
            rhs = tables.add(rhs, tables.scale(sign_pow(ka), tables.prod_elem(a, D(bc))));
            rhs = tables.add(rhs, tables.scale(sign_pow(long(kb) * (ka + 1)),
                                               tables.prod_elem(b, D(ac))));
            rhs = tables.add(rhs, tables.scale(Rat(-1),
                                               tables.prod_elem(tables.prod_elem(D(a), b), c)));
            rhs = tables.add(rhs, tables.scale(-sign_pow(ka),
                                               tables.prod_elem(a, tables.prod_elem(D(b), c))));
            rhs = tables.add(rhs, tables.scale(-sign_pow(ka + kb),
                                               tables.prod_elem(ab, D(c))));
            if (!elems_equal(lhs, rhs)) {
                order2_ok = false;
                order2.fail("triple (" + describe(g1) + ", " + describe(g2) + ", " +
                            describe(g3) + ")");
            }
        };

        if (total <= budget.exhaustive_limit) {
            for (std::size_t g1 = 0; g1 < total; ++g1)
                for (std::size_t g2 = 0; g2 < total; ++g2)
                    for (std::size_t g3 = 0; g3 < total; ++g3) check_order2(g1, g2, g3);
        } else {
            SplitMix64 rng(budget.seed + 1);
            for (std::size_t s = 0; s < budget.samples; ++s)
                check_order2(rng.below(total), rng.below(total), rng.below(total));
        }

        // Cross-check of the two characterizations. A generator of the
        // bracket is always an order-2 operator; conversely a square-zero
        // order-2 operator generates *some* bracket, which must then satisfy
        // the graded Lie and Leibniz axioms (it need not be the given one).
        ++equivalence.checked;
        if (square_ok && generating_ok && !order2_ok)
            equivalence.fail("a generating operator failed the order-2 rule");
        if (square_ok && order2_ok) {
            const auto induced = [&](const Elem& a, const Elem& b) {
                Elem out = D(tables.prod_elem(a, b));
                out = tables.add(out, tables.scale(Rat(-1), tables.prod_elem(D(a), b)));
                out = tables.add(out,
                                 tables.scale(-sign_pow(a.degree), tables.prod_elem(a, D(b))));
                return tables.scale(sign_pow(a.degree), out);
            };
            const auto check_induced = [&](std::size_t g1, std::size_t g2, std::size_t g3) {
                const long ka = tables.degree_of(g1);
                const long kb = tables.degree_of(g2);
                const long kc = tables.degree_of(g3);
                const Elem a = tables.unit(g1, static_cast<int>(ka));
                const Elem b = tables.unit(g2, static_cast<int>(kb));
                const Elem c = tables.unit(g3, static_cast<int>(kc));
                // graded anti-symmetry of the induced bracket
                if (!elems_equal(induced(a, b),
                                 tables.scale(-sign_pow((ka - 1) * (kb - 1)), induced(b, a))))
                    equivalence.fail("induced bracket not anti-symmetric at (" +
                                     describe(g1) + ", " + describe(g2) + ")");
                // graded Jacobi identity of the induced bracket
                Elem jac = tables.scale(sign_pow((ka - 1) * (kc - 1)),
                                        induced(induced(a, b), c));
                jac = tables.add(jac, tables.scale(sign_pow((kb - 1) * (ka - 1)),
                                                   induced(induced(b, c), a)));
                jac = tables.add(jac, tables.scale(sign_pow((kc - 1) * (kb - 1)),
                                                   induced(induced(c, a), b)));
                if (!jac.coords.empty())
                    equivalence.fail("induced bracket fails Jacobi at (" + describe(g1) +
                                     ", " + describe(g2) + ", " + describe(g3) + ")");
                // Leibniz compatibility of the induced bracket
                Elem rhs = tables.prod_elem(induced(a, b), c);
                rhs = tables.add(rhs, tables.scale(sign_pow((ka - 1) * kb),
                                                   tables.prod_elem(b, induced(a, c))));
                if (!elems_equal(induced(a, tables.prod_elem(b, c)), rhs))
                    equivalence.fail("induced bracket fails Leibniz at (" + describe(g1) +
                                     ", " + describe(g2) + ", " + describe(g3) + ")");
                ++equivalence.checked;
            };
            if (total <= budget.exhaustive_limit) {
                for (std::size_t g1 = 0; g1 < total; ++g1)
                    for (std::size_t g2 = 0; g2 < total; ++g2)
                        for (std::size_t g3 = 0; g3 < total; ++g3)
                            check_induced(g1, g2, g3);
            } else {
                SplitMix64 rng(budget.seed + 2);
                for (std::size_t s = 0; s < budget.samples; ++s)
                    check_induced(rng.below(total), rng.below(total), rng.below(total));
            }
        }

        reports.push_back(std::move(square));
        reports.push_back(std::move(generating));
        reports.push_back(std::move(order2));
        reports.push_back(std::move(equivalence));
    }
    return reports;
}

WeightedPolyvector oracle_chart_bracket(const Fan& fan, const WeightedPolyvector& a,
                                        const WeightedPolyvector& b) {
    if (fan.dim > 2)
        throw input_error("oracle_chart_bracket: supported up to dimension 2");
    const ChartPolyvector ca = to_chart(fan, 0, a);
    const ChartPolyvector cb = to_chart(fan, 0, b);
    return from_chart(fan, 0, chart_schouten(ca, cb));
}

}  // namespace toricbv
