// Acceptance suite: one criterion per check, each printing a pass/fail line.
// Every tolerance is exact (rational arithmetic); every expectation is pinned
// here, derived from the independent oracles or classical cross-checks.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <vector>

#include "toricbv/bv.hpp"
#include "toricbv/corpus.hpp"
#include "toricbv/oracles.hpp"

using namespace toricbv;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

Variety analyze(const std::string& name) {
    return Variety::analyze(corpus::find(name)->fan);
}

Weight w(std::initializer_list<long> coords) {
    Weight out;
    for (long c : coords) out.push_back(Int(c));
    return out;
}

// ---------------------------------------------------------------------------
// 1. Dimension tables, cross-checked against classical automorphism and
//    anticanonical dimensions. Each fan under one second.
Criterion criterion_dimensions() {
    Criterion c;

    const auto check_dims = [&](const std::string& name,
                                const std::vector<std::size_t>& expected) {
        const auto start = Clock::now();
        const auto dims = analyze(name).degree_dims();
        const long elapsed = ms_since(start);
        std::ostringstream os;
        os << name << ": computed (";
        for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
        os << "), expected (";
        for (std::size_t i = 0; i < expected.size(); ++i)
            os << (i ? "," : "") << expected[i];
        os << ")";
        c.expect(dims == expected, os.str());
        c.expect(elapsed < 1000, name + ": exceeded 1 s");
    };

    check_dims("p1", {1, 3});        // 3 = dim of the automorphisms of the line
    check_dims("p2", {1, 8, 10});    // 8 = dim PGL_3, 10 = anticanonical sections
    check_dims("p1xp1", {1, 6, 9});  // 6 = dim (PGL_2 x PGL_2), 9 = anticanonical

    {
        const auto start = Clock::now();
        const auto dims = analyze("p3").degree_dims();
        c.expect(dims[1] == 15, "p3: degree-1 dimension " + std::to_string(dims[1]) +
                                    ", expected 15 = dim PGL_4");
        c.expect(ms_since(start) < 1000, "p3: exceeded 1 s");
    }

    {
        // Pinned value 7 for the first Hirzebruch surface. The block-sum
        // oracle, the root count, and the Euler-sequence cross-check all
        // yield 6 = dim Aut0, so this expectation cannot be met; it is kept
        // as stated rather than silently adjusted. See README (known issues).
        const auto start = Clock::now();
        const auto dims = analyze("hirzebruch_1").degree_dims();
        c.expect(dims[1] == 7, "hirzebruch_1: degree-1 dimension " +
                                   std::to_string(dims[1]) +
                                   ", pinned expectation 7 (computed value and "
                                   "dim Aut0 both equal 6)");
        c.expect(ms_since(start) < 1000, "hirzebruch_1: exceeded 1 s");
    }

    // top-degree dimension equals the lattice point count on every fan
    for (const auto& named : corpus::standard()) {
        const Variety v = Variety::analyze(named.fan);
        c.expect(v.basis.dim(named.fan.dim) == v.points.size(),
                 named.name + ": top-degree dimension differs from the point count");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 2. Existence decisions of the generating operator.
Criterion criterion_existence() {
    Criterion c;
    for (const std::string name : {"p1", "p2", "p3", "p1xp1", "hirzebruch_0",
                                   "hirzebruch_1", "hirzebruch_2", "hirzebruch_3", "dp6"}) {
        const auto start = Clock::now();
        const BVSolution sol = existence(analyze(name));
        c.expect(!sol.exists, name + ": operator reported to exist");
        c.expect(ms_since(start) < 1000, name + ": exceeded 1 s");
    }
    const auto start = Clock::now();
    const BVSolution sol = existence(analyze("blowup16"));
    c.expect(sol.exists, "blowup16: operator reported missing");
    c.expect(sol.exists && sol.delta_kernel.size() == 2,
             "blowup16: solution space dimension != 2");
    c.expect(ms_since(start) < 1000, "blowup16: exceeded 1 s");
    return c;
}

// ---------------------------------------------------------------------------
// 3. Operator verification on the 16-ray fan at four parameter values.
Criterion criterion_operator_verification() {
    Criterion c;
    const auto start = Clock::now();
    const Variety v = analyze("blowup16");
    const std::vector<RatVec> deltas = {{Rat(0), Rat(0)},
                                        {Rat(1), Rat(0)},
                                        {Rat(0), Rat(1)},
                                        {Rat(1), Rat(1)}};
    for (const auto& delta : deltas) {
        const BVOperator op = build_operator(delta, v);
        const OperatorVerification ver = verify_operator(op, v);
        c.expect(ver.d_squared_zero, "delta " + to_string(delta) + ": square not zero");
        c.expect(ver.violation_count == 0,
                 "delta " + to_string(delta) + ": identity violations");
        const std::size_t total = v.basis.total_dim();
        c.expect(ver.pairs_checked == total * total,
                 "delta " + to_string(delta) + ": pair check not exhaustive");
        c.expect(ver.triples_checked == total * total * total,
                 "delta " + to_string(delta) + ": triple check not exhaustive");
    }
    c.expect(ms_since(start) < 10000, "verification exceeded 10 s");
    return c;
}

// ---------------------------------------------------------------------------
// 4. Gerstenhaber axioms on every corpus fan within the budget.
Criterion criterion_axioms() {
    Criterion c;
    for (const auto& named : corpus::standard()) {
        const auto start = Clock::now();
        const Variety v = Variety::analyze(named.fan);
        const AlgebraTables tables = build_tables(v);
        AxiomBudget budget;  // exhaustive up to total dimension 40, then 1000 samples
        for (const auto& report : oracle_axioms(tables, nullptr, budget)) {
            c.expect(report.pass, named.name + ": " + report.name + " fails (" +
                                      report.counterexample + ")");
            if (v.basis.total_dim() <= budget.exhaustive_limit &&
                (report.name == "graded-jacobi" || report.name == "leibniz")) {
                const std::size_t cube =
                    v.basis.total_dim() * v.basis.total_dim() * v.basis.total_dim();
                c.expect(report.checked == cube,
                         named.name + ": " + report.name + " not exhaustive");
            }
        }
        c.expect(ms_since(start) < 60000, named.name + ": exceeded 60 s");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 5. Closure: products and brackets stay in their predicted weight blocks.
Criterion criterion_closure() {
    Criterion c;
    for (const auto& named : corpus::standard()) {
        const Variety v = Variety::analyze(named.fan);
        const int n = named.fan.dim;
        std::size_t violations = 0;
        for (int ka = 0; ka <= n; ++ka)
            for (const auto& ea : v.basis.entries(ka))
                for (int kb = 0; kb <= n; ++kb)
                    for (const auto& eb : v.basis.entries(kb)) {
                        const auto a = WeightedPolyvector::monomial(Variant::field, ea.point,
                                                                    ea.multivector);
                        const auto b = WeightedPolyvector::monomial(Variant::field, eb.point,
                                                                    eb.multivector);
                        const auto prod = wedge_fields(a, b);
                        for (const auto& [I, A] : prod.terms())
                            if (!membership(v.basis, I, A, ka + kb)) ++violations;
                        const auto brak = schouten(a, b);
                        for (const auto& [I, A] : brak.terms())
                            if (!membership(v.basis, I, A, ka + kb - 1)) ++violations;
                    }
        c.expect(violations == 0,
                 named.name + ": " + std::to_string(violations) + " closure violations");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 6. Vertex pinning and classification of the operator family.
Criterion criterion_lemma_consequences() {
    Criterion c;

    // (a) existence forces at most one lattice vertex, and a vertex pins delta
    for (const auto& named : corpus::standard()) {
        const Variety v = Variety::analyze(named.fan);
        const BVSolution sol = existence(v);
        if (!sol.exists) continue;
        const auto vertices = lattice_vertices(v.points);
        c.expect(vertices.size() <= 1,
                 named.name + ": operator exists with several lattice vertices");
        if (vertices.size() == 1) {
            bool pinned = sol.delta_kernel.empty();
            for (std::size_t i = 0; i < sol.delta_particular.size() && pinned; ++i)
                if (sol.delta_particular[i] != Rat(vertices[0].point[i])) pinned = false;
            c.expect(pinned, named.name + ": solution space is not the lattice vertex");
        }
    }

    // the same consequence on the bundled one-vertex fixture, where it bites
    {
        std::vector<LatticeVector> rays = {{1, 0},  {2, 1},  {1, 1},  {0, 1},
                                           {-1, 1}, {-2, 1}, {-1, 0}, {-1, -1},
                                           {0, -1}, {1, -2}, {1, -1}};
        std::vector<std::vector<int>> cones;
        for (int i = 0; i < 10; ++i) cones.push_back({i, i + 1});
        cones.push_back({0, 10});
        const Variety v = Variety::analyze(Fan(2, std::move(rays), std::move(cones)));
        const BVSolution sol = existence(v);
        const auto vertices = lattice_vertices(v.points);
        c.expect(sol.exists, "one-vertex surface: operator missing");
        c.expect(vertices.size() == 1, "one-vertex surface: vertex count != 1");
        c.expect(sol.exists && sol.delta_kernel.empty() &&
                     sol.delta_particular == RatVec{Rat(0), Rat(-1)},
                 "one-vertex surface: solution not pinned to the vertex");
    }

    // (b) the operator family is classified by delta, corruptions are rejected
    {
        const Variety v = analyze("blowup16");
        const BVSolution sol = existence(v);
        std::vector<RatVec> deltas = {sol.delta_particular};
        for (const auto& k : sol.delta_kernel) {
            RatVec d = sol.delta_particular;
            for (std::size_t i = 0; i < d.size(); ++i) d[i] += k[i];
            deltas.push_back(d);
        }
        deltas.push_back({Rat(1, 2), Rat(-3)});
        for (const auto& delta : deltas) {
            const BVOperator op = build_operator(delta, v);
            const auto recovered = classify_form(op.matrices, v);
            c.expect(recovered.has_value() && *recovered == delta,
                     "classification round-trip fails at delta " + to_string(delta));
        }

        const BVOperator op = build_operator({Rat(1), Rat(0)}, v);
        std::size_t rejected = 0;

        auto corrupted = op.matrices;
        corrupted[1].at(1, 0) = -corrupted[1].at(1, 0);
        if (!classify_form(corrupted, v)) ++rejected;

        corrupted = op.matrices;
        corrupted[0].at(0, 1) = Rat(7);
        if (!classify_form(corrupted, v)) ++rejected;

        corrupted = op.matrices;
        for (std::size_t r = 0; r < corrupted[1].rows(); ++r)
            for (std::size_t col = 0; col < corrupted[1].cols(); ++col)
                corrupted[1].at(r, col) *= Rat(3);
        if (!classify_form(corrupted, v)) ++rejected;

        c.expect(rejected == 3, "only " + std::to_string(rejected) +
                                    " of 3 corrupted candidates were rejected");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 7. Oracle equivalence: independent routes agree with the fast paths.
Criterion criterion_oracles() {
    Criterion c;

    for (const auto& named : corpus::standard()) {
        if (named.fan.dim > 3) continue;
        const auto polytope = build_polytope(named.fan);
        std::vector<Weight> fast;
        for (const auto& rec : lattice_points(polytope)) fast.push_back(rec.point);
        c.expect(oracle_lattice_points(polytope) == fast,
                 named.name + ": lattice point oracle disagrees");
    }

    for (int n = 2; n <= 3; ++n) {
        const OracleReport report = oracle_contraction_lemma(n, 200, 1);
        c.expect(report.pass && report.checked >= 200,
                 "contraction lemma n=" + std::to_string(n) + ": " + report.counterexample);
    }

    std::size_t pairs = 0;
    for (const std::string name : {"p1", "p2"}) {
        const auto named = corpus::find(name);
        const Variety v = Variety::analyze(named->fan);
        std::size_t disagreements = 0;
        for (int ka = 0; ka <= named->fan.dim; ++ka)
            for (const auto& ea : v.basis.entries(ka))
                for (int kb = 0; kb <= named->fan.dim; ++kb)
                    for (const auto& eb : v.basis.entries(kb)) {
                        const auto a = WeightedPolyvector::monomial(Variant::field, ea.point,
                                                                    ea.multivector);
                        const auto b = WeightedPolyvector::monomial(Variant::field, eb.point,
                                                                    eb.multivector);
                        ++pairs;
                        if (oracle_chart_bracket(named->fan, a, b) != schouten(a, b))
                            ++disagreements;
                    }
        c.expect(disagreements == 0,
                 name + ": " + std::to_string(disagreements) + " chart disagreements");
    }
    c.expect(pairs >= 20, "fewer than 20 chart pairs in total");
    return c;
}

// ---------------------------------------------------------------------------
// 8. Torus algebra: the operator squares to zero and generates the bracket
//    on all monomials with weights in [-2,2]^2.
Criterion criterion_torus() {
    Criterion c;
    const auto start = Clock::now();

    std::vector<WeightedPolyvector> monomials;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (int k = 0; k <= 2; ++k)
                for (const auto& t : index_tuples(2, k))
                    monomials.push_back(WeightedPolyvector::monomial(
                        Variant::torus, w({a, b}), Multivector::basis(t)));

    std::size_t square_failures = 0;
    for (const auto& x : monomials)
        if (!torus_bv(torus_bv(x)).is_zero()) ++square_failures;
    c.expect(square_failures == 0,
             std::to_string(square_failures) + " monomials with nonzero square");

    std::size_t pair_failures = 0;
    for (const auto& x : monomials) {
        const Rat sign = (x.degree() % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& y : monomials) {
            WeightedPolyvector rhs = torus_bv(wedge_fields(x, y));
            rhs -= wedge_fields(torus_bv(x), y);
            rhs -= sign * wedge_fields(x, torus_bv(y));
            rhs *= sign;
            if (schouten(x, y) != rhs) ++pair_failures;
        }
    }
    c.expect(pair_failures == 0,
             std::to_string(pair_failures) + " pairs violate the generating identity");
    c.expect(ms_since(start) < 5000, "torus checks exceeded 5 s");
    return c;
}

struct Entry {
    int number;
    const char* description;
    Criterion (*run)();
};

const Entry kCriteria[] = {
    {1, "dimension tables with classical cross-checks", criterion_dimensions},
    {2, "generating-operator existence decisions", criterion_existence},
    {3, "operator verification on the 16-ray fan", criterion_operator_verification},
    {4, "graded-algebra axioms across the corpus", criterion_axioms},
    {5, "closure of products and brackets in weight blocks", criterion_closure},
    {6, "vertex pinning and operator classification", criterion_lemma_consequences},
    {7, "independent oracles agree with fast paths", criterion_oracles},
    {8, "torus-algebra operator identities", criterion_torus},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[i + 1]);
    }

    bool all_pass = true;
    for (const auto& entry : kCriteria) {
        if (only != 0 && entry.number != only) continue;
        const auto start = Clock::now();
        const Criterion result = entry.run();
        const long elapsed = ms_since(start);
        std::cout << "criterion " << entry.number << ": "
                  << (result.pass ? "PASS" : "FAIL") << " - " << entry.description << " ("
                  << elapsed << " ms)\n";
        for (const auto& note : result.notes) std::cout << "    " << note << "\n";
        if (!result.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
