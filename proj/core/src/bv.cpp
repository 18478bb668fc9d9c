#include "toricbv/bv.hpp"

#include <set>
#include <sstream>

#include "toricbv/errors.hpp"
#include "toricbv/prng.hpp"

namespace toricbv {

BVSolution existence(const Variety& variety) {
    BVSolution sol;
    std::set<std::size_t> active;
    for (const auto& rec : variety.points) active.insert(rec.active.begin(), rec.active.end());
    sol.active_rays.assign(active.begin(), active.end());

    const int n = variety.fan.dim;
    sol.system = RatMatrix(sol.active_rays.size(), n);
    sol.rhs.assign(sol.active_rays.size(), Rat(-1));
    for (std::size_t r = 0; r < sol.active_rays.size(); ++r) {
        const auto& e = variety.polytope.normals[sol.active_rays[r]];
        for (int j = 0; j < n; ++j) sol.system.at(r, j) = Rat(e[j]);
    }

    if (auto solution = solve_affine(sol.system, sol.rhs)) {
        sol.exists = true;
        sol.delta_particular = std::move(solution->particular);
        sol.delta_kernel = std::move(solution->kernel);
    }
    return sol;
}

std::optional<std::size_t> admissibility_violation(const RatVec& delta,
                                                   const Variety& variety) {
    if (static_cast<int>(delta.size()) != variety.fan.dim)
        throw input_error("delta: dimension mismatch");
    std::set<std::size_t> active;
    for (const auto& rec : variety.points) active.insert(rec.active.begin(), rec.active.end());
    for (std::size_t t : active) {
        if (pairing(delta, variety.polytope.normals[t]) != Rat(-1)) return t;
    }
    return std::nullopt;
}

namespace {

// delta - I as a rational covector.
CharacterVector delta_minus(const RatVec& delta, const Weight& I) {
    CharacterVector out(delta.size());
    for (std::size_t i = 0; i < delta.size(); ++i) out[i] = delta[i] - Rat(I[i]);
    return out;
}

// Coordinates of a degree-k field element in the graded basis.
std::optional<RatVec> coordinates(const Variety& variety, const WeightedPolyvector& a, int k) {
    RatVec coords(variety.basis.dim(k));
    if (a.is_zero()) return coords;
    if (a.degree() != k) return std::nullopt;
    for (const auto& [I, A] : a.terms()) {
        const WeightBlock* block = variety.basis.block(I, k);
        if (!block) return std::nullopt;
        auto local = block->coordinates(A, variety.fan.dim);
        if (!local) return std::nullopt;
        const std::size_t offset = *variety.basis.block_offset(I, k);
        for (std::size_t i = 0; i < local->size(); ++i) coords[offset + i] = (*local)[i];
    }
    return coords;
}

WeightedPolyvector from_coordinates(const Variety& variety, int k, const RatVec& coords) {
    WeightedPolyvector out(Variant::field, k < 0 ? 0 : k);
    if (k < 0 || k > variety.fan.dim) return out;
    const auto& entries = variety.basis.entries(k);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        out.add_term(entries[i].point, coords[i] * entries[i].multivector);
    }
    return out;
}

}  // namespace

BVOperator build_operator(const RatVec& delta, const Variety& variety) {
    if (auto violated = admissibility_violation(delta, variety)) {
        std::ostringstream os;
        os << "build_operator: delta " << to_string(delta)
           << " violates the tight-ray equation of ray " << *violated << " (";
        const auto& e = variety.polytope.normals[*violated];
        for (std::size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j].get_str();
        os << ")";
        throw input_error(os.str());
    }

    const int n = variety.fan.dim;
    BVOperator op;
    op.delta = delta;
    for (int k = 1; k <= n; ++k) {
        const auto& domain = variety.basis.entries(k);
        RatMatrix mat(variety.basis.dim(k - 1), domain.size());
        for (std::size_t col = 0; col < domain.size(); ++col) {
            const auto& entry = domain[col];
            const Multivector image = contract(delta_minus(delta, entry.point),
                                               entry.multivector);
            if (image.is_zero()) continue;
            const WeightBlock* block = variety.basis.block(entry.point, k - 1);
            std::optional<RatVec> local =
                block ? block->coordinates(image, n) : std::nullopt;
            if (!local)
                throw internal_error(
                    "build_operator: image escaped its weight block for admissible delta");
            const std::size_t offset = *variety.basis.block_offset(entry.point, k - 1);
            for (std::size_t i = 0; i < local->size(); ++i)
                mat.at(offset + i, col) = (*local)[i];
        }
        op.matrices.push_back(std::move(mat));
    }
    return op;
}

WeightedPolyvector apply_operator(const std::vector<RatMatrix>& matrices,
                                  const Variety& variety, const WeightedPolyvector& a) {
    if (a.variant() != Variant::field)
        throw input_error("apply_operator: expected a field-variant element");
    const int k = a.degree();
    if (a.is_zero() || k <= 0 || k > variety.fan.dim)
        return WeightedPolyvector(Variant::field, k > 0 ? k - 1 : 0);
    auto coords = coordinates(variety, a, k);
    if (!coords) throw input_error("apply_operator: element is not in the algebra");
    return from_coordinates(variety, k - 1, matvec(matrices[k - 1], *coords));
}

WeightedPolyvector apply_operator(const BVOperator& op, const Variety& variety,
                                  const WeightedPolyvector& a) {
    return apply_operator(op.matrices, variety, a);
}

namespace {

struct BasisRef {
    int degree;
    std::size_t index;
};

std::vector<BasisRef> flatten_basis(const Variety& variety) {
    std::vector<BasisRef> refs;
    for (int k = 0; k <= variety.fan.dim; ++k)
        for (std::size_t i = 0; i < variety.basis.dim(k); ++i) refs.push_back({k, i});
    return refs;
}

WeightedPolyvector basis_element(const Variety& variety, const BasisRef& ref) {
    const auto& e = variety.basis.entries(ref.degree)[ref.index];
    return WeightedPolyvector::monomial(Variant::field, e.point, e.multivector);
}

Rat sign_pow(int exponent) { return (exponent % 2 == 0) ? Rat(1) : Rat(-1); }

void record_violation(OperatorVerification& out, const std::string& description) {
    ++out.violation_count;
    if (out.violations.size() < 10) out.violations.push_back(description);
}

}  // namespace

OperatorVerification verify_operator(const BVOperator& op, const Variety& variety,
                                     const CheckBudget& budget) {
    OperatorVerification out;
    const int n = variety.fan.dim;

    // (i) the square vanishes degree by degree
    out.d_squared_zero = true;
    for (int k = 2; k <= n; ++k)
        if (!matmul(op.matrix(k - 1), op.matrix(k)).is_zero()) out.d_squared_zero = false;

    const auto refs = flatten_basis(variety);
    const auto D = [&](const WeightedPolyvector& x) {
        return apply_operator(op, variety, x);
    };

    // (ii) the bracket is generated:
    // [a,b] = (-1)^|a| ( D(a^b) - D(a)^b - (-1)^|a| a^D(b) )
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const WeightedPolyvector a = basis_element(variety, refs[i]);
        const int k = refs[i].degree;
        for (std::size_t j = 0; j < refs.size(); ++j) {
            const WeightedPolyvector b = basis_element(variety, refs[j]);
            const WeightedPolyvector lhs = schouten(a, b);
            WeightedPolyvector rhs = D(wedge_fields(a, b));
            rhs -= wedge_fields(D(a), b);
            rhs -= sign_pow(k) * wedge_fields(a, D(b));
            rhs *= sign_pow(k);
            ++out.pairs_checked;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "generating identity fails for pair (deg " << k << " #" << refs[i].index
                   << ", deg " << refs[j].degree << " #" << refs[j].index << ")";
                record_violation(out, os.str());
            }
        }
    }

    // (iii) the second-order product rule:
    // D(abc) = D(ab)c + (-1)^|a| a D(bc) + (-1)^(|b|(|a|+1)) b D(ac)
    //        - D(a)bc - (-1)^|a| a D(b)c - (-1)^(|a|+|b|) ab D(c)
    const auto check_triple = [&](const BasisRef& ra, const BasisRef& rb, const BasisRef& rc) {
        const WeightedPolyvector a = basis_element(variety, ra);
        const WeightedPolyvector b = basis_element(variety, rb);
        const WeightedPolyvector c = basis_element(variety, rc);
        const int ka = ra.degree, kb = rb.degree;
        const WeightedPolyvector ab = wedge_fields(a, b);
        const WeightedPolyvector ac = wedge_fields(a, c);
        const WeightedPolyvector bc = wedge_fields(b, c);
        const WeightedPolyvector lhs = D(wedge_fields(ab, c));
        WeightedPolyvector rhs = wedge_fields(D(ab), c);
        rhs += sign_pow(ka) * wedge_fields(a, D(bc));
        rhs += sign_pow(kb * (ka + 1)) * wedge_fields(b, D(ac));
        rhs -= wedge_fields(wedge_fields(D(a), b), c);
        rhs -= sign_pow(ka) * wedge_fields(a, wedge_fields(D(b), c));
        rhs -= sign_pow(ka + kb) * wedge_fields(ab, D(c));
        ++out.triples_checked;
        if (lhs != rhs) {
            std::ostringstream os;
            os << "order-2 rule fails for triple (deg " << ka << " #" << ra.index << ", deg "
               << kb << " #" << rb.index << ", deg " << rc.degree << " #" << rc.index << ")";
            record_violation(out, os.str());
        }
    };

    if (refs.size() <= budget.exhaustive_limit) {
        for (const auto& ra : refs)
            for (const auto& rb : refs)
                for (const auto& rc : refs) check_triple(ra, rb, rc);
    } else {
        SplitMix64 rng(budget.seed);
        for (std::size_t s = 0; s < budget.samples; ++s) {
            const auto& ra = refs[rng.below(refs.size())];
            const auto& rb = refs[rng.below(refs.size())];
            const auto& rc = refs[rng.below(refs.size())];
            check_triple(ra, rb, rc);
        }
    }
    return out;
}

WeightedPolyvector torus_bv(const WeightedPolyvector& a) {
    if (a.variant() != Variant::torus)
        throw input_error("torus_bv: expected a torus-variant element");
    WeightedPolyvector out(Variant::torus, a.degree() > 0 ? a.degree() - 1 : 0);
    for (const auto& [I, A] : a.terms()) {
        Multivector image = contract(I, A);
        image *= Rat(-1);
        out.add_term(I, image);
    }
    return out;
}

std::optional<RatVec> classify_form(const std::vector<RatMatrix>& matrices,
                                    const Variety& variety) {
    const int n = variety.fan.dim;
    if (static_cast<int>(matrices.size()) != n) return std::nullopt;
    for (int k = 1; k <= n; ++k) {
        if (matrices[k - 1].rows() != variety.basis.dim(k - 1) ||
            matrices[k - 1].cols() != variety.basis.dim(k))
            return std::nullopt;
    }

    // Read delta off the weight-zero block in degree one: the coefficient of
    // D(rho(e_j)) on the unique degree-0 basis element is <delta, e_j>.
    const Weight zero(n, Int(0));
    const auto offset = variety.basis.block_offset(zero, 1);
    const WeightBlock* block = variety.basis.block(zero, 1);
    if (!offset || !block || block->dim() != static_cast<std::size_t>(n))
        return std::nullopt;
    if (variety.basis.dim(0) != 1) return std::nullopt;

    RatVec delta(n);
    for (int j = 0; j < n; ++j) {
        // The block basis is the echelon form of all of wedge^1, i.e. e_j.
        delta[j] = matrices[0].at(0, *offset + j);
    }

    if (admissibility_violation(delta, variety)) return std::nullopt;
    const BVOperator rebuilt = build_operator(delta, variety);
    for (int k = 1; k <= n; ++k)
        if (rebuilt.matrix(k) != matrices[k - 1]) return std::nullopt;
    return delta;
}

}  // namespace toricbv
