#include "toricbv/polytope.hpp"

#include <sstream>

#include "toricbv/errors.hpp"
#include "toricbv/fourier_motzkin.hpp"

namespace toricbv {

WeightPolytope build_polytope(const Fan& fan) { return build_polytope(fan, validate(fan)); }

WeightPolytope build_polytope(const Fan& fan, const FanReport& report) {
    if (!report.valid()) {
        std::string why = "build_polytope: fan failed validation:";
        for (const auto& m : report.messages) why += "\n  " + m;
        if (report.messages.empty()) why += " (flags false)";
        throw input_error(why);
    }
    WeightPolytope p;
    p.dim = fan.dim;
    p.normals = fan.rays;
    p.bounds.assign(fan.rays.size(), Rat(-1));
    return p;
}

namespace {

HalfspaceSystem to_halfspaces(const WeightPolytope& p) {
    HalfspaceSystem sys;
    sys.reserve(p.normals.size());
    for (std::size_t t = 0; t < p.normals.size(); ++t) {
        Halfspace h;
        h.coeffs.resize(p.dim);
        for (int j = 0; j < p.dim; ++j) h.coeffs[j] = Rat(p.normals[t][j]);
        h.rhs = p.bounds[t];
        sys.push_back(std::move(h));
    }
    return sys;
}

// A direction of recession with positive (or negative) j-th coordinate,
// scaled to integer coordinates. Used to name a witness when the polytope
// is unbounded along coordinate j.
LatticeVector recession_witness(const WeightPolytope& p, std::size_t j, bool positive) {
    HalfspaceSystem sys;
    for (const auto& e : p.normals) {
        Halfspace h;
        h.coeffs.resize(p.dim);
        for (int c = 0; c < p.dim; ++c) h.coeffs[c] = Rat(e[c]);
        h.rhs = 0;
        sys.push_back(std::move(h));
    }
    Halfspace dir;
    dir.coeffs.assign(p.dim, Rat(0));
    dir.coeffs[j] = positive ? Rat(1) : Rat(-1);
    dir.rhs = 1;
    sys.push_back(std::move(dir));

    auto point = fm_point(sys, p.dim);
    if (!point) throw internal_error("unbounded polytope without recession direction");
    Int lcm = 1;
    for (const auto& x : *point)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    LatticeVector w(p.dim);
    for (int c = 0; c < p.dim; ++c) {
        const Rat scaled = (*point)[c] * Rat(lcm);
        w[c] = scaled.num();
    }
    return w;
}

LatticePointRecord make_record(const WeightPolytope& p, Weight point) {
    LatticePointRecord rec;
    rec.point = std::move(point);
    std::vector<RatVec> active_rows;
    for (std::size_t t = 0; t < p.normals.size(); ++t) {
        if (pairing(rec.point, p.normals[t]) == p.bounds[t]) {
            rec.active.push_back(t);
            RatVec row(p.dim);
            for (int j = 0; j < p.dim; ++j) row[j] = Rat(p.normals[t][j]);
            active_rows.push_back(std::move(row));
        }
    }
    if (!active_rows.empty()) {
        const auto [red, pivots] = rref(RatMatrix::from_rows(active_rows));
        rec.stratum = static_cast<int>(pivots.size());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            rec.normal_basis.push_back(red.row(r));
    }
    return rec;
}

}  // namespace

std::vector<LatticePointRecord> lattice_points(const WeightPolytope& p) {
    const HalfspaceSystem sys = to_halfspaces(p);

    // Per-coordinate bounding box by Fourier-Motzkin elimination.
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (int j = 0; j < p.dim; ++j) {
        const VarBounds b = fm_bounds(sys, j, p.dim);
        if (!b.feasible) return {};
        if (!b.lower || !b.upper) {
            const LatticeVector w = recession_witness(p, j, !b.upper);
            std::ostringstream os;
            os << "lattice_points: feasible region unbounded; witness direction (";
            for (int c = 0; c < p.dim; ++c) os << (c ? "," : "") << w[c].get_str();
            os << ")";
            throw input_error(os.str());
        }
        lo[j] = b.lower_strict ? b.lower->floor() + 1 : b.lower->ceil();
        hi[j] = b.upper_strict ? b.upper->ceil() - 1 : b.upper->floor();
    }

    Int box_size = 1;
    for (int j = 0; j < p.dim; ++j) {
        const Int width = hi[j] - lo[j] + 1;
        if (width <= 0) return {};
        box_size *= width;
    }
    if (box_size > 10'000'000)
        throw input_error("lattice_points: bounding box too large (" +
                          box_size.get_str() + " candidates)");

    std::vector<LatticePointRecord> out;
    Weight cur(lo.begin(), lo.end());
    while (true) {
        bool inside = true;
        for (std::size_t t = 0; t < p.normals.size() && inside; ++t) {
            const Rat v = pairing(cur, p.normals[t]);
            if (v < p.bounds[t]) inside = false;
        }
        if (inside) out.push_back(make_record(p, cur));

        // lexicographic increment over the box
        int j = p.dim - 1;
        while (j >= 0) {
            if (cur[j] < hi[j]) {
                ++cur[j];
                for (int c = j + 1; c < p.dim; ++c) cur[c] = lo[c];
                break;
            }
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

std::map<int, std::size_t> stratum_counts(const std::vector<LatticePointRecord>& points) {
    std::map<int, std::size_t> counts;
    for (const auto& rec : points) ++counts[rec.stratum];
    return counts;
}

LinearSystem affine_hull_constraints(const LatticePointRecord& rec, const WeightPolytope& p) {
    LinearSystem sys;
    sys.lhs = RatMatrix(rec.active.size(), p.dim);
    sys.rhs.resize(rec.active.size());
    for (std::size_t r = 0; r < rec.active.size(); ++r) {
        const auto& e = p.normals[rec.active[r]];
        for (int j = 0; j < p.dim; ++j) sys.lhs.at(r, j) = Rat(e[j]);
        sys.rhs[r] = p.bounds[rec.active[r]];
    }
    return sys;
}

std::vector<LatticePointRecord> lattice_vertices(const std::vector<LatticePointRecord>& points) {
    std::vector<LatticePointRecord> out;
    for (const auto& rec : points)
        if (rec.stratum == static_cast<int>(rec.point.size())) out.push_back(rec);
    return out;
}

}  // namespace toricbv
