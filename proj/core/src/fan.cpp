#include "toricbv/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toricbv/errors.hpp"
#include "toricbv/fourier_motzkin.hpp"

namespace toricbv {

Fan::Fan(int n, std::vector<LatticeVector> rays_, std::vector<std::vector<int>> cones_)
    : dim(n), rays(std::move(rays_)), max_cones(std::move(cones_)) {
    if (dim < 1) throw input_error("fan dimension must be >= 1");
    for (std::size_t t = 0; t < rays.size(); ++t)
        if (static_cast<int>(rays[t].size()) != dim) {
            std::ostringstream os;
            os << "rays[" << t << "]: expected " << dim << " coordinates, got "
               << rays[t].size();
            throw input_error(os.str());
        }
    for (std::size_t c = 0; c < max_cones.size(); ++c) {
        auto& cone = max_cones[c];
        if (static_cast<int>(cone.size()) != dim) {
            std::ostringstream os;
            os << "max_cones[" << c << "]: expected " << dim << " ray indices, got "
               << cone.size();
            throw input_error(os.str());
        }
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (cone[i] < 0 || cone[i] >= static_cast<int>(rays.size())) {
                std::ostringstream os;
                os << "max_cones[" << c << "][" << i << "]: ray index " << cone[i]
                   << " out of range [0," << rays.size() << ")";
                throw input_error(os.str());
            }
        }
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            std::ostringstream os;
            os << "max_cones[" << c << "]: repeated ray index";
            throw input_error(os.str());
        }
        cone = std::move(sorted);  // canonical cone order
    }
}

RatMatrix Fan::cone_matrix(std::size_t cone) const {
    RatMatrix m(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const auto& ray = rays[max_cones[cone][col]];
        for (int r = 0; r < dim; ++r) m.at(r, col) = Rat(ray[r]);
    }
    return m;
}

namespace {

Int coord_gcd(const LatticeVector& v) {
    Int g = 0;
    for (const auto& x : v) {
        Int a = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

bool check_primitive(const Fan& fan, std::vector<std::string>& messages) {
    bool ok = true;
    for (std::size_t t = 0; t < fan.rays.size(); ++t) {
        const Int g = coord_gcd(fan.rays[t]);
        if (g != 1) {
            std::ostringstream os;
            os << "ray " << t << " is not primitive (gcd " << g.get_str() << ")";
            messages.push_back(os.str());
            ok = false;
        }
    }
    for (std::size_t s = 0; s < fan.rays.size(); ++s)
        for (std::size_t t = s + 1; t < fan.rays.size(); ++t)
            if (fan.rays[s] == fan.rays[t]) {
                std::ostringstream os;
                os << "rays " << s << " and " << t << " coincide";
                messages.push_back(os.str());
                ok = false;
            }
    return ok;
}

bool check_smooth(const Fan& fan, std::vector<std::string>& messages) {
    bool ok = true;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const Rat det = determinant(fan.cone_matrix(c));
        if (det != Rat(1) && det != Rat(-1)) {
            std::ostringstream os;
            os << "maximal cone " << c << " has generator determinant " << det.str()
               << " (needs +-1)";
            messages.push_back(os.str());
            ok = false;
        }
    }
    return ok;
}

// Do the open cones { x : inv * x > 0 } of two nonsingular maximal cones meet?
bool interiors_meet(const RatMatrix& inv_a, const RatMatrix& inv_b) {
    const std::size_t n = inv_a.rows();
    HalfspaceSystem sys;
    for (std::size_t r = 0; r < n; ++r)
        sys.push_back({inv_a.row(r), Rat(0), true});
    for (std::size_t r = 0; r < n; ++r)
        sys.push_back({inv_b.row(r), Rat(0), true});
    return fm_point(sys, n).has_value();
}

bool check_complete(const Fan& fan, std::vector<std::string>& messages) {
    const std::size_t ncones = fan.max_cones.size();
    if (ncones == 0) {
        messages.push_back("no maximal cones");
        return false;
    }
    bool ok = true;

    // Wall pairing: each (n-1)-subset of a maximal cone that spans an
    // (n-1)-dimensional space must lie in exactly two maximal cones.
    std::map<std::vector<int>, std::vector<std::size_t>> wall_owners;
    for (std::size_t c = 0; c < ncones; ++c) {
        const auto& cone = fan.max_cones[c];
        for (int omit = 0; omit < fan.dim; ++omit) {
            std::vector<int> wall;
            wall.reserve(cone.size() - 1);
            for (int i = 0; i < fan.dim; ++i)
                if (i != omit) wall.push_back(cone[i]);
            std::vector<RatVec> rows;
            for (int idx : wall) {
                RatVec row(fan.dim);
                for (int j = 0; j < fan.dim; ++j) row[j] = Rat(fan.rays[idx][j]);
                rows.push_back(std::move(row));
            }
            if (rank(RatMatrix::from_rows(rows)) != static_cast<std::size_t>(fan.dim - 1))
                continue;
            wall_owners[wall].push_back(c);
        }
    }
    std::map<std::size_t, std::set<std::size_t>> adjacency;
    for (const auto& [wall, owners] : wall_owners) {
        if (owners.size() != 2) {
            std::ostringstream os;
            os << "wall {";
            for (std::size_t i = 0; i < wall.size(); ++i)
                os << (i ? "," : "") << wall[i];
            os << "} lies in " << owners.size() << " maximal cones (needs 2)";
            messages.push_back(os.str());
            ok = false;
            continue;
        }
        adjacency[owners[0]].insert(owners[1]);
        adjacency[owners[1]].insert(owners[0]);
    }

    // Connectivity through walls.
    std::vector<bool> seen(ncones, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        for (std::size_t d : adjacency[c]) {
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                stack.push_back(d);
            }
        }
    }
    if (reached != ncones) {
        messages.push_back("maximal cones are not connected through walls");
        ok = false;
    }

    // Pairwise disjoint interiors. Degenerate cones have no full-dimensional
    // interior and are skipped (smoothness reports them separately).
    std::vector<std::optional<RatMatrix>> inverses(ncones);
    for (std::size_t c = 0; c < ncones; ++c)
        inverses[c] = inverse(fan.cone_matrix(c));
    for (std::size_t a = 0; a < ncones; ++a) {
        if (!inverses[a]) continue;
        for (std::size_t b = a + 1; b < ncones; ++b) {
            if (!inverses[b]) continue;
            if (interiors_meet(*inverses[a], *inverses[b])) {
                std::ostringstream os;
                os << "maximal cones " << a << " and " << b << " have overlapping interiors";
                messages.push_back(os.str());
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace

FanReport validate(const Fan& fan) {
    FanReport report;
    report.primitive = check_primitive(fan, report.messages);
    report.simplicial_smooth = check_smooth(fan, report.messages);
    report.complete = check_complete(fan, report.messages);
    return report;
}

std::size_t cone_count(const Fan& fan, int k) {
    if (k < 0 || k > fan.dim) throw input_error("cone_count: k outside [0, dim]");
    if (k == 0) return 1;  // the zero cone
    std::set<std::vector<int>> faces;
    for (const auto& cone : fan.max_cones) {
        // all k-subsets of the cone's generators
        std::vector<int> pick(k);
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) pick[i] = cone[idx[i]];
            faces.insert(pick);
            int i = k - 1;
            while (i >= 0 && idx[i] == fan.dim - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return faces.size();
}

}  // namespace toricbv
