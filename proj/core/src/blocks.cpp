#include "toricbv/blocks.hpp"

#include <algorithm>

#include "toricbv/errors.hpp"
#include "toricbv/matrix.hpp"

namespace toricbv {

namespace {

// Index of a tuple in the lexicographic enumeration of k-subsets of {0..n-1}.
std::map<IndexTuple, std::size_t> tuple_index(int n, int k) {
    std::map<IndexTuple, std::size_t> idx;
    const auto tuples = index_tuples(n, k);
    for (std::size_t i = 0; i < tuples.size(); ++i) idx[tuples[i]] = i;
    return idx;
}

RatVec to_coords(const Multivector& a, const std::map<IndexTuple, std::size_t>& idx,
                 std::size_t width) {
    RatVec v(width);
    for (const auto& [t, c] : a.terms()) {
        auto it = idx.find(t);
        if (it == idx.end()) throw input_error("multivector outside ambient dimension");
        v[it->second] = c;
    }
    return v;
}

Multivector from_coords_row(const RatVec& row, const std::vector<IndexTuple>& tuples, int k) {
    Multivector m(k);
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) m.add_term(tuples[i], row[i]);
    return m;
}

}  // namespace

std::optional<RatVec> WeightBlock::coordinates(const Multivector& a, int ambient_dim) const {
    if (a.is_zero()) return RatVec(basis.size());
    if (a.degree() != degree) return std::nullopt;

    const auto tuples = index_tuples(ambient_dim, degree);
    const auto idx = tuple_index(ambient_dim, degree);
    RatVec v = to_coords(a, idx, tuples.size());

    // The basis rows are in reduced echelon form, so the coordinate on row r
    // is the component of `a` at that row's pivot; membership holds when the
    // residual vanishes.
    RatVec coords(basis.size());
    Multivector residual = a;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        coords[r] = v[pivots[r]];
        if (!coords[r].is_zero()) residual -= coords[r] * basis[r];
    }
    if (!residual.is_zero()) return std::nullopt;
    return coords;
}

WeightBlock nik_basis(const LatticePointRecord& rec, int k, int ambient_dim) {
    if (k < 0 || k > ambient_dim) throw input_error("nik_basis: degree outside [0, dim]");
    WeightBlock block;
    block.point = rec.point;
    block.degree = k;

    const int i = rec.stratum;
    if (i > k) return block;  // zero block

    const auto tuples = index_tuples(ambient_dim, k);
    if (i == 0) {
        // the whole of wedge^k
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            block.basis.push_back(Multivector::basis(tuples[r]));
            block.pivots.push_back(r);
        }
        return block;
    }

    // Volume element of the active span, wedged against all (k-i)-subsets of
    // the standard basis, then reduced to echelon form.
    Multivector vol = Multivector::scalar(Rat(1));
    for (const auto& row : rec.normal_basis) vol = wedge(vol, Multivector::from_vector(row));

    const auto idx = tuple_index(ambient_dim, k);
    std::vector<RatVec> rows;
    for (const auto& t : index_tuples(ambient_dim, k - i)) {
        const Multivector span_elem = wedge(vol, Multivector::basis(t));
        if (span_elem.is_zero()) continue;
        rows.push_back(to_coords(span_elem, idx, tuples.size()));
    }
    if (rows.empty()) return block;

    const auto [red, pivots] = rref(RatMatrix::from_rows(rows));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        block.basis.push_back(from_coords_row(red.row(r), tuples, k));
        block.pivots.push_back(pivots[r]);
    }
    return block;
}

GradedBasis::GradedBasis(const std::vector<LatticePointRecord>& points, int ambient_dim)
    : n_(ambient_dim) {
    entries_.resize(n_ + 1);

    // Points arrive in lexicographic order from lattice_points; keep it.
    std::vector<LatticePointRecord> sorted = points;
    std::sort(sorted.begin(), sorted.end(),
              [](const LatticePointRecord& a, const LatticePointRecord& b) {
                  return a.point < b.point;
              });

    for (int k = 0; k <= n_; ++k) {
        for (const auto& rec : sorted) {
            WeightBlock block = nik_basis(rec, k, n_);
            offsets_[{rec.point, k}] = entries_[k].size();
            for (const auto& b : block.basis) entries_[k].push_back({rec.point, b});
            blocks_.emplace(std::make_pair(rec.point, k), std::move(block));
        }
    }
}

std::size_t GradedBasis::dim(int k) const {
    if (k < 0 || k > n_) return 0;
    return entries_[k].size();
}

std::size_t GradedBasis::total_dim() const {
    std::size_t total = 0;
    for (const auto& e : entries_) total += e.size();
    return total;
}

const std::vector<GradedBasis::Entry>& GradedBasis::entries(int k) const {
    if (k < 0 || k > n_) throw input_error("GradedBasis::entries: degree outside [0, dim]");
    return entries_[k];
}

const WeightBlock* GradedBasis::block(const Weight& I, int k) const {
    auto it = blocks_.find({I, k});
    return it == blocks_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> GradedBasis::block_offset(const Weight& I, int k) const {
    auto it = offsets_.find({I, k});
    if (it == offsets_.end()) return std::nullopt;
    return it->second;
}

bool GradedBasis::contains(const Weight& I, const Multivector& a, int k) const {
    return membership(*this, I, a, k);
}

bool membership(const GradedBasis& basis, const Weight& I, const Multivector& a, int k) {
    if (a.is_zero()) return true;
    if (k < 0 || k > basis.ambient_dim()) return false;
    const WeightBlock* block = basis.block(I, k);
    if (!block) return false;
    return block->coordinates(a, basis.ambient_dim()).has_value();
}

}  // namespace toricbv
