#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toricbv/exterior.hpp"
#include "toricbv/polytope.hpp"

namespace toricbv {

// Echelon basis of the weight block in degree k at weight I: the subspace
//   wedge^i(span of the active rays) ^ wedge^(k-i) N_Q      (i = stratum)
// of wedge^k N_Q; the whole of wedge^k when i = 0, zero when i > k.
struct WeightBlock {
    Weight point;
    int degree = 0;
    std::vector<Multivector> basis;       // reduced echelon rows
    std::vector<std::size_t> pivots;      // pivot positions in the tuple order

    std::size_t dim() const { return basis.size(); }

    // Coordinates of `a` in the echelon basis; nothing when a is outside
    // the span. The zero multivector always has coordinates.
    std::optional<RatVec> coordinates(const Multivector& a, int ambient_dim) const;
};

WeightBlock nik_basis(const LatticePointRecord& rec, int k, int ambient_dim);

// Bases of every graded piece, blocks concatenated in lexicographic weight
// order. Entry order is the coordinate system all operator matrices use.
class GradedBasis {
public:
    struct Entry {
        Weight point;
        Multivector multivector;
    };

    GradedBasis() = default;
    GradedBasis(const std::vector<LatticePointRecord>& points, int ambient_dim);

    int ambient_dim() const { return n_; }
    int top_degree() const { return n_; }
    std::size_t dim(int k) const;
    std::size_t total_dim() const;
    const std::vector<Entry>& entries(int k) const;

    // Block of (I, k); nothing when I is not a lattice point of the polytope.
    const WeightBlock* block(const Weight& I, int k) const;
    // Offset of the block's first entry inside degree k.
    std::optional<std::size_t> block_offset(const Weight& I, int k) const;

    bool contains(const Weight& I, const Multivector& a, int k) const;

private:
    int n_ = 0;
    std::vector<std::vector<Entry>> entries_;                    // per degree
    std::map<std::pair<Weight, int>, WeightBlock> blocks_;
    std::map<std::pair<Weight, int>, std::size_t> offsets_;
};

// Membership of a multivector in the weight block (I, k); false for weights
// outside the polytope unless the multivector is zero.
bool membership(const GradedBasis& basis, const Weight& I, const Multivector& a, int k);

}  // namespace toricbv
