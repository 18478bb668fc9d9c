#include "toricbv/corpus.hpp"

namespace toricbv {
namespace corpus {

namespace {

NamedFan projective_line() {
    return {"p1", Fan(1, {{1}, {-1}}, {{0}, {1}})};
}

NamedFan projective_plane() {
    return {"p2", Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}})};
}

NamedFan projective_space_3() {
    return {"p3",
            Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})};
}

NamedFan p1_times_p1() {
    return {"p1xp1",
            Fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})};
}

NamedFan hirzebruch(int a) {
    return {"hirzebruch_" + std::to_string(a),
            Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})};
}

NamedFan del_pezzo_6() {
    return {"dp6",
            Fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})};
}

// The 16-ray iterated blow-up of p1 x p1: corners blown up, then the eight
// new corners blown up again. Rays listed counterclockwise; maximal cones
// are the consecutive pairs.
NamedFan blowup_16() {
    std::vector<LatticeVector> rays = {
        {1, 0},  {2, 1},   {1, 1},   {1, 2},  {0, 1},  {-1, 2}, {-1, 1}, {-2, 1},
        {-1, 0}, {-2, -1}, {-1, -1}, {-1, -2}, {0, -1}, {1, -2}, {1, -1}, {2, -1}};
    std::vector<std::vector<int>> cones;
    for (int i = 0; i < 16; ++i) cones.push_back({i, (i + 1) % 16});
    return {"blowup16", Fan(2, std::move(rays), std::move(cones))};
}

}  // namespace

const std::vector<NamedFan>& standard() {
    static const std::vector<NamedFan> fans = {
        projective_line(), projective_plane(), projective_space_3(), p1_times_p1(),
        hirzebruch(0),     hirzebruch(1),      hirzebruch(2),        hirzebruch(3),
        del_pezzo_6(),     blowup_16()};
    return fans;
}

std::optional<NamedFan> find(const std::string& name) {
    for (const auto& f : standard())
        if (f.name == name) return f;
    return std::nullopt;
}

}  // namespace corpus
}  // namespace toricbv
