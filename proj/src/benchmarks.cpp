#include "trussopt/benchmarks.hpp"

#include <stdexcept>
#include <utility>

#include "trussopt/fem.hpp"

namespace trussopt {

namespace {

// Builds models from the 1-based node/member numbering used in the
// structural optimization literature; storage is 0-based.
class Builder {
public:
    explicit Builder(std::string name, double modulus, double density) {
        m_.name = std::move(name);
        m_.material = {modulus, density};
    }

    void node(double x, double y, double z = 0.0) { m_.nodes.push_back({m_.nodes.size(), {x, y, z}}); }

    void group(double area_min, double area_max, double tension, double compression,
               std::optional<Buckling> buckling = std::nullopt) {
        m_.groups.push_back({m_.groups.size(), area_min, area_max, tension, compression, buckling});
    }

    // a, b are 1-based node numbers; g is a 0-based group index.
    void member(std::size_t a, std::size_t b, std::size_t g) {
        m_.elements.push_back({m_.elements.size(), a - 1, b - 1, g});
    }

    void fix(std::size_t node, AxisSet axes) { m_.supports.push_back({node - 1, axes}); }

    std::size_t load_case() {
        m_.load_cases.push_back({m_.load_cases.size(), {}});
        return m_.load_cases.size() - 1;
    }

    void load(std::size_t lc, std::size_t node, double fx, double fy, double fz = 0.0) {
        m_.load_cases[lc].point_loads.push_back({node - 1, {fx, fy, fz}});
    }

    void limit_displacement(std::vector<std::size_t> nodes_1based, AxisSet dofs, double limit) {
        for (std::size_t& n : nodes_1based) --n;
        m_.displacement_limits.push_back({std::move(nodes_1based), dofs, limit});
    }

    void limit_all_displacements(AxisSet dofs, double limit) {
        std::vector<std::size_t> all;
        for (std::size_t i = 1; i <= m_.nodes.size(); ++i) all.push_back(i);
        limit_displacement(std::move(all), dofs, limit);
    }

    TrussModel take() { return std::move(m_); }

private:
    TrussModel m_;
};

TrussModel ten_bar(bool case2) {
    Builder b(case2 ? "10bar-case2" : "10bar-case1", 1.0e4, 0.1);
    for (auto [x, y] : {std::pair{720.0, 360.0}, {720.0, 0.0}, {360.0, 360.0}, {360.0, 0.0}, {0.0, 360.0}, {0.0, 0.0}}) {
        b.node(x, y);
    }
    const std::size_t conn[10][2] = {{5, 3}, {3, 1}, {6, 4}, {4, 2}, {3, 4}, {1, 2}, {5, 4}, {6, 3}, {3, 2}, {4, 1}};
    for (std::size_t i = 0; i < 10; ++i) {
        b.group(0.1, 35.0, 25.0, 25.0);
        b.member(conn[i][0], conn[i][1], i);
    }
    b.fix(5, AxisSet::xy());
    b.fix(6, AxisSet::xy());
    const std::size_t lc = b.load_case();
    const double p1 = case2 ? 150.0 : 100.0;
    b.load(lc, 2, 0.0, -p1);
    b.load(lc, 4, 0.0, -p1);
    if (case2) {
        b.load(lc, 1, 0.0, 50.0);
        b.load(lc, 3, 0.0, 50.0);
    }
    b.limit_all_displacements(AxisSet::xy(), 2.0);
    return b.take();
}

TrussModel seventeen_bar() {
    Builder b("17bar", 3.0e4, 0.268);
    for (auto [x, y] : {std::pair{0.0, 100.0}, {0.0, 0.0}, {100.0, 100.0}, {100.0, 0.0}, {200.0, 100.0},
                        {200.0, 0.0}, {300.0, 100.0}, {300.0, 0.0}, {400.0, 0.0}}) {
        b.node(x, y);
    }
    const std::size_t conn[17][2] = {{1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {4, 5}, {5, 7},
                                     {5, 6}, {6, 8}, {5, 8}, {6, 7}, {8, 9}, {7, 9}, {7, 8}, {2, 3}};
    for (std::size_t i = 0; i < 17; ++i) {
        b.group(0.1, 20.0, 50.0, 50.0);
        b.member(conn[i][0], conn[i][1], i);
    }
    b.fix(1, AxisSet::xy());
    b.fix(2, AxisSet::xy());
    b.load(b.load_case(), 9, 0.0, -100.0);
    b.limit_all_displacements(AxisSet::xy(), 2.0);
    return b.take();
}

TrussModel eighteen_bar() {
    Builder b("18bar", 1.0e4, 0.1);
    for (auto [x, y] : {std::pair{1250.0, 250.0}, {1000.0, 250.0}, {1000.0, 0.0}, {750.0, 250.0}, {750.0, 0.0},
                        {500.0, 250.0}, {500.0, 0.0}, {250.0, 250.0}, {250.0, 0.0}, {0.0, 250.0}, {0.0, 0.0}}) {
        b.node(x, y);
    }
    // Groups: top chord, tip diagonal + bottom chord, verticals, panel diagonals.
    for (int g = 0; g < 4; ++g) b.group(0.1, 30.0, 20.0, 20.0, Buckling{4.0});
    b.member(1, 2, 0);
    b.member(1, 3, 1);
    const std::size_t panels[4][4] = {{2, 3, 4, 5}, {4, 5, 6, 7}, {6, 7, 8, 9}, {8, 9, 10, 11}};
    for (const auto& p : panels) {
        b.member(p[0], p[1], 2);  // vertical
        b.member(p[0], p[2], 0);  // top
        b.member(p[1], p[2], 3);  // diagonal
        b.member(p[1], p[3], 1);  // bottom
    }
    b.fix(10, AxisSet::xy());
    b.fix(11, AxisSet::xy());
    const std::size_t lc = b.load_case();
    for (std::size_t n : {1, 2, 4, 6, 8}) b.load(lc, n, 0.0, -20.0);
    return b.take();
}

TrussModel twenty_two_bar() {
    Builder b("22bar", 1.0e4, 0.1);
    // Four loaded top nodes on a rectangle over four ground supports on a
    // wider rectangle. Dimensions are a reconstruction (see the README).
    const double ax = 55.03, ay = 34.67, bx = 108.46, by = 50.17, h = 226.03;
    const double sx[4] = {1, -1, -1, 1};
    const double sy[4] = {1, 1, -1, -1};
    for (int k = 0; k < 4; ++k) b.node(sx[k] * ax, sy[k] * ay, h);
    for (int k = 0; k < 4; ++k) b.node(sx[k] * bx, sy[k] * by, 0.0);
    const double compression[7] = {24.0, 30.0, 28.0, 26.0, 22.0, 20.0, 18.0};
    for (double c : compression) b.group(0.1, 5.0, 36.0, c);
    // Node k's x-neighbour, y-neighbour and opposite corner.
    const std::size_t xn[4] = {2, 1, 4, 3};
    const std::size_t yn[4] = {4, 3, 2, 1};
    const std::size_t op[4] = {3, 4, 1, 2};
    for (std::size_t k = 1; k <= 4; ++k) b.member(k, 4 + k, 0);  // vertical-ish legs
    b.member(1, 4, 1);  // top edges along y
    b.member(2, 3, 1);
    b.member(1, 3, 2);  // top diagonals
    b.member(2, 4, 2);
    b.member(1, 2, 3);  // top edges along x
    b.member(4, 3, 3);
    for (std::size_t k = 1; k <= 4; ++k) b.member(k, 4 + yn[k - 1], 4);
    for (std::size_t k = 1; k <= 4; ++k) b.member(k, 4 + xn[k - 1], 5);
    for (std::size_t k = 1; k <= 4; ++k) b.member(k, 4 + op[k - 1], 6);
    for (std::size_t n = 5; n <= 8; ++n) b.fix(n, AxisSet::all());
    const double loads[3][4][3] = {
        {{-20, 0, -5}, {-20, 0, -5}, {-20, 0, -30}, {-20, 0, -30}},
        {{-20, -5, 0}, {-20, -50, 0}, {-20, -5, 0}, {-20, -50, 0}},
        {{-20, 0, 35}, {-20, 0, 0}, {-20, 0, 0}, {-20, 0, -35}},
    };
    for (const auto& lc_loads : loads) {
        const std::size_t lc = b.load_case();
        for (std::size_t n = 0; n < 4; ++n) b.load(lc, n + 1, lc_loads[n][0], lc_loads[n][1], lc_loads[n][2]);
    }
    b.limit_all_displacements(AxisSet::all(), 2.0);
    return b.take();
}

TrussModel twenty_five_bar() {
    Builder b("25bar", 1.0e4, 0.1);
    const double xyz[10][3] = {{-37.5, 0, 200},     {37.5, 0, 200},     {-37.5, 37.5, 100}, {37.5, 37.5, 100},
                               {37.5, -37.5, 100},  {-37.5, -37.5, 100}, {-100, 100, 0},     {100, 100, 0},
                               {100, -100, 0},      {-100, -100, 0}};
    for (const auto& p : xyz) b.node(p[0], p[1], p[2]);
    const double compression[8] = {35.092, 11.590, 17.305, 35.092, 35.092, 6.759, 6.959, 11.082};
    for (double c : compression) b.group(0.01, 3.4, 40.0, c);
    const std::size_t conn[25][2] = {{1, 2},  {1, 4}, {2, 3}, {1, 5}, {2, 6}, {2, 4}, {2, 5}, {1, 3}, {1, 6},
                                     {3, 6},  {4, 5}, {3, 4}, {5, 6}, {3, 10}, {6, 7}, {4, 9}, {5, 8}, {3, 8},
                                     {4, 7},  {6, 9}, {5, 10}, {3, 7}, {4, 8}, {5, 9}, {6, 10}};
    const std::size_t group_of[25] = {0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7};
    for (std::size_t i = 0; i < 25; ++i) b.member(conn[i][0], conn[i][1], group_of[i]);
    for (std::size_t n = 7; n <= 10; ++n) b.fix(n, AxisSet::all());
    const std::size_t lc1 = b.load_case();
    b.load(lc1, 1, 0.0, 20.0, -5.0);
    b.load(lc1, 2, 0.0, -20.0, -5.0);
    const std::size_t lc2 = b.load_case();
    b.load(lc2, 1, 1.0, 10.0, -5.0);
    b.load(lc2, 2, 0.0, 10.0, -5.0);
    b.load(lc2, 3, 0.5, 0.0, 0.0);
    b.load(lc2, 6, 0.5, 0.0, 0.0);
    b.limit_all_displacements(AxisSet::all(), 0.35);
    return b.take();
}

TrussModel seventy_two_bar() {
    Builder b("72bar", 1.0e4, 0.1);
    const double square[4][2] = {{0, 0}, {120, 0}, {120, 120}, {0, 120}};
    for (int level = 0; level < 5; ++level) {
        for (const auto& c : square) b.node(c[0], c[1], 60.0 * level);
    }
    for (int g = 0; g < 16; ++g) b.group(0.1, 3.0, 25.0, 25.0);
    // Stories from the top down; each story has four groups: columns, side
    // diagonals, upper horizontals, upper floor diagonals.
    for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t lo = 4 * (3 - s) + 1;
        const std::size_t hi = lo + 4;
        const std::size_t g = 4 * s;
        for (std::size_t i = 0; i < 4; ++i) b.member(lo + i, hi + i, g);
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t j = (i + 1) % 4;
            b.member(lo + i, hi + j, g + 1);
            b.member(lo + j, hi + i, g + 1);
        }
        for (std::size_t i = 0; i < 4; ++i) b.member(hi + i, hi + (i + 1) % 4, g + 2);
        b.member(hi, hi + 2, g + 3);
        b.member(hi + 1, hi + 3, g + 3);
    }
    for (std::size_t n = 1; n <= 4; ++n) b.fix(n, AxisSet::all());
    b.load(b.load_case(), 17, 5.0, 5.0, -5.0);
    const std::size_t lc2 = b.load_case();
    for (std::size_t n = 17; n <= 20; ++n) b.load(lc2, n, 0.0, 0.0, -5.0);
    b.limit_displacement({17, 18, 19, 20}, AxisSet::xy(), 0.25);
    return b.take();
}

TrussModel two_hundred_bar() {
    Builder b("200bar", 3.0e4, 0.283);
    // Eleven rows from the top: even rows hold 5 nodes at 240 in spacing,
    // odd rows 9 nodes at 120 in; rows are 144 in apart, the lowest at 360 in.
    std::vector<std::vector<std::size_t>> rows(11);
    std::size_t next = 1;
    for (int r = 0; r < 11; ++r) {
        const double y = 360.0 + 144.0 * (10 - r);
        const int count = r % 2 == 0 ? 5 : 9;
        const double dx = r % 2 == 0 ? 240.0 : 120.0;
        for (int i = 0; i < count; ++i) {
            b.node(dx * i, y);
            rows[r].push_back(next++);
        }
    }
    b.node(240.0, 0.0);  // 76
    b.node(720.0, 0.0);  // 77

    // Member numbering follows the usual 200-bar layout: per module, the
    // 5-node chord, its links to the 9-node chord below, the 9-node chord,
    // then the links up from the next 5-node chord.
    std::vector<std::pair<std::size_t, std::size_t>> members;
    auto five_chord = [&](std::size_t r) {
        for (std::size_t i = 0; i < 4; ++i) members.emplace_back(rows[r][i], rows[r][i + 1]);
    };
    auto links = [&](std::size_t r5, std::size_t r9) {
        const auto& a = rows[r5];
        const auto& c = rows[r9];
        for (std::size_t i = 0; i < 5; ++i) {
            members.emplace_back(a[i], c[2 * i]);
            if (i < 4) {
                members.emplace_back(a[i], c[2 * i + 1]);
                members.emplace_back(c[2 * i + 1], a[i + 1]);
            }
        }
    };
    for (std::size_t m = 0; m < 5; ++m) {
        const std::size_t r5 = 2 * m;
        const std::size_t r9 = r5 + 1;
        five_chord(r5);
        links(r5, r9);
        for (std::size_t i = 0; i < 8; ++i) members.emplace_back(rows[r9][i], rows[r9][i + 1]);
        links(r5 + 2, r9);
    }
    five_chord(10);
    const auto& bottom = rows[10];
    for (auto [a, s] : {std::pair{bottom[0], 76}, {bottom[1], 76}, {bottom[2], 76}, {bottom[2], 77},
                        {bottom[3], 77}, {bottom[4], 77}}) {
        members.emplace_back(a, static_cast<std::size_t>(s));
    }

    const std::vector<std::vector<std::size_t>> groups = {
        {1, 2, 3, 4},
        {5, 8, 11, 14, 17},
        {19, 20, 21, 22, 23, 24},
        {18, 25, 56, 63, 94, 101, 132, 139, 170, 177},
        {26, 29, 32, 35, 38},
        {6, 7, 9, 10, 12, 13, 15, 16, 27, 28, 30, 31, 33, 34, 36, 37},
        {39, 40, 41, 42},
        {43, 46, 49, 52, 55},
        {57, 58, 59, 60, 61, 62},
        {64, 67, 70, 73, 76},
        {44, 45, 47, 48, 50, 51, 53, 54, 65, 66, 68, 69, 71, 72, 74, 75},
        {77, 78, 79, 80},
        {81, 84, 87, 90, 93},
        {95, 96, 97, 98, 99, 100},
        {102, 105, 108, 111, 114},
        {82, 83, 85, 86, 88, 89, 91, 92, 103, 104, 106, 107, 109, 110, 112, 113},
        {115, 116, 117, 118},
        {119, 122, 125, 128, 131},
        {133, 134, 135, 136, 137, 138},
        {140, 143, 146, 149, 152},
        {120, 121, 123, 124, 126, 127, 129, 130, 141, 142, 144, 145, 147, 148, 150, 151},
        {153, 154, 155, 156},
        {157, 160, 163, 166, 169},
        {171, 172, 173, 174, 175, 176},
        {178, 181, 184, 187, 190},
        {158, 159, 161, 162, 164, 165, 167, 168, 179, 180, 182, 183, 185, 186, 188, 189},
        {191, 192, 193, 194},
        {195, 197, 198, 200},
        {196, 199},
    };
    std::vector<std::size_t> group_of(members.size(), groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        b.group(0.1, 20.0, 10.0, 10.0);
        for (std::size_t m : groups[g]) group_of[m - 1] = g;
    }
    for (std::size_t i = 0; i < members.size(); ++i) b.member(members[i].first, members[i].second, group_of[i]);

    b.fix(76, AxisSet::xy());
    b.fix(77, AxisSet::xy());
    const std::size_t lateral[] = {1, 6, 15, 20, 29, 43, 48, 57, 62, 71};
    const std::size_t gravity[] = {1,  2,  3,  4,  5,  6,  8,  10, 12, 14, 15, 16, 17, 18, 19, 20, 22, 24,
                                   26, 28, 29, 30, 31, 32, 33, 34, 36, 38, 40, 42, 43, 44, 45, 46, 47, 48,
                                   50, 52, 54, 56, 58, 59, 60, 61, 62, 64, 66, 68, 70, 71, 72, 73, 74, 75};
    const std::size_t a = b.load_case();
    for (std::size_t n : lateral) b.load(a, n, 1.0, 0.0);
    const std::size_t g = b.load_case();
    for (std::size_t n : gravity) b.load(g, n, 0.0, -10.0);
    const std::size_t c = b.load_case();
    for (std::size_t n : lateral) b.load(c, n, 1.0, 0.0);
    for (std::size_t n : gravity) b.load(c, n, 0.0, -10.0);
    return b.take();
}

BenchmarkEntry entry(std::string id, TrussModel model, std::vector<double> areas, double weight, std::string table,
                     std::string provenance) {
    validate(model);
    return {std::move(id), std::move(model), DesignVector(std::move(areas)), weight, std::move(table),
            std::move(provenance)};
}

std::vector<BenchmarkEntry> make_catalog() {
    std::vector<BenchmarkEntry> c;
    c.push_back(entry("10bar-case1", ten_bar(false),
                      {30.5091, 0.1, 23.2004, 15.1926, 0.1, 0.5559, 7.4612, 21.0714, 21.4731, 0.1}, 5058.66,
                      "Table 1", "standard two-bay cantilever, 360 in bays, loads at the free bottom nodes"));
    c.push_back(entry("10bar-case2", ten_bar(true),
                      {23.3187, 0.1, 25.5790, 14.6640, 0.1, 1.9695, 12.2654, 12.6473, 20.3422, 0.1}, 4675.43,
                      "Table 2", "same geometry as 10bar-case1 with the second loading"));
    c.push_back(entry("17bar", seventeen_bar(),
                      {15.8187, 0.1051, 12.0246, 0.1, 8.1132, 5.5318, 11.8431, 0.1, 7.9560, 0.1, 4.0711, 0.1, 5.6841,
                       4.0087, 5.5849, 0.1, 5.5804},
                      2578.76, "Table 3",
                      "standard four-bay 100 in cantilever; 50 ksi stress limit from the cited sources"));
    c.push_back(entry("18bar", eighteen_bar(), {9.9671, 21.5990, 12.4492, 7.0490}, 6419.23, "Table 4",
                      "standard five-bay 250 in cantilever with Euler buckling K = 4"));
    c.push_back(entry("22bar", twenty_two_bar(), {2.6301, 1.2289, 0.3550, 0.4153, 2.7332, 2.0688, 2.0371}, 1019.43,
                      "Table 7", "reconstructed; see the README"));
    c.push_back(entry("25bar", twenty_five_bar(), {0.0100, 1.9864, 2.9975, 0.0100, 0.0100, 0.6806, 1.6733, 2.6638},
                      544.88, "Table 10", "standard 25-bar transmission tower"));
    c.push_back(entry("72bar", seventy_two_bar(),
                      {0.1563, 0.5462, 0.4096, 0.5696, 0.5239, 0.5159, 0.1002, 0.1006, 1.2691, 0.5101, 0.1, 0.1012,
                       1.8861, 0.5129, 0.1, 0.1009},
                      379.56, "Table 11",
                      "standard four-story 72-bar tower, 120 in square, 60 in stories; the \"~0.25 in\" "
                      "displacement limit is read as +/-0.25 in, x and y, on the four top nodes"));
    c.push_back(entry("200bar", two_hundred_bar(),
                      {0.1457, 0.9405, 0.1004, 0.1,    1.9397, 0.2958, 0.101,  3.1032, 0.1012, 4.1084,
                       0.4042, 0.1872, 5.4329, 0.1018, 6.4244, 0.5723, 0.1327, 7.9708, 0.1007, 8.9735,
                       0.7048, 0.4192, 10.8671, 0.1002, 11.8649, 1.0333, 6.6852, 10.8036, 13.8328},
                      25443.11, "Table 13",
                      "standard 200-bar plane truss, 29 member groups, three loadings; lateral loads at "
                      "nodes 1, 6, 15, 20, 29, 43, 48, 57, 62, 71 and no gravity load at node 57"));
    return c;
}

}  // namespace

const std::vector<BenchmarkEntry>& builtin_models() {
    static const std::vector<BenchmarkEntry> catalog = make_catalog();
    return catalog;
}

const BenchmarkEntry& builtin(std::string_view id) {
    for (const BenchmarkEntry& e : builtin_models()) {
        if (e.id == id) return e;
    }
    throw std::out_of_range("unknown built-in model \"" + std::string(id) + "\"");
}

}  // namespace trussopt
