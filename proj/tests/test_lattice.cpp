#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfh/lattice.hpp"
#include "pfh/twist.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

using pfh::LatticePath;
using pfh::Piece;
using pfh::Poly;
using pfh::PrimitiveSegment;
using pfh::Rat;
using pfh::Run;
using pfh::TwistProfile;

namespace {

TwistProfile quadratic() {
    return TwistProfile::from_pieces(
        {Piece{Rat(-1), Rat(1), Poly(std::vector<Rat>{Rat(1, 2), Rat(1), Rat(1, 2)})}});
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

TEST_CASE("literal form round trips") {
    LatticePath p = LatticePath::parse("-1; 1:0*1, 1:2*1");
    CHECK(p.y0() == -1);
    CHECK(p.degree() == 2);
    CHECK(p.segment_count() == 2);
    CHECK(p.rise() == 2);
    CHECK(p.literal() == "-1; 1:0*1, 1:2*1");

    // The multiplicity suffix is optional on input, explicit on output.
    CHECK(LatticePath::parse("0; 1:0").literal() == "0; 1:0*1");
    CHECK(LatticePath::parse("0; 1:0, 2:1").literal() == "0; 1:0*1, 2:1*1");
    CHECK(LatticePath::parse("3; 1:1*4") ==
          LatticePath::make(3, {Run{PrimitiveSegment{1, 1}, 4}}));

    CHECK_THROWS_AS(LatticePath::parse("no semicolon"), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::parse("0; "), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::parse("0; 1-2"), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::parse("x; 1:0"), std::invalid_argument);
}

TEST_CASE("path validation") {
    CHECK_THROWS_AS(LatticePath::make(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{0, 1}, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{1, -1}, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{2, 4}, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{1, 0}, 0}}),
                    std::invalid_argument);
    // Equal slopes belong in one run; decreasing slopes are not convex.
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{1, 1}, 1},
                                          Run{PrimitiveSegment{1, 1}, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath::make(0, {Run{PrimitiveSegment{1, 2}, 1},
                                          Run{PrimitiveSegment{1, 1}, 1}}),
                    std::invalid_argument);
}

TEST_CASE("heights along the graph") {
    LatticePath p = LatticePath::parse("-1; 1:0, 1:2");
    CHECK(p.height_at(Rat(0)) == -1);
    CHECK(p.height_at(Rat(1)) == -1);
    CHECK(p.height_at(Rat(3, 2)) == 0);
    CHECK(p.height_at(Rat(2)) == 1);
    CHECK_THROWS_AS(p.height_at(Rat(-1)), std::domain_error);
    CHECK_THROWS_AS(p.height_at(Rat(5, 2)), std::domain_error);
}

TEST_CASE("fixture paths agree with the hand computed index, both routes") {
    std::ifstream in(std::string(PFH_DATA_DIR) + "/paths.txt");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        size_t b1 = line.find('|');
        size_t b2 = line.find('|', b1 + 1);
        REQUIRE(b2 != std::string::npos);
        LatticePath path = LatticePath::parse(trim(line.substr(0, b1)));
        long long want_I = std::stoll(trim(line.substr(b1 + 1, b2 - b1 - 1)));
        long long want_j = std::stoll(trim(line.substr(b2 + 1)));

        pfh::IndexBreakdown byc = pfh::index_by_count(path);
        pfh::IndexBreakdown bya = pfh::index_by_area(path);
        CAPTURE(path.literal());
        CHECK(byc.I == want_I);
        CHECK(byc.j == want_j);
        CHECK(bya.I == want_I);
        CHECK(bya.j == want_j);
        CHECK(byc.j == byc.j_plus - byc.j_minus);
        CHECK(byc.I == 2 * byc.j - path.degree());
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("vertical shifts move the index by (2d+2) dy") {
    for (const char* lit : {"0; 1:0*4", "0; 1:1*2", "1; 2:1*1, 1:1*1"}) {
        LatticePath p = LatticePath::parse(lit);
        long long R = 2 * p.degree() + 2;
        long long base = pfh::index_by_count(p).I;
        for (long long dy : {-2LL, -1LL, 1LL, 3LL}) {
            LatticePath q = p.shifted(dy);
            CHECK(q.y0() == p.y0() + dy);
            CHECK(pfh::index_by_count(q).I == base + R * dy);
            CHECK(pfh::index_by_area(q).I == base + R * dy);
        }
    }
}

TEST_CASE("action pairs each step with its dual height") {
    TwistProfile q = quadratic();
    // Slope 0 steps sit at z = -1 where both terms vanish.
    CHECK(pfh::action(LatticePath::parse("0; 1:0*4"), q) == 0);
    CHECK(pfh::action(LatticePath::parse("2; 1:0*2"), q) == 2);
    // Slope 1 sits at z = 0: each step contributes (1 + 1/2) / 2.
    CHECK(pfh::action(LatticePath::parse("0; 1:1*2"), q) == Rat(3, 2));
    // Slope 2 sits at z = 1: (2 * 0 + 1 * 2) / 2 = 1.
    CHECK(pfh::action(LatticePath::parse("0; 1:0*1, 1:2*1"), q) == 1);
    // Steeper than the profile allows.
    CHECK_THROWS_AS(pfh::action(LatticePath::parse("0; 1:3*1"), q), std::domain_error);
}

TEST_CASE("farey slopes come out ascending and primitive") {
    auto slopes = pfh::farey_slopes(3, Rat(2));
    REQUIRE(slopes.size() == 9);
    CHECK(slopes.front().q == 1);
    CHECK(slopes.front().p == 0);
    CHECK(slopes.back().q == 1);
    CHECK(slopes.back().p == 2);
    for (size_t i = 0; i + 1 < slopes.size(); ++i) {
        Rat a(slopes[i].p, slopes[i].q), b(slopes[i + 1].p, slopes[i + 1].q);
        CHECK(a < b);
    }
    for (const PrimitiveSegment& s : slopes) CHECK(std::gcd(s.q, s.p) == 1);
    CHECK_THROWS_AS(pfh::farey_slopes(0, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(pfh::farey_slopes(3, Rat(-1)), std::invalid_argument);
}

TEST_CASE("shape and path enumeration counts") {
    std::vector<std::string> seen;
    auto visit = [&](const LatticePath& p) { seen.push_back(p.literal()); };

    // Degree 2, slope cap 2: segments (1,0) (1,1) (1,2) (2,1) (2,3) combine
    // into 8 convex shapes. Visit order is lexicographic in the multiplicity
    // vector, so the steep shapes come first and the flat one last.
    unsigned long long shapes = pfh::enumerate_shapes(2, Rat(2), visit);
    CHECK(shapes == 8);
    CHECK(seen.size() == 8);
    CHECK(seen.front() == "0; 1:2*2");
    CHECK(seen.back() == "0; 1:0*2");

    seen.clear();
    unsigned long long paths = pfh::enumerate_paths(2, Rat(2), -1, 1, visit);
    CHECK(paths == 24);

    // Sorting by path_order puts the flat shape first.
    std::vector<LatticePath> parsed;
    pfh::enumerate_shapes(2, Rat(2), [&](const LatticePath& p) { parsed.push_back(p); });
    std::sort(parsed.begin(), parsed.end(), pfh::path_order);
    CHECK(parsed.front().literal() == "0; 1:0*2");
    CHECK(parsed.back().literal() == "0; 1:2*2");

    pfh::EnumerationLimits tight;
    tight.max_d = 1;
    CHECK_THROWS_AS(pfh::enumerate_shapes(2, Rat(2), visit, tight), std::invalid_argument);
    pfh::EnumerationLimits narrow;
    narrow.max_slope_times_d = Rat(1);
    CHECK_THROWS_AS(pfh::enumerate_shapes(2, Rat(2), visit, narrow), std::invalid_argument);
    pfh::EnumerationLimits tiny;
    tiny.max_paths = 3;
    CHECK_THROWS_AS(pfh::enumerate_shapes(2, Rat(2), visit, tiny), std::runtime_error);
    CHECK_THROWS_AS(pfh::enumerate_paths(2, Rat(2), 1, 0, visit), std::invalid_argument);
}

TEST_CASE("path order is lexicographic in base height then steps") {
    LatticePath a = LatticePath::parse("0; 1:0*2");
    LatticePath b = LatticePath::parse("0; 1:0*1, 1:1*1");
    LatticePath c = LatticePath::parse("1; 1:0*2");
    LatticePath d = LatticePath::parse("0; 1:0*1");
    CHECK(pfh::path_order(a, b));
    CHECK(pfh::path_order(b, c));
    CHECK(pfh::path_order(a, c));
    CHECK_FALSE(pfh::path_order(b, a));
    CHECK_FALSE(pfh::path_order(a, a));
    // A strict prefix precedes its extensions.
    CHECK(pfh::path_order(d, a));
}

TEST_CASE("equality compares the full run structure") {
    CHECK(LatticePath::parse("0; 1:1*2") == LatticePath::parse("0; 1:1*2"));
    CHECK_FALSE(LatticePath::parse("0; 1:1*2") == LatticePath::parse("1; 1:1*2"));
    CHECK_FALSE(LatticePath::parse("0; 1:1*2") == LatticePath::parse("0; 1:1*1"));
}
