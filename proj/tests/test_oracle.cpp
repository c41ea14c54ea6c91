#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crystal;
using fixtures::P;

TEST_CASE("exhaustive quasiperiod enumeration") {
    SECTION("two-row packed block by hand") {
        //   columns -1,0 both full: pairs within each row and the two
        //   cross-row chains in each column window
        auto cm = ChargedMultipartition::empty({0, 0}, 2);
        Abacus a = Abacus::materialize(cm, 1);
        BeadSet block;
        for (int beta = -2; beta <= 0; ++beta)
            for (int row = 1; row <= 2; ++row) block.insert(Bead{beta, row});
        auto all = oracle::all_quasiperiods(a, block);
        // starts at column 0 or -1: per start column, chains (r,r), (2,1);
        // (1,2) is not weakly decreasing
        CHECK(all.size() == 6);
        int cross = 0;
        for (const auto& q : all) cross += q.beads[0].row != q.beads[1].row ? 1 : 0;
        CHECK(cross == 2);
    }
    SECTION("empty constraint set yields nothing") {
        Abacus a = Abacus::materialize(fixtures::hw_e5(), 2);
        CHECK(oracle::all_quasiperiods(a, BeadSet{}).empty());
    }
    SECTION("the maximum quasiperiod is the first fore period") {
        for (const auto& cm : {fixtures::five_row(), fixtures::four_row(), fixtures::depth12()}) {
            Abacus a = Abacus::materialize(cm, 6);
            auto pd = fore_periods(cm, 1);
            Quasiperiod best;
            for (const auto& q : oracle::all_quasiperiods(a))
                if (best.beads.empty() || best.beads < q.beads) best = q;
            CHECK(best == pd.fore[0]);
        }
    }
}

TEST_CASE("tiling search") {
    SECTION("packed block tiles row by row") {
        BeadSet block;
        for (int beta = -1; beta <= 0; ++beta)
            for (int row = 1; row <= 3; ++row) block.insert(Bead{beta, row});
        CHECK(oracle::tiling_exists(2, block));
    }
    SECTION("odd block cannot tile") {
        BeadSet block{{0, 1}, {-1, 1}, {0, 2}};
        CHECK_FALSE(oracle::tiling_exists(2, block));
    }
    SECTION("column fixture does not tile") {
        CHECK_FALSE(oracle::totally_quasiperiodic(fixtures::column(7, 2, {3, -1}, 3)));
    }
    SECTION("misaligned packed abacus still tiles") {
        CHECK(oracle::totally_quasiperiodic(ChargedMultipartition::empty({0, 1}, 2)));
    }
}

TEST_CASE("component reconstruction from a source") {
    SECTION("empty position maps to the source itself") {
        auto cm = fixtures::hw_e5();
        auto rebuilt = oracle::component_from_source(cm, cm.rank());
        REQUIRE(rebuilt.size() == 1);
        CHECK(rebuilt.at(Partition()) == cm);
    }
    SECTION("twelve positions under the cap") {
        auto source = ChargedMultipartition::empty({0, 1}, 3);
        auto rebuilt = oracle::component_from_source(source, 12);
        CHECK(rebuilt.size() == 12);
        // injectivity: all distinct
        std::set<std::vector<Partition>> seen;
        for (auto& [theta, vertex] : rebuilt) {
            CHECK(seen.insert(vertex.components()).second);
            CHECK(vertex.rank() == 3 * theta.size());
            CHECK(theta_position(vertex).theta == theta);
        }
    }
}
