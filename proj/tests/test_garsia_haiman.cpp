#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtk/checks.hpp"
#include "qtk/errors.hpp"
#include "qtk/garsia_haiman.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

using namespace qtk;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
MultiPoly PP(const std::string& s) { return MultiPoly::parse(s); }
}  // namespace

TEST_CASE("delta determinants") {
    DiagonalPoly one = delta_mu(P("1"));
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms.at(std::vector<int>{0, 0}) == 1);

    // cells (0,0),(1,0): det [[1, x1],[1, x2]] = x2 - x1
    DiagonalPoly row = delta_mu(P("2"));
    REQUIRE(row.terms.size() == 2);
    CHECK(row.terms.at(std::vector<int>{0, 1, 0, 0}) == 1);
    CHECK(row.terms.at(std::vector<int>{1, 0, 0, 0}) == -1);
    CHECK(row.bidegree() == std::pair<int, int>{1, 0});

    // cells (0,0),(0,1): y2 - y1
    DiagonalPoly col = delta_mu(P("1,1"));
    REQUIRE(col.terms.size() == 2);
    CHECK(col.terms.at(std::vector<int>{0, 0, 0, 1}) == 1);
    CHECK(col.terms.at(std::vector<int>{0, 0, 1, 0}) == -1);

    CHECK_THROWS_AS(delta_mu(P("3,2,1")), SizeBound);
}

TEST_CASE("derivatives") {
    DiagonalPoly row = delta_mu(P("2"));
    DiagonalPoly d1 = derivative(row, 0);  // d/dx1
    REQUIRE(d1.terms.size() == 1);
    CHECK(d1.terms.at(std::vector<int>{0, 0, 0, 0}) == -1);
    CHECK(derivative(row, 2).is_zero());  // d/dy1
    CHECK(span_rank({row, d1}) == 2);
    CHECK(span_rank({row, row}) == 1);
}

TEST_CASE("hilbert series of small modules") {
    BigradedHilbert h1 = gh_hilbert(P("1"));
    CHECK(h1.dims == std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}});

    BigradedHilbert h2 = gh_hilbert(P("2"));
    CHECK(h2.dims ==
          std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 0}, 1}});
    CHECK(h2.total() == 2);

    BigradedHilbert h21 = gh_hilbert(P("2,1"));
    CHECK(h21.total() == 6);
    CHECK(h21.to_poly() == PP("1 + 2*q + 2*t + q*t"));
    CHECK_THROWS_AS(gh_hilbert(P("2,2,1")), SizeBound);
}

TEST_CASE("dimension n! up to four cells") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(gh_hilbert(mu).total() == factorial(n));
}

TEST_CASE("crosscheck orientations") {
    GhCrosscheck two = gh_crosscheck(P("2"));
    CHECK(two.hilbert == PP("1 + q"));
    CHECK(two.macdonald_sum == PP("1 + t"));
    CHECK(two.matched == GhOrientation::swapped);

    GhCrosscheck hook = gh_crosscheck(P("2,1"));
    CHECK(hook.matched == GhOrientation::both);
    CHECK(hook.macdonald_sum == PP("1 + 2*q + 2*t + q*t"));

    // conjugate pair mirrors under the swap
    GhCrosscheck col4 = gh_crosscheck(P("1,1,1,1"));
    GhCrosscheck row4 = gh_crosscheck(P("4"));
    const std::map<Var, MultiPoly> swap_qt{{Var::q, MultiPoly::variable(Var::t)},
                                           {Var::t, MultiPoly::variable(Var::q)}};
    CHECK(col4.hilbert == row4.hilbert.specialize(swap_qt));

    // a single global orientation covers every mu up to n = 4
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            GhCrosscheck rec = gh_crosscheck(mu);
            CHECK(rec.matched != GhOrientation::exact);  // swapped or both
        }
}

TEST_CASE("orientation names") {
    CHECK(std::string(orientation_name(GhOrientation::exact)) == "exact");
    CHECK(std::string(orientation_name(GhOrientation::swapped)) == "swapped");
    CHECK(std::string(orientation_name(GhOrientation::both)) == "both");
}

TEST_CASE("garsia-haiman invariant suite") {
    for (const CheckResult& r : run_gh_checks(4)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
