#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtk/checks.hpp"
#include "qtk/errors.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/tableaux.hpp"

using namespace qtk;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }
Composition C(const std::string& s) { return Composition::parse(s); }
MultiPoly PP(const std::string& s) { return MultiPoly::parse(s); }

void check_table(const std::string& mu,
                 const std::vector<std::pair<std::string, std::string>>& expected) {
    const QtKostkaTable& table = qt_kostka(P(mu));
    REQUIRE(table.entries.size() == expected.size());
    for (const auto& [lambda, poly] : expected) {
        INFO("mu=", mu, " lambda=", lambda);
        CHECK(table.entries.at(P(lambda)) == PP(poly));
    }
}

}  // namespace

TEST_CASE("filling statistics") {
    // all-ones filling has no descents and no inversions
    for (const std::string& shape : {"3", "2,2", "3,1", "2,1,1"}) {
        Partition mu = P(shape);
        Filling f{mu, std::vector<int>(static_cast<std::size_t>(mu.size()), 1)};
        FillingStats st = filling_stats(f);
        CHECK(st.inversions == 0);
        CHECK(st.maj == 0);
    }
    // single row (2,1): one inverted attacking pair
    FillingStats row = filling_stats(Filling{P("2"), {2, 1}});
    CHECK(row.inversions == 1);
    CHECK(row.maj == 0);
    // single column, 1 below 2: one descent of leg 0
    FillingStats col = filling_stats(Filling{P("1,1"), {1, 2}});
    CHECK(col.inversions == 0);
    CHECK(col.maj == 1);
    // column with 2 below 1: no descent, no attacking pair
    FillingStats col2 = filling_stats(Filling{P("1,1"), {2, 1}});
    CHECK(col2.inversions == 0);
    CHECK(col2.maj == 0);
}

TEST_CASE("monomial coefficients") {
    CHECK(monomial_coeff(P("2"), C("1,1")) == PP("1 + t"));
    CHECK(monomial_coeff(P("1,1"), C("1,1")) == PP("1 + q"));
    for (const std::string& mu : {"3", "2,1", "1,1,1"})
        CHECK(monomial_coeff(P(mu), C("3")) == MultiPoly::constant(1));
    CHECK_THROWS_AS(monomial_coeff(P("2"), C("3")), std::invalid_argument);
}

TEST_CASE("qt-Kostka tables, two cells") {
    check_table("2", {{"2", "1"}, {"1,1", "t"}});
    check_table("1,1", {{"2", "1"}, {"1,1", "q"}});
}

TEST_CASE("qt-Kostka table for (2,1)") {
    check_table("2,1", {{"3", "1"}, {"2,1", "q + t"}, {"1,1,1", "q*t"}});
}

TEST_CASE("qt-Kostka table for (2,2)") {
    check_table("2,2", {{"4", "1"},
                        {"3,1", "q + t + q*t"},
                        {"2,2", "q^2 + t^2"},
                        {"2,1,1", "q*t + q^2*t + q*t^2"},
                        {"1,1,1,1", "q^2*t^2"}});
}

TEST_CASE("qt-Kostka tables for (3,1), (2,1,1) and (4)") {
    check_table("3,1", {{"4", "1"},
                        {"3,1", "q + t + t^2"},
                        {"2,2", "q*t + t^2"},
                        {"2,1,1", "q*t + q*t^2 + t^3"},
                        {"1,1,1,1", "q*t^3"}});
    check_table("2,1,1", {{"4", "1"},
                          {"3,1", "q + q^2 + t"},
                          {"2,2", "q^2 + q*t"},
                          {"2,1,1", "q^3 + q^2*t + q*t"},
                          {"1,1,1,1", "q^3*t"}});
    check_table("4", {{"4", "1"},
                      {"3,1", "t + t^2 + t^3"},
                      {"2,2", "t^2 + t^4"},
                      {"2,1,1", "t^3 + t^4 + t^5"},
                      {"1,1,1,1", "t^6"}});
}

TEST_CASE("hall-littlewood tables") {
    std::map<Partition, MultiPoly> hl = hl_kostka(C("2,2"));
    CHECK(hl.at(P("4")) == MultiPoly::constant(1));
    CHECK(hl.at(P("3,1")) == PP("z"));
    CHECK(hl.at(P("2,2")) == PP("z^2"));
    CHECK(hl.at(P("2,1,1")).is_zero());
    CHECK(hl.at(P("1,1,1,1")).is_zero());
    // compositions route through their sorted partition
    CHECK(hl_kostka(C("1,2,1")) == hl_kostka(C("2,1,1")));
    // oracle equivalence at small size
    for (const Partition& nu : partitions_of(4))
        for (const Partition& lam : partitions_of(4))
            CHECK(hl_kostka(Composition(nu)).at(lam) ==
                  cocharge_kostka(lam, Composition(nu)));
}

TEST_CASE("schur solve rejects inconsistent coefficients") {
    // m_(2) -> 1, m_(1,1) -> q forces K[(1,1)] = q - 1 < 0
    std::map<Partition, MultiPoly> bad;
    bad.emplace(P("2"), MultiPoly::constant(1));
    bad.emplace(P("1,1"), PP("q"));
    CHECK_THROWS_AS(solve_schur(2, bad), InconsistentSystem);
    // missing coefficient
    std::map<Partition, MultiPoly> incomplete;
    incomplete.emplace(P("2"), MultiPoly::constant(1));
    CHECK_THROWS_AS(solve_schur(2, incomplete), std::invalid_argument);
}

TEST_CASE("memo cache seed and snapshot") {
    QtKostkaTable before = qt_kostka_uncached(P("3"));
    seed_qt_kostka(before);
    const QtKostkaTable& cached = qt_kostka(P("3"));
    CHECK(cached.entries == before.entries);
    bool found = false;
    for (const QtKostkaTable& t : qt_kostka_cache_entries())
        if (t.mu == P("3")) found = true;
    CHECK(found);
}

TEST_CASE("macdonald invariant suite") {
    for (const CheckResult& r : run_macdonald_checks(5)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("springer and kronecker suites") {
    for (const CheckResult& r : run_springer_checks(5)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    for (const CheckResult& r : run_kronecker_checks(4)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
