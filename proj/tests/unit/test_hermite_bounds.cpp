#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "latbound/format.hpp"
#include "latbound/hermite_bounds.hpp"

using namespace latbound::hermite;

TEST_CASE("exact table holds the nine known power values") {
    const auto& table = exact_gamma_table();
    REQUIRE(table.size() == 9);
    const long long want[][3] = {
        {1, 1, 1},   {2, 4, 3},  {3, 2, 1},  {4, 4, 1},          {5, 8, 1},
        {6, 64, 3},  {7, 64, 1}, {8, 256, 1}, {24, 281474976710656LL, 1},
    };
    for (int i = 0; i < 9; ++i) {
        CHECK(table[i].n == want[i][0]);
        CHECK(table[i].num == want[i][1]);
        CHECK(table[i].den == want[i][2]);
        CHECK(table[i].literature_sourced == (table[i].n == 24));
    }
}

TEST_CASE("exact_gamma takes clean n-th roots") {
    CHECK(*exact_gamma(1) == 1.0);
    CHECK(*exact_gamma(2) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(*exact_gamma(3) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
    CHECK(*exact_gamma(4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(*exact_gamma(8) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(*exact_gamma(24) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_FALSE(exact_gamma(9).has_value());
    CHECK_FALSE(exact_gamma(0).has_value());
    CHECK_FALSE(exact_gamma(25).has_value());
}

TEST_CASE("blichfeldt bound matches reference values") {
    CHECK(blichfeldt_bound(1) == doctest::Approx(1.125).epsilon(1e-12));
    CHECK(blichfeldt_bound(2) ==
          doctest::Approx(1.2732395447351627).epsilon(1e-12));
    CHECK(blichfeldt_bound(8) ==
          doctest::Approx(2.1070528770589854).epsilon(1e-12));
    CHECK(blichfeldt_bound(9) ==
          doctest::Approx(2.2406464525576101).epsilon(1e-12));
    CHECK(blichfeldt_bound(109) ==
          doctest::Approx(14.496150787227611).epsilon(1e-12));
    CHECK(blichfeldt_bound(1000) ==
          doctest::Approx(119.52331104250887).epsilon(1e-12));
    CHECK(blichfeldt_bound(2000) ==
          doctest::Approx(236.85644207797445).epsilon(1e-12));
    CHECK_THROWS_AS(blichfeldt_bound(0), std::domain_error);
}

TEST_CASE("linear bounds evaluate their closed forms and validity") {
    CHECK_FALSE(evaluate_bound(BoundKind::LinearLLS, 1).valid);
    CHECK(evaluate_bound(BoundKind::LinearLLS, 2).value ==
          doctest::Approx(4.0 / 3.0));
    CHECK(evaluate_bound(BoundKind::LinearNV, 4).value ==
          doctest::Approx(2.0));
    CHECK_FALSE(evaluate_bound(BoundKind::LinearNeu, 1).valid);
    // (2+6)/7 would undercut the exact n=2 constant, so 2 stays invalid.
    CHECK_FALSE(evaluate_bound(BoundKind::LinearNeu, 2).valid);
    CHECK(evaluate_bound(BoundKind::LinearNeu, 3).valid);
    CHECK(evaluate_bound(BoundKind::LinearNeu, 8).value ==
          doctest::Approx(2.0));
    CHECK(evaluate_bound(BoundKind::LinearWC18, 1).value ==
          doctest::Approx(1.325));
    CHECK(evaluate_bound(BoundKind::LinearNew, 1).value ==
          doctest::Approx(1.0 / 8.5 + 2.0));
    CHECK(evaluate_bound(BoundKind::Blichfeldt, 3).value ==
          doctest::Approx(blichfeldt_bound(3)));
    CHECK_THROWS_AS(evaluate_bound(BoundKind::LinearNV, 0),
                    std::domain_error);
}

TEST_CASE("every valid bound is sound against the exact values") {
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 24}) {
        double exact = *exact_gamma(n);
        for (BoundKind kind :
             {BoundKind::Blichfeldt, BoundKind::LinearLLS, BoundKind::LinearNV,
              BoundKind::LinearNeu, BoundKind::LinearWC18,
              BoundKind::LinearNew}) {
            BoundEvaluation ev = evaluate_bound(kind, n);
            if (ev.valid) {
                CHECK(ev.value >= exact - 1e-12);
            }
        }
        CHECK(best_upper_bound(n) == doctest::Approx(exact).epsilon(1e-15));
    }
}

TEST_CASE("best_upper_bound prefers the sharpest admissible value") {
    // At n = 9 the (n+6)/7 line undercuts everything else.
    CHECK(best_upper_bound(9) == doctest::Approx(15.0 / 7.0).epsilon(1e-15));
    // Dominance: never above any valid bound on a wide sweep.
    for (int n = 1; n <= 100000; ++n) {
        double best = best_upper_bound(n);
        for (BoundKind kind :
             {BoundKind::Blichfeldt, BoundKind::LinearLLS, BoundKind::LinearNV,
              BoundKind::LinearNeu, BoundKind::LinearWC18,
              BoundKind::LinearNew}) {
            BoundEvaluation ev = evaluate_bound(kind, n);
            if (ev.valid) {
                CHECK(best <= ev.value + 1e-12);
            }
        }
    }
}

TEST_CASE("the two newest lines cross exactly at 109") {
    CHECK(hermite_crossover() == 109);
    for (int n = 1; n <= 1000; ++n) {
        double wc18 = evaluate_bound(BoundKind::LinearWC18, n).value;
        double newer = evaluate_bound(BoundKind::LinearNew, n).value;
        if (n >= 109) {
            CHECK(newer < wc18);
        } else {
            CHECK(newer >= wc18);
        }
    }
}

TEST_CASE("figure 1 series pins both ratio columns") {
    auto rows = figure1_series(1000);
    REQUIRE(rows.size() == 1000);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].ratio1 ==
          doctest::Approx(1.1777777777777778).epsilon(1e-12));
    CHECK(rows[0].ratio2 ==
          doctest::Approx(1.8823529411764706).epsilon(1e-12));
    CHECK(rows[108].n == 109);
    CHECK(rows[108].ratio1 ==
          doctest::Approx(1.0226852781541245).epsilon(1e-12));
    CHECK(rows[108].ratio2 ==
          doctest::Approx(1.0225838313454593).epsilon(1e-12));
    CHECK(rows[999].ratio2 ==
          doctest::Approx(1.0010353443185365).epsilon(1e-12));
    CHECK_THROWS_AS(figure1_series(0), std::domain_error);
}

TEST_CASE("both figure 1 ratios stay above one over a long sweep") {
    // The linear caps never dip below the Blichfeldt curve here: they are
    // complements, not replacements.
    for (const auto& row : figure1_series(10000)) {
        CHECK(row.ratio1 > 1.0);
        CHECK(row.ratio2 > 1.0);
    }
}

TEST_CASE("figure 1 CSV is stable and LF-terminated") {
    auto rows = figure1_series(2);
    std::ostringstream out;
    write_figure1_csv(out, rows);
    std::string text = out.str();
    // Header plus one row per n, 12 significant digits, LF only.
    CHECK(text.rfind("n,ratio1,ratio2\n1,1.17777777778,1.88235294118\n2,",
                     0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');
    std::string line2 = "2," + latbound::fmt12(rows[1].ratio1) + "," +
                        latbound::fmt12(rows[1].ratio2) + "\n";
    CHECK(text.substr(text.find("\n2,") + 1) == line2);
}
