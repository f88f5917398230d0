#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "casson/intform.hpp"
#include "casson/kirby.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace casson;

namespace {

FramedPresentation random_presentation(std::mt19937& rng, int max_size = 5) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<int> entry_dist(-4, 4);
    const int n = size_dist(rng);
    SymIntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, entry_dist(rng));
    return presentation_of(std::move(m));
}

// the move-invariant part of a boundary report (the determinant sign is not
// preserved by blow-ups and blow-downs, only |det| is)
struct BoundaryInvariants {
    bool finite;
    Integer order;
    bool sphere;

    bool operator==(const BoundaryInvariants&) const = default;
};

BoundaryInvariants boundary_invariants(const FramedPresentation& p) {
    const BoundaryReport b = boundary_report(p);
    return {b.first_homology_finite, b.first_homology_order, b.is_homology_sphere};
}

}  // namespace

TEST_CASE("the two-component presentation", "[kirby]") {
    CHECK(wn_presentation(0).matrix == SymIntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(wn_presentation(6).matrix == SymIntMatrix::from_rows({{0, 1}, {1, 6}}));
    CHECK(wn_presentation(3).labels == std::vector<std::string>{"K1", "K2"});
    for (long long n = -12; n <= 12; ++n) {
        const BoundaryReport b = boundary_report(wn_presentation(n));
        CHECK(b.is_homology_sphere);
        CHECK(b.first_homology_order == 1);
    }
}

TEST_CASE("blow up adds an unlinked unit component", "[kirby]") {
    const FramedPresentation p = blow_up(wn_presentation(0), 1);
    CHECK(p.matrix == SymIntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(p.labels.size() == 3);
    CHECK(index(p.matrix) == index(wn_presentation(0).matrix) + 1);
    CHECK(index(blow_up(wn_presentation(0), -1).matrix) == -1);
    CHECK(boundary_report(p) == boundary_report(wn_presentation(0)));
}

TEST_CASE("blow down round trip", "[kirby]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const FramedPresentation p = random_presentation(rng);
        for (int sign : {1, -1}) {
            const FramedPresentation up = blow_up(p, sign);
            CHECK(blow_down(up, up.size() - 1) == p);
        }
    }
    FramedPresentation single;
    single.matrix = SymIntMatrix::diagonal({1});
    single.labels = {"u"};
    CHECK(blow_down(single, 0).size() == 0);
}

TEST_CASE("blow down clears linking components automatically", "[kirby]") {
    // component 0 has framing -1 and links both others
    FramedPresentation p = presentation_of(
        SymIntMatrix::from_rows({{-1, 2, 1}, {2, 3, 0}, {1, 0, -2}}));
    const Integer before = det_exact(p.matrix);
    const FramedPresentation down = blow_down(p, 0);
    CHECK(down.size() == 2);
    const Integer after = det_exact(down.matrix);
    CHECK((after == before || after == -before));
    CHECK(index(down.matrix) == index(p.matrix) + 1);
}

TEST_CASE("blow down requires a unit framing", "[kirby]") {
    CHECK_ERROR_NAME(blow_down(wn_presentation(5), 1), "FramingNotUnit");
    CHECK_ERROR_NAME(blow_down(wn_presentation(5), 7), "BadComponentIndex");
}

TEST_CASE("handle slides", "[kirby]") {
    const FramedPresentation p = presentation_of(SymIntMatrix::diagonal({1, 1}));
    CHECK(handle_slide(p, 0, 1, 1).matrix == SymIntMatrix::from_rows({{2, 1}, {1, 1}}));
    for (long long n : {-3LL, 0LL, 5LL}) {
        const FramedPresentation slid = handle_slide(wn_presentation(n), 1, 0, 1);
        CHECK(slid.matrix == SymIntMatrix::from_rows({{0, 1}, {1, n + 2}}));
    }
    CHECK_ERROR_NAME(handle_slide(p, 1, 1, 1), "SameComponent");
}

TEST_CASE("moves preserve the boundary", "[kirby]") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> which(0, 2), sign_dist(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        FramedPresentation p = random_presentation(rng);
        const BoundaryInvariants before = boundary_invariants(p);
        for (int step = 0; step < 6; ++step) {
            const int sign = sign_dist(rng) ? 1 : -1;
            switch (which(rng)) {
                case 0:
                    p = blow_up(p, sign);
                    break;
                case 1: {
                    // only blow down unit-framed components
                    int unit = -1;
                    for (int i = 0; i < p.size(); ++i)
                        if (p.matrix.at(i, i) == 1 || p.matrix.at(i, i) == -1) unit = i;
                    if (unit >= 0 && p.size() > 1) p = blow_down(p, unit);
                    break;
                }
                default: {
                    if (p.size() >= 2) {
                        std::uniform_int_distribution<int> pick(0, p.size() - 1);
                        const int i = pick(rng);
                        int j = pick(rng);
                        if (i == j) j = (j + 1) % p.size();
                        const SymIntMatrix m0 = p.matrix;
                        p = handle_slide(p, i, j, sign);
                        CHECK(det_exact(p.matrix) == det_exact(m0));  // slides preserve det exactly
                        CHECK(inertia(p.matrix) == inertia(m0));
                    }
                    break;
                }
            }
            CHECK(boundary_invariants(p) == before);
        }
    }
}

TEST_CASE("union of homology-sphere fillings", "[kirby]") {
    FramedPresentation v1;
    v1.matrix = SymIntMatrix::diagonal({1});
    v1.labels = {"h"};
    FramedPresentation v2;
    v2.matrix = SymIntMatrix::diagonal({-1});
    v2.labels = {"h"};
    CHECK(union_closed_form(v1, v2) == SymIntMatrix::diagonal({1, 1}));

    const FramedPresentation empty;
    CHECK(union_closed_form(empty, empty).size() == 0);

    const FramedPresentation w = wn_presentation(4);
    const SymIntMatrix u = union_closed_form(w, v2);
    CHECK(u.size() == w.size() + v2.size());
    CHECK(index(u) == index(w.matrix) - index(v2.matrix));

    FramedPresentation lens;
    lens.matrix = SymIntMatrix::diagonal({2});
    lens.labels = {"h"};
    CHECK_ERROR_NAME(union_closed_form(v1, lens), "NotHomologySphereBoundary");
}

TEST_CASE("boundary reports", "[kirby]") {
    const BoundaryReport two = boundary_report(presentation_of(SymIntMatrix::diagonal({2})));
    CHECK(two.first_homology_order == 2);
    CHECK_FALSE(two.is_homology_sphere);
    const BoundaryReport zero = boundary_report(presentation_of(SymIntMatrix::diagonal({0})));
    CHECK_FALSE(zero.first_homology_finite);
    CHECK_FALSE(zero.is_homology_sphere);
}

TEST_CASE("appendix matrices match their sources", "[kirby]") {
    const SymIntMatrix a = appendix_matrix_A(3);
    CHECK(a.size() == 10);
    CHECK(a.at(0, 0) == -2);        // (1,1)
    CHECK(a.at(3, 4) == 1);         // (4,5)
    CHECK(a.at(4, 3) == 1);
    CHECK(appendix_matrix_A(6).at(5, 5) == 0);  // (6,6) = n - 6
    const SymIntMatrix b = appendix_matrix_B(3);
    CHECK(b.size() == 14);
    CHECK(b.at(13, 13) == -2);      // (14,14)
    CHECK(b.at(10, 13) == 1);       // (11,14)
    CHECK(appendix_matrix_B(5).at(9, 9) == 0);  // (10,10) = n - 5
    CHECK(is_unimodular(a));
    CHECK(is_unimodular(b));
}

TEST_CASE("appendix determinants against the expansion oracle", "[kirby]") {
    for (long long n : {-12LL, -1LL, 0LL, 6LL, 12LL}) {
        CHECK(det_exact(appendix_matrix_A(n)) == testutil::naive_det(appendix_matrix_A(n)));
        CHECK(det_exact(appendix_matrix_B(n)) == testutil::naive_det(appendix_matrix_B(n)));
    }
}

TEST_CASE("move scripts", "[kirby]") {
    const std::string script =
        "# build and remove a cancelling pair\n"
        "blowup +1\n"
        "slide 1 3 +1   # slide K1 over the new component\n"
        "slide 1 3 -1\n"
        "blowdown 3\n";
    const std::vector<KirbyMove> moves = parse_move_script(script);
    REQUIRE(moves.size() == 4);
    CHECK(moves[0] == KirbyMove{KirbyMove::Kind::BlowUp, 1, 0, 0});
    CHECK(moves[1] == KirbyMove{KirbyMove::Kind::Slide, 1, 0, 2});
    CHECK(moves[3] == KirbyMove{KirbyMove::Kind::BlowDown, 0, 2, 0});

    const FramedPresentation start = wn_presentation(2);
    const FramedPresentation end = apply_moves(start, moves);
    CHECK(end.matrix == start.matrix);
    CHECK(boundary_report(end) == boundary_report(start));

    CHECK_ERROR_NAME(parse_move_script("blowup 2\n"), "MalformedMoveScript");
    CHECK_ERROR_NAME(parse_move_script("slide 1 +1\n"), "MalformedMoveScript");
    CHECK_ERROR_NAME(parse_move_script("twist 1\n"), "MalformedMoveScript");
    CHECK_ERROR_NAME(parse_move_script("blowdown 0\n"), "MalformedMoveScript");
    CHECK_ERROR_NAME(parse_move_script("blowup +1 extra\n"), "MalformedMoveScript");
    CHECK(parse_move_script("   \n# only comments\n").empty());
}
