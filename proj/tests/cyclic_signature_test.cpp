#include <doctest.h>

#include <random>

#include "sbinv/constructions.hpp"
#include "sbinv/cyclic_signature.hpp"
#include "sbinv/surface_products.hpp"

using namespace sbinv;

TEST_CASE("hirzebruch_signature on the double covers") {
    // (g,n) = (2,2): sigma = 0 - (3/6)(-32) = 16.
    CHECK(hirzebruch_signature({2, 0, -32}) == 16);
    // Double-cover example: 0 - (3/6)(-64) = 32.
    CHECK(hirzebruch_signature({2, 0, -64}) == 32);
}

TEST_CASE("hirzebruch_signature with one sheet is the ambient signature") {
    CHECK(hirzebruch_signature({1, 5, -32}) == 5);
    CHECK(hirzebruch_signature({1, -12, 99}) == -12);
}

TEST_CASE("hirzebruch_signature on the (2,3) branch data") {
    // At (g,n) = (2,3) each graph has degree 2*3^2 = 18 into a genus-2
    // target, square -36, so the branch class squares to -72 and
    // sigma = -(8/9)(-72) = 64.
    CHECK(graph_self_intersection({Genus(19), Genus(2), 18}) == -36);
    CHECK(hirzebruch_signature({3, 0, -72}) == 64);
}

TEST_CASE("hirzebruch_signature rejects non-integer results") {
    // (8/9)*24 is not an integer; such branch data cannot come from a
    // genuine triple cover.
    CHECK_THROWS_AS(hirzebruch_signature({3, 0, -24}), Error);
    CHECK_THROWS_AS(hirzebruch_signature({2, 0, -31}), Error);
    CHECK_THROWS_AS(hirzebruch_signature({0, 0, 0}), Error);
}

TEST_CASE("hirzebruch_signature is linear in the branch square") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> sheets_dist(1, 8);
    std::uniform_int_distribution<int> scale(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const Int n = sheets_dist(rng);
        // Multiples of 3n keep every evaluation integral.
        const Int b1 = Int(scale(rng)) * 3 * n;
        const Int b2 = Int(scale(rng)) * 3 * n;
        const Int sum = hirzebruch_signature({n, 0, b1 + b2});
        CHECK(sum == hirzebruch_signature({n, 0, b1}) + hirzebruch_signature({n, 0, b2}));
    }
}

TEST_CASE("hirzebruch_signature agrees with the closed form across the family") {
    for (Int g = 2; g <= 5; ++g)
        for (Int n = 2; n <= 5; ++n) {
            const ConstructionReport rep = build_xgn({g, n});
            const Int via_cover = hirzebruch_signature({n, 0, branch_class_square(rep.graphs)});
            CHECK(via_cover == signature_closed_form({g, n}));
        }
}

TEST_CASE("signature_quantum divides by four exactly") {
    CHECK(signature_quantum(16) == 4);
    CHECK(signature_quantum(0) == 0);
    // sigma of the (3,2) member: 4/3 * 3*2 * 3 * 2^3 = 192.
    CHECK(signature_closed_form({3, 2}) == 192);
    CHECK(signature_quantum(192) == 48);
    CHECK(signature_quantum(-8) == -2);
    CHECK_THROWS_AS(signature_quantum(15), Error);
    CHECK_THROWS_AS(signature_quantum(2), Error);
}
