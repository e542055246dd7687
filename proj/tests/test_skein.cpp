#include "doctest.h"
#include "detskein/coloring.hpp"
#include "detskein/corpus.hpp"
#include "detskein/diagram.hpp"
#include "detskein/error.hpp"
#include "detskein/skein.hpp"
#include "oracle.hpp"

using namespace detskein;

namespace {

std::vector<TangleFraction> reduced(std::int64_t pmax, std::int64_t qmax) {
    std::vector<TangleFraction> out{TangleFraction::infinity()};
    for (std::int64_t q = 1; q <= qmax; ++q) {
        for (std::int64_t p = -pmax; p <= pmax; ++p) {
            if (oracle::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

std::int64_t cross(const TangleFraction& x, const TangleFraction& y) { return x.p() * y.q() - x.q() * y.p(); }

std::vector<TangleTemplate> one_slot_templates() {
    std::vector<TangleTemplate> out;
    for (const auto& e : bundled_templates()) {
        const LinkDiagram d = parse_pd(e.pd);
        if (d.slots().size() == 1) out.push_back(fitted(TangleTemplate(d), 0));
    }
    return out;
}

}  // namespace

TEST_SUITE("skein") {

TEST_CASE("farey neighbor examples") {
    CHECK(farey_neighbor(TangleFraction::infinity()) == TangleFraction(0, 1));
    CHECK(farey_neighbor(TangleFraction(5, 7)) == TangleFraction(2, 3));
    const TangleFraction n = farey_neighbor(TangleFraction(2, 5));
    CHECK(n == TangleFraction(1, 2));
    // Brute force: 1/2 has the least denominator among neighbors of 2/5.
    for (std::int64_t q = 0; q < 2; ++q) {
        for (std::int64_t p = -5; p <= 5; ++p) {
            if (q == 0 && p != 1) continue;
            CHECK(std::llabs(cross(TangleFraction(2, 5), TangleFraction(p, q))) != 1);
        }
    }
    for (const auto& f : reduced(15, 15)) CHECK(std::llabs(cross(f, farey_neighbor(f))) == 1);
}

TEST_CASE("mediant examples") {
    CHECK(mediant(FareyPair(TangleFraction(0, 1), TangleFraction::infinity())) == TangleFraction(1, 1));
    CHECK(mediant(FareyPair(TangleFraction(1, 2), TangleFraction(1, 3))) == TangleFraction(2, 5));
    for (std::int64_t v = 0; v <= 5; ++v) {
        for (std::int64_t d = 1; d <= 5; ++d) {
            const TangleFraction a(v + 1, 1);
            const TangleFraction b(v * d + d - 1, d);
            if (!is_farey_pair(a, b)) continue;
            const TangleFraction m = mediant(FareyPair(a, b));
            CHECK(m == TangleFraction(v * d + d + v, d + 1));
        }
    }
    CHECK_THROWS_AS(FareyPair(TangleFraction(1, 2), TangleFraction(1, 4)), DomainError);
}

TEST_CASE("oriented triple examples") {
    const LinkDiagram par = orient_for(closure_template().diagram(), 0, OrientationClass::parallel);
    const SkeinTriple t = oriented_triple(FareyPair(TangleFraction(0, 1), TangleFraction::infinity()), par, 0);
    CHECK(t.mediant == TangleFraction(1, 1));
    CHECK(*t.partner == TangleFraction(-1, 1));
    CHECK(orientation_compatible(par, 0, *t.resolution));
    const LinkDiagram anti = orient_for(closure_template().diagram(), 0, OrientationClass::antiparallel);
    const SkeinTriple u = oriented_triple(FareyPair(TangleFraction(1, 2), TangleFraction(1, 3)), anti, 0);
    CHECK(u.mediant == TangleFraction(2, 5));
    CHECK(*u.partner == TangleFraction(0, 1));
    CHECK(*u.resolution == TangleFraction(1, 2));
    CHECK_THROWS_AS(oriented_triple(FareyPair(TangleFraction(1, 2), TangleFraction(1, 3)), par, 0), DomainError);
    CHECK_THROWS_AS(oriented_triple(FareyPair(TangleFraction(0, 1), TangleFraction::infinity()), anti, 0),
                    DomainError);
}

TEST_CASE("oriented resolution is the unique compatible member") {
    for (auto cls : {OrientationClass::parallel, OrientationClass::antiparallel}) {
        const LinkDiagram t = orient_for(closure_template().diagram(), 0, cls);
        for (const auto& x : reduced(8, 8)) {
            for (const auto& y : reduced(8, 8)) {
                if (!(x < y) || !is_farey_pair(x, y)) continue;
                const FareyPair pair(x, y);
                if (!orientation_compatible(t, 0, mediant(pair))) continue;
                const SkeinTriple tr = oriented_triple(pair, t, 0);
                const TangleFraction other = *tr.resolution == x ? y : x;
                CHECK(orientation_compatible(t, 0, *tr.resolution));
                CHECK_FALSE(orientation_compatible(t, 0, other));
                CHECK(orientation_compatible(t, 0, *tr.partner));
            }
        }
    }
}

TEST_CASE("mediant triples resolve to their parents in the closure") {
    // Splice the mediant's word, smooth the first crossing of its last
    // twist block and compare with |q| of the parents.
    const LinkDiagram closure = closure_template().diagram();
    for (const auto& x : reduced(20, 20)) {
        if (x.q() == 0 || x.p() < 0) continue;
        for (const auto& y : reduced(20, 20)) {
            if (y.p() < 0 || !(x < y) || !is_farey_pair(x, y)) continue;
            const TangleFraction m = mediant(FareyPair(x, y));
            if (m.q() > 20 || m.p() > 20) continue;
            const LinkDiagram d = splice(closure, 0, m);
            const BigInt dx = std::llabs(x.q());
            const BigInt dy = std::llabs(y.q());
            bool found = false;
            for (std::size_t s = 0; s < d.crossings().size() && !found; ++s) {
                const BigInt a = determinant(resolve(d, {s}, Smoothing::zero));
                const BigInt b = determinant(resolve(d, {s}, Smoothing::one));
                found = (a == dx && b == dy) || (a == dy && b == dx);
            }
            CHECK_MESSAGE(found, to_string(x) << " " << to_string(y));
        }
    }
}

TEST_CASE("crossing-change partners differ in one crossing") {
    const LinkDiagram closure = closure_template().diagram();
    for (const auto& x : reduced(6, 6)) {
        for (const auto& y : reduced(6, 6)) {
            if (!(x < y) || !is_farey_pair(x, y)) continue;
            const FareyPair pair(x, y);
            const LinkDiagram plus = splice(closure, 0, mediant(pair));
            if (plus.crossings().empty()) continue;
            const BigInt want = determinant(splice(closure, 0, partner(pair)));
            bool found = false;
            for (std::size_t s = 0; s < plus.crossings().size() && !found; ++s) {
                found = determinant(crossing_change(plus, {s})) == want;
            }
            CHECK_MESSAGE(found, to_string(x) << " " << to_string(y));
        }
    }
}

TEST_CASE("model determinant and zero locus examples") {
    CHECK(*zero_locus(Coefficients{3, 2, 1}) == TangleFraction(3, 2));
    CHECK(*zero_locus(Coefficients{1, 1, 1}) == TangleFraction(1, 1));
    CHECK(*zero_locus(Coefficients{1, 0, 1}) == TangleFraction::infinity());
    CHECK_THROWS_AS(zero_locus(Coefficients{0, 0, 1}), DomainError);
    CHECK(model_determinant(Coefficients{3, 2, 1}, TangleFraction(3, 2)) == 0);
    CHECK(model_determinant(Coefficients{3, 2, -1}, TangleFraction(1, 1)) == 5);
}

TEST_CASE("closure template fit") {
    const Coefficients c = fit_coefficients(closure_template(), 0);
    CHECK(c.a == 1);
    CHECK(c.b == 0);
    CHECK(*zero_locus(c) == TangleFraction::infinity());
    CHECK(determinant_at(closure_template(), 0, TangleFraction(0, 1)) == 1);
    CHECK(determinant_at(closure_template(), 0, TangleFraction::infinity()) == 0);
}

TEST_CASE("fit requires one slot") {
    CHECK_THROWS_AS(fit_coefficients(TangleTemplate(parse_pd("T[1,2,3,4] T[2,1,4,3]")), 0), DomainError);
    CHECK_THROWS_AS(TangleTemplate(parse_pd("X[1,4,2,3] X[3,2,4,1]")), DomainError);
}

TEST_CASE("connected-sum template fit") {
    // Trefoil summed onto the closure: a = det at 0/1 = 3, b = 0.
    const LinkDiagram t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    const LinkDiagram c = closure_template().diagram();
    const LinkDiagram sum = connected_sum(c, lowest_arc(c), t, lowest_arc(t));
    const Coefficients co = fit_coefficients(TangleTemplate(sum), 0);
    CHECK(co.a == oracle::determinant(to_pd(splice(sum, 0, TangleFraction(0, 1)))));
    CHECK(co.a == 3);
    CHECK(co.b == 0);
}

TEST_CASE("linear model holds for bundled templates") {
    for (const auto& t : one_slot_templates()) {
        const Coefficients c = *t.coefficients(0);
        for (const auto& f : reduced(10, 10)) {
            const LinkDiagram d = splice(t.diagram(), 0, f);
            const BigInt got = determinant(d);
            CHECK(got == model_determinant(c, f));
            if (f.q() <= 3) CHECK(got == oracle::determinant(to_pd(d)));
        }
    }
}

TEST_CASE("only the zero locus has determinant zero") {
    for (const auto& t : one_slot_templates()) {
        const auto z = t.zero_locus(0);
        REQUIRE(z.has_value());
        for (const auto& f : fractions_in_box(8)) {
            const bool zero = determinant_at(t, 0, f) == 0;
            CHECK(zero == (f == *z));
        }
    }
}

TEST_CASE("fractions in box") {
    CHECK(fractions_in_box(0).empty());
    const auto box = fractions_in_box(2);
    CHECK(box.front() == TangleFraction::infinity());
    CHECK(box.size() == 1 + 5 + 2);
}

TEST_CASE("two-slot scans find at most one companion") {
    for (const auto& e : bundled_templates()) {
        const LinkDiagram d = parse_pd(e.pd);
        if (d.slots().size() != 2) continue;
        const ScanReport r = two_slot_scan(TangleTemplate(d), 0, 1, 6);
        CHECK_MESSAGE(r.max_count() <= 1, e.name);
        for (const auto& row : r.rows) {
            for (const auto& y : row.witnesses) {
                const LinkDiagram full = splice(splice(d, 0, row.x), 0, y);
                CHECK(oracle::determinant(to_pd(full)) == 0);
            }
        }
        // Swapping the slot roles gives the transposed relation.
        const ScanReport back = two_slot_scan(TangleTemplate(d), 1, 0, 6);
        std::size_t pairs = 0, back_pairs = 0;
        for (const auto& row : r.rows) pairs += row.witnesses.size();
        for (const auto& row : back.rows) back_pairs += row.witnesses.size();
        CHECK(pairs == back_pairs);
    }
    CHECK(two_slot_scan(TangleTemplate(parse_pd("T[1,2,3,4] T[2,1,4,3]")), 0, 1, 0).rows.empty());
}

TEST_CASE("a companion that makes a knot has odd determinant") {
    const LinkDiagram d = parse_pd("T[1,2,3,4] T[2,1,4,3]");
    for (const auto& x : fractions_in_box(4)) {
        const LinkDiagram half = splice(d, 0, x);
        for (const auto& y : fractions_in_box(4)) {
            const LinkDiagram full = splice(half, 0, y);
            if (components(full) == 1) CHECK(boost::multiprecision::bit_test(determinant(full), 0));
        }
    }
}

}  // TEST_SUITE
