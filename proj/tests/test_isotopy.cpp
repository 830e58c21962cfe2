#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semifield/families.hpp"
#include "semifield/isotopy.hpp"

using namespace semifield;
using namespace semifield::families;

namespace {

// permuted-basis copy: structure constants relabeled by a coordinate
// permutation T, so x *' y = T(T^{-1}(x) * T^{-1}(y))
Presemifield permuted_copy(const Presemifield& s, const std::vector<int>& perm) {
    int n = s.dim();
    std::vector<int> sc(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                sc[(static_cast<size_t>(perm[i]) * n + perm[j]) * n + perm[k]] =
                    s.structure_constants()[(static_cast<size_t>(i) * n + j) * n + k];
            }
        }
    }
    return Presemifield::from_structure_constants(s.carrier(), sc, s.label() + " permuted", false);
}

}  // namespace

TEST_CASE("fingerprint wraps the nuclei report") {
    Fingerprint fp = fingerprint(field_presemifield(FieldCtx::create(3, 3)));
    CHECK(fp.p == 3);
    CHECK(fp.n == 3);
    CHECK(fp.orders == NucleiOrders{27, 27, 27, 27});
    CHECK(fp.commutative);

    Fingerprint z = fingerprint(zkw(3, 1, 2));
    CHECK(z.orders.middle == 3);
    CHECK(z.orders.center == 3);
}

TEST_CASE("bierbrauer(5,1,2) and bh(5,2,1) share parameters") {
    Fingerprint b = fingerprint(bierbrauer(5, 1, 2));
    Fingerprint h = fingerprint(bh(5, 2, 1));
    CHECK(b.p == 5);
    CHECK(b.n == 4);
    CHECK(b.orders.middle == 25);
    CHECK(b.orders.center == 5);
    CHECK(b.orders == h.orders);
    CHECK(distinguish(b, h).kind == Verdict::Kind::Unknown);
}

TEST_CASE("distinguish") {
    Presemifield field27 = field_presemifield(FieldCtx::create(3, 3));
    Presemifield twisted = gtf(3, 3, 1);
    Verdict v = distinguish(field27, twisted);
    CHECK(v.kind == Verdict::Kind::NotIsotopic);

    CHECK(distinguish(twisted, twisted).kind == Verdict::Kind::Unknown);

    // equal parameters, non-isotopic in truth: fingerprints cannot tell
    CHECK(distinguish(cmdy(5, true), cmdy(5, false)).kind == Verdict::Kind::Unknown);

    // middle orders differ at the same (p, n)
    Verdict m = distinguish(dickson(3, 3, 1), bh(3, 3, 2));
    CHECK(m.kind == Verdict::Kind::NotIsotopic);
    CHECK(m.reason.find("middle") != std::string::npos);
}

TEST_CASE("verify_isotopism: identity and Frobenius autotopisms") {
    Presemifield s = gtf(3, 3, 1);
    LinMap id = identity_map(3, 3);
    CHECK(verify_isotopism(s, s, {id, id, id}));

    // Frobenius triple on the field: x^p y^p = (xy)^p
    FieldCtx f27 = FieldCtx::create(3, 3);
    Presemifield field = field_presemifield(f27);
    LinMap frob = from_qpoly(f27, {f27.zero(), f27.one(), f27.zero()});
    CHECK(verify_isotopism(field, field, {frob, frob, frob}));
    // Frobenius in one slot only is not an isotopism
    CHECK_FALSE(verify_isotopism(field, field, {id, id, frob}));
}

TEST_CASE("verify_isotopism certifies the semifield-ization triple") {
    Presemifield s = gtf(3, 3, 1);
    std::vector<int> e = s.carrier().from_enc(1);
    auto [sf, ident] = s.to_semifield(e);
    LinMap right = s.spread_set().lookup(e);
    LinMap left = s.dual().spread_set().lookup(e);
    // (R_e, L_e, id) maps s onto its semifield-ization
    IsotopismTriple t{right, left, identity_map(3, 3)};
    CHECK(verify_isotopism(s, sf, t));
}

TEST_CASE("random non-isotopisms fail both routes") {
    Presemifield s = gtf(3, 3, 1);
    FieldCtx f27 = FieldCtx::create(3, 3);
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> dist(0, 2);
    int rejected = 0;
    for (int trial = 0; trial < 30; ++trial) {
        LinMap g1 = zero_map(3, 3), g2 = zero_map(3, 3), g3 = zero_map(3, 3);
        for (int& v : g1.a) v = dist(rng);
        for (int& v : g2.a) v = dist(rng);
        for (int& v : g3.a) v = dist(rng);
        if (!is_invertible(g1) || !is_invertible(g2) || !is_invertible(g3)) continue;
        if (!verify_isotopism(s, s, {g1, g2, g3})) ++rejected;
    }
    CHECK(rejected > 0);
}

TEST_CASE("isotopism transport to dual and transpose") {
    Presemifield s = gtf(3, 3, 1);
    std::vector<int> e = s.carrier().from_enc(1);
    auto [sf, ident] = s.to_semifield(e);
    LinMap right = s.spread_set().lookup(e);
    LinMap left = s.dual().spread_set().lookup(e);
    LinMap id = identity_map(3, 3);
    IsotopismTriple t{right, left, id};
    REQUIRE(verify_isotopism(s, sf, t));

    // dual transport: (g2, g1, g3)
    CHECK(verify_isotopism(s.dual(), sf.dual(), {t.g2, t.g1, t.g3}));

    // transpose transport: (adj(g3)^{-1}, g2, adj(g1)^{-1})
    const Carrier& car = s.carrier();
    LinMap g3t = invert(adjoint_wrt(t.g3, car.gram(), car.gram_inv()));
    LinMap g1t = invert(adjoint_wrt(t.g1, car.gram(), car.gram_inv()));
    CHECK(verify_isotopism(s.transpose(), sf.transpose(), {g3t, t.g2, g1t}));
}

TEST_CASE("nucleus conjugation transport along a certified triple") {
    Presemifield s = gtf(3, 3, 1);
    std::vector<int> e = s.carrier().from_enc(1);
    auto [sf, ident] = s.to_semifield(e);
    LinMap g1 = s.spread_set().lookup(e);          // R_e
    LinMap g2 = s.dual().spread_set().lookup(e);   // L_e
    LinMap g3 = identity_map(3, 3);
    REQUIRE(verify_isotopism(s, sf, {g1, g2, g3}));

    NucleiReport r1 = nuclei_report(s);
    NucleiReport r2 = nuclei_report(sf);
    CHECK(r2.right.same_space(r1.right.conjugate(g3)));
    CHECK(r2.left.same_space(r1.left.conjugate(g3)));
    CHECK(r2.middle.same_space(r1.middle.conjugate(g1)));

    // center transport: sigma = g3 o omega o g1^{-1} with omega the default pivot
    LinMap omega = default_center_pivot(s);
    LinMap sigma = compose(g3, compose(omega, invert(g1)));
    MapSpace k2 = center(sf, sigma, CenterSide::Right);
    MapSpace k1 = center(s, omega, CenterSide::Right);
    CHECK(k2.same_space(k1.conjugate(g3)));
}

TEST_CASE("knuth orbit table") {
    Presemifield field = field_presemifield(FieldCtx::create(3, 2));
    KnuthOrbitTable t = knuth_orbit_table(field);
    CHECK(t.relations_hold);
    for (const auto& row : t.rows) {
        CHECK(row.fp == t.rows[0].fp);
    }

    KnuthOrbitTable g = knuth_orbit_table(gtf(3, 3, 1));
    CHECK(g.relations_hold);

    KnuthOrbitTable b = knuth_orbit_table(bh(3, 3, 2));
    CHECK(b.relations_hold);
    CHECK(b.rows[0].fp.orders.middle == 9);
    CHECK(b.rows[2].fp.orders.middle == 3);  // |N_m(S^t)| = |N_r(S)| = 3
    for (const auto& row : b.rows) {
        CHECK(row.fp.orders.center == 3);
    }
}

TEST_CASE("brute isotopy: a presemifield is isotopic to itself") {
    Presemifield s = field_presemifield(FieldCtx::create(3, 2));
    BruteResult r = brute_isotopy(s, s);
    REQUIRE(r.kind == BruteResult::Kind::Isotopic);
    REQUIRE(r.triple.has_value());
    CHECK(verify_isotopism(s, s, *r.triple));
}

TEST_CASE("brute isotopy finds the change of basis of a permuted copy") {
    FieldCtx f8 = FieldCtx::create(2, 3);
    Presemifield s = field_presemifield(f8);
    Presemifield t = permuted_copy(s, {2, 0, 1});
    BruteResult r = brute_isotopy(s, t);
    REQUIRE(r.kind == BruteResult::Kind::Isotopic);
    CHECK(verify_isotopism(s, t, *r.triple));

    Presemifield g = gtf(3, 3, 1);
    Presemifield gp = permuted_copy(g, {1, 2, 0});
    BruteResult rg = brute_isotopy(g, gp);
    REQUIRE(rg.kind == BruteResult::Kind::Isotopic);
    CHECK(verify_isotopism(g, gp, *rg.triple));
}

TEST_CASE("brute isotopy budget") {
    Presemifield s = gtf(3, 3, 1);
    Presemifield field = field_presemifield(FieldCtx::create(3, 3));
    BruteResult r = brute_isotopy(field, s, 100);
    CHECK(r.kind == BruteResult::Kind::BudgetExceeded);
    CHECK(r.pairs_examined <= 100);
}

TEST_CASE("semilinearity pruning activates on common F_q structure") {
    // two copies of the GF(9) field product: spread sets are F_9-linear,
    // so g1 is restricted to the 16 semilinear maps instead of all 48
    FieldCtx f9 = FieldCtx::create(3, 2);
    Presemifield s = field_presemifield(f9);
    Presemifield t = permuted_copy(s, {1, 0});
    BruteResult r = brute_isotopy(s, t);
    REQUIRE(r.kind == BruteResult::Kind::Isotopic);
    CHECK(verify_isotopism(s, t, *r.triple));
    // examined pairs stay below one g1-block of the unpruned search space
    CHECK(r.pairs_examined <= 16 * 8);
}

TEST_CASE("brute isotopy needs matching prime spaces") {
    Presemifield a = field_presemifield(FieldCtx::create(3, 2));
    Presemifield b = field_presemifield(FieldCtx::create(3, 3));
    CHECK_THROWS_WITH_AS(brute_isotopy(a, b), doctest::Contains("CarrierMismatch"), Error);
}

TEST_CASE("fingerprints are invariant under semifield-ization") {
    for (const Presemifield& s : {gtf(3, 3, 1), zkw(3, 1, 2), bh(3, 2, 1)}) {
        CAPTURE(s.label());
        Fingerprint base = fingerprint(s);
        for (long long e : {1LL, 2LL, 5LL}) {
            auto [sf, ident] = s.to_semifield(s.carrier().from_enc(e));
            Fingerprint iso = fingerprint(sf);
            CHECK(iso.orders == base.orders);
            CHECK(iso.p == base.p);
            CHECK(iso.n == base.n);
            // commutative inputs have commutative isotopes here: R_e = L_e
            CHECK(iso.commutative == base.commutative);
            CHECK(distinguish(base, iso).kind == Verdict::Kind::Unknown);
        }
    }
}

namespace {

// x *' y = g3(g1^{-1}(x) * g2^{-1}(y)) makes (g1, g2, g3) an isotopism by
// construction; a strong end-to-end exercise of the whole stack
Presemifield random_isotope(const Presemifield& s, std::mt19937& rng, IsotopismTriple& out) {
    int n = s.dim();
    int p = s.p();
    std::uniform_int_distribution<int> dist(0, p - 1);
    auto rand_invertible = [&] {
        for (;;) {
            LinMap g = zero_map(p, n);
            for (int& v : g.a) v = dist(rng);
            if (is_invertible(g)) return g;
        }
    };
    out.g1 = rand_invertible();
    out.g2 = rand_invertible();
    out.g3 = rand_invertible();
    LinMap g1i = invert(out.g1), g2i = invert(out.g2);
    std::vector<int> sc(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> ei(n, 0);
        ei[i] = 1;
        std::vector<int> xi = g1i.apply(ei);
        for (int j = 0; j < n; ++j) {
            std::vector<int> ej(n, 0);
            ej[j] = 1;
            std::vector<int> z = out.g3.apply(s.mult(xi, g2i.apply(ej)));
            for (int k = 0; k < n; ++k) sc[(static_cast<size_t>(i) * n + j) * n + k] = z[k];
        }
    }
    return Presemifield::from_structure_constants(s.carrier(), sc, s.label() + " isotope", false);
}

}  // namespace

TEST_CASE("random isotopes: certification, parameters, nucleus transport") {
    std::mt19937 rng(4242);
    for (const Presemifield& s : {gtf(3, 3, 1), bh(3, 2, 1)}) {
        CAPTURE(s.label());
        Fingerprint base = fingerprint(s);
        for (int trial = 0; trial < 3; ++trial) {
            IsotopismTriple t;
            Presemifield iso = random_isotope(s, rng, t);
            CHECK_FALSE(iso.zero_divisor_witness().has_value());
            CHECK(verify_isotopism(s, iso, t));
            CHECK(fingerprint(iso).orders == base.orders);

            NucleiReport r1 = nuclei_report(s);
            NucleiReport r2 = nuclei_report(iso);
            CHECK(r2.right.same_space(r1.right.conjugate(t.g3)));
            CHECK(r2.left.same_space(r1.left.conjugate(t.g3)));
            CHECK(r2.middle.same_space(r1.middle.conjugate(t.g1)));

            // transported triples on the dual and transpose derivatives
            CHECK(verify_isotopism(s.dual(), iso.dual(), {t.g2, t.g1, t.g3}));
            const Carrier& car = s.carrier();
            LinMap g3t = invert(adjoint_wrt(t.g3, car.gram(), car.gram_inv()));
            LinMap g1t = invert(adjoint_wrt(t.g1, car.gram(), car.gram_inv()));
            CHECK(verify_isotopism(s.transpose(), iso.transpose(), {g3t, t.g2, g1t}));
        }
    }
}

TEST_CASE("brute isotopy recovers a random isotope at order 27") {
    std::mt19937 rng(777);
    Presemifield s = gtf(3, 3, 1);
    IsotopismTriple t;
    Presemifield iso = random_isotope(s, rng, t);
    BruteResult r = brute_isotopy(s, iso);
    REQUIRE(r.kind == BruteResult::Kind::Isotopic);
    CHECK(verify_isotopism(s, iso, *r.triple));
}

TEST_CASE("brute isotopy is deterministic across worker counts") {
    Presemifield s = gtf(3, 3, 1);
    std::mt19937 rng(31415);
    IsotopismTriple t;
    Presemifield iso = random_isotope(s, rng, t);
    Presemifield field27 = field_presemifield(FieldCtx::create(3, 3));

    setenv("SEMIFIELD_LAB_THREADS", "1", 1);
    BruteResult seq_hit = brute_isotopy(s, iso);
    BruteResult seq_miss = brute_isotopy(field27, s);
    setenv("SEMIFIELD_LAB_THREADS", "8", 1);
    BruteResult par_hit = brute_isotopy(s, iso);
    BruteResult par_miss = brute_isotopy(field27, s);
    unsetenv("SEMIFIELD_LAB_THREADS");

    REQUIRE(seq_hit.kind == BruteResult::Kind::Isotopic);
    REQUIRE(par_hit.kind == BruteResult::Kind::Isotopic);
    CHECK(seq_hit.triple->g1 == par_hit.triple->g1);
    CHECK(seq_hit.triple->g2 == par_hit.triple->g2);
    CHECK(seq_hit.triple->g3 == par_hit.triple->g3);
    CHECK(seq_hit.pairs_examined == par_hit.pairs_examined);

    CHECK(seq_miss.kind == BruteResult::Kind::NotIsotopic);
    CHECK(par_miss.kind == BruteResult::Kind::NotIsotopic);
    CHECK(seq_miss.pairs_examined == par_miss.pairs_examined);
}

TEST_CASE("dickson knuth orbit permutes the nucleus orders") {
    KnuthOrbitTable t = knuth_orbit_table(dickson(3, 3, 1));
    CHECK(t.relations_hold);
    auto ord = [&](int i) { return t.rows[i].fp.orders; };
    CHECK(ord(0) == NucleiOrders{3, 27, 3, 3});   // S
    CHECK(ord(2) == NucleiOrders{3, 3, 27, 3});   // S^t: middle <-> right
    CHECK(ord(4) == NucleiOrders{27, 3, 3, 3});   // S^td: order moved to the left
}
