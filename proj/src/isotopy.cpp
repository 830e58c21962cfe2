#include "semifield/isotopy.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "semifield/parallel.hpp"

namespace semifield {

Fingerprint fingerprint(const Presemifield& s) {
    NucleiReport rep = nuclei_report(s);
    return Fingerprint{s.p(), s.dim(), rep.orders, s.commutative()};
}

Verdict distinguish(const Fingerprint& f1, const Fingerprint& f2) {
    if (f1.p != f2.p) return {Verdict::Kind::NotIsotopic, "different characteristic"};
    if (f1.n != f2.n) return {Verdict::Kind::NotIsotopic, "different order"};
    if (f1.orders.left != f2.orders.left) return {Verdict::Kind::NotIsotopic, "left nucleus orders differ"};
    if (f1.orders.middle != f2.orders.middle) return {Verdict::Kind::NotIsotopic, "middle nucleus orders differ"};
    if (f1.orders.right != f2.orders.right) return {Verdict::Kind::NotIsotopic, "right nucleus orders differ"};
    if (f1.orders.center != f2.orders.center) return {Verdict::Kind::NotIsotopic, "center orders differ"};
    return {Verdict::Kind::Unknown, "parameters agree; fingerprints cannot prove isotopy"};
}

Verdict distinguish(const Presemifield& s1, const Presemifield& s2) {
    return distinguish(fingerprint(s1), fingerprint(s2));
}

namespace {

bool pointwise_route(const Presemifield& s1, const Presemifield& s2, const IsotopismTriple& t) {
    int n = s1.dim();
    for (int i = 0; i < n; ++i) {
        std::vector<int> ei(n, 0);
        ei[i] = 1;
        std::vector<int> g1x = t.g1.apply(ei);
        for (int j = 0; j < n; ++j) {
            std::vector<int> ej(n, 0);
            ej[j] = 1;
            std::vector<int> lhs = s2.mult(g1x, t.g2.apply(ej));
            std::vector<int> rhs = t.g3.apply(s1.mult(ei, ej));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool spread_route(const Presemifield& s1, const Presemifield& s2, const IsotopismTriple& t) {
    int n = s1.dim();
    SpreadSet c2 = s2.spread_set();
    LinMap g1_inv = invert(t.g1);
    for (int j = 0; j < n; ++j) {
        LinMap psi = compose(t.g3, compose(s1.spread_basis()[j], g1_inv));
        auto coords = c2.space().membership(psi);
        if (!coords) return false;
        // the induced middle map must send e_j to the element whose spread
        // map is psi
        std::vector<int> ej(n, 0);
        ej[j] = 1;
        if (t.g2.apply(ej) != *coords) return false;
    }
    return true;
}

}  // namespace

bool verify_isotopism(const Presemifield& s1, const Presemifield& s2, const IsotopismTriple& t) {
    if (s1.p() != s2.p() || s1.dim() != s2.dim()) {
        fail(Errc::CarrierMismatch, "presemifields live on different prime spaces");
    }
    int n = s1.dim();
    for (const LinMap* g : {&t.g1, &t.g2, &t.g3}) {
        if (g->p != s1.p() || g->n != n) fail(Errc::CarrierMismatch, "triple maps on wrong carrier");
    }
    if (!is_invertible(t.g1) || !is_invertible(t.g2) || !is_invertible(t.g3)) return false;

    bool a = pointwise_route(s1, s2, t);
    bool b = spread_route(s1, s2, t);
    if (a != b) fail(Errc::Internal, "isotopism verification routes disagree");
    return a;
}

KnuthOrbitTable knuth_orbit_table(const Presemifield& s) {
    auto chain = s.knuth_chain();
    static const char* names[6] = {"", "d", "t", "dt", "td", "dtd"};
    KnuthOrbitTable out;
    for (int i = 0; i < 6; ++i) {
        out.rows[i] = KnuthOrbitRow{names[i], fingerprint(chain[i])};
    }
    const auto& fp = out.rows;
    auto ords = [&](int i) { return fp[i].fp.orders; };
    // indices: 0 = S, 1 = S^d, 2 = S^t, 3 = S^dt, 4 = S^td, 5 = S^dtd
    bool rel = true;
    rel = rel && ords(0).right == ords(1).left && ords(0).right == ords(2).middle;
    rel = rel && ords(0).middle == ords(2).right && ords(0).middle == ords(1).middle;
    rel = rel && ords(0).left == ords(1).right && ords(0).left == ords(2).left;
    for (int i = 1; i < 6; ++i) rel = rel && ords(i).center == ords(0).center;
    out.relations_hold = rel;
    return out;
}

namespace {

// Largest d > 1 dividing n such that both spread sets commute with the
// scalar maps of the subfield F_{p^d}; 1 when no common structure exists.
// Only field carriers with identical moduli are considered, so that the
// scalar maps of the two sides coincide.
int common_linearity_degree(const Presemifield& s1, const Presemifield& s2) {
    if (s1.carrier().kind() != Carrier::Kind::Field || s2.carrier().kind() != Carrier::Kind::Field) {
        return 1;
    }
    const FieldCtx& f = s1.carrier().field();
    if (!f.same_field(s2.carrier().field())) return 1;
    int n = f.n();
    for (int d = n; d > 1; --d) {
        if (n % d != 0) continue;
        long long subord = 1;
        for (int i = 0; i < d; ++i) subord *= f.p();
        FElem gen = f.pow(f.primitive_element(), (f.order() - 1) / (subord - 1));
        LinMap t = scalar_map(f, gen);
        auto commutes_with_all = [&](const Presemifield& s) {
            for (const LinMap& phi : s.spread_basis()) {
                if (compose(phi, t) != compose(t, phi)) return false;
            }
            return true;
        };
        if (commutes_with_all(s1) && commutes_with_all(s2)) return d;
    }
    return 1;
}

// F_q-semilinearity of g for q = p^d: g t_lambda = t_{lambda^{p^k}} g for
// some companion exponent k.
bool is_semilinear(const LinMap& g, const FieldCtx& f, const FElem& gen, int d) {
    LinMap lhs = compose(g, scalar_map(f, gen));
    for (int k = 0; k < d; ++k) {
        if (lhs == compose(scalar_map(f, f.frobenius(gen, k)), g)) return true;
    }
    return false;
}

}  // namespace

namespace {

// Shared search context. For a fixed g1 the spread-set identity forces
// g3 = h g1 phi_{e_1}^{-1} with h a nonzero element of C2, so candidates are
// enumerated per g1 in ascending g3-encoding order; the first fully certified
// pair in that order equals the first of the plain (g1, g3) double loop.
struct BruteContext {
    const Presemifield& s1;
    const Presemifield& s2;
    SpreadSet c2;
    std::vector<LinMap> h_maps;            // nonzero spread elements of s2, by element enc
    std::vector<std::vector<int>> h_elems; // their element coordinates
    LinMap phi1_inv;
    int prune_degree = 1;
    const FieldCtx* fld = nullptr;
    FElem subgen;
    int p, n;

    BruteContext(const Presemifield& a, const Presemifield& b)
        : s1(a), s2(b), c2(b.spread_set()), phi1_inv(invert(a.spread_basis()[0])),
          p(a.p()), n(a.dim()) {
        long long order = a.order();
        h_maps.reserve(order - 1);
        h_elems.reserve(order - 1);
        for (long long e = 1; e < order; ++e) {
            std::vector<int> coords = b.carrier().from_enc(e);
            h_maps.push_back(c2.lookup(coords));
            h_elems.push_back(std::move(coords));
        }
        prune_degree = common_linearity_degree(a, b);
        if (prune_degree > 1) {
            fld = &a.carrier().field();
            long long subord = 1;
            for (int i = 0; i < prune_degree; ++i) subord *= p;
            subgen = fld->pow(fld->primitive_element(), (fld->order() - 1) / (subord - 1));
        }
    }

    bool admissible_g1(const LinMap& g1) const {
        if (!is_invertible(g1)) return false;
        return prune_degree <= 1 || is_semilinear(g1, *fld, subgen, prune_degree);
    }

    // first certified (g3enc, triple) for this g1, with its candidate ordinal
    // (1-based position in g3-encoding order); nullopt when none certifies
    std::optional<std::tuple<long long, long long, IsotopismTriple>> try_g1(const LinMap& g1) const {
        LinMap g1_inv = invert(g1);
        LinMap a = compose(g1, phi1_inv);
        std::vector<LinMap> b;
        b.reserve(n - 1);
        for (int j = 1; j < n; ++j) b.push_back(compose(s1.spread_basis()[j], g1_inv));

        std::vector<std::pair<long long, int>> ordered;  // (enc(g3), h index)
        ordered.reserve(h_maps.size());
        for (size_t hi = 0; hi < h_maps.size(); ++hi) {
            ordered.emplace_back(matrix_encoding(compose(h_maps[hi], a)), static_cast<int>(hi));
        }
        std::sort(ordered.begin(), ordered.end());

        long long ordinal = 0;
        for (const auto& [enc3, hi] : ordered) {
            ++ordinal;
            LinMap g3 = compose(h_maps[hi], a);
            LinMap g2 = zero_map(p, n);
            // h itself is the image of e_1 under the induced middle map
            for (int r = 0; r < n; ++r) g2.at(r, 0) = h_elems[hi][r];
            bool ok = true;
            for (int j = 1; j < n; ++j) {
                auto coords = c2.space().membership(compose(g3, b[j - 1]));
                if (!coords) {
                    ok = false;
                    break;
                }
                for (int r = 0; r < n; ++r) g2.at(r, j) = (*coords)[r];
            }
            if (!ok || !is_invertible(g2)) continue;
            IsotopismTriple triple{g1, g2, g3};
            if (verify_isotopism(s1, s2, triple)) {
                return std::make_tuple(enc3, ordinal, triple);
            }
        }
        return std::nullopt;
    }
};

BruteResult brute_sequential(const BruteContext& ctx, long long budget, long long total_encodings) {
    BruteResult result;
    result.kind = BruteResult::Kind::NotIsotopic;
    long long per_g1 = static_cast<long long>(ctx.h_maps.size());
    for (long long enc1 = 0; enc1 < total_encodings; ++enc1) {
        LinMap g1 = matrix_from_encoding(ctx.p, ctx.n, enc1);
        if (!ctx.admissible_g1(g1)) continue;
        if (budget > 0 && result.pairs_examined + per_g1 > budget) {
            result.kind = BruteResult::Kind::BudgetExceeded;
            return result;
        }
        auto hit = ctx.try_g1(g1);
        if (hit) {
            result.kind = BruteResult::Kind::Isotopic;
            result.pairs_examined += std::get<1>(*hit);
            result.triple = std::get<2>(*hit);
            return result;
        }
        result.pairs_examined += per_g1;
    }
    return result;
}

// Workers claim g1-encoding blocks from an atomic cursor; the winner is the
// certified triple with the smallest g1 encoding (candidate order within one
// g1 block is already deterministic). pairs_examined is recomputed afterwards
// so that it matches the sequential scan exactly.
BruteResult brute_parallel(const BruteContext& ctx, long long total_encodings, int workers) {
    constexpr long long kBlock = 512;
    std::atomic<long long> cursor(0);
    std::atomic<long long> best_enc1(total_encodings);
    std::mutex best_mutex;
    std::optional<std::tuple<long long, long long, IsotopismTriple>> best;  // (enc1, ordinal, triple)

    auto worker = [&] {
        for (;;) {
            long long lo = cursor.fetch_add(kBlock);
            if (lo >= total_encodings) return;
            long long hi = std::min(total_encodings, lo + kBlock);
            if (lo >= best_enc1.load(std::memory_order_relaxed)) return;
            for (long long enc1 = lo; enc1 < hi; ++enc1) {
                if (enc1 >= best_enc1.load(std::memory_order_relaxed)) break;
                LinMap g1 = matrix_from_encoding(ctx.p, ctx.n, enc1);
                if (!ctx.admissible_g1(g1)) continue;
                auto hit = ctx.try_g1(g1);
                if (!hit) continue;
                std::lock_guard<std::mutex> lock(best_mutex);
                if (!best || enc1 < std::get<0>(*best)) {
                    best = std::make_tuple(enc1, std::get<1>(*hit), std::get<2>(*hit));
                    long long cur = best_enc1.load();
                    while (enc1 < cur && !best_enc1.compare_exchange_weak(cur, enc1)) {
                    }
                }
                break;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    BruteResult result;
    if (!best) {
        result.kind = BruteResult::Kind::NotIsotopic;
        long long admissible = 0;
        for (long long enc1 = 0; enc1 < total_encodings; ++enc1) {
            if (ctx.admissible_g1(matrix_from_encoding(ctx.p, ctx.n, enc1))) ++admissible;
        }
        result.pairs_examined = admissible * static_cast<long long>(ctx.h_maps.size());
        return result;
    }
    result.kind = BruteResult::Kind::Isotopic;
    result.triple = std::get<2>(*best);
    long long winner_enc1 = std::get<0>(*best);
    long long admissible_before = 0;
    for (long long enc1 = 0; enc1 < winner_enc1; ++enc1) {
        if (ctx.admissible_g1(matrix_from_encoding(ctx.p, ctx.n, enc1))) ++admissible_before;
    }
    result.pairs_examined =
        admissible_before * static_cast<long long>(ctx.h_maps.size()) + std::get<1>(*best);
    return result;
}

}  // namespace

BruteResult brute_isotopy(const Presemifield& s1, const Presemifield& s2, long long budget) {
    if (s1.p() != s2.p() || s1.dim() != s2.dim()) {
        fail(Errc::CarrierMismatch, "presemifields live on different prime spaces");
    }
    BruteContext ctx(s1, s2);
    long long total_encodings = 1;
    for (int i = 0; i < ctx.n * ctx.n; ++i) total_encodings *= ctx.p;

    // budgeted runs stay sequential so the examined-pair count is exact
    int workers = worker_count();
    if (budget > 0 || workers <= 1 || total_encodings < 4096) {
        return brute_sequential(ctx, budget, total_encodings);
    }
    return brute_parallel(ctx, total_encodings, workers);
}

}  // namespace semifield
