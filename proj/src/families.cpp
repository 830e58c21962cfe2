#include "semifield/families.hpp"

#include <numeric>
#include <sstream>

namespace semifield {
namespace families {

namespace {

struct PrimePower {
    int p;
    int g;  // q = p^g
};

PrimePower decompose_prime_power(int q, const char* what) {
    if (q < 2) fail(Errc::BadParameter, std::string(what) + ": q must be a prime power >= 2");
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    int g = 0;
    long long v = 1;
    while (v < q) {
        v *= p;
        ++g;
    }
    if (v != q) fail(Errc::BadParameter, std::string(what) + ": q = " + std::to_string(q) + " is not a prime power");
    return {p, g};
}

void require(bool cond, const std::string& msg) {
    if (!cond) fail(Errc::BadParameter, msg);
}

// Resolves an optional encoded constant that must be a nonsquare.
FElem resolve_nonsquare(const FieldCtx& f, std::optional<long long> enc, const char* name) {
    FElem v = enc ? f.from_enc(*enc) : f.nonsquare_element();
    if (f.is_zero(v) || f.is_square(v)) {
        fail(Errc::BadParameter, std::string(name) + " must be a nonsquare");
    }
    return v;
}

FElem resolve_primitive(const FieldCtx& f, std::optional<long long> enc, const char* name) {
    FElem v = enc ? f.from_enc(*enc) : f.primitive_element();
    if (f.is_zero(v) || f.mult_order(v) != f.order() - 1) {
        fail(Errc::BadParameter, std::string(name) + " must be a primitive element");
    }
    return v;
}

std::string fmt_label(const std::string& head, const std::vector<std::pair<std::string, long long>>& kv) {
    std::ostringstream os;
    os << head << "(";
    for (size_t i = 0; i < kv.size(); ++i) {
        if (i) os << ",";
        os << kv[i].first << "=" << kv[i].second;
    }
    os << ")";
    return os.str();
}

// Accumulates field-carrier coefficient matrices a_ij (exponents are
// p-powers mod n).
struct AijBuilder {
    const FieldCtx& f;
    AijMatrix a;

    explicit AijBuilder(const FieldCtx& ctx) : f(ctx), a(ctx.n(), std::vector<FElem>(ctx.n(), ctx.zero())) {}

    void add(int i, int j, const FElem& coeff) {
        int n = f.n();
        i = ((i % n) + n) % n;
        j = ((j % n) + n) % n;
        a[i][j] = f.add(a[i][j], coeff);
    }
};

}  // namespace

Presemifield dickson(int q, int k, int sigma_exp, std::optional<long long> j_enc) {
    auto [p, g] = decompose_prime_power(q, "dickson");
    require(p != 2, "dickson: q must be odd");
    require(k > 1, "dickson: k > 1 required");
    require(k % 2 == 1, "dickson: k must be odd");
    require(sigma_exp % k != 0, "dickson: sigma must not be the identity");

    FieldCtx comp = FieldCtx::create(p, g * k);
    FElem j = resolve_nonsquare(comp, j_enc, "dickson: j");
    int s = ((sigma_exp % k) + k) % k;

    PairExpr A = PairExpr::var_a(), B = PairExpr::var_b(), C = PairExpr::var_c(), D = PairExpr::var_d();
    PairExpr first = A * C + PairExpr::constant(j) * B.frob(g * s) * D.frob(g * s);
    PairExpr second = A * D + B * C;

    Carrier car = Carrier::pair_carrier(comp);
    std::string label = fmt_label("dickson", {{"q", q}, {"k", k}, {"sigma", s}, {"j", comp.enc(j)}});
    return Presemifield::from_pair_formula(car, first, second, label);
}

Presemifield gtf(int q, int t, int n_exp) {
    auto [p, g] = decompose_prime_power(q, "gtf");
    require(p != 2, "gtf: q must be odd");
    require(t > 1, "gtf: t > 1 required");
    int nn = ((n_exp % t) + t) % t;
    require(nn != 0, "gtf: alpha must not be the identity");
    int gcd_tn = std::gcd(t, nn);
    require(gcd_tn == 1, "gtf: Fix(alpha) = F_q requires gcd(t, n) = 1");
    require((t / gcd_tn) % 2 == 1, "gtf: t/gcd(t, n) must be odd");
    require((2 * nn) % t != 0, "gtf: alpha^2 must not be the identity");

    FieldCtx f = FieldCtx::create(p, g * t);
    AijBuilder b(f);
    b.add(g * nn, 0, f.one());
    b.add(0, g * nn, f.one());
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(car, b.a, fmt_label("gtf", {{"q", q}, {"t", t}, {"n", nn}}));
}

Presemifield ganley(int r) {
    require(r >= 3, "ganley: r >= 3 required");
    require(r % 2 == 1, "ganley: r must be odd");
    FieldCtx comp = FieldCtx::create(3, r);
    PairExpr A = PairExpr::var_a(), B = PairExpr::var_b(), C = PairExpr::var_c(), D = PairExpr::var_d();
    PairExpr first = A * C - B.frob(2) * D - B * D.frob(2);
    PairExpr second = A * D + B * C + B.frob(1) * D.frob(1);
    Carrier car = Carrier::pair_carrier(comp);
    return Presemifield::from_pair_formula(car, first, second, fmt_label("ganley", {{"r", r}}));
}

Presemifield cohen_ganley(int s, std::optional<long long> j_enc) {
    require(s >= 3, "cohen_ganley: s >= 3 required");
    FieldCtx comp = FieldCtx::create(3, s);
    FElem j = resolve_nonsquare(comp, j_enc, "cohen_ganley: j");
    FElem j3 = comp.pow(j, 3);
    PairExpr A = PairExpr::var_a(), B = PairExpr::var_b(), C = PairExpr::var_c(), D = PairExpr::var_d();
    PairExpr bd = B * D;
    PairExpr first = A * C + PairExpr::constant(j) * bd + PairExpr::constant(j3) * bd.frob(2);
    PairExpr second = A * D + B * C + PairExpr::constant(j) * bd.frob(1);
    Carrier car = Carrier::pair_carrier(comp);
    return Presemifield::from_pair_formula(car, first, second,
                                           fmt_label("cohen_ganley", {{"s", s}, {"j", comp.enc(j)}}));
}

Presemifield cmdy(int e, bool plus_sign) {
    require(e >= 3, "cmdy: e >= 3 required");
    require(e % 2 == 1, "cmdy: e must be odd");
    FieldCtx f = FieldCtx::create(3, e);
    AijBuilder b(f);
    FElem two = f.from_int(2);
    b.add(2, 0, f.one());
    b.add(0, 2, f.one());
    b.add(1, 1, plus_sign ? two : f.neg(two));
    b.add(0, 0, f.neg(two));
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(car, b.a,
                                  fmt_label(plus_sign ? "cmdy+" : "cmdy-", {{"e", e}}));
}

Presemifield pwblp() {
    FieldCtx comp = FieldCtx::create(3, 5);
    PairExpr A = PairExpr::var_a(), B = PairExpr::var_b(), C = PairExpr::var_c(), D = PairExpr::var_d();
    PairExpr bd = B * D;
    PairExpr first = A * C + bd.frob(2);
    PairExpr second = A * D + B * C + bd.frob(3);
    Carrier car = Carrier::pair_carrier(comp);
    return Presemifield::from_pair_formula(car, first, second, "pwblp()");
}

Presemifield chk() {
    FieldCtx f = FieldCtx::create(3, 8);
    AijBuilder b(f);
    FElem one = f.one();
    FElem minus = f.neg(one);
    // x y + L(x y^9 + x^9 y - x y - x^9 y^9), L(x) = x^{3^5} + x^{3^2}
    b.add(0, 0, one);
    const int L_exps[2] = {5, 2};
    const int B_terms[4][3] = {{0, 2, 1}, {2, 0, 1}, {0, 0, -1}, {2, 2, -1}};
    for (int le : L_exps) {
        for (const auto& term : B_terms) {
            b.add(term[0] + le, term[1] + le, term[2] > 0 ? one : minus);
        }
    }
    // + x^243 y^3 + x^81 y - x^9 y + x^3 y^243 + x y^81 - x y^9
    b.add(5, 1, one);
    b.add(4, 0, one);
    b.add(2, 0, minus);
    b.add(1, 5, one);
    b.add(0, 4, one);
    b.add(0, 2, minus);
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(car, b.a, "chk()");
}

Presemifield zkw(int q, int h, int n_exp, std::optional<long long> u_enc) {
    auto [p, g] = decompose_prime_power(q, "zkw");
    require(p != 2, "zkw: q must be odd");
    require(h % 2 == 1, "zkw: h must be odd");
    require(0 < n_exp && n_exp < 3 * h, "zkw: 0 < n < 3h required");
    require(std::gcd(h, n_exp) == 1, "zkw: gcd(h, n) = 1 required");
    require((h + n_exp) % 3 == 0 || q % 3 == 1,
            "zkw: need h + n = 0 (mod 3) or q = 1 (mod 3)");

    FieldCtx f = FieldCtx::create(p, g * 3 * h);
    FElem u = resolve_primitive(f, u_enc, "zkw: u");
    long long qh = 1;
    for (int i = 0; i < g * h; ++i) qh *= p;
    FElem v = f.pow(u, qh - 1);

    AijBuilder b(f);
    // x * y = y^{q^n} x + y x^{q^n} - v (y^{q^{h+n}} x^{q^{2h}} + y^{q^{2h}} x^{q^{h+n}})
    b.add(0, g * n_exp, f.one());
    b.add(g * n_exp, 0, f.one());
    FElem mv = f.neg(v);
    b.add(g * 2 * h, g * (h + n_exp), mv);
    b.add(g * (h + n_exp), g * 2 * h, mv);
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(car, b.a,
                                  fmt_label("zkw", {{"q", q}, {"h", h}, {"n", n_exp}, {"u", f.enc(u)}}));
}

Presemifield bierbrauer(int q, int m, int n_exp, std::optional<long long> u_enc) {
    auto [p, g] = decompose_prime_power(q, "bierbrauer");
    require(p != 2, "bierbrauer: q must be odd");
    require(q % 4 == 1, "bierbrauer: q = 1 (mod 4) required");
    require(m % 2 == 1, "bierbrauer: m must be odd");
    require(0 < n_exp && n_exp < 4 * m, "bierbrauer: 0 < n < 4m required");
    require(n_exp % 2 == 0, "bierbrauer: n must be even");
    require(std::gcd(m, n_exp) == 1, "bierbrauer: gcd(m, n) = 1 required");
    require(((2 * m) / std::gcd(2 * m, n_exp)) % 2 == 1, "bierbrauer: 2m/gcd(2m, n) must be odd");

    FieldCtx f = FieldCtx::create(p, g * 4 * m);
    FElem u = resolve_primitive(f, u_enc, "bierbrauer: u");
    long long qm = 1;
    for (int i = 0; i < g * m; ++i) qm *= p;
    FElem v = f.pow(u, qm - 1);

    AijBuilder b(f);
    b.add(0, g * n_exp, f.one());
    b.add(g * n_exp, 0, f.one());
    FElem mv = f.neg(v);
    b.add(g * 3 * m, g * (m + n_exp), mv);
    b.add(g * (m + n_exp), g * 3 * m, mv);
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(
        car, b.a, fmt_label("bierbrauer", {{"q", q}, {"m", m}, {"n", n_exp}, {"u", f.enc(u)}}));
}

Presemifield bh(int q, int l, int d, std::optional<long long> beta_enc, std::optional<long long> omega_enc) {
    auto [p, g] = decompose_prime_power(q, "bh");
    require(p != 2, "bh: q must be odd");
    require(l > 1, "bh: l > 1 required");
    require(0 < d && d < 2 * l, "bh: 0 < d < 2l required");
    require(std::gcd(l, d) == 1, "bh: gcd(l, d) = 1 required");
    require((l + d) % 2 == 1, "bh: l + d must be odd");

    FieldCtx f = FieldCtx::create(p, g * 2 * l);
    FElem beta = resolve_nonsquare(f, beta_enc, "bh: beta");

    long long ql = 1;
    for (int i = 0; i < g * l; ++i) ql *= p;
    FElem omega;
    if (omega_enc) {
        omega = f.from_enc(*omega_enc);
    } else {
        FElem gamma = f.primitive_element();
        omega = f.pow(gamma, (ql + 1) / 2);
    }
    if (f.is_zero(omega) || !(f.frobenius(omega, g * l) == f.neg(omega))) {
        fail(Errc::BadParameter, "bh: omega must satisfy omega^{q^l} = -omega");
    }

    FElem beta_ql = f.frobenius(beta, g * l);
    FElem bo = f.mul(beta, omega);
    FElem bqo = f.mul(beta_ql, omega);

    AijBuilder b(f);
    // x y^{q^l} + x^{q^l} y
    b.add(0, g * l, f.one());
    b.add(g * l, 0, f.one());
    // beta omega (x y^{q^d} + x^{q^d} y)
    b.add(0, g * d, bo);
    b.add(g * d, 0, bo);
    // beta^{q^l} omega (x y^{q^d} + x^{q^d} y)^{q^l}
    b.add(g * l, g * (d + l), bqo);
    b.add(g * (d + l), g * l, bqo);
    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(
        car, b.a,
        fmt_label("bh", {{"q", q}, {"l", l}, {"d", d}, {"beta", f.enc(beta)}, {"omega", f.enc(omega)}}));
}

Presemifield lmptb(int q, int l) {
    auto [p, g] = decompose_prime_power(q, "lmptb");
    require(p != 2, "lmptb: q must be odd");
    require(l > 1 && l % 2 == 1, "lmptb: l = 2k+1 > 1 odd required");
    int k = (l - 1) / 2;

    FieldCtx f = FieldCtx::create(p, g * 2 * l);
    FElem half = f.inv(f.from_int(2));
    FElem quarter = f.inv(f.from_int(4));
    FElem one = f.one();

    AijBuilder b(f);
    // (1/2)(x y + x^{q^l} y^{q^l})
    b.add(0, 0, half);
    b.add(g * l, g * l, half);
    // (1/4) G(x y^{q^2} + x^{q^2} y) with
    // G(z) = sum_{i=1}^{k} (-1)^i (z - z^{q^l})^{q^{2i}}
    //      + sum_{j=1}^{k-1} (-1)^{k+j} (z - z^{q^l})^{q^{2j+1}}
    auto add_g_term = [&](int exp_qu, int sign) {
        // (z - z^{q^l})^{q^e} applied to the bilinear z = x y^{q^2} + x^{q^2} y
        FElem c = (sign > 0) ? quarter : f.neg(quarter);
        const int zt[2][2] = {{0, 2}, {2, 0}};
        for (const auto& t : zt) {
            b.add(g * (t[0] + exp_qu), g * (t[1] + exp_qu), c);
            b.add(g * (t[0] + l + exp_qu), g * (t[1] + l + exp_qu), f.neg(c));
        }
    };
    for (int i = 1; i <= k; ++i) add_g_term(2 * i, (i % 2 == 0) ? 1 : -1);
    for (int j = 1; j <= k - 1; ++j) add_g_term(2 * j + 1, ((k + j) % 2 == 0) ? 1 : -1);

    Carrier car = Carrier::field_carrier(f);
    return Presemifield::from_aij(car, b.a, fmt_label("lmptb", {{"q", q}, {"l", l}}));
}

Presemifield zp(int q, int l, int n_exp, int t_exp, std::optional<long long> alpha_enc) {
    auto [p, g] = decompose_prime_power(q, "zp");
    require(p != 2, "zp: q must be odd");
    require(l > 2, "zp: l > 2 required");
    int nn = ((n_exp % l) + l) % l;
    int tt = ((t_exp % l) + l) % l;
    // gcd(l, n, t) is unchanged by reducing n, t mod l
    require(std::gcd(std::gcd(l, nn), tt) == 1, "zp: gcd(l, n, t) = 1 required");
    require((l / std::gcd(l, nn)) % 2 == 1, "zp: l/gcd(l, n) must be odd");

    FieldCtx comp = FieldCtx::create(p, g * l);
    FElem alpha = resolve_nonsquare(comp, alpha_enc, "zp: alpha");

    PairExpr A = PairExpr::var_a(), B = PairExpr::var_b(), C = PairExpr::var_c(), D = PairExpr::var_d();
    PairExpr inner = B * D.frob(g * nn) + B.frob(g * nn) * D;
    PairExpr first = A * C.frob(g * nn) + A.frob(g * nn) * C + PairExpr::constant(alpha) * inner.frob(g * tt);
    PairExpr second = A * D + B * C;
    Carrier car = Carrier::pair_carrier(comp);
    return Presemifield::from_pair_formula(
        car, first, second,
        fmt_label("zp", {{"q", q}, {"l", l}, {"n", nn}, {"t", tt}, {"alpha", comp.enc(alpha)}}));
}

ZkwParams zkw_normalize(int p, int s, int t) {
    require(s > 0 && t > 0, "zkw_normalize: s, t > 0 required");
    int g = std::gcd(s, t);
    int q = 1;
    for (int i = 0; i < g; ++i) q *= p;
    return {q, s / g, t / g};
}

BierbrauerParams bierbrauer_normalize(int p, int s, int t) {
    require(s > 0 && t > 0, "bierbrauer_normalize: s, t > 0 required");
    int g = std::gcd(s, t);
    int q = 1;
    for (int i = 0; i < g; ++i) q *= p;
    return {q, s / g, t / g};
}

BhParams bh_normalize(int p, int m, int s) {
    require(m > 0 && s > 0, "bh_normalize: m, s > 0 required");
    int h = std::gcd(m, s);
    int q = 1;
    for (int i = 0; i < h; ++i) q *= p;
    return {q, m / h, s / h};
}

}  // namespace families
}  // namespace semifield
