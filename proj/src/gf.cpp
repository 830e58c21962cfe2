#include "semifield/gf.hpp"

#include <algorithm>

#include "semifield/fpla.hpp"

namespace semifield {

using fpla::norm_mod;

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<long long> prime_factors(long long v) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

// Remainder of a mod b, both ascending coefficient vectors over F_p, b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) > db) {
        int lead = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        if (lead != 0) {
            for (int i = 0; i <= db; ++i) {
                a[shift + i] = norm_mod(a[shift + i] - static_cast<long long>(lead) * b[i], p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
}

// Enumerates monic polynomials of degree d in lexicographic order of their
// ascending coefficient vectors (last coefficient varies fastest).
bool next_coeff_vector(std::vector<int>& c, int p) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

bool poly_irreducible(const std::vector<int>& poly, int p) {
    int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || poly[n] != 1) return false;
    if (n == 1) return true;
    if (poly[0] == 0) return false;  // divisible by x
    for (int d = 1; d * 2 <= n; ++d) {
        std::vector<int> cand(d, 0);
        do {
            std::vector<int> divisor(cand.begin(), cand.end());
            divisor.push_back(1);  // monic degree d
            if (poly_is_zero(poly_mod(poly, divisor, p))) return false;
        } while (next_coeff_vector(cand, p));
    }
    return true;
}

struct FieldCtx::Data {
    int p = 0;
    int n = 0;
    long long order = 0;
    std::vector<int> modulus;                 // ascending, length n+1, monic
    std::vector<std::vector<int>> xpow_red;   // x^{n+t} mod modulus, t in [0, n-1)
    std::vector<std::vector<int>> frob;       // frob[k]: matrix of x -> x^{p^k}
    std::vector<int> trace_basis;             // tr(e_i)
    std::vector<int> gram, gram_inv;          // n*n
};

FieldCtx FieldCtx::create(int p, int n, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::DegreeMismatch, "degree must be >= 1");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->n = n;
    d->order = 1;
    for (int i = 0; i < n; ++i) d->order *= p;

    if (modulus) {
        std::vector<int> m = *modulus;
        if (static_cast<int>(m.size()) != n + 1) {
            fail(Errc::DegreeMismatch, "modulus must have degree exactly n");
        }
        for (int& v : m) v = norm_mod(v, p);
        if (m[n] != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
        if (!poly_irreducible(m, p)) fail(Errc::Reducible, "supplied modulus factors over F_p");
        d->modulus = std::move(m);
    } else {
        std::vector<int> c(n, 0);
        bool found = false;
        do {
            std::vector<int> m(c.begin(), c.end());
            m.push_back(1);
            if (poly_irreducible(m, p)) {
                d->modulus = std::move(m);
                found = true;
                break;
            }
        } while (next_coeff_vector(c, p));
        if (!found) fail(Errc::Internal, "no irreducible polynomial found");
    }

    // x^{n+t} reduced mod modulus
    std::vector<int> cur(n, 0);
    for (int i = 0; i < n; ++i) cur[i] = norm_mod(-d->modulus[i], p);  // x^n
    d->xpow_red.push_back(cur);
    for (int t = 1; t + 1 < n; ++t) {
        std::vector<int> nxt(n, 0);
        int carry = cur[n - 1];
        for (int i = n - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (carry != 0) {
            for (int i = 0; i < n; ++i) {
                nxt[i] = norm_mod(nxt[i] + static_cast<long long>(carry) * d->xpow_red[0][i], p);
            }
        }
        d->xpow_red.push_back(nxt);
        cur = d->xpow_red.back();
    }

    FieldCtx ctx(d);

    // Frobenius matrices; frob[0] = identity, frob[k] = frob[1] applied k times.
    auto& frob = d->frob;
    frob.assign(n, std::vector<int>(static_cast<size_t>(n) * n, 0));
    for (int i = 0; i < n; ++i) frob[0][static_cast<size_t>(i) * n + i] = 1;
    if (n > 1) {
        for (int j = 0; j < n; ++j) {
            FElem img = ctx.pow(ctx.basis_elem(j), p);
            for (int r = 0; r < n; ++r) frob[1][static_cast<size_t>(r) * n + j] = img.c[r];
        }
        for (int k = 2; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < n; ++r) {
                    long long acc = 0;
                    for (int s = 0; s < n; ++s) {
                        acc += static_cast<long long>(frob[1][static_cast<size_t>(r) * n + s]) *
                               frob[k - 1][static_cast<size_t>(s) * n + j];
                    }
                    frob[k][static_cast<size_t>(r) * n + j] = norm_mod(acc, p);
                }
            }
        }
    }

    // Trace of each basis element; traces land in the prime subfield.
    auto& tb = d->trace_basis;
    tb.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        FElem acc = ctx.zero();
        for (int k = 0; k < n; ++k) acc = ctx.add(acc, ctx.frobenius(ctx.basis_elem(i), k));
        for (int r = 1; r < n; ++r) {
            if (acc.c[r] != 0) fail(Errc::Internal, "trace left the prime subfield");
        }
        tb[i] = acc.c[0];
    }

    // Gram matrix of the trace form.
    auto& gram = d->gram;
    gram.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            int t = ctx.trace(ctx.mul(ctx.basis_elem(i), ctx.basis_elem(j)));
            gram[static_cast<size_t>(i) * n + j] = t;
            gram[static_cast<size_t>(j) * n + i] = t;
        }
    }
    auto inv = fpla::inverse(fpla::Mat(n, n, gram), p);
    if (!inv) fail(Errc::Internal, "trace form degenerate");
    d->gram_inv = inv->a;

    return ctx;
}

int FieldCtx::p() const { return d_->p; }
int FieldCtx::n() const { return d_->n; }
long long FieldCtx::order() const { return d_->order; }
const std::vector<int>& FieldCtx::modulus() const { return d_->modulus; }

FElem FieldCtx::zero() const { return FElem{std::vector<int>(d_->n, 0)}; }

FElem FieldCtx::one() const {
    FElem e = zero();
    e.c[0] = 1;
    return e;
}

FElem FieldCtx::from_int(long long v) const {
    FElem e = zero();
    e.c[0] = norm_mod(v, d_->p);
    return e;
}

FElem FieldCtx::basis_elem(int i) const {
    FElem e = zero();
    e.c.at(i) = 1;
    return e;
}

long long FieldCtx::enc(const FElem& x) const {
    long long v = 0;
    for (int i = d_->n - 1; i >= 0; --i) v = v * d_->p + x.c[i];
    return v;
}

FElem FieldCtx::from_enc(long long e) const {
    if (e < 0 || e >= d_->order) fail(Errc::BadParameter, "element encoding out of range");
    FElem x = zero();
    for (int i = 0; i < d_->n; ++i) {
        x.c[i] = static_cast<int>(e % d_->p);
        e /= d_->p;
    }
    return x;
}

void FieldCtx::check(const FElem& x) const {
    if (static_cast<int>(x.c.size()) != d_->n) fail(Errc::DegreeMismatch, "element has wrong coordinate count");
    for (int v : x.c) {
        if (v < 0 || v >= d_->p) fail(Errc::DegreeMismatch, "coordinate out of [0, p)");
    }
}

bool FieldCtx::same_field(const FieldCtx& other) const {
    return d_ == other.d_ || (d_->p == other.d_->p && d_->modulus == other.d_->modulus);
}

FElem FieldCtx::add(const FElem& a, const FElem& b) const {
    FElem r = zero();
    for (int i = 0; i < d_->n; ++i) r.c[i] = norm_mod(a.c[i] + b.c[i], d_->p);
    return r;
}

FElem FieldCtx::sub(const FElem& a, const FElem& b) const {
    FElem r = zero();
    for (int i = 0; i < d_->n; ++i) r.c[i] = norm_mod(a.c[i] - b.c[i], d_->p);
    return r;
}

FElem FieldCtx::neg(const FElem& a) const {
    FElem r = zero();
    for (int i = 0; i < d_->n; ++i) r.c[i] = norm_mod(-a.c[i], d_->p);
    return r;
}

FElem FieldCtx::mul(const FElem& a, const FElem& b) const {
    int n = d_->n;
    int p = d_->p;
    std::vector<long long> conv(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n; ++j) conv[i + j] += static_cast<long long>(a.c[i]) * b.c[j];
    }
    FElem r = zero();
    for (int i = 0; i < n; ++i) r.c[i] = norm_mod(conv[i], p);
    for (int t = n; t < 2 * n - 1; ++t) {
        int f = norm_mod(conv[t], p);
        if (f == 0) continue;
        const auto& red = d_->xpow_red[t - n];
        for (int i = 0; i < n; ++i) r.c[i] = norm_mod(r.c[i] + static_cast<long long>(f) * red[i], p);
    }
    return r;
}

bool FieldCtx::is_zero(const FElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](int v) { return v == 0; });
}

FElem FieldCtx::pow(const FElem& x, long long e) const {
    if (is_zero(x)) {
        if (e == 0) return one();
        if (e < 0) fail(Errc::DivisionByZero, "0 raised to a negative power");
        return zero();
    }
    long long m = d_->order - 1;
    e %= m;
    if (e < 0) e += m;
    FElem base = x;
    FElem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FElem FieldCtx::inv(const FElem& a) const {
    if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
    return pow(a, d_->order - 2);
}

FElem FieldCtx::frobenius(const FElem& x, int k) const {
    int n = d_->n;
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return x;
    const auto& m = d_->frob[k];
    FElem r = zero();
    for (int c = 0; c < n; ++c) {
        if (x.c[c] == 0) continue;
        for (int rdx = 0; rdx < n; ++rdx) {
            r.c[rdx] = norm_mod(r.c[rdx] + static_cast<long long>(x.c[c]) * m[static_cast<size_t>(rdx) * n + c], d_->p);
        }
    }
    return r;
}

int FieldCtx::trace(const FElem& x) const {
    long long acc = 0;
    for (int i = 0; i < d_->n; ++i) acc += static_cast<long long>(x.c[i]) * d_->trace_basis[i];
    return norm_mod(acc, d_->p);
}

long long FieldCtx::mult_order(const FElem& x) const {
    if (is_zero(x)) fail(Errc::DivisionByZero, "order of zero");
    long long o = d_->order - 1;
    for (long long f : prime_factors(d_->order - 1)) {
        while (o % f == 0 && pow(x, o / f) == one()) o /= f;
    }
    return o;
}

FElem FieldCtx::primitive_element() const {
    long long m = d_->order - 1;
    auto factors = prime_factors(m);
    for (long long e = 1; e < d_->order; ++e) {
        FElem x = from_enc(e);
        bool primitive = true;
        for (long long f : factors) {
            if (pow(x, m / f) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return x;
    }
    fail(Errc::Internal, "no primitive element found");
}

bool FieldCtx::is_square(const FElem& x) const {
    if (d_->p == 2) return true;
    if (is_zero(x)) return true;
    return pow(x, (d_->order - 1) / 2) == one();
}

FElem FieldCtx::nonsquare_element() const {
    if (d_->p == 2) fail(Errc::EvenCharacteristic, "every element is a square in characteristic 2");
    FElem minus_one = neg(one());
    for (long long e = 1; e < d_->order; ++e) {
        FElem x = from_enc(e);
        if (pow(x, (d_->order - 1) / 2) == minus_one) return x;
    }
    fail(Errc::Internal, "no nonsquare found");
}

bool FieldCtx::in_subfield(const FElem& x, int d) const {
    if (d < 1 || d_->n % d != 0) fail(Errc::NotADivisor, "subfield degree must divide n");
    return frobenius(x, d) == x;
}

const std::vector<int>& FieldCtx::gram() const { return d_->gram; }
const std::vector<int>& FieldCtx::gram_inv() const { return d_->gram_inv; }

const std::vector<int>& FieldCtx::frob_matrix(int k) const {
    int n = d_->n;
    k %= n;
    if (k < 0) k += n;
    return d_->frob[k];
}

}  // namespace semifield
