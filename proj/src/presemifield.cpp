#include "semifield/presemifield.hpp"

#include <atomic>
#include <mutex>

#include "semifield/parallel.hpp"

namespace semifield {

using fpla::norm_mod;

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(Kind k, FieldCtx f) : kind_(k), field_(std::move(f)) {
    int comp = field_.n();
    dim_ = (kind_ == Kind::Field) ? comp : 2 * comp;
    if (kind_ == Kind::Field) {
        gram_ = field_.gram();
        gram_inv_ = field_.gram_inv();
    } else {
        // block diagonal: <(a,b),(c,d)> = tr(ac) + tr(bd)
        int n = dim_;
        gram_.assign(static_cast<size_t>(n) * n, 0);
        gram_inv_.assign(static_cast<size_t>(n) * n, 0);
        const auto& g = field_.gram();
        const auto& gi = field_.gram_inv();
        for (int blk = 0; blk < 2; ++blk) {
            int off = blk * comp;
            for (int i = 0; i < comp; ++i) {
                for (int j = 0; j < comp; ++j) {
                    gram_[static_cast<size_t>(off + i) * n + (off + j)] = g[static_cast<size_t>(i) * comp + j];
                    gram_inv_[static_cast<size_t>(off + i) * n + (off + j)] = gi[static_cast<size_t>(i) * comp + j];
                }
            }
        }
    }
}

Carrier Carrier::field_carrier(FieldCtx field) { return Carrier(Kind::Field, std::move(field)); }
Carrier Carrier::pair_carrier(FieldCtx component) { return Carrier(Kind::Pair, std::move(component)); }

long long Carrier::order() const {
    long long o = 1;
    for (int i = 0; i < dim_; ++i) o *= p();
    return o;
}

long long Carrier::enc(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != dim_) fail(Errc::DimensionMismatch, "coordinate count mismatch");
    long long v = 0;
    for (int i = dim_ - 1; i >= 0; --i) v = v * p() + coords[i];
    return v;
}

std::vector<int> Carrier::from_enc(long long e) const {
    if (e < 0 || e >= order()) fail(Errc::BadParameter, "element encoding out of range");
    std::vector<int> coords(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        coords[i] = static_cast<int>(e % p());
        e /= p();
    }
    return coords;
}

std::pair<FElem, FElem> Carrier::split(const std::vector<int>& coords) const {
    if (kind_ != Kind::Pair) fail(Errc::CarrierMismatch, "split on a field carrier");
    int k = field_.n();
    FElem a = field_.zero(), b = field_.zero();
    for (int i = 0; i < k; ++i) {
        a.c[i] = coords[i];
        b.c[i] = coords[k + i];
    }
    return {a, b};
}

std::vector<int> Carrier::join(const FElem& a, const FElem& b) const {
    if (kind_ != Kind::Pair) fail(Errc::CarrierMismatch, "join on a field carrier");
    int k = field_.n();
    std::vector<int> coords(2 * k, 0);
    for (int i = 0; i < k; ++i) {
        coords[i] = a.c[i];
        coords[k + i] = b.c[i];
    }
    return coords;
}

FElem Carrier::as_elem(const std::vector<int>& coords) const {
    if (kind_ != Kind::Field) fail(Errc::CarrierMismatch, "as_elem on a pair carrier");
    return FElem{coords};
}

std::vector<int> Carrier::coords_of(const FElem& x) const {
    if (kind_ != Kind::Field) fail(Errc::CarrierMismatch, "coords_of on a pair carrier");
    return x.c;
}

bool Carrier::same_as(const Carrier& o) const {
    return kind_ == o.kind_ && field_.same_field(o.field_);
}

// ---------------------------------------------------------------------------
// PairExpr

struct PairExpr::Node {
    enum class Kind { Const, VarA, VarB, VarC, VarD, Add, Sub, Mul, Neg, Frob };
    Kind kind;
    FElem value;  // Const
    int k = 0;    // Frob
    std::shared_ptr<const Node> lhs, rhs;
};

PairExpr PairExpr::constant(FElem v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = std::move(v);
    return PairExpr(std::move(n));
}

PairExpr PairExpr::make_var(int which) {
    auto n = std::make_shared<Node>();
    switch (which) {
        case 0: n->kind = Node::Kind::VarA; break;
        case 1: n->kind = Node::Kind::VarB; break;
        case 2: n->kind = Node::Kind::VarC; break;
        default: n->kind = Node::Kind::VarD; break;
    }
    return PairExpr(std::move(n));
}

PairExpr PairExpr::var_a() { return make_var(0); }
PairExpr PairExpr::var_b() { return make_var(1); }
PairExpr PairExpr::var_c() { return make_var(2); }
PairExpr PairExpr::var_d() { return make_var(3); }

PairExpr PairExpr::frob(int k) const {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Frob;
    n->k = k;
    n->lhs = node_;
    return PairExpr(std::move(n));
}

PairExpr PairExpr::operator-() const {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Neg;
    n->lhs = node_;
    return PairExpr(std::move(n));
}

PairExpr PairExpr::make_binary(int op, const PairExpr& l, const PairExpr& r) {
    auto n = std::make_shared<Node>();
    n->kind = (op == 0) ? Node::Kind::Add : (op == 1) ? Node::Kind::Sub : Node::Kind::Mul;
    n->lhs = l.node_;
    n->rhs = r.node_;
    return PairExpr(std::move(n));
}

PairExpr operator+(const PairExpr& l, const PairExpr& r) { return PairExpr::make_binary(0, l, r); }
PairExpr operator-(const PairExpr& l, const PairExpr& r) { return PairExpr::make_binary(1, l, r); }
PairExpr operator*(const PairExpr& l, const PairExpr& r) { return PairExpr::make_binary(2, l, r); }

FElem PairExpr::eval(const FieldCtx& f, const FElem& a, const FElem& b, const FElem& c, const FElem& d) const {
    switch (node_->kind) {
        case Node::Kind::Const: return node_->value;
        case Node::Kind::VarA: return a;
        case Node::Kind::VarB: return b;
        case Node::Kind::VarC: return c;
        case Node::Kind::VarD: return d;
        case Node::Kind::Add:
            return f.add(PairExpr(node_->lhs).eval(f, a, b, c, d), PairExpr(node_->rhs).eval(f, a, b, c, d));
        case Node::Kind::Sub:
            return f.sub(PairExpr(node_->lhs).eval(f, a, b, c, d), PairExpr(node_->rhs).eval(f, a, b, c, d));
        case Node::Kind::Mul:
            return f.mul(PairExpr(node_->lhs).eval(f, a, b, c, d), PairExpr(node_->rhs).eval(f, a, b, c, d));
        case Node::Kind::Neg: return f.neg(PairExpr(node_->lhs).eval(f, a, b, c, d));
        case Node::Kind::Frob: return f.frobenius(PairExpr(node_->lhs).eval(f, a, b, c, d), node_->k);
    }
    fail(Errc::Internal, "unreachable expression node");
}

// ---------------------------------------------------------------------------
// Singular-combination scan (validation hot path)

namespace {

// Rank-deficiency test on a scratch copy; entries stay in [0, p).
bool singular(const int* m, int n, int p, const std::vector<int>& invtab, int* buf) {
    for (int i = 0; i < n * n; ++i) buf[i] = m[i];
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (buf[r * n + col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return true;
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(buf[piv * n + c], buf[col * n + c]);
        }
        int inv = invtab[buf[col * n + col]];
        if (inv != 1) {
            for (int c = col; c < n; ++c) {
                buf[col * n + c] = (buf[col * n + c] * inv) % p;
            }
        }
        for (int r = col + 1; r < n; ++r) {
            int f = buf[r * n + col];
            if (f == 0) continue;
            for (int c = col; c < n; ++c) {
                int v = buf[r * n + c] - f * buf[col * n + c];
                v %= p;
                if (v < 0) v += p;
                buf[r * n + c] = v;
            }
        }
    }
    return false;
}

}  // namespace

std::optional<long long> first_singular_combination(int p, int n, const std::vector<LinMap>& maps) {
    int k = static_cast<int>(maps.size());
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= p;

    std::vector<int> invtab(p, 0);
    for (int v = 1; v < p; ++v) invtab[v] = fpla::inv_mod(v, p);

    std::vector<const int*> base(k);
    for (int i = 0; i < k; ++i) base[i] = maps[i].a.data();

    std::atomic<long long> best(total);

    auto scan = [&](long long lo, long long hi) {
        std::vector<int> digits(k, 0);
        std::vector<int> m(static_cast<size_t>(n) * n, 0);
        std::vector<int> buf(static_cast<size_t>(n) * n, 0);
        auto rebuild = [&](long long e) {
            long long v = e;
            for (int i = 0; i < k; ++i) {
                digits[i] = static_cast<int>(v % p);
                v /= p;
            }
            std::fill(m.begin(), m.end(), 0);
            for (int i = 0; i < k; ++i) {
                int d = digits[i];
                if (d == 0) continue;
                const int* b = base[i];
                for (int idx = 0; idx < n * n; ++idx) m[idx] = (m[idx] + d * b[idx]) % p;
            }
        };
        bool fresh = true;
        for (long long e = lo; e < hi; ++e) {
            if (e > best.load(std::memory_order_relaxed)) return;
            if (fresh) {
                rebuild(e);
                fresh = false;
            } else if (digits[0] + 1 < p) {
                ++digits[0];
                const int* b = base[0];
                for (int idx = 0; idx < n * n; ++idx) {
                    int v = m[idx] + b[idx];
                    m[idx] = v >= p ? v - p : v;
                }
            } else {
                rebuild(e);
            }
            if (singular(m.data(), n, p, invtab, buf.data())) {
                long long cur = best.load(std::memory_order_relaxed);
                while (e < cur && !best.compare_exchange_weak(cur, e)) {
                }
                return;
            }
        }
    };

    int workers = worker_count();
    if (total < 8192) workers = 1;
    run_chunked(1, total, workers, scan);

    long long w = best.load();
    if (w < total) return w;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SpreadSet

SpreadSet::SpreadSet(int p, int n, std::vector<LinMap> basis_maps)
    : basis_(std::move(basis_maps)), space_(p, n, basis_) {}

LinMap SpreadSet::lookup(const std::vector<int>& y) const {
    int n = space_.n();
    int p = space_.p();
    if (static_cast<int>(y.size()) != n) fail(Errc::DimensionMismatch, "coordinate count mismatch");
    LinMap m = zero_map(p, n);
    for (int j = 0; j < n; ++j) {
        int d = norm_mod(y[j], p);
        if (d == 0) continue;
        const LinMap& b = basis_[j];
        for (size_t idx = 0; idx < m.a.size(); ++idx) {
            m.a[idx] = norm_mod(m.a[idx] + static_cast<long long>(d) * b.a[idx], p);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Presemifield

Presemifield::Presemifield(Carrier c, std::vector<int> sc, std::optional<AijMatrix> aij, std::string label)
    : carrier_(std::move(c)), sc_(std::move(sc)), aij_(std::move(aij)), label_(std::move(label)) {
    int n = carrier_.dim();
    if (static_cast<int>(sc_.size()) != n * n * n) {
        fail(Errc::DimensionMismatch, "structure constant array must hold n^3 entries");
    }
    for (int& v : sc_) v = norm_mod(v, carrier_.p());
    spread_basis_.reserve(n);
    for (int j = 0; j < n; ++j) {
        LinMap phi = zero_map(carrier_.p(), n);
        for (int i = 0; i < n; ++i) {
            for (int kk = 0; kk < n; ++kk) {
                phi.at(kk, i) = sc_[(static_cast<size_t>(i) * n + j) * n + kk];
            }
        }
        spread_basis_.push_back(std::move(phi));
    }
}

void Presemifield::validate_or_throw() const {
    auto w = zero_divisor_witness();
    if (w) {
        fail(Errc::ZeroDivisor, label_ + ": zero divisor at enc(y) = " + std::to_string(*w), *w);
    }
}

std::optional<long long> Presemifield::zero_divisor_witness() const {
    return first_singular_combination(carrier_.p(), carrier_.dim(), spread_basis_);
}

Presemifield Presemifield::from_structure_constants(const Carrier& carrier, std::vector<int> sc,
                                                    std::string label, bool validate) {
    Presemifield s(carrier, std::move(sc), std::nullopt, std::move(label));
    if (validate) s.validate_or_throw();
    return s;
}

Presemifield Presemifield::from_aij(const Carrier& carrier, const AijMatrix& aij, std::string label,
                                    bool validate) {
    if (carrier.kind() != Carrier::Kind::Field) {
        fail(Errc::CarrierMismatch, "coefficient-matrix multiplication needs a field carrier");
    }
    const FieldCtx& f = carrier.field();
    int n = carrier.dim();
    if (static_cast<int>(aij.size()) != n) fail(Errc::DimensionMismatch, "aij must be n x n");
    for (const auto& row : aij) {
        if (static_cast<int>(row.size()) != n) fail(Errc::DimensionMismatch, "aij must be n x n");
    }

    // frobenius powers of the basis: pw[i][r] = e_r^{p^i}
    std::vector<std::vector<FElem>> pw(n, std::vector<FElem>(n, f.zero()));
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < n; ++r) pw[i][r] = f.frobenius(f.basis_elem(r), i);
    }

    std::vector<int> sc(static_cast<size_t>(n) * n * n, 0);
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            FElem acc = f.zero();
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (f.is_zero(aij[i][j])) continue;
                    acc = f.add(acc, f.mul(aij[i][j], f.mul(pw[i][r], pw[j][s])));
                }
            }
            for (int kk = 0; kk < n; ++kk) sc[(static_cast<size_t>(r) * n + s) * n + kk] = acc.c[kk];
        }
    }
    Presemifield out(carrier, std::move(sc), aij, std::move(label));
    if (validate) out.validate_or_throw();
    return out;
}

Presemifield Presemifield::from_pair_formula(const Carrier& carrier, const PairExpr& first,
                                             const PairExpr& second, std::string label, bool validate) {
    if (carrier.kind() != Carrier::Kind::Pair) {
        fail(Errc::CarrierMismatch, "component formulas need a pair carrier");
    }
    const FieldCtx& f = carrier.field();
    int k = f.n();
    int n = carrier.dim();
    std::vector<int> sc(static_cast<size_t>(n) * n * n, 0);
    FElem zero = f.zero();
    for (int r = 0; r < n; ++r) {
        FElem a = (r < k) ? f.basis_elem(r) : zero;
        FElem b = (r < k) ? zero : f.basis_elem(r - k);
        for (int s = 0; s < n; ++s) {
            FElem c = (s < k) ? f.basis_elem(s) : zero;
            FElem d = (s < k) ? zero : f.basis_elem(s - k);
            FElem r1 = first.eval(f, a, b, c, d);
            FElem r2 = second.eval(f, a, b, c, d);
            for (int i = 0; i < k; ++i) {
                sc[(static_cast<size_t>(r) * n + s) * n + i] = r1.c[i];
                sc[(static_cast<size_t>(r) * n + s) * n + k + i] = r2.c[i];
            }
        }
    }
    Presemifield out(carrier, std::move(sc), std::nullopt, std::move(label));
    if (validate) out.validate_or_throw();
    return out;
}

std::vector<int> Presemifield::mult(const std::vector<int>& x, const std::vector<int>& y) const {
    int n = carrier_.dim();
    int p = carrier_.p();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        fail(Errc::DimensionMismatch, "coordinate count mismatch");
    }
    std::vector<int> z(n, 0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            int fct = norm_mod(static_cast<long long>(x[i]) * y[j], p);
            if (fct == 0) continue;
            const int* row = &sc_[(static_cast<size_t>(i) * n + j) * n];
            for (int kk = 0; kk < n; ++kk) z[kk] = norm_mod(z[kk] + static_cast<long long>(fct) * row[kk], p);
        }
    }
    return z;
}

SpreadSet Presemifield::spread_set() const { return SpreadSet(carrier_.p(), carrier_.dim(), spread_basis_); }

Presemifield Presemifield::dual() const {
    int n = carrier_.dim();
    std::vector<int> sc(sc_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int kk = 0; kk < n; ++kk) {
                sc[(static_cast<size_t>(i) * n + j) * n + kk] = sc_[(static_cast<size_t>(j) * n + i) * n + kk];
            }
        }
    }
    std::optional<AijMatrix> aij;
    if (aij_) {
        AijMatrix t(n, std::vector<FElem>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) t[i][j] = (*aij_)[j][i];
        }
        aij = std::move(t);
    }
    return Presemifield(carrier_, std::move(sc), std::move(aij), label_ + "^d");
}

Presemifield Presemifield::transpose() const {
    int n = carrier_.dim();
    std::vector<int> sc(sc_.size());
    for (int j = 0; j < n; ++j) {
        LinMap adj = adjoint_wrt(spread_basis_[j], carrier_.gram(), carrier_.gram_inv());
        for (int i = 0; i < n; ++i) {
            for (int kk = 0; kk < n; ++kk) {
                sc[(static_cast<size_t>(i) * n + j) * n + kk] = adj.at(kk, i);
            }
        }
    }
    std::optional<AijMatrix> aij;
    if (aij_ && carrier_.kind() == Carrier::Kind::Field) {
        // closed form: b_{i,(i+j) mod n} = a_{(n-i) mod n, j}^{p^i}
        const FieldCtx& f = carrier_.field();
        AijMatrix b(n, std::vector<FElem>(n, f.zero()));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                b[i][(i + j) % n] = f.frobenius((*aij_)[(n - i) % n][j], i);
            }
        }
        aij = std::move(b);
    }
    return Presemifield(carrier_, std::move(sc), std::move(aij), label_ + "^t");
}

std::array<Presemifield, 6> Presemifield::knuth_chain() const {
    Presemifield d = dual();
    Presemifield t = transpose();
    Presemifield dt = d.transpose();
    Presemifield td = t.dual();
    Presemifield dtd = dt.dual();
    return {*this, std::move(d), std::move(t), std::move(dt), std::move(td), std::move(dtd)};
}

std::pair<Presemifield, std::vector<int>> Presemifield::to_semifield(const std::vector<int>& e) const {
    int n = carrier_.dim();
    int p = carrier_.p();
    bool zero = true;
    for (int v : e) zero = zero && (norm_mod(v, p) == 0);
    if (zero) fail(Errc::ZeroElement, "semifield-ization needs a nonzero element");

    SpreadSet c = spread_set();
    LinMap right = c.lookup(e);  // x -> x * e
    LinMap left = zero_map(p, n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> basis(n, 0);
        basis[i] = 1;
        std::vector<int> col = mult(e, basis);  // e * e_i
        for (int r = 0; r < n; ++r) left.at(r, i) = col[r];
    }
    LinMap right_inv = invert(right);
    LinMap left_inv = invert(left);

    std::vector<int> sc(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> xi(n, 0);
        xi[i] = 1;
        std::vector<int> rx = right_inv.apply(xi);
        for (int j = 0; j < n; ++j) {
            std::vector<int> yj(n, 0);
            yj[j] = 1;
            std::vector<int> ly = left_inv.apply(yj);
            std::vector<int> z = mult(rx, ly);
            for (int kk = 0; kk < n; ++kk) sc[(static_cast<size_t>(i) * n + j) * n + kk] = z[kk];
        }
    }
    std::vector<int> identity = mult(e, e);
    Presemifield out(carrier_, std::move(sc), std::nullopt, label_ + " semifield(e=" + std::to_string(carrier_.enc(e)) + ")");
    return {std::move(out), std::move(identity)};
}

std::optional<std::vector<int>> Presemifield::identity_element() const {
    // x * u = x for all x means lookup(u) = id; u * x = x is then checked.
    SpreadSet c = spread_set();
    auto coords = c.space().membership(identity_map(carrier_.p(), carrier_.dim()));
    if (!coords) return std::nullopt;
    // membership coordinates are w.r.t. the spread basis phi_{e_j}, so they
    // are exactly the coordinates of u.
    std::vector<int> u = *coords;
    for (int i = 0; i < carrier_.dim(); ++i) {
        std::vector<int> xi(carrier_.dim(), 0);
        xi[i] = 1;
        if (mult(u, xi) != xi) return std::nullopt;
    }
    return u;
}

bool Presemifield::commutative() const {
    int n = carrier_.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int kk = 0; kk < n; ++kk) {
                if (sc_[(static_cast<size_t>(i) * n + j) * n + kk] !=
                    sc_[(static_cast<size_t>(j) * n + i) * n + kk]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Presemifield field_presemifield(const FieldCtx& ctx) {
    Carrier c = Carrier::field_carrier(ctx);
    AijMatrix aij(ctx.n(), std::vector<FElem>(ctx.n(), ctx.zero()));
    aij[0][0] = ctx.one();
    return Presemifield::from_aij(c, aij, "field(GF(" + std::to_string(ctx.order()) + "))");
}

}  // namespace semifield
