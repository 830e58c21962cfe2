#pragma once

// Presemifields over field carriers GF(p^n) and pair carriers
// GF(q^k) x GF(q^k): construction from multiplication descriptions,
// zero-divisor validation, spread sets, dual/transpose/Knuth chain and
// semifield-ization.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semifield/gf.hpp"
#include "semifield/linmap.hpp"

namespace semifield {

/// Additive carrier of a presemifield. Either the field GF(p^n) itself or a
/// pair GF(q^k) x GF(q^k) built from a component field; coordinates of a pair
/// element are the concatenated component coordinates. The canonical bilinear
/// form is tr(xy) on field carriers and the component-wise sum of trace forms
/// on pair carriers.
class Carrier {
  public:
    enum class Kind { Field, Pair };

    static Carrier field_carrier(FieldCtx field);
    static Carrier pair_carrier(FieldCtx component);

    Kind kind() const { return kind_; }
    const FieldCtx& field() const { return field_; }
    int p() const { return field_.p(); }
    /// Total dimension over F_p.
    int dim() const { return dim_; }
    long long order() const;

    const std::vector<int>& gram() const { return gram_; }
    const std::vector<int>& gram_inv() const { return gram_inv_; }

    long long enc(const std::vector<int>& coords) const;
    std::vector<int> from_enc(long long e) const;

    /// Pair carriers: split coordinates into the two component elements.
    std::pair<FElem, FElem> split(const std::vector<int>& coords) const;
    std::vector<int> join(const FElem& a, const FElem& b) const;
    /// Field carriers: coordinates <-> element.
    FElem as_elem(const std::vector<int>& coords) const;
    std::vector<int> coords_of(const FElem& x) const;

    bool same_as(const Carrier& o) const;

  private:
    Carrier(Kind k, FieldCtx f);
    Kind kind_;
    FieldCtx field_;
    int dim_;
    std::vector<int> gram_, gram_inv_;
};

/// Biadditive component formula for pair-carrier multiplications: an
/// expression tree in the component variables a, b (left factor) and c, d
/// (right factor) built from field constants, +, -, *, and Frobenius powers.
/// Trees are immutable and cheap to copy.
class PairExpr {
  public:
    static PairExpr constant(FElem v);
    static PairExpr var_a();
    static PairExpr var_b();
    static PairExpr var_c();
    static PairExpr var_d();

    /// x -> x^{p^k} applied to this subexpression.
    PairExpr frob(int k) const;
    PairExpr operator-() const;
    friend PairExpr operator+(const PairExpr& l, const PairExpr& r);
    friend PairExpr operator-(const PairExpr& l, const PairExpr& r);
    friend PairExpr operator*(const PairExpr& l, const PairExpr& r);

    FElem eval(const FieldCtx& f, const FElem& a, const FElem& b, const FElem& c, const FElem& d) const;

  private:
    struct Node;
    explicit PairExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static PairExpr make_var(int which);
    static PairExpr make_binary(int op, const PairExpr& l, const PairExpr& r);
    std::shared_ptr<const Node> node_;
};

/// The spread set of a presemifield: the n-dimensional space of right
/// multiplication maps phi_y : x -> x * y, spanned by the maps of the basis
/// elements. Every nonzero member of a valid spread set is invertible.
class SpreadSet {
  public:
    SpreadSet(int p, int n, std::vector<LinMap> basis_maps);

    int p() const { return space_.p(); }
    int n() const { return space_.n(); }
    const std::vector<LinMap>& basis_maps() const { return basis_; }
    const MapSpace& space() const { return space_; }
    /// phi_y for y given in carrier coordinates.
    LinMap lookup(const std::vector<int>& y) const;

  private:
    std::vector<LinMap> basis_;
    MapSpace space_;
};

using AijMatrix = std::vector<std::vector<FElem>>;

class Presemifield {
  public:
    /// Field-carrier multiplication F(x,y) = sum a_ij x^{p^i} y^{p^j}.
    static Presemifield from_aij(const Carrier& carrier, const AijMatrix& aij, std::string label,
                                 bool validate = true);
    /// Pair-carrier multiplication given by the two component formulas.
    static Presemifield from_pair_formula(const Carrier& carrier, const PairExpr& first,
                                          const PairExpr& second, std::string label, bool validate = true);
    /// Canonical form: n^3 structure constants a_ijk with e_i * e_j = sum_k a_ijk e_k.
    static Presemifield from_structure_constants(const Carrier& carrier, std::vector<int> sc,
                                                 std::string label, bool validate = true);

    const Carrier& carrier() const { return carrier_; }
    int p() const { return carrier_.p(); }
    int dim() const { return carrier_.dim(); }
    long long order() const { return carrier_.order(); }
    const std::string& label() const { return label_; }

    const std::vector<int>& structure_constants() const { return sc_; }
    const std::optional<AijMatrix>& aij() const { return aij_; }

    /// x * y on coordinate vectors.
    std::vector<int> mult(const std::vector<int>& x, const std::vector<int>& y) const;

    /// Smallest enc(y) != 0 whose right multiplication map is singular, if any.
    std::optional<long long> zero_divisor_witness() const;

    SpreadSet spread_set() const;
    const std::vector<LinMap>& spread_basis() const { return spread_basis_; }

    Presemifield dual() const;
    Presemifield transpose() const;
    /// S, S^d, S^t, S^dt, S^td, S^dtd.
    std::array<Presemifield, 6> knuth_chain() const;

    /// Isotope x o y = R_e^{-1}(x) * L_e^{-1}(y) with two-sided identity e*e;
    /// (R_e, L_e, id) is an isotopism from this presemifield onto the result.
    std::pair<Presemifield, std::vector<int>> to_semifield(const std::vector<int>& e) const;

    /// Two-sided identity element if one exists.
    std::optional<std::vector<int>> identity_element() const;

    bool commutative() const;

  private:
    Presemifield(Carrier c, std::vector<int> sc, std::optional<AijMatrix> aij, std::string label);
    void validate_or_throw() const;

    Carrier carrier_;
    std::vector<int> sc_;
    std::optional<AijMatrix> aij_;
    std::string label_;
    std::vector<LinMap> spread_basis_;
};

/// The field GF(p^n) itself as a presemifield (F(x,y) = xy).
Presemifield field_presemifield(const FieldCtx& ctx);

/// Smallest enc >= 1 in [1, p^k) whose digit combination of the given maps is
/// singular; the workhorse behind zero-divisor validation and the
/// every-nonzero-member-invertible checks. Runs chunked across workers.
std::optional<long long> first_singular_combination(int p, int n, const std::vector<LinMap>& maps);

}  // namespace semifield
