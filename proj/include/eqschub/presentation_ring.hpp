#pragma once

#include <map>
#include <vector>

#include "eqschub/factorial_schur.hpp"
#include "eqschub/generators.hpp"
#include "eqschub/linear_solve.hpp"
#include "eqschub/report.hpp"

namespace eqschub {

enum class model_kind { h, e };

inline std::string to_string(model_kind k) { return k == model_kind::h ? "h" : "e"; }

// Key of one product term: the class nu at quantum exponent d, ordered by
// (d, weight of nu, nu) so rendering and serialization are canonical.
struct basis_key {
    partition nu;
    int d = 0;

    friend bool operator==(const basis_key&, const basis_key&) = default;
    friend bool operator<(const basis_key& a, const basis_key& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.nu < b.nu;
    }
};

// Linear combination of q^d-shifted classes with integer equivariant
// coefficients; zero coefficients are never stored.
class schubert_expansion {
public:
    using term_map = std::map<basis_key, poly>;

    schubert_expansion() = default;

    static schubert_expansion single(const partition& nu, int d = 0, poly c = poly::constant(1)) {
        schubert_expansion e;
        e.add({nu, d}, c);
        return e;
    }

    void add(const basis_key& key, const poly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // this += scale * (other shifted up by d_shift quantum degrees)
    void add_scaled(const schubert_expansion& other, const poly& scale, int d_shift = 0) {
        for (const auto& [key, c] : other.terms_) add({key.nu, key.d + d_shift}, scale * c);
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    poly coeff(const partition& nu, int d) const {
        auto it = terms_.find({nu, d});
        return it == terms_.end() ? poly::zero() : it->second;
    }

    friend bool operator==(const schubert_expansion&, const schubert_expansion&) = default;

    // e.g. "[1]·(T1 - T2) + q·[]·1"
    std::string str() const;

private:
    term_map terms_;
};

enum class spec_mode { q0, t0 };

// q0 keeps the d = 0 layer; t0 sets every T variable to zero.
schubert_expansion specialize(const schubert_expansion& e, spec_mode mode);

// Quotient presentation of the deformed ring with its normal-form reducer.
//
// Generators: h_1..h_{m-p} (h-model) or e_1..e_p (e-model) over the
// coefficient ring in T_1..T_m and q; relations are the opposite-family
// determinants of grades p+1..m (resp. m-p+1..m), with the quantum term on
// the top one.  Normal forms of all pure generator monomials up to the
// degree bound are precomputed: in each grade the classical (T = q = 0) top
// is eliminated exactly against classical class representatives and
// classical relation multiples, the full relation combination is subtracted,
// and the strictly-lower-grade residue is folded through the already-built
// table.  Coordinates on the class basis are unique by module freeness,
// which is checked grade by grade (kernel meets the class columns trivially).
class presentation_ring {
public:
    struct options {
        bool keep_certificates = false; // retain relation multipliers for self_check
    };

    presentation_ring(model_kind model, grassmann_shape shape, int degree_bound);
    presentation_ring(model_kind model, grassmann_shape shape, int degree_bound, options opt);

    model_kind model() const { return model_; }
    const grassmann_shape& shape() const { return shape_; }
    int degree_bound() const { return bound_; }
    int generator_count() const { return n_gen_; }

    const std::vector<partition>& basis() const { return basis_; }
    const std::vector<poly>& relations() const { return relations_; }
    const poly& class_polynomial(const partition& nu) const;

    // Coordinates of f (a polynomial in the generators, T and q) on the
    // basis {q^d · class(nu)}.  Pure integer arithmetic: the table already
    // certified integrality at build time.
    schubert_expansion schubert_coords(const poly& f) const;

    // Structure constants: coordinates of class(lam) * class(mu).
    schubert_expansion eqlr(const partition& lam, const partition& mu) const;

    // e-model only: coordinates of the oversized column determinant of nu,
    // whose first part may exceed m - p.
    schubert_expansion reduce_out_of_rectangle(const partition& nu) const;

    // Rebuild every cached normal form from its stored relation multipliers
    // by direct polynomial arithmetic; needs keep_certificates.
    check_report self_check() const;

    // Re-derive every normal form's class coordinates over the rationals and
    // count the exact integrality checks that passed.
    struct audit { long long entries = 0; long long coefficients = 0; };
    audit integrality_audit() const;

    using nf_table = std::map<monomial, schubert_expansion, term_order>;

    const nf_table& normal_forms() const { return nf_; }

    // Reconstructs a ring around an externally stored table (cache path);
    // relations and classes are recomputed and the table is cross-checked on
    // them before use.
    static presentation_ring from_normal_forms(model_kind model, grassmann_shape shape,
                                               int degree_bound, nf_table table);

private:
    struct from_table_tag {};
    presentation_ring(model_kind model, grassmann_shape shape, int degree_bound, from_table_tag);

    void init_presentation();
    void build();
    std::vector<monomial> generator_monomials(int grade) const;
    int basis_index(const partition& nu) const;

    model_kind model_;
    grassmann_shape shape_;
    int bound_;
    options opt_;
    family gen_fam_ = family::h;
    int n_gen_ = 0;

    std::vector<partition> basis_;
    std::map<partition, int> basis_index_;
    std::vector<poly> class_poly_;
    std::vector<poly> relations_;

    nf_table nf_;
    std::map<monomial, std::vector<polyq>, term_order> cert_;
    audit stats_;
};

// Closed-form product with the single-box class: the one-box additions
// inside the rectangle, the diagonal equivariant term, and the quantum term
// on the rim-removed partition when defined.
schubert_expansion pieri_rule(const partition& lam, const grassmann_shape& shape);

// Third engine: peel the factorial product at the equivariant sequence and
// push out-of-rectangle classes through the e-model reducer.  Holds per-use
// memo state; use one per thread.
class xmodel_engine {
public:
    explicit xmodel_engine(const presentation_ring& e_ring);
    schubert_expansion eqlr(const partition& lam, const partition& mu);

private:
    const presentation_ring& ring_;
    schur_context ctx_;
    std::map<partition, schubert_expansion> overflow_;
};

// expansion of (A * class(kappa)) given a full pairwise product map.
schubert_expansion compose(const schubert_expansion& a, const partition& kappa,
                           const presentation_ring& ring);

// Relation checks in the e-model: images of the opposite-family determinants
// reduce to zero (to -q on the top one), plus the sequence-shift stability
// and oversized-determinant identities at the equivariant specialization.
check_report verify_relations(const grassmann_shape& shape, const presentation_ring& e_ring);
check_report verify_relations(const grassmann_shape& shape);

// True when every coefficient of the expansion of class(lam)*class(mu) is
// homogeneous of grade |lam|+|mu|-|nu|-m*d.
bool expansion_homogeneous(const schubert_expansion& e, int total_grade,
                           const grassmann_shape& shape);

} // namespace eqschub
