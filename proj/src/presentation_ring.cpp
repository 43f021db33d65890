#include "eqschub/presentation_ring.hpp"

#include "eqschub/struct_const.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace eqschub {

namespace {

std::string coeff_str(const poly& c) {
    std::string s = c.str();
    if (c.n_terms() > 1 || (!s.empty() && s[0] == '-')) return "(" + s + ")";
    return s;
}

// Terms whose monomial involves only the generator family (the T = q = 0 top).
poly classical_part(const poly& f, family gen_fam) {
    poly out;
    for (const auto& [m, c] : f.terms())
        if (m.part(gen_fam) == m) out.add_term(m, c);
    return out;
}

bool pure_T(const poly& c) {
    for (const auto& [m, cc] : c.terms())
        if (!(m.part(family::T) == m)) return false;
    return true;
}

} // namespace

std::string schubert_expansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (key.d == 1)
            out += "q·";
        else if (key.d > 1)
            out += "q^" + std::to_string(key.d) + "·";
        out += key.nu.bracket();
        out += "·";
        out += coeff_str(c);
    }
    return out;
}

schubert_expansion specialize(const schubert_expansion& e, spec_mode mode) {
    schubert_expansion out;
    for (const auto& [key, c] : e.terms()) {
        if (mode == spec_mode::q0) {
            if (key.d == 0) out.add(key, c);
            continue;
        }
        poly kept;
        for (const auto& [m, cc] : c.terms())
            if (m.deg(family::T) == 0) kept.add_term(m, cc);
        out.add(key, kept);
    }
    return out;
}

presentation_ring::presentation_ring(model_kind model, grassmann_shape shape, int degree_bound)
    : presentation_ring(model, shape, degree_bound, options{}) {}

presentation_ring::presentation_ring(model_kind model, grassmann_shape shape, int degree_bound,
                                     options opt)
    : model_(model), shape_(shape), bound_(degree_bound), opt_(opt) {
    if (bound_ < 0) throw usage_error("degree bound must be nonnegative");
    init_presentation();
    build();
}

presentation_ring::presentation_ring(model_kind model, grassmann_shape shape, int degree_bound,
                                     from_table_tag)
    : model_(model), shape_(shape), bound_(degree_bound) {
    if (bound_ < 0) throw usage_error("degree bound must be nonnegative");
    init_presentation();
}

void presentation_ring::init_presentation() {
    gen_fam_ = model_ == model_kind::h ? family::h : family::e;
    n_gen_ = model_ == model_kind::h ? shape_.cols() : shape_.p;

    basis_ = enumerate_rectangle(shape_);
    basis_index_.clear();
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) basis_index_[basis_[i]] = i;

    class_poly_.clear();
    class_poly_.reserve(basis_.size());
    for (const partition& nu : basis_)
        class_poly_.push_back(model_ == model_kind::h ? giambelli_h(nu, shape_)
                                                      : giambelli_e(nu, shape_, 0));

    relations_.clear();
    const int lo = model_ == model_kind::h ? shape_.p + 1 : shape_.cols() + 1;
    const int parity = model_ == model_kind::h ? shape_.cols() : shape_.p;
    for (int k = lo; k <= shape_.m; ++k) {
        poly r = model_ == model_kind::h ? cap_E(k, shape_) : cap_H(k, shape_);
        if (k == shape_.m) {
            if (parity % 2 == 0)
                r += poly::var(q_());
            else
                r -= poly::var(q_());
        }
        relations_.push_back(std::move(r));
    }
}

std::vector<monomial> presentation_ring::generator_monomials(int grade) const {
    std::vector<monomial> out;
    monomial cur = monomial::unit();
    // Exponent of generator idx contributes idx to the grade; enumerate from
    // the top generator down so the recursion terminates at idx = 0.
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const variable v{gen_fam_, idx};
        for (int k = 0; k * idx <= remaining; ++k) {
            monomial saved = cur;
            cur = cur * monomial::of(v, k);
            self(self, idx - 1, remaining - k * idx);
            cur = saved;
        }
    };
    rec(rec, n_gen_, grade);
    return out;
}

int presentation_ring::basis_index(const partition& nu) const {
    auto it = basis_index_.find(nu);
    if (it == basis_index_.end())
        throw usage_error("partition " + nu.bracket() + " does not fit " + shape_.str());
    return it->second;
}

const poly& presentation_ring::class_polynomial(const partition& nu) const {
    return class_poly_[basis_index(nu)];
}

void presentation_ring::build() {
    const grading G = shape_.grade();

    std::vector<poly> rel_top;
    std::vector<polyq> rel_full;
    std::vector<int> rel_grade;
    for (const poly& r : relations_) {
        auto g = r.homogeneous_grade(G);
        if (!g) throw internal_error("relation is not homogeneous");
        rel_grade.push_back(*g);
        rel_top.push_back(classical_part(r, gen_fam_));
        rel_full.push_back(rationalize(r));
    }
    std::vector<poly> class_top;
    for (const poly& c : class_poly_) class_top.push_back(classical_part(c, gen_fam_));

    for (int D = 0; D <= bound_; ++D) {
        const std::vector<monomial> mons = generator_monomials(D);
        std::map<monomial, int, term_order> row_of;
        for (int i = 0; i < static_cast<int>(mons.size()); ++i) row_of[mons[i]] = i;

        // Columns: first every classical relation multiple of grade D, then
        // the classical class representatives of weight D.
        struct column {
            int rel = -1;       // relation index, or
            monomial beta;      // ... its cofactor monomial
            int cls = -1;       // class index
        };
        std::vector<column> cols;
        std::vector<poly> col_poly;
        for (int r = 0; r < static_cast<int>(relations_.size()); ++r) {
            if (rel_grade[r] > D) continue;
            for (const monomial& beta : generator_monomials(D - rel_grade[r])) {
                cols.push_back({r, beta, -1});
                col_poly.push_back(poly::term(beta, 1) * rel_top[r]);
            }
        }
        std::vector<int> class_cols;
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            if (basis_[i].weight() != D) continue;
            class_cols.push_back(static_cast<int>(cols.size()));
            cols.push_back({-1, monomial::unit(), i});
            col_poly.push_back(class_top[i]);
        }

        const int n_cols = static_cast<int>(cols.size());
        std::vector<std::vector<std::pair<int, QQ>>> row_lhs(mons.size());
        for (int c = 0; c < n_cols; ++c)
            for (const auto& [mon, coef] : col_poly[c].terms()) {
                auto it = row_of.find(mon);
                if (it == row_of.end())
                    throw internal_error("column polynomial leaves the classical grade");
                row_lhs[it->second].emplace_back(c, to_rational(coef));
            }

        // Freeness in this grade: no kernel vector may touch a class column,
        // otherwise class coordinates would not be unique.
        {
            linear_system hom(n_cols);
            for (const auto& lhs : row_lhs) hom.add_row(lhs, QQ(0));
            for (const auto& vec : kernel_basis(hom))
                for (int c : class_cols)
                    if (vec[c] != 0)
                        throw internal_error("class coordinates are not free in grade " +
                                             std::to_string(D));
        }

        for (int ia = 0; ia < static_cast<int>(mons.size()); ++ia) {
            const monomial& alpha = mons[ia];

            linear_system sys(n_cols);
            for (int r = 0; r < static_cast<int>(row_lhs.size()); ++r)
                sys.add_row(row_lhs[r], r == ia ? QQ(1) : QQ(0));
            const linear_solution sol = solve_exact(sys);

            // Subtract the full combination; the residue carries a strictly
            // positive amount of T/q in every term.
            polyq fq = rationalize(poly::term(alpha, 1));
            std::map<basis_key, polyq> acc;
            std::vector<polyq> cert(relations_.size(), polyq::zero());
            for (int c = 0; c < n_cols; ++c) {
                const QQ& v = sol.value[c];
                if (v == 0) continue;
                if (cols[c].rel >= 0) {
                    polyq mult = polyq::term(cols[c].beta, v);
                    fq -= mult * rel_full[cols[c].rel];
                    if (opt_.keep_certificates) cert[cols[c].rel] += mult;
                } else {
                    fq -= rationalize(class_poly_[cols[c].cls]) * polyq::constant(v);
                    acc[{basis_[cols[c].cls], 0}] += polyq::constant(v);
                }
            }

            for (const auto& [mon, w] : fq.terms()) {
                const monomial gamma = mon.part(family::T);
                const int cq = mon.deg(q_());
                const monomial delta = mon.part(gen_fam_);
                if (!(gamma * monomial::of(q_(), cq) * delta == mon))
                    throw internal_error("residue contains a foreign variable");
                if (gamma.deg() + cq == 0)
                    throw internal_error("residue retains a classical term in grade " +
                                         std::to_string(D));
                auto sub = nf_.find(delta);
                if (sub == nf_.end())
                    throw internal_error("residue references an unbuilt normal form");
                const monomial lift = gamma * monomial::of(q_(), cq);
                for (const auto& [key, cz] : sub->second.terms()) {
                    polyq& slot = acc[{key.nu, key.d + cq}];
                    for (const auto& [tm, tc] : cz.terms())
                        slot.add_term(tm * gamma, w * to_rational(tc));
                }
                if (opt_.keep_certificates) {
                    const auto& lower = cert_.at(delta);
                    for (int r = 0; r < static_cast<int>(lower.size()); ++r)
                        if (!lower[r].is_zero()) cert[r] += lower[r] * polyq::term(lift, w);
                }
            }

            schubert_expansion nf;
            for (auto& [key, c] : acc) {
                if (c.is_zero()) continue;
                poly ci = integralize(c); // throws if any coordinate is non-integral
                if (!pure_T(ci))
                    throw internal_error("normal-form coefficient escapes the T subring");
                stats_.coefficients += 1;
                nf.add(key, ci);
            }
            stats_.entries += 1;
            nf_.emplace(alpha, std::move(nf));
            if (opt_.keep_certificates) cert_.emplace(alpha, std::move(cert));
        }
    }
}

schubert_expansion presentation_ring::schubert_coords(const poly& f) const {
    schubert_expansion out;
    for (const auto& [mon, c] : f.terms()) {
        const monomial gamma = mon.part(family::T);
        const int cq = mon.deg(q_());
        const monomial delta = mon.part(gen_fam_);
        if (!(gamma * monomial::of(q_(), cq) * delta == mon))
            throw usage_error("polynomial contains a variable outside the ring");
        auto it = nf_.find(delta);
        if (it == nf_.end())
            throw usage_error("generator degree " + std::to_string(delta.grade(shape_.grade())) +
                              " exceeds the table bound " + std::to_string(bound_));
        const poly scale = poly::term(gamma, c);
        for (const auto& [key, cz] : it->second.terms()) out.add({key.nu, key.d + cq}, scale * cz);
    }
    return out;
}

schubert_expansion presentation_ring::eqlr(const partition& lam, const partition& mu) const {
    if (!shape_.holds(lam))
        throw usage_error("partition " + lam.bracket() + " does not fit " + shape_.str());
    if (!shape_.holds(mu))
        throw usage_error("partition " + mu.bracket() + " does not fit " + shape_.str());
    if (lam.weight() + mu.weight() > bound_)
        throw usage_error("product degree " + std::to_string(lam.weight() + mu.weight()) +
                          " exceeds the table bound " + std::to_string(bound_));
    return schubert_coords(class_polynomial(lam) * class_polynomial(mu));
}

schubert_expansion presentation_ring::reduce_out_of_rectangle(const partition& nu) const {
    if (model_ != model_kind::e)
        throw usage_error("out-of-rectangle reduction is defined on the e-model");
    if (nu.length() > shape_.p)
        throw usage_error("partition " + nu.bracket() + " has more than " +
                          std::to_string(shape_.p) + " rows");
    if (nu.weight() > bound_)
        throw usage_error("degree " + std::to_string(nu.weight()) + " exceeds the table bound " +
                          std::to_string(bound_));
    return schubert_coords(giambelli_e(nu, shape_, 0));
}

check_report presentation_ring::self_check() const {
    if (!opt_.keep_certificates)
        throw usage_error("self_check needs a ring built with keep_certificates");
    check_report rep;
    std::vector<polyq> rel_full;
    for (const poly& r : relations_) rel_full.push_back(rationalize(r));
    for (const auto& [alpha, nf] : nf_) {
        polyq fq = rationalize(poly::term(alpha, 1));
        for (const auto& [key, c] : nf.terms())
            fq -= rationalize(poly::term(monomial::of(q_(), key.d), 1) * c *
                              class_poly_[basis_index_.at(key.nu)]);
        const auto& cert = cert_.at(alpha);
        for (std::size_t r = 0; r < cert.size(); ++r) fq -= cert[r] * rel_full[r];
        rep.add("normal form certificate", poly::term(alpha, 1).str(), fq.is_zero(),
                fq.is_zero() ? "" : "nonzero remainder");
    }
    return rep;
}

presentation_ring::audit presentation_ring::integrality_audit() const {
    presentation_ring fresh(model_, shape_, bound_, options{});
    if (!(fresh.nf_ == nf_))
        throw internal_error("normal-form table changed between builds");
    return fresh.stats_;
}

presentation_ring presentation_ring::from_normal_forms(model_kind model, grassmann_shape shape,
                                                       int degree_bound, nf_table table) {
    presentation_ring ring(model, shape, degree_bound, from_table_tag{});
    std::size_t expected = 0;
    for (int D = 0; D <= degree_bound; ++D)
        for (const monomial& alpha : ring.generator_monomials(D)) {
            ++expected;
            if (!table.count(alpha))
                throw usage_error("stored table is missing the normal form of " +
                                  poly::term(alpha, 1).str());
        }
    if (table.size() != expected)
        throw usage_error("stored table has extraneous entries");
    for (const auto& [alpha, nf] : table)
        for (const auto& [key, c] : nf.terms()) {
            if (key.d < 0 || !shape.holds(key.nu) || c.is_zero() || !pure_T(c))
                throw usage_error("stored table entry is malformed");
        }
    ring.nf_ = std::move(table);

    for (const poly& r : ring.relations_) {
        auto g = r.homogeneous_grade(shape.grade());
        if (g && *g <= degree_bound && !ring.schubert_coords(r).is_zero())
            throw usage_error("stored table does not annihilate the defining relations");
    }
    for (std::size_t i = 0; i < ring.basis_.size(); ++i) {
        if (ring.basis_[i].weight() > degree_bound) continue;
        if (!(ring.schubert_coords(ring.class_poly_[i]) == schubert_expansion::single(ring.basis_[i])))
            throw usage_error("stored table disagrees with a class representative");
    }
    return ring;
}

schubert_expansion pieri_rule(const partition& lam, const grassmann_shape& shape) {
    if (!shape.holds(lam))
        throw usage_error("partition " + lam.bracket() + " does not fit " + shape.str());
    schubert_expansion out;
    for (const partition& mu : add_one_box(lam, shape.p, shape.cols()))
        out.add({mu, 0}, poly::constant(1));

    poly diag;
    for (int i = 1; i <= shape.p; ++i) diag += poly::var(T_(shape.cols() + i - lam.part(i)));
    for (int j = shape.cols() + 1; j <= shape.m; ++j) diag -= poly::var(T_(j));
    out.add({lam, 0}, diag);

    if (auto rim = rim_minus(lam, shape)) out.add({*rim, 1}, poly::constant(1));
    return out;
}

xmodel_engine::xmodel_engine(const presentation_ring& e_ring)
    : ring_(e_ring), ctx_(make_t(e_ring.shape()), e_ring.shape().p) {
    if (e_ring.model() != model_kind::e)
        throw usage_error("the peeling engine reduces through the e-model");
}

schubert_expansion xmodel_engine::eqlr(const partition& lam, const partition& mu) {
    const grassmann_shape& shape = ring_.shape();
    if (!shape.holds(lam))
        throw usage_error("partition " + lam.bracket() + " does not fit " + shape.str());
    if (!shape.holds(mu))
        throw usage_error("partition " + mu.bracket() + " does not fit " + shape.str());
    schubert_expansion out;
    for (const auto& [nu, c] : flr_peel(lam, mu, ctx_).coeffs) {
        if (shape.holds(nu)) {
            out.add({nu, 0}, c);
            continue;
        }
        auto it = overflow_.find(nu);
        if (it == overflow_.end())
            it = overflow_.emplace(nu, ring_.reduce_out_of_rectangle(nu)).first;
        out.add_scaled(it->second, c);
    }
    return out;
}

schubert_expansion compose(const schubert_expansion& a, const partition& kappa,
                           const presentation_ring& ring) {
    schubert_expansion out;
    for (const auto& [key, c] : a.terms()) out.add_scaled(ring.eqlr(key.nu, kappa), c, key.d);
    return out;
}

check_report verify_relations(const grassmann_shape& shape, const presentation_ring& e_ring) {
    if (e_ring.model() != model_kind::e || !(e_ring.shape() == shape))
        throw usage_error("relation verification needs the e-model ring of the same shape");
    if (e_ring.degree_bound() < shape.m)
        throw usage_error("relation verification needs a table bound of at least m");
    check_report rep;

    std::map<variable, poly> psi;
    for (int k = 1; k <= shape.cols(); ++k)
        psi[h_(k)] = e_ring.class_polynomial(partition({k}));

    for (int i = shape.p + 1; i <= shape.m; ++i) {
        poly image = cap_E(i, shape).substitute(psi);
        if (i == shape.m) {
            if (shape.cols() % 2 == 0)
                image += poly::var(q_());
            else
                image -= poly::var(q_());
        }
        const schubert_expansion red = e_ring.schubert_coords(image);
        rep.add(i == shape.m ? "top h-relation maps to the quantum relation"
                             : "h-relation maps into the ideal",
                "E_" + std::to_string(i) + " at " + shape.str(), red.is_zero(),
                red.is_zero() ? "" : "reduced to " + red.str());
    }

    const parameter_sequence t = make_t(shape);
    for (int i = 2; i <= shape.p; ++i)
        for (int j = 2; j <= i; ++j) {
            const poly lhs = h_factorial(shape.cols() + i, t.shift(1 - j), shape.p);
            const poly rhs = h_factorial(shape.cols() + i, t, shape.p);
            rep.add("shift stability of high h-polynomials",
                    "h_" + std::to_string(shape.cols() + i) + ", shift " + std::to_string(1 - j) +
                        " at " + shape.str(),
                    lhs == rhs, "");
        }

    for (int k = shape.p + 1; k <= shape.m; ++k) {
        std::vector<std::vector<poly>> mat(k, std::vector<poly>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                mat[i - 1][j - 1] = h_factorial(1 + j - i, t.shift(1 - j), shape.p);
        const poly det = determinant(mat);
        rep.add("oversized h-determinant vanishes at t", "size " + std::to_string(k) + " at " + shape.str(),
                det.is_zero(), det.is_zero() ? "" : "nonzero determinant");
    }
    return rep;
}

check_report verify_relations(const grassmann_shape& shape) {
    presentation_ring ring(model_kind::e, shape, shape.m);
    return verify_relations(shape, ring);
}

bool expansion_homogeneous(const schubert_expansion& e, int total_grade,
                           const grassmann_shape& shape) {
    for (const auto& [key, c] : e.terms()) {
        const int expected = total_grade - key.nu.weight() - shape.m * key.d;
        if (expected < 0) return false;
        auto g = c.homogeneous_grade(shape.grade());
        if (!g || *g != expected) return false;
    }
    return true;
}

} // namespace eqschub
