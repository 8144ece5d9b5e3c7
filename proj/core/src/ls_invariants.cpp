#include "lscat/ls_invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lscat {

ProjectiveModel::ProjectiveModel(const AlgebraPresentation& a, std::vector<ZClass> zs, int m)
    : a_(&a), zs_(std::move(zs)), m_(m) {
    if (m < 1) throw std::invalid_argument("ProjectiveModel: need m >= 1");
}

bool ProjectiveModel::contains(const Monomial& mono) const {
    return a_->monomial_alive(mono) && a_->weight(mono) <= m_;
}

bool ProjectiveModel::z_summand_contains(const ZClass& z, const Monomial& mono) const {
    (void)z;
    return a_->monomial_alive(mono) && a_->weight(mono) <= m_ - 1;
}

std::map<int, int> ProjectiveModel::dims(int max_degree) const {
    std::map<int, int> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& mono : a_->basis_of_degree(d))
            if (a_->weight(mono) <= m_) out[d]++;
    for (const auto& z : zs_)
        for (int d = 0; d + z.degree <= max_degree; ++d)
            for (const auto& mono : a_->basis_of_degree(d))
                if (a_->weight(mono) <= m_ - 1) out[d + z.degree]++;
    return out;
}

void for_each_alive_monomial(const AlgebraPresentation& a, const std::function<void(const Monomial&)>& fn) {
    if (!a.all_heights_finite())
        throw std::domain_error("for_each_alive_monomial: presentation must be finite");
    Monomial cur = a.unit();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == a.n_generators()) {
            fn(cur);
            return;
        }
        for (int e = 0; e < a.generator(i).height; ++e) {
            cur.exps[i] = e;
            rec(i + 1);
        }
        cur.exps[i] = 0;
    };
    rec(0);
}

int cup_length(const AlgebraPresentation& a) {
    if (!a.all_heights_finite()) throw std::domain_error("cup_length: presentation must be finite");
    int closed = 0;
    for (const auto& g : a.generators()) closed += g.height - 1;
    int oracle = 0;
    for_each_alive_monomial(a, [&](const Monomial& m) {
        int s = 0;
        for (int e : m.exps) s += e;
        oracle = std::max(oracle, s);
    });
    if (closed != oracle)
        throw std::logic_error("cup_length: closed form and brute-force oracle disagree (presentation bug)");
    return closed;
}

int wgt(const AlgebraPresentation& a) {
    if (!a.all_heights_finite()) throw std::domain_error("wgt: presentation must be finite");
    int best = 0;
    for_each_alive_monomial(a, [&](const Monomial& m) { best = std::max(best, a.weight(m)); });
    return best;
}

CandidateSearch find_witness_candidates(const AlgebraPresentation& a, const std::vector<ZClass>& zs) {
    CandidateSearch out;
    if (zs.empty()) {
        out.fallback_reason = "no z-classes; lower bound falls back to the filtration length";
        return out;
    }
    int w = wgt(a);
    std::vector<Monomial> maximal;
    for_each_alive_monomial(a, [&](const Monomial& m) {
        if (a.weight(m) == w) maximal.push_back(m);
    });

    bool any_relation = false;
    for (const auto& z : zs) {
        for (const auto& rel : z.relations) {
            int xi = a.generator_index(rel.target);
            if (xi < 0) continue;  // relation lands outside this algebra
            any_relation = true;
            for (const auto& nu : maximal) {
                if (nu.exps[static_cast<std::size_t>(xi)] < 1) continue;
                Monomial mu = nu;
                mu.exps[static_cast<std::size_t>(xi)]--;
                out.candidates.push_back({z, rel.op, rel.target, mu});
            }
        }
    }
    if (out.candidates.empty()) {
        int max_gen_degree = 0;
        for (const auto& g : a.generators()) max_gen_degree = std::max(max_gen_degree, g.degree);
        std::ostringstream os;
        if (!any_relation) {
            os << "no usable Steenrod relation on a z-class: generators top out at degree " << max_gen_degree;
            for (const auto& z : zs)
                if (z.relations.empty() && max_gen_degree < z.degree)
                    os << "; no generator can be of the form op(" << z.name << ")";
        } else {
            os << "relations exist but no maximal-weight monomial is divisible by a relation target";
        }
        out.fallback_reason = os.str();
    }
    return out;
}

namespace {

// Every way the operation can hit the mu part of z*mu when the z part is
// not the certified relation itself: those terms must die for any value
// of the unknown z part.
std::vector<BasicOp> cross_term_ops(const BasicOp& op, int p) {
    std::vector<BasicOp> out;
    if (p == 2) {
        for (int k = 1; k <= op.i; ++k) out.push_back(sq(k));
        return out;
    }
    for (int k = 1; k <= op.i; ++k) out.push_back(power_op(k));
    if (op.bockstein)
        for (int k = 0; k <= op.i; ++k) out.push_back(beta_power_op(k));
    return out;
}

}  // namespace

WitnessCertificate verify_witness(const AlgebraPresentation& a, const ActionTable& table, const ZClass& z,
                                  const BasicOp& op, const std::string& x, const Monomial& mu, int m,
                                  bool strict_mode, const StrictData& strict) {
    if (m < 1) throw std::invalid_argument("verify_witness: need m >= 1");
    WitnessCertificate cert;
    cert.z_name = z.name;
    cert.z_degree = z.degree;
    cert.z_weight = z.weight;
    cert.op = op;
    cert.x = x;
    cert.mu = mu;
    cert.m = m;
    cert.strict_mode = strict_mode;

    int xi = a.generator_index(x);
    if (xi < 0) throw std::invalid_argument("verify_witness: unknown generator " + x);
    {
        // The cited relation must actually be listed on the z-class.
        bool listed = false;
        for (const auto& rel : z.relations)
            if (rel.op == op && rel.target == x) listed = true;
        if (!listed) return cert;  // all checks stay false
    }
    int shift = op_shift(op, a.prime());
    if (z.degree + shift != a.generator(static_cast<std::size_t>(xi)).degree)
        throw std::invalid_argument("verify_witness: relation degrees are inconsistent");

    // (1) survival inside the level-m model: z*mu in the shifted summand,
    // x*mu in A^[m].
    ProjectiveModel model(a, {z}, m);
    Element mu_el = a.element(mu);
    Element x_el = a.element(a.generator_monomial(static_cast<std::size_t>(xi)));
    Element xmu = a.mul(x_el, mu_el);
    cert.checks.survival = model.z_summand_contains(z, mu) &&
                           a.weight(mu) + a.generator(static_cast<std::size_t>(xi)).weight <= m;

    // (2) x*mu survives in the algebra itself.
    cert.checks.nonvanishing = !xmu.is_zero();

    // (3) the degree of z*mu is empty, so any degree-preserving
    // retraction kills it.
    cert.checks.degree_vanishing = a.basis_of_degree(z.degree + a.degree(mu)).empty();

    // (4) an even-dimensional correction term cannot contribute to an
    // odd-degree target.
    cert.checks.parity = a.generator(static_cast<std::size_t>(xi)).degree % 2 != 0;

    // (5) all Cartan cross terms die for every completion of the
    // unknown entries.
    cert.checks.cross_term = true;
    if (!mu_el.is_zero()) {
        for (const auto& cop : cross_term_ops(op, a.prime())) {
            if (!table.pessimistic_is_zero(cop, mu_el)) {
                cert.checks.cross_term = false;
                break;
            }
        }
    } else {
        cert.checks.cross_term = false;
    }

    // Optional: z*mu must also survive the transpotence differential at
    // level m (the target has to sit above the truncation).
    cert.strict_survival = true;
    if (strict.e2 && strict.differentials) {
        for (const auto& d : *strict.differentials) {
            if (d.source != z.name) continue;
            const AlgebraPresentation& e2 = *strict.e2;
            int ti = e2.generator_index(d.target_gen);
            if (ti < 0) throw std::invalid_argument("verify_witness: differential target missing from E2");
            Monomial tgt = e2.unit();
            for (std::size_t i = 0; i < a.n_generators(); ++i) {
                if (!mu.exps[i]) continue;
                int gi = e2.generator_index(a.generator(i).name);
                if (gi < 0) throw std::invalid_argument("verify_witness: mu generator missing from E2");
                tgt.exps[static_cast<std::size_t>(gi)] += mu.exps[i];
            }
            tgt.exps[static_cast<std::size_t>(ti)] += d.target_exp;
            if (e2.monomial_alive(tgt) && e2.weight(tgt) <= m) cert.strict_survival = false;
        }
    }
    return cert;
}

AlgebraPresentation synthesize_e2(const AlgebraPresentation& a, const std::vector<ZClass>& zs,
                                  const std::vector<DifferentialSpec>& ds) {
    std::vector<GeneratorSpec> gens = a.generators();
    for (const auto& d : ds)
        for (auto& g : gens)
            if (g.name == d.target_gen) g.height = kInfiniteHeight;
    for (const auto& z : zs) {
        GeneratorSpec g;
        g.name = z.name;
        g.degree = z.degree;
        g.height = 2;
        g.weight = z.weight;
        gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(),
              [](const GeneratorSpec& x, const GeneratorSpec& y) { return x.degree != y.degree ? x.degree < y.degree : x.name < y.name; });
    return AlgebraPresentation(a.prime(), gens);
}

InvariantReport mwgt_lower(const AlgebraPresentation& a, const ActionTable& table,
                           const std::vector<ZClass>& zs, const MwgtOptions& opts) {
    InvariantReport rep;
    rep.cup = cup_length(a);
    rep.wgt = wgt(a);
    rep.mwgt_lower = rep.wgt;

    CandidateSearch search = find_witness_candidates(a, zs);
    rep.fallback_reason = search.fallback_reason;

    for (const auto& cand : search.candidates) {
        int m = cand.z.weight + a.weight(cand.mu) + 1;
        WitnessCertificate cert = verify_witness(a, table, cand.z, cand.op, cand.x, cand.mu, m,
                                                 opts.strict_mode, opts.strict);
        if (!cert.valid()) continue;
        if (cert.bound() > rep.mwgt_lower) {
            rep.mwgt_lower = cert.bound();
            rep.certificate = cert;
        } else if (cert.bound() == rep.mwgt_lower && !rep.certificate) {
            rep.certificate = cert;
        }
    }
    if (!rep.certificate && rep.fallback_reason.empty())
        rep.fallback_reason = "no candidate witness verified; lower bound falls back to the filtration length";

    if (opts.exploratory && rep.certificate && opts.strict.e2 && opts.strict.differentials) {
        const auto& cert = *rep.certificate;
        for (const auto& d : *opts.strict.differentials) {
            if (d.source != cert.z_name) continue;
            const AlgebraPresentation& e2 = *opts.strict.e2;
            int ti = e2.generator_index(d.target_gen);
            if (ti < 0) continue;
            Monomial tgt = e2.unit();
            for (std::size_t i = 0; i < a.n_generators(); ++i) {
                if (!cert.mu.exps[i]) continue;
                int gi = e2.generator_index(a.generator(i).name);
                if (gi < 0) continue;
                tgt.exps[static_cast<std::size_t>(gi)] += cert.mu.exps[i];
            }
            tgt.exps[static_cast<std::size_t>(ti)] += d.target_exp;
            if (e2.monomial_alive(tgt)) {
                int limit = e2.weight(tgt) - 1;
                if (limit >= cert.m) rep.exploratory_m = limit;
            }
        }
    }

    if (!(rep.cup <= rep.wgt && rep.wgt <= rep.mwgt_lower))
        throw std::logic_error("invariant chain violated: cup <= wgt <= mwgt_lower");
    return rep;
}

}  // namespace lscat
