#include "lscat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace lscat {

using nlohmann::json;

json op_to_json(const BasicOp& op, int prime) {
    json j;
    j["kind"] = prime == 2 ? "Sq" : "P";
    j["i"] = op.i;
    if (op.bockstein) j["bockstein"] = true;
    return j;
}

BasicOp op_from_json(const json& j, int prime) {
    std::string kind = j.at("kind").get<std::string>();
    BasicOp op;
    op.i = j.value("i", 0);
    if (kind != "beta" && !j.contains("i")) throw std::invalid_argument("op: missing index i");
    op.bockstein = j.value("bockstein", false);
    if (kind == "Sq") {
        if (prime != 2) throw std::invalid_argument("op: Sq only makes sense at p = 2");
    } else if (kind == "P" || kind == "beta") {
        if (prime == 2) throw std::invalid_argument("op: P/beta need an odd prime");
        if (kind == "beta") {
            op.bockstein = true;
            op.i = j.value("i", 0);
        }
    } else {
        throw std::invalid_argument("op: unknown kind " + kind);
    }
    op_shift(op, prime);  // validates the (i, bockstein) combination
    return op;
}

json element_to_json(const AlgebraPresentation& a, const Element& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms) {
        json mono = json::object();
        for (std::size_t i = 0; i < a.n_generators(); ++i)
            if (m.exps[i]) mono[a.generator(i).name] = m.exps[i];
        terms.push_back({{"monomial", mono}, {"coeff", c}});
    }
    return terms;
}

Element element_from_json(const AlgebraPresentation& a, const json& j) {
    Element out;
    for (const auto& term : j) {
        Monomial m = a.unit();
        for (const auto& [name, e] : term.at("monomial").items()) {
            int gi = a.generator_index(name);
            if (gi < 0) throw std::invalid_argument("element: unknown generator " + name);
            m.exps[static_cast<std::size_t>(gi)] = e.get<int>();
        }
        out = a.add(out, a.element(m, term.at("coeff").get<int>()));
    }
    return out;
}

json generators_to_json(const AlgebraPresentation& a) {
    json gens = json::array();
    for (const auto& g : a.generators()) {
        json jg;
        jg["name"] = g.name;
        jg["degree"] = g.degree;
        if (g.height == kInfiniteHeight)
            jg["height"] = nullptr;  // polynomial generator
        else
            jg["height"] = g.height;
        if (g.weight != 1) jg["weight"] = g.weight;
        gens.push_back(jg);
    }
    return gens;
}

static AlgebraPresentation generators_from_json(int prime, const json& j) {
    std::vector<GeneratorSpec> gens;
    for (const auto& jg : j) {
        GeneratorSpec g;
        g.name = jg.at("name").get<std::string>();
        g.degree = jg.at("degree").get<int>();
        if (!jg.contains("height") || jg.at("height").is_null())
            g.height = kInfiniteHeight;
        else
            g.height = jg.at("height").get<int>();
        g.weight = jg.value("weight", 1);
        gens.push_back(g);
    }
    return AlgebraPresentation(prime, gens);
}

json coalgebra_to_json(const CoalgebraPresentation& c) {
    json arr = json::array();
    for (const auto& cf : c.cofactors()) {
        json j;
        j["name"] = cf.name;
        j["degree"] = cf.degree;
        switch (cf.kind) {
            case CofactorKind::Exterior: j["kind"] = "exterior"; break;
            case CofactorKind::TruncatedPolynomial:
                j["kind"] = "truncated";
                j["height"] = cf.height;
                break;
            case CofactorKind::DividedPower: j["kind"] = "dividedPower"; break;
        }
        arr.push_back(j);
    }
    return arr;
}

CoalgebraPresentation coalgebra_from_json(int prime, const json& j) {
    std::vector<CofactorSpec> cs;
    for (const auto& jc : j) {
        CofactorSpec c;
        c.name = jc.at("name").get<std::string>();
        c.degree = jc.at("degree").get<int>();
        std::string kind = jc.at("kind").get<std::string>();
        if (kind == "exterior")
            c.kind = CofactorKind::Exterior;
        else if (kind == "truncated") {
            c.kind = CofactorKind::TruncatedPolynomial;
            c.height = jc.at("height").get<int>();
        } else if (kind == "dividedPower")
            c.kind = CofactorKind::DividedPower;
        else
            throw std::invalid_argument("coalgebra: unknown kind " + kind);
        cs.push_back(c);
    }
    return CoalgebraPresentation(prime, cs);
}

json bundle_to_json(const PresentationBundle& b) {
    json j;
    j["prime"] = b.algebra.prime();
    j["generators"] = generators_to_json(b.algebra);
    json steenrod = json::array();
    for (const auto& [key, val] : b.action_table.stored()) {
        json js;
        js["gen"] = b.algebra.generator(static_cast<std::size_t>(key.first)).name;
        js["op"] = op_to_json(key.second, b.algebra.prime());
        if (val.has_value())
            js["value"] = element_to_json(b.algebra, *val);
        else
            js["value"] = "unknown";
        steenrod.push_back(js);
    }
    j["steenrod"] = steenrod;
    json zs = json::array();
    for (const auto& z : b.z_classes) {
        json jz;
        jz["name"] = z.name;
        jz["degree"] = z.degree;
        if (z.weight != 1) jz["weight"] = z.weight;
        json rels = json::array();
        for (const auto& r : z.relations)
            rels.push_back({{"op", op_to_json(r.op, b.algebra.prime())}, {"target", r.target}});
        jz["relations"] = rels;
        zs.push_back(jz);
    }
    j["zClasses"] = zs;
    if (b.coalgebra) j["coalgebra"] = coalgebra_to_json(*b.coalgebra);
    if (!b.differentials.empty()) {
        json ds = json::array();
        for (const auto& d : b.differentials) {
            json jd;
            jd["page"] = d.page;
            jd["source"] = d.source;
            jd["target"] = json::object({{d.target_gen, d.target_exp}});
            ds.push_back(jd);
        }
        j["differentials"] = ds;
    }
    return j;
}

PresentationBundle bundle_from_json(const json& j) {
    PresentationBundle b;
    int prime = j.at("prime").get<int>();
    b.algebra = generators_from_json(prime, j.at("generators"));
    b.action_table = ActionTable(b.algebra);
    if (j.contains("steenrod")) {
        for (const auto& js : j.at("steenrod")) {
            std::string gen = js.at("gen").get<std::string>();
            BasicOp op = op_from_json(js.at("op"), prime);
            const auto& val = js.at("value");
            if (val.is_string() && val.get<std::string>() == "unknown")
                b.action_table.set_unknown(gen, op);
            else
                b.action_table.set(gen, op, element_from_json(b.algebra, val));
        }
    }
    b.action_table = b.action_table.autofill();
    if (j.contains("zClasses")) {
        for (const auto& jz : j.at("zClasses")) {
            ZClass z;
            z.name = jz.at("name").get<std::string>();
            z.degree = jz.at("degree").get<int>();
            z.weight = jz.value("weight", 1);
            if (jz.contains("relations"))
                for (const auto& jr : jz.at("relations"))
                    z.relations.push_back({op_from_json(jr.at("op"), prime), jr.at("target").get<std::string>()});
            b.z_classes.push_back(z);
        }
    }
    if (j.contains("coalgebra")) b.coalgebra = coalgebra_from_json(prime, j.at("coalgebra"));
    if (j.contains("differentials")) {
        for (const auto& jd : j.at("differentials")) {
            DifferentialSpec d;
            d.page = jd.at("page").get<int>();
            d.source = jd.at("source").get<std::string>();
            const auto& tgt = jd.at("target");
            if (tgt.size() != 1) throw std::invalid_argument("differential target must be a pure power");
            for (const auto& [name, exp] : tgt.items()) {
                d.target_gen = name;
                d.target_exp = exp.get<int>();
            }
            b.differentials.push_back(d);
        }
    }
    return b;
}

PresentationBundle load_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return bundle_from_json(j);
}

PresentationBundle bundle_from_entry(const CatalogEntry& e) {
    PresentationBundle b;
    b.algebra = e.algebra;
    b.action_table = e.action_table;
    b.z_classes = e.z_classes;
    b.coalgebra = e.loop_coalgebra;
    b.differentials = e.differentials;
    return b;
}

json entry_to_json(const CatalogEntry& e) {
    json j = bundle_to_json(bundle_from_entry(e));
    j["group"] = group_name(e.group);
    j["expectedCotor"] = generators_to_json(e.expected_cotor);
    j["coverCohomology"] = generators_to_json(e.cover_cohomology);
    if (e.loop_coalgebra_tor_derived)
        j["coalgebraTorDerived"] = coalgebra_to_json(*e.loop_coalgebra_tor_derived);
    j["expected"] = {{"cup", e.expected.cup}, {"wgt", e.expected.wgt}, {"mwgtLower", e.expected.mwgt_lower}};
    if (e.expected.witness_m) j["expected"]["witnessM"] = *e.expected.witness_m;
    j["notes"] = e.notes;
    return j;
}

json certificate_to_json(const AlgebraPresentation& a, const WitnessCertificate& c) {
    json j;
    j["z"] = c.z_name;
    j["zDegree"] = c.z_degree;
    j["op"] = op_to_json(c.op, a.prime());
    j["x"] = c.x;
    j["mu"] = a.to_string(c.mu);
    j["m"] = c.m;
    j["bound"] = c.bound();
    j["checks"] = {{"survival", c.checks.survival},
                   {"nonvanishing", c.checks.nonvanishing},
                   {"degreeVanishing", c.checks.degree_vanishing},
                   {"parity", c.checks.parity},
                   {"crossTerm", c.checks.cross_term}};
    if (c.strict_mode) j["checks"]["strictSurvival"] = c.strict_survival;
    j["valid"] = c.valid();
    return j;
}

json invariant_report_to_json(const AlgebraPresentation& a, const InvariantReport& r) {
    json j;
    j["cup"] = r.cup;
    j["wgt"] = r.wgt;
    j["mwgtLower"] = r.mwgt_lower;
    if (r.certificate) j["certificate"] = certificate_to_json(a, *r.certificate);
    if (!r.fallback_reason.empty()) j["fallbackReason"] = r.fallback_reason;
    if (r.exploratory_m) j["exploratoryM"] = *r.exploratory_m;
    return j;
}

json dims_to_json(const BigradedDims& d) {
    json j;
    j["grading"] = d.grading == Grading::Bar ? "tor" : "cotor";
    json cells = json::array();
    for (const auto& [st, dim] : d.dims)
        cells.push_back({{"s", st.first}, {"t", st.second}, {"dim", dim}});
    j["bigraded"] = cells;
    json totals = json::object();
    for (const auto& [deg, dim] : d.totals()) totals[std::to_string(deg)] = dim;
    j["totals"] = totals;
    return j;
}

json entry_report_to_json(const EntryReport& r) {
    json j;
    j["group"] = group_name(r.group);
    j["prime"] = r.prime;
    json checks = json::array();
    for (const auto& c : r.checks) {
        const char* st = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Finding ? "FINDING" : "FAIL";
        checks.push_back({{"name", c.name}, {"status", st}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["fail"] = r.any_fail();
    return j;
}

}  // namespace lscat
