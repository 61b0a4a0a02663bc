#include "gqm/io.hpp"
#include "gqm/maps.hpp"
#include "gqm/random_spaces.hpp"
#include "gqm/report.hpp"
#include "gqm/sequences.hpp"
#include "gqm/space.hpp"
#include "gqm/topology.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gqm;

Rational rat_arg(const std::string& text, const char* what) {
    auto r = Rational::try_parse(text);
    if (!r)
        throw std::invalid_argument(std::string(what) + " must be a rational \"p/q\", got \"" +
                                    text + "\"");
    return *r;
}

std::pair<Rational, Rational> bounds_arg(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--bounds must be \"lo:hi\", got \"" + text + "\"");
    return {rat_arg(text.substr(0, colon), "--bounds lo"),
            rat_arg(text.substr(colon + 1), "--bounds hi")};
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string pair_str(const Point& a, const Point& b) { return a.str() + ", " + b.str(); }

std::string index_pair_str(const std::pair<std::uint64_t, std::uint64_t>& p) {
    return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

std::string opens_line(const GenTopology& gt, std::size_t cap = 64) {
    std::ostringstream out;
    std::size_t shown = 0;
    for (auto mask : gt.opens()) {
        if (shown == cap) {
            out << " | ...";
            break;
        }
        if (shown++) out << " | ";
        out << gt.subset_str(mask);
    }
    return out.str();
}

struct Output {
    std::string format = "text";
    std::string out_path;
};

int emit(const Report& rep, const Output& output) {
    std::string text =
        output.format == "structured" ? rep.render_structured() : rep.render_text();
    if (!output.out_path.empty())
        io::write_file(output.out_path, text);
    else
        std::cout << text;
    return rep.pass() ? 0 : 1;
}

// ------------------------------------------------------------- check-axioms

Report cmd_check_axioms(const std::string& space_path, const std::string& grid_step,
                        const std::string& bounds) {
    GqmSpace s = io::load_space(space_path);
    Report rep("check-axioms");
    rep.add_input("space", io::space_to_json(s).dump());

    SampleSpec sample = SampleSpec::all();
    if (s.carrier().is_finite()) {
        rep.add_input("grid", "exhaustive");
    } else {
        Rational r = max(s.index(), Rational(1));
        Rational lo = Rational(-5) * r, hi = Rational(5) * r, step = r / Rational(10);
        if (s.carrier().kind() == Carrier::Kind::box) {
            lo = s.carrier().lo();
            hi = s.carrier().hi();
            step = (hi - lo) / Rational(12);
        }
        if (!bounds.empty()) std::tie(lo, hi) = bounds_arg(bounds);
        if (!grid_step.empty()) step = rat_arg(grid_step, "--grid-step");
        sample = SampleSpec::on_grid(GridSpec{lo, hi, step});
        rep.add_input("grid", lo.str() + ":" + hi.str() + ":" + step.str());
    }

    AxiomReport ar = verify_axioms(s, sample);
    auto& chk = rep.add_check("axioms", ar.holds);
    chk.number("index", ar.index, Provenance::trivial);
    chk.count("pairs-checked", ar.pairs_checked);
    chk.count("triples-checked", ar.triples_checked);
    chk.detail("coverage", ar.exhaustive ? "exhaustive" : "sampled");
    chk.detail("symmetric", yn(ar.symmetric));
    if (ar.asymmetry_witness)
        chk.detail("asymmetry-witness",
                   pair_str(ar.asymmetry_witness->first, ar.asymmetry_witness->second));
    for (const auto& [name, count] : ar.triangle_cases)
        chk.detail("case-" + name, std::to_string(count));
    if (!ar.holds) {
        chk.detail("failed-axiom", *ar.failed_axiom);
        const auto& w = *ar.witness;
        chk.detail("witness", w.z ? w.x.str() + ", " + w.y.str() + ", " + w.z->str()
                                  : pair_str(w.x, w.y));
        chk.number("witness-lhs", w.lhs, Provenance::derived);
        chk.number("witness-rhs", w.rhs, Provenance::derived);
    }
    return rep;
}

// --------------------------------------------------------- topology family

GenTopology acquire_gt(const std::string& space_path, const std::string& base_path,
                       Report& rep) {
    if (!space_path.empty() && !base_path.empty())
        throw std::invalid_argument("give either --space or a base-family file, not both");
    if (!space_path.empty()) {
        GqmSpace s = io::load_space(space_path);
        rep.add_input("space", io::space_to_json(s).dump());
        return induced_gt(s);
    }
    if (!base_path.empty()) {
        io::BaseFamily bf = io::load_base(base_path);
        nlohmann::json ground = nlohmann::json::array(), base = nlohmann::json::array();
        for (const auto& p : bf.ground) ground.push_back(io::point_to_json(p));
        for (const auto& set : bf.base) {
            nlohmann::json members = nlohmann::json::array();
            for (const auto& p : set) members.push_back(io::point_to_json(p));
            base.push_back(members);
        }
        rep.add_input("base", nlohmann::json{{"ground", ground}, {"base", base}}.dump());
        return generate_gt_sets(bf.ground, bf.base);
    }
    throw std::invalid_argument("need --space FILE or a base-family file argument");
}

Report cmd_make_topology(const std::string& space_path, const std::string& base_path) {
    Report rep("make-topology");
    GenTopology gt = acquire_gt(space_path, base_path, rep);
    auto& chk = rep.add_check("generate", true);
    chk.count("ground-points", static_cast<long long>(gt.ground().size()));
    chk.count("opens", static_cast<long long>(gt.opens().size()));
    chk.detail("strong", yn(gt.strong()));
    chk.detail("opens-list", opens_line(gt));
    return rep;
}

Report cmd_diagnose_topology(const std::string& space_path, const std::string& base_path) {
    Report rep("diagnose-topology");
    GenTopology gt = acquire_gt(space_path, base_path, rep);
    TopologyCheck tc = is_topology(gt);
    auto& chk = rep.add_check("generalized-topology", tc.generalized());
    chk.detail("contains-empty", yn(tc.contains_empty));
    chk.detail("union-closed", yn(tc.union_closed));
    if (tc.union_witness)
        chk.detail("union-witness", gt.subset_str(tc.union_witness->first) + " u " +
                                        gt.subset_str(tc.union_witness->second));
    chk.detail("intersection-closed", yn(tc.intersection_closed));
    if (tc.intersection_witness)
        chk.detail("intersection-witness",
                   gt.subset_str(tc.intersection_witness->first) + " n " +
                       gt.subset_str(tc.intersection_witness->second));
    chk.detail("ground-present", yn(tc.ground_present));
    chk.detail("full-topology", yn(tc.topology()));
    chk.count("opens", static_cast<long long>(gt.opens().size()));
    return rep;
}

Report cmd_check_separation(const std::string& space_path, const std::string& base_path) {
    Report rep("check-separation");
    GenTopology gt = acquire_gt(space_path, base_path, rep);
    SeparationReport sr = check_separation(gt);
    auto& t0 = rep.add_check("mu-t0", sr.t0);
    if (sr.t0_witness)
        t0.detail("indistinguishable", pair_str(sr.t0_witness->first, sr.t0_witness->second));
    auto& t1 = rep.add_check("mu-t1", sr.t1);
    if (sr.t1_witness)
        t1.detail("not-separated", pair_str(sr.t1_witness->first, sr.t1_witness->second));
    auto& cl = rep.add_check("singletons-closed", sr.singletons_closed);
    if (sr.closed_witness) cl.detail("open-complement-missing", sr.closed_witness->str());
    return rep;
}

// ------------------------------------------------------------------ product

Report cmd_product(const std::vector<std::string>& space_paths) {
    Report rep("product");
    GqmSpace a = io::load_space(space_paths[0]);
    GqmSpace b = io::load_space(space_paths[1]);
    rep.add_input("left", io::space_to_json(a).dump());
    rep.add_input("right", io::space_to_json(b).dump());
    try {
        GqmSpace p = GqmSpace::product(std::move(a), std::move(b));
        auto& chk = rep.add_check("product", true);
        chk.number("index", p.index(), Provenance::trivial);
        chk.detail("space", io::space_to_json(p).dump());
        if (p.carrier().is_finite()) {
            AxiomReport ar = verify_axioms(p);
            auto& ax = rep.add_check("axioms", ar.holds);
            ax.count("pairs-checked", ar.pairs_checked);
            ax.count("triples-checked", ar.triples_checked);
            ax.detail("coverage", "exhaustive");
        }
    } catch (const std::invalid_argument& e) {
        rep.add_check("product", false).detail("error", e.what());
    }
    return rep;
}

// ------------------------------------------------------------ check-uniform

Report cmd_check_uniform(const std::vector<std::string>& space_paths,
                         const std::string& map_path, const std::string& eps_str,
                         const std::string& delta_str) {
    Report rep("check-uniform");
    auto domain = std::make_shared<const GqmSpace>(io::load_space(space_paths[0]));
    auto codomain = std::make_shared<const GqmSpace>(io::load_space(space_paths[1]));
    rep.add_input("domain", io::space_to_json(*domain).dump());
    rep.add_input("codomain", io::space_to_json(*codomain).dump());
    auto pairs = io::load_map_pairs(map_path);
    {
        std::ostringstream echo;
        for (const auto& [x, y] : pairs) echo << x.str() << " -> " << y.str() << "; ";
        rep.add_input("map", echo.str());
    }
    PointMap f = PointMap::table(domain, codomain, std::move(pairs));

    if (!eps_str.empty() || !delta_str.empty()) {
        if (eps_str.empty() || delta_str.empty())
            throw std::invalid_argument("--epsilon and --delta are only valid together");
        Rational eps = rat_arg(eps_str, "--epsilon");
        Rational delta = rat_arg(delta_str, "--delta");
        if (!(eps > codomain->index()))
            throw std::invalid_argument("epsilon must exceed the codomain index " +
                                        codomain->index().str());
        if (!(delta > domain->index()))
            throw std::invalid_argument("delta must exceed the domain index " +
                                        domain->index().str());
        rep.add_input("epsilon", eps.str());
        rep.add_input("delta", delta.str());
        bool ok = true;
        std::optional<std::pair<Point, Point>> violating;
        auto pts = domain->carrier().enumerate();
        for (const auto& x : pts) {
            for (const auto& y : pts)
                if (domain->distance(x, y) < delta &&
                    !(codomain->distance(f.apply(x), f.apply(y)) < eps)) {
                    ok = false;
                    violating = {x, y};
                    break;
                }
            if (!ok) break;
        }
        auto& chk = rep.add_check("eps-delta-pair", ok);
        if (violating) {
            chk.detail("violating", pair_str(violating->first, violating->second));
            chk.number("d-domain", domain->distance(violating->first, violating->second),
                       Provenance::derived);
            chk.number("d-codomain",
                       codomain->distance(f.apply(violating->first), f.apply(violating->second)),
                       Provenance::derived);
        }
        return rep;
    }

    UniformityVerdict v = check_g_uniform_continuity(f);
    auto& chk = rep.add_check("g-uniformly-continuous", v.uniformly_continuous);
    chk.count("eps-candidates", v.eps_candidates);
    chk.count("delta-candidates", v.delta_candidates);
    for (const auto& c : v.cases) {
        std::ostringstream line;
        if (c.ok) {
            line << "delta " << c.good_delta->str() << " works";
        } else {
            line << "no delta works";
            for (const auto& t : c.trace)
                if (t.violating)
                    line << "; delta " << t.delta.str() << " violated by ("
                         << pair_str(t.violating->first, t.violating->second) << ")";
        }
        chk.detail("eps-" + c.eps.str(), line.str());
    }
    if (v.witness_eps) chk.number("witness-eps", *v.witness_eps, Provenance::derived);
    return rep;
}

// ------------------------------------------------------------- classify-seq

void certificate_check(Report& rep, const std::string& name, const Certificate& cert) {
    auto& chk = rep.add_check(name, cert.verified);
    chk.detail("exact", yn(cert.exact));
    chk.detail("scope", cert.exact ? "settled" : "up to horizon");
    chk.count("pairs-checked", cert.pairs_checked);
    if (cert.pair_witness) {
        chk.detail("witness-pair", index_pair_str(*cert.pair_witness));
        chk.number("witness-distance", *cert.witness_distance, Provenance::derived);
    }
    if (cert.extremal_pair) {
        chk.detail("extremal-pair", index_pair_str(*cert.extremal_pair));
        chk.number("extremal-distance", *cert.extremal_distance, Provenance::derived);
    }
}

Report cmd_classify_seq(const std::string& property, const std::string& seq_path,
                        const std::string& space_path, const std::string& eps_str,
                        std::uint64_t k, std::uint64_t horizon) {
    Report rep("classify-seq");
    SeqSpec seq = io::load_seq(seq_path);
    GqmSpace space = io::load_space(space_path);
    rep.add_input("seq", io::seq_to_json(seq).dump());
    rep.add_input("space", io::space_to_json(space).dump());
    Rational eps =
        eps_str.empty() ? space.index() + Rational(1) : rat_arg(eps_str, "--epsilon");
    rep.add_input("epsilon", eps.str());
    rep.add_input("k", std::to_string(k));
    rep.add_input("horizon", std::to_string(horizon));

    std::vector<SeqProperty> props;
    if (property == "all")
        props = {SeqProperty::cauchy, SeqProperty::g_cauchy, SeqProperty::pseudo_cauchy};
    else if (property == "cauchy")
        props = {SeqProperty::cauchy};
    else if (property == "g-cauchy")
        props = {SeqProperty::g_cauchy};
    else if (property == "pseudo-cauchy")
        props = {SeqProperty::pseudo_cauchy};
    else
        throw std::invalid_argument("unknown property " + property);
    for (auto p : props)
        certificate_check(rep, to_string(p), certify(seq, space, p, eps, k, horizon));
    return rep;
}

// ------------------------------------------------------ finite-completeness

Report cmd_finite_completeness(const std::string& space_path) {
    Report rep("finite-completeness");
    GqmSpace space = io::load_space(space_path);
    rep.add_input("space", io::space_to_json(space).dump());
    if (!space.carrier().is_finite())
        throw std::invalid_argument("finite-completeness needs a finite carrier");
    auto pts = space.carrier().enumerate();

    std::vector<SeqSpec> seqs;
    seqs.push_back(SeqSpec::constant(pts.front()));
    if (pts.size() >= 2) {
        seqs.push_back(SeqSpec::table({pts.back(), pts.front()}));
        seqs.push_back(SeqSpec::table({pts[0], pts[1], pts[0]}));
    }
    CompletenessReport cr = finite_space_completeness(space, seqs);

    auto& th = rep.add_check("threshold-separates", cr.threshold_separates);
    th.count("points", static_cast<long long>(cr.points));
    th.number("index", cr.index, Provenance::trivial);
    if (cr.min_offdiagonal)
        th.number("min-offdiagonal", *cr.min_offdiagonal, Provenance::derived);
    th.number("threshold-eps", cr.threshold_eps, Provenance::derived);
    for (std::size_t i = 0; i < cr.reasoning.size(); ++i)
        th.detail("why-" + std::to_string(i), cr.reasoning[i]);

    rep.add_check("complete", cr.complete);
    rep.add_check("g-complete", cr.g_complete);
    rep.add_check("weak-g-complete", cr.weak_g_complete);
    rep.add_check("lebesgue", cr.lebesgue);
    rep.add_check("strongly-lebesgue", cr.strongly_lebesgue);

    bool implications = true;
    for (const auto& c : cr.sequence_checks) implications = implications && c.implications_ok;
    auto& si = rep.add_check("sequence-implications", implications);
    for (std::size_t i = 0; i < cr.sequence_checks.size(); ++i) {
        const auto& c = cr.sequence_checks[i];
        std::ostringstream line;
        line << "cauchy=" << yn(c.cauchy.verified) << " g-cauchy=" << yn(c.g_cauchy.verified)
             << " pseudo=" << yn(c.pseudo.verified);
        if (c.constant_from) line << " constant-from=" << *c.constant_from;
        si.detail("seq-" + std::to_string(i), line.str());
    }
    return rep;
}

// -------------------------------------------------------------- reproduce

using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& raw,
                    const std::vector<std::string>& allowed) {
    Params kv;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parameter must be key=value, got \"" + item + "\"");
        std::string key = item.substr(0, eq);
        bool known = false;
        for (const auto& a : allowed) known = known || a == key;
        if (!known) throw std::invalid_argument("unknown parameter \"" + key + "\"");
        kv[key] = item.substr(eq + 1);
    }
    return kv;
}

Rational param_rat(const Params& kv, const std::string& key, const Rational& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : rat_arg(it->second, key.c_str());
}

std::uint64_t param_u64(const Params& kv, const std::string& key, std::uint64_t fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument(key + " must be a positive integer, got \"" + it->second +
                                    "\"");
    }
}

Report reproduce_ex_3_5(const Params& kv) {
    Rational r = param_rat(kv, "r", Rational(1));
    Report rep("reproduce ex-3-5-not-topology");
    rep.add_input("r", r.str());
    NotTopologyWitness w = not_topology_witness_piecewise(r);

    auto& balls = rep.add_check("balls", true);
    balls.number("center1", w.center1, Provenance::paper_formula);
    balls.number("center2", w.center2, Provenance::paper_formula);
    balls.number("radius", w.radius, Provenance::paper_formula);
    balls.detail("ball1", w.ball1.str());
    balls.detail("ball2", w.ball2.str());

    auto& inter = rep.add_check("intersection", w.intersection_matches);
    inter.detail("computed", w.intersection.str());
    inter.number("expected", w.expected_intersection.str(), Provenance::paper_formula);

    auto& ext = rep.add_check("intersection-extent", w.extent_matches);
    ext.number("extent", w.intersection_extent, Provenance::paper_formula);

    auto& cert = rep.add_check(
        "no-ball-fits",
        w.certificate_holds && w.grid_contained == 0 && w.grid_nonempty >= 400);
    for (const auto& c : w.cases)
        cert.detail("case-" + c.name, "radius " + c.radius.str() + " -> " + c.shape.str() +
                                          ", extent >= " + c.extent_lower.str() +
                                          (c.exceeds_target ? " (beats target)" : ""));
    cert.count("grid-candidates", w.grid_candidates);
    cert.count("grid-nonempty", w.grid_nonempty);
    cert.count("grid-contained", w.grid_contained);
    return rep;
}

Report reproduce_remark_entourage(const Params& kv) {
    Rational r = param_rat(kv, "r", Rational(1));
    Report rep("reproduce remark-entourage");
    rep.add_input("r", r.str());

    GqmSpace line = GqmSpace::piecewise(r);
    Rational eps = Rational(3) * r / Rational(2);
    std::vector<Rational> deltas;
    for (long long k = 1; k <= 10; ++k) deltas.push_back(r + Rational(1, k));
    EntourageReport er = entourage_base_check(line, eps, deltas);

    bool all_fail = !er.checks.empty();
    for (const auto& c : er.checks) all_fail = all_fail && !c.contained && c.witness;
    auto& neg = rep.add_check("composition-fails-on-line", all_fail);
    neg.number("eps", eps, Provenance::paper_formula);
    for (const auto& c : er.checks) {
        std::ostringstream line_out;
        if (c.witness) {
            const auto& [x, y, z] = *c.witness;
            line_out << "witness (" << x.str() << ", " << y.str() << ", " << z.str() << ")"
                     << " d(x,y)=" << c.d_xy->str() << " d(y,z)=" << c.d_yz->str()
                     << " d(x,z)=" << c.d_xz->str();
        } else {
            line_out << "contained";
        }
        neg.detail("delta-" + c.delta.str(), line_out.str());
    }

    // Index-0 control: for a classical quasi-metric the half-radius
    // composition always lands inside, by the triangle inequality.
    GqmSpace control = GqmSpace::table(
        {Point::sym("a"), Point::sym("b"), Point::sym("c")},
        {{Rational(0), Rational(1), Rational(2)},
         {Rational(1), Rational(0), Rational(1)},
         {Rational(1), Rational(1), Rational(0)}});
    bool all_hold = true;
    auto& pos = rep.add_check("half-composition-holds-at-index-0", true);
    for (const Rational& e : {Rational(3), Rational(2), Rational(1)}) {
        EntourageReport pr = entourage_base_check(control, e, {e / Rational(2)});
        all_hold = all_hold && pr.all_contained();
        pos.detail("eps-" + e.str(), pr.all_contained() ? "contained" : "violated");
    }
    pos.pass = all_hold;
    return rep;
}

Report reproduce_remark_two_point(const Params&) {
    Report rep("reproduce remark-two-point");
    std::vector<Point> pts = {Point::sym("a"), Point::sym("b")};
    GqmSpace d1 = GqmSpace::table(pts, {{Rational(3), Rational(4)}, {Rational(4), Rational(3)}});
    GqmSpace d2 = GqmSpace::table(pts, {{Rational(5), Rational(6)}, {Rational(6), Rational(5)}});
    AxiomReport a1 = verify_axioms(d1), a2 = verify_axioms(d2);
    auto& ax = rep.add_check("axioms", a1.holds && a2.holds);
    ax.number("index1", a1.index, Provenance::paper_formula);
    ax.number("index2", a2.index, Provenance::paper_formula);

    GenTopology g1 = induced_gt(d1), g2 = induced_gt(d2);
    bool discrete1 = g1.opens().size() == 4 && g1.strong();
    bool discrete2 = g2.opens().size() == 4 && g2.strong();
    auto& disc = rep.add_check("both-discrete", discrete1 && discrete2);
    disc.detail("opens1", opens_line(g1));
    disc.detail("opens2", opens_line(g2));

    rep.add_check("same-topology-distinct-indices", g1 == g2 && a1.index != a2.index);
    return rep;
}

Report reproduce_ex_4_5(const Params& kv) {
    Rational r = param_rat(kv, "r", Rational(1));
    Report rep("reproduce ex-4-5-noncontinuity");
    rep.add_input("r", r.str());
    for (long long k = 1; k <= 10; ++k) {
        Rational delta = r + Rational(1, k);
        NoncontinuityWitness w = noncontinuity_witness_distance_map(r, delta);
        auto& chk = rep.add_check("delta-" + delta.str(), w.verified);
        chk.count("n", w.n);
        chk.number("x", w.x, Provenance::paper_formula);
        chk.number("y", w.y, Provenance::paper_formula);
        chk.number("d-x-0", w.d_x0, Provenance::derived);
        chk.number("d-y-0", w.d_y0, Provenance::derived);
        chk.number("pair-distance", w.pair_distance, Provenance::derived);
        chk.number("image-gap", w.image_gap, Provenance::paper_formula);
        chk.number("eps", w.eps, Provenance::paper_formula);
    }
    return rep;
}

Report reproduce_ex_5_4(const Params& kv) {
    Rational r = param_rat(kv, "r", Rational(1));
    std::uint64_t horizon = param_u64(kv, "horizon", 10000);
    Report rep("reproduce ex-5-4-weak-g");
    rep.add_input("r", r.str());
    rep.add_input("horizon", std::to_string(horizon));

    std::vector<Rational> centers;
    for (long long j = 1; j <= 20; ++j) centers.push_back(Rational(j) * r / Rational(2));
    WeakGDemo demo = weak_g_incompleteness_demo(r, centers, horizon);

    bool certs_ok = true;
    for (const auto& c : demo.g_cauchy_certs) certs_ok = certs_ok && c.verified && c.exact;
    auto& gc = rep.add_check("g-cauchy-sweep", certs_ok);
    for (const auto& c : demo.g_cauchy_certs)
        gc.detail("eps-" + c.epsilon.str(),
                  "k=" + std::to_string(c.k) + " max-consecutive=" +
                      (c.extremal_distance ? c.extremal_distance->str() : "-") +
                      (c.exact ? " (settled)" : ""));

    bool bounded = true;
    for (const auto& c : demo.centers) bounded = bounded && c.bounded;
    auto& cl = rep.add_check("no-cluster-point", bounded);
    cl.number("ball-radius", demo.radius, Provenance::paper_formula);
    for (const auto& c : demo.centers)
        cl.detail("center-" + c.center.str(), "hits=" + std::to_string(c.indices.size()) +
                                                  " cutoff=" + std::to_string(c.cutoff));
    return rep;
}

Report reproduce_ex_5_8(const Params& kv) {
    std::uint64_t horizon = param_u64(kv, "horizon", 50);
    Report rep("reproduce ex-5-8-pseudo-product");
    rep.add_input("horizon", std::to_string(horizon));

    GqmSpace space = GqmSpace::piecewise(Rational(1));
    SeqSpec x = SeqSpec::alt_pow(Rational(10), Rational(1));
    SeqSpec y = SeqSpec::alt_pow_mirror(Rational(10), Rational(1));
    Rational eps_components(3, 2);

    for (std::uint64_t k : {std::uint64_t(1), std::uint64_t(5), std::uint64_t(25)}) {
        if (k > horizon) continue;
        Certificate cx = certify(x, space, SeqProperty::pseudo_cauchy, eps_components, k, horizon);
        Certificate cy = certify(y, space, SeqProperty::pseudo_cauchy, eps_components, k, horizon);
        auto& chk = rep.add_check("components-pseudo-k" + std::to_string(k),
                                  cx.verified && cx.exact && cy.verified && cy.exact);
        if (cx.pair_witness) chk.detail("x-witness", index_pair_str(*cx.pair_witness));
        if (cy.pair_witness) chk.detail("y-witness", index_pair_str(*cy.pair_witness));
        chk.number("eps", eps_components, Provenance::derived);
    }

    ProductLemmaResult plr = product_lemma_check(x, y, space, space,
                                                 SeqProperty::pseudo_cauchy, Rational(2), 1,
                                                 horizon);
    auto& pair_chk = rep.add_check("pair-refuted", !plr.paired.verified);
    pair_chk.number("paper-lower-bound", Rational(2), Provenance::paper_formula);
    if (plr.paired.extremal_distance) {
        pair_chk.number("min-product-distance", *plr.paired.extremal_distance,
                        Provenance::derived);
        pair_chk.detail("min-at", index_pair_str(*plr.paired.extremal_pair));
    }
    rep.add_check("lemma-consistent", plr.consistent);
    return rep;
}

Report reproduce_thm_mu_t1(const Params& kv) {
    std::uint64_t seed = param_u64(kv, "seed", 7);
    std::uint64_t count = param_u64(kv, "count", 5);
    Report rep("reproduce thm-mu-t1");
    rep.add_input("seed", std::to_string(seed));
    rep.add_input("count", std::to_string(count));

    std::vector<Point> two = {Point::sym("a"), Point::sym("b")};
    std::vector<GqmSpace> spaces;
    spaces.push_back(
        GqmSpace::table(two, {{Rational(3), Rational(4)}, {Rational(4), Rational(3)}}));
    spaces.push_back(
        GqmSpace::table(two, {{Rational(5), Rational(6)}, {Rational(6), Rational(5)}}));
    RandomSpaceOptions opts;
    opts.max_points = 5;
    for (std::uint64_t i = 0; i < count; ++i)
        spaces.push_back(random_table_space(seed + i, opts));

    for (std::size_t i = 0; i < spaces.size(); ++i) {
        AxiomReport ar = verify_axioms(spaces[i]);
        GenTopology gt = induced_gt(spaces[i]);
        SeparationReport sr = check_separation(gt);
        auto& chk = rep.add_check("space-" + std::to_string(i),
                                  ar.holds && gt.strong() && sr.t0 && sr.t1 &&
                                      sr.singletons_closed);
        chk.count("points", static_cast<long long>(gt.ground().size()));
        chk.number("index", ar.index, Provenance::derived);
        chk.detail("mu-t0", yn(sr.t0));
        chk.detail("mu-t1", yn(sr.t1));
        chk.detail("singletons-closed", yn(sr.singletons_closed));
    }
    return rep;
}

Report reproduce_thm_pullback(const Params& kv) {
    std::uint64_t seed = param_u64(kv, "seed", 11);
    std::uint64_t count = param_u64(kv, "count", 5);
    Report rep("reproduce thm-pullback");
    rep.add_input("seed", std::to_string(seed));
    rep.add_input("count", std::to_string(count));

    for (std::uint64_t i = 0; i < count; ++i) {
        RandomBijection rb = random_bijection(seed + i);
        PullbackResult pr = pullback_metric(rb.map);
        auto& chk = rep.add_check("instance-" + std::to_string(i),
                                  pr.index_preserved && pr.gt_matches);
        chk.count("points", static_cast<long long>(rb.domain->carrier().enumerate().size()));
        chk.number("index", pr.pulled.index(), Provenance::derived);
        chk.detail("index-preserved", yn(pr.index_preserved));
        chk.detail("topology-transported", yn(pr.gt_matches));
    }
    return rep;
}

Report cmd_reproduce(const std::string& id, const std::vector<std::string>& raw_params) {
    if (id == "ex-3-5-not-topology")
        return reproduce_ex_3_5(parse_params(raw_params, {"r"}));
    if (id == "remark-entourage")
        return reproduce_remark_entourage(parse_params(raw_params, {"r"}));
    if (id == "remark-two-point") return reproduce_remark_two_point(parse_params(raw_params, {}));
    if (id == "ex-4-5-noncontinuity")
        return reproduce_ex_4_5(parse_params(raw_params, {"r"}));
    if (id == "ex-5-4-weak-g")
        return reproduce_ex_5_4(parse_params(raw_params, {"r", "horizon"}));
    if (id == "ex-5-8-pseudo-product")
        return reproduce_ex_5_8(parse_params(raw_params, {"horizon"}));
    if (id == "thm-mu-t1")
        return reproduce_thm_mu_t1(parse_params(raw_params, {"seed", "count"}));
    if (id == "thm-pullback")
        return reproduce_thm_pullback(parse_params(raw_params, {"seed", "count"}));
    throw std::invalid_argument("unknown example id \"" + id + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification tool for g-quasi metric spaces"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--out", output.out_path, "write the report to a file");

    std::string space_path, base_path, seq_path, map_path;
    std::string eps_str, delta_str, grid_step, bounds, property;
    std::vector<std::string> space_pair, raw_params;
    std::string example_id;
    std::uint64_t k = 1, horizon = 100;

    auto* ax = app.add_subcommand("check-axioms", "verify the two axioms over the carrier");
    ax->add_option("--space", space_path, "space description file")->required();
    ax->add_option("--grid-step", grid_step, "sampling step for infinite carriers");
    ax->add_option("--bounds", bounds, "sampling bounds lo:hi for infinite carriers");

    auto* mk = app.add_subcommand("make-topology", "build the induced or generated topology");
    mk->add_option("--space", space_path, "space file (induced topology)");
    mk->add_option("base", base_path, "base-family file (generated topology)");

    auto* diag = app.add_subcommand("diagnose-topology",
                                    "check union and intersection closure with witnesses");
    diag->add_option("--space", space_path, "space file (induced topology)");
    diag->add_option("base", base_path, "base-family file (generated topology)");

    auto* sep = app.add_subcommand("check-separation", "mu-T0 / mu-T1 / closed singletons");
    sep->add_option("--space", space_path, "space file (induced topology)");
    sep->add_option("base", base_path, "base-family file (generated topology)");

    auto* prod = app.add_subcommand("product", "combine two spaces under the max rule");
    prod->add_option("--space", space_pair, "left and right space files")
        ->required()
        ->expected(2);

    auto* uni = app.add_subcommand("check-uniform", "decide g-uniform continuity of a table map");
    uni->add_option("--space", space_pair, "domain and codomain space files")
        ->required()
        ->expected(2);
    uni->add_option("--map", map_path, "map file, one \"x y\" pair per line")->required();
    uni->add_option("--epsilon", eps_str, "check one specific epsilon (with --delta)");
    uni->add_option("--delta", delta_str, "check one specific delta (with --epsilon)");

    auto* cls = app.add_subcommand("classify-seq", "certify sequence properties");
    cls->add_option("property", property, "cauchy | g-cauchy | pseudo-cauchy | all")
        ->required()
        ->check(CLI::IsMember({"cauchy", "g-cauchy", "pseudo-cauchy", "all"}));
    cls->add_option("--seq", seq_path, "sequence description file")->required();
    cls->add_option("--space", space_path, "space description file")->required();
    cls->add_option("--epsilon", eps_str, "threshold, must exceed the index (default index+1)");
    cls->add_option("--k", k, "start index")->capture_default_str();
    cls->add_option("--horizon", horizon, "last index scanned")->capture_default_str();

    auto* repr = app.add_subcommand("reproduce", "rerun a named construction");
    repr->add_option("id", example_id,
                     "ex-3-5-not-topology | remark-entourage | remark-two-point | "
                     "ex-4-5-noncontinuity | ex-5-4-weak-g | ex-5-8-pseudo-product | "
                     "thm-mu-t1 | thm-pullback")
        ->required();
    repr->add_option("params", raw_params, "key=value overrides (r=, horizon=, seed=, count=)");

    auto* fin = app.add_subcommand("finite-completeness",
                                   "completeness hierarchy on a finite carrier");
    fin->add_option("--space", space_path, "space description file")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Report rep = [&]() -> Report {
            if (ax->parsed()) return cmd_check_axioms(space_path, grid_step, bounds);
            if (mk->parsed()) return cmd_make_topology(space_path, base_path);
            if (diag->parsed()) return cmd_diagnose_topology(space_path, base_path);
            if (sep->parsed()) return cmd_check_separation(space_path, base_path);
            if (prod->parsed()) return cmd_product(space_pair);
            if (uni->parsed())
                return cmd_check_uniform(space_pair, map_path, eps_str, delta_str);
            if (cls->parsed())
                return cmd_classify_seq(property, seq_path, space_path, eps_str, k, horizon);
            if (repr->parsed()) return cmd_reproduce(example_id, raw_params);
            if (fin->parsed()) return cmd_finite_completeness(space_path);
            throw std::logic_error("no subcommand dispatched");
        }();
        return emit(rep, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
