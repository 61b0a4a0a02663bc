#include "gqm/io.hpp"
#include "gqm/maps.hpp"
#include "gqm/random_spaces.hpp"
#include "gqm/rational.hpp"
#include "gqm/sequences.hpp"
#include "gqm/space.hpp"
#include "gqm/topology.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;
using namespace gqm;

namespace {

py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

std::string rule_kind_name(const GqmSpace& s) {
    return std::visit(
        [](auto&& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RuleTable>) return "table";
            else if constexpr (std::is_same_v<T, RuleShiftedQuasi>) return "shifted-quasi";
            else if constexpr (std::is_same_v<T, RuleSquareShift>) return "square-shift";
            else if constexpr (std::is_same_v<T, RulePiecewise>) return "piecewise";
            else return "product";
        },
        s.rule());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact rational verification of g-quasi metric spaces: axioms, "
              "induced generalized topologies, products, g-uniform continuity, "
              "and the completeness hierarchy";
    m.attr("__version__") = "0.1.0";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>(), py::arg("n"))
        .def(py::init([](const std::string& text) { return Rational::parse(text); }),
             py::arg("text"))
        .def(py::init<long long, long long>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly("denominator", [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("is_integer", &Rational::is_integer)
        .def("floor", [](const Rational& r) { return to_py_int(r.floor()); })
        .def("ceil", [](const Rational& r) { return to_py_int(r.ceil()); })
        .def("abs", &Rational::abs)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", &Rational::str);
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();
    m.def("rat", &Rational::parse, py::arg("text"), "parse \"p\" or \"p/q\"");

    py::class_<Point>(m, "Point")
        .def(py::init([](long long n) { return Point::rat(Rational(n)); }), py::arg("n"))
        .def(py::init([](const std::string& text) {
                 auto r = Rational::try_parse(text);
                 return r ? Point::rat(*r) : Point::sym(text);
             }),
             py::arg("text"))
        .def(py::init([](const Rational& r) { return Point::rat(r); }), py::arg("value"))
        .def_static("sym", &Point::sym, py::arg("label"))
        .def_static("rat", &Point::rat, py::arg("value"))
        .def_static("pair", &Point::pair, py::arg("first"), py::arg("second"))
        .def("is_sym", &Point::is_sym)
        .def("is_rat", &Point::is_rat)
        .def("is_pair", &Point::is_pair)
        .def_property_readonly("label", &Point::sym_label)
        .def_property_readonly("value", &Point::rat_value)
        .def_property_readonly("first", &Point::first)
        .def_property_readonly("second", &Point::second)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Point& p) { return py::hash(py::str(p.str())); })
        .def("__str__", &Point::str)
        .def("__repr__", &Point::str);
    py::implicitly_convertible<py::int_, Point>();
    py::implicitly_convertible<py::str, Point>();
    py::implicitly_convertible<Rational, Point>();

    auto iset = py::class_<IntervalSet>(m, "IntervalSet");
    py::enum_<IntervalSet::ExtentKind>(iset, "ExtentKind")
        .value("empty", IntervalSet::ExtentKind::empty)
        .value("finite", IntervalSet::ExtentKind::finite)
        .value("infinite", IntervalSet::ExtentKind::infinite);
    py::class_<IntervalSet::Extent>(iset, "Extent")
        .def_readonly("kind", &IntervalSet::Extent::kind)
        .def_readonly("value", &IntervalSet::Extent::value)
        .def(py::self == py::self);
    py::class_<IntervalSet::SubsetResult>(iset, "SubsetResult")
        .def_readonly("holds", &IntervalSet::SubsetResult::holds)
        .def_readonly("witness", &IntervalSet::SubsetResult::witness);
    iset.def(py::init<>())
        .def_static("interval", &IntervalSet::interval, py::arg("lo"), py::arg("hi"))
        .def_static("point", &IntervalSet::point, py::arg("x"))
        .def("empty", &IntervalSet::empty)
        .def("contains", &IntervalSet::contains, py::arg("x"))
        .def("extent", &IntervalSet::extent)
        .def("intervals",
             [](const IntervalSet& s) {
                 std::vector<std::pair<Rational, Rational>> out;
                 for (const auto& iv : s.intervals()) out.emplace_back(iv.lo, iv.hi);
                 return out;
             })
        .def("points", [](const IntervalSet& s) { return s.points(); })
        .def_static("parse", [](const std::string& text) { return IntervalSet::parse(text); },
                    py::arg("text"))
        .def(py::self == py::self)
        .def("__str__", &IntervalSet::str)
        .def("__repr__", &IntervalSet::str);
    m.def("intersect", [](const IntervalSet& a, const IntervalSet& b) { return intersect(a, b); });
    m.def("unite", [](const IntervalSet& a, const IntervalSet& b) { return unite(a, b); });
    m.def("subset_of", [](const IntervalSet& a, const IntervalSet& b) { return subset_of(a, b); });

    py::class_<Carrier>(m, "Carrier")
        .def_static("finite", &Carrier::finite, py::arg("points"))
        .def_static("line", &Carrier::line)
        .def_static("box", &Carrier::box, py::arg("lo"), py::arg("hi"))
        .def_static("product", &Carrier::product, py::arg("left"), py::arg("right"))
        .def("contains", &Carrier::contains, py::arg("p"))
        .def("is_finite", &Carrier::is_finite)
        .def("enumerate", &Carrier::enumerate);

    py::class_<QuasiRule>(m, "QuasiRule")
        .def_static("table", &QuasiRule::table, py::arg("matrix"))
        .def_static("abs_diff", &QuasiRule::abs_diff)
        .def_static("discrete", &QuasiRule::discrete);

    py::class_<GqmSpace, std::shared_ptr<GqmSpace>>(m, "GqmSpace")
        .def_static("table", &GqmSpace::table, py::arg("points"), py::arg("matrix"))
        .def_static("shifted_quasi", &GqmSpace::shifted_quasi, py::arg("base"), py::arg("shift"),
                    py::arg("carrier"))
        .def_static("square_shift", &GqmSpace::square_shift, py::arg("offset"), py::arg("carrier"))
        .def_static("piecewise", &GqmSpace::piecewise, py::arg("r"))
        .def_static("piecewise_on", &GqmSpace::piecewise_on, py::arg("r"), py::arg("carrier"))
        .def_static("product", &GqmSpace::product, py::arg("left"), py::arg("right"))
        .def_property_readonly("index", &GqmSpace::index)
        .def_property_readonly("rule_kind", &rule_kind_name)
        .def_property_readonly("carrier", [](const GqmSpace& s) { return s.carrier(); })
        .def("distance", &GqmSpace::distance, py::arg("x"), py::arg("y"));

    py::class_<AxiomWitness>(m, "AxiomWitness")
        .def_readonly("x", &AxiomWitness::x)
        .def_readonly("y", &AxiomWitness::y)
        .def_readonly("z", &AxiomWitness::z)
        .def_readonly("lhs", &AxiomWitness::lhs)
        .def_readonly("rhs", &AxiomWitness::rhs);
    py::class_<AxiomReport>(m, "AxiomReport")
        .def_readonly("holds", &AxiomReport::holds)
        .def_readonly("failed_axiom", &AxiomReport::failed_axiom)
        .def_readonly("witness", &AxiomReport::witness)
        .def_readonly("index", &AxiomReport::index)
        .def_readonly("symmetric", &AxiomReport::symmetric)
        .def_readonly("asymmetry_witness", &AxiomReport::asymmetry_witness)
        .def_readonly("exhaustive", &AxiomReport::exhaustive)
        .def_readonly("pairs_checked", &AxiomReport::pairs_checked)
        .def_readonly("triples_checked", &AxiomReport::triples_checked)
        .def_readonly("triangle_cases", &AxiomReport::triangle_cases);
    m.def("verify_axioms",
          [](const GqmSpace& s) { return verify_axioms(s); }, py::arg("space"));
    m.def("verify_axioms_on_grid",
          [](const GqmSpace& s, const Rational& lo, const Rational& hi, const Rational& step) {
              return verify_axioms(s, SampleSpec::on_grid(GridSpec{lo, hi, step}));
          },
          py::arg("space"), py::arg("lo"), py::arg("hi"), py::arg("step"));
    m.def("shift_quasi_metric", &shift_quasi_metric, py::arg("base"), py::arg("shift"),
          py::arg("carrier"));
    m.def("ball", &ball, py::arg("space"), py::arg("center"), py::arg("radius"));
    m.def("piecewise_ball", &piecewise_ball, py::arg("r"), py::arg("center"), py::arg("radius"));

    py::class_<GenTopology>(m, "GenTopology")
        .def(py::init([](std::vector<Point> ground, const std::vector<std::vector<Point>>& base) {
                 return generate_gt_sets(std::move(ground), base);
             }),
             py::arg("ground"), py::arg("base"))
        .def_property_readonly("ground", &GenTopology::ground)
        .def_property_readonly("opens",
                               [](const GenTopology& gt) {
                                   std::vector<std::vector<Point>> out;
                                   for (auto mask : gt.opens()) out.push_back(gt.members(mask));
                                   return out;
                               })
        .def("strong", &GenTopology::strong)
        .def("has_open",
             [](const GenTopology& gt, const std::vector<Point>& subset) {
                 return gt.has_open(gt.mask_of(subset));
             },
             py::arg("subset"))
        .def(py::self == py::self)
        .def("__str__", &GenTopology::str)
        .def("__repr__", &GenTopology::str);
    m.def("generate_gt", &generate_gt_sets, py::arg("ground"), py::arg("base"),
          "smallest generalized topology containing the base");
    m.def("induced_gt", &induced_gt, py::arg("space"));

    py::class_<TopologyCheck>(m, "TopologyCheck")
        .def_readonly("contains_empty", &TopologyCheck::contains_empty)
        .def_readonly("union_closed", &TopologyCheck::union_closed)
        .def_readonly("intersection_closed", &TopologyCheck::intersection_closed)
        .def_readonly("ground_present", &TopologyCheck::ground_present)
        .def("generalized", &TopologyCheck::generalized)
        .def("topology", &TopologyCheck::topology);
    m.def("is_topology", &is_topology, py::arg("gt"));

    py::class_<SeparationReport>(m, "SeparationReport")
        .def_readonly("t0", &SeparationReport::t0)
        .def_readonly("t1", &SeparationReport::t1)
        .def_readonly("singletons_closed", &SeparationReport::singletons_closed)
        .def_readonly("t0_witness", &SeparationReport::t0_witness)
        .def_readonly("t1_witness", &SeparationReport::t1_witness)
        .def_readonly("closed_witness", &SeparationReport::closed_witness);
    m.def("check_separation", &check_separation, py::arg("gt"));

    py::class_<BallCase>(m, "BallCase")
        .def_readonly("name", &BallCase::name)
        .def_readonly("radius", &BallCase::radius)
        .def_readonly("shape", &BallCase::shape)
        .def_readonly("extent_lower", &BallCase::extent_lower)
        .def_readonly("exceeds_target", &BallCase::exceeds_target);
    py::class_<NotTopologyWitness>(m, "NotTopologyWitness")
        .def_readonly("r", &NotTopologyWitness::r)
        .def_readonly("center1", &NotTopologyWitness::center1)
        .def_readonly("center2", &NotTopologyWitness::center2)
        .def_readonly("radius", &NotTopologyWitness::radius)
        .def_readonly("ball1", &NotTopologyWitness::ball1)
        .def_readonly("ball2", &NotTopologyWitness::ball2)
        .def_readonly("intersection", &NotTopologyWitness::intersection)
        .def_readonly("expected_intersection", &NotTopologyWitness::expected_intersection)
        .def_readonly("intersection_matches", &NotTopologyWitness::intersection_matches)
        .def_readonly("intersection_extent", &NotTopologyWitness::intersection_extent)
        .def_readonly("extent_matches", &NotTopologyWitness::extent_matches)
        .def_readonly("cases", &NotTopologyWitness::cases)
        .def_readonly("certificate_holds", &NotTopologyWitness::certificate_holds)
        .def_readonly("grid_candidates", &NotTopologyWitness::grid_candidates)
        .def_readonly("grid_nonempty", &NotTopologyWitness::grid_nonempty)
        .def_readonly("grid_contained", &NotTopologyWitness::grid_contained)
        .def("holds", &NotTopologyWitness::holds);
    m.def("not_topology_witness_piecewise", &not_topology_witness_piecewise, py::arg("r"));

    py::class_<EntourageCheck>(m, "EntourageCheck")
        .def_readonly("delta", &EntourageCheck::delta)
        .def_readonly("contained", &EntourageCheck::contained)
        .def_readonly("witness", &EntourageCheck::witness)
        .def_readonly("d_xy", &EntourageCheck::d_xy)
        .def_readonly("d_yz", &EntourageCheck::d_yz)
        .def_readonly("d_xz", &EntourageCheck::d_xz);
    py::class_<EntourageReport>(m, "EntourageReport")
        .def_readonly("eps", &EntourageReport::eps)
        .def_readonly("symbolic", &EntourageReport::symbolic)
        .def_readonly("checks", &EntourageReport::checks)
        .def("all_contained", &EntourageReport::all_contained);
    m.def("entourage_base_check", &entourage_base_check, py::arg("space"), py::arg("eps"),
          py::arg("deltas"));

    py::class_<PointMap>(m, "PointMap")
        .def_static("table", &PointMap::table, py::arg("domain"), py::arg("codomain"),
                    py::arg("pairs"))
        .def_static("identity", &PointMap::identity, py::arg("domain"), py::arg("codomain"))
        .def_static("constant", &PointMap::constant, py::arg("domain"), py::arg("codomain"),
                    py::arg("value"))
        .def_static("distance_to", &PointMap::distance_to, py::arg("domain"), py::arg("codomain"),
                    py::arg("origin"))
        .def_property_readonly("domain", [](const PointMap& f) { return f.domain(); })
        .def_property_readonly("codomain", [](const PointMap& f) { return f.codomain(); })
        .def("apply", &PointMap::apply, py::arg("x"))
        .def("__call__", &PointMap::apply, py::arg("x"))
        .def("is_bijection", &PointMap::is_bijection)
        .def("inverse", &PointMap::inverse);

    py::class_<DeltaTrace>(m, "DeltaTrace")
        .def_readonly("delta", &DeltaTrace::delta)
        .def_readonly("violating", &DeltaTrace::violating);
    py::class_<EpsilonCase>(m, "EpsilonCase")
        .def_readonly("eps", &EpsilonCase::eps)
        .def_readonly("ok", &EpsilonCase::ok)
        .def_readonly("good_delta", &EpsilonCase::good_delta)
        .def_readonly("trace", &EpsilonCase::trace);
    py::class_<UniformityVerdict>(m, "UniformityVerdict")
        .def_readonly("uniformly_continuous", &UniformityVerdict::uniformly_continuous)
        .def_readonly("witness_eps", &UniformityVerdict::witness_eps)
        .def_readonly("cases", &UniformityVerdict::cases)
        .def_readonly("eps_candidates", &UniformityVerdict::eps_candidates)
        .def_readonly("delta_candidates", &UniformityVerdict::delta_candidates);
    m.def("check_g_uniform_continuity", &check_g_uniform_continuity, py::arg("f"));

    py::class_<NoncontinuityWitness>(m, "NoncontinuityWitness")
        .def_readonly("r", &NoncontinuityWitness::r)
        .def_readonly("delta", &NoncontinuityWitness::delta)
        .def_readonly("eps", &NoncontinuityWitness::eps)
        .def_readonly("n", &NoncontinuityWitness::n)
        .def_readonly("x", &NoncontinuityWitness::x)
        .def_readonly("y", &NoncontinuityWitness::y)
        .def_readonly("d_x0", &NoncontinuityWitness::d_x0)
        .def_readonly("d_y0", &NoncontinuityWitness::d_y0)
        .def_readonly("pair_distance", &NoncontinuityWitness::pair_distance)
        .def_readonly("d_xy", &NoncontinuityWitness::d_xy)
        .def_readonly("d_00", &NoncontinuityWitness::d_00)
        .def_readonly("image_gap", &NoncontinuityWitness::image_gap)
        .def_readonly("verified", &NoncontinuityWitness::verified);
    m.def("noncontinuity_witness_distance_map", &noncontinuity_witness_distance_map, py::arg("r"),
          py::arg("delta"));

    py::class_<ContinuityCheck>(m, "ContinuityCheck")
        .def_readonly("continuous", &ContinuityCheck::continuous)
        .def_readonly("failing_open", &ContinuityCheck::failing_open)
        .def_readonly("failing_preimage", &ContinuityCheck::failing_preimage);
    m.def("check_generalized_continuity", &check_generalized_continuity, py::arg("f"),
          py::arg("gt_domain"), py::arg("gt_codomain"));

    py::class_<PullbackResult>(m, "PullbackResult")
        .def_property_readonly("pulled", [](const PullbackResult& r) { return r.pulled; })
        .def_readonly("index_preserved", &PullbackResult::index_preserved)
        .def_readonly("gt_image", &PullbackResult::gt_image)
        .def_readonly("gt_pulled", &PullbackResult::gt_pulled)
        .def_readonly("gt_matches", &PullbackResult::gt_matches);
    m.def("pullback_metric", &pullback_metric, py::arg("f"));

    py::class_<SeqSpec>(m, "SeqSpec")
        .def_static("constant", &SeqSpec::constant, py::arg("c"))
        .def_static("affine", &SeqSpec::affine, py::arg("a"), py::arg("b"))
        .def_static("drift_gap", &SeqSpec::drift_gap, py::arg("r"))
        .def_static("alt_pow", &SeqSpec::alt_pow, py::arg("base"), py::arg("odd_value"))
        .def_static("alt_pow_mirror", &SeqSpec::alt_pow_mirror, py::arg("base"),
                    py::arg("odd_value"))
        .def_static("table", &SeqSpec::table, py::arg("terms"))
        .def_static("pair", &SeqSpec::pair, py::arg("first"), py::arg("second"))
        .def("term", &SeqSpec::term, py::arg("n"))
        .def("constant_from", &SeqSpec::constant_from);

    py::enum_<SeqProperty>(m, "SeqProperty")
        .value("cauchy", SeqProperty::cauchy)
        .value("g_cauchy", SeqProperty::g_cauchy)
        .value("pseudo_cauchy", SeqProperty::pseudo_cauchy);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("property", &Certificate::property)
        .def_readonly("epsilon", &Certificate::epsilon)
        .def_readonly("k", &Certificate::k)
        .def_readonly("horizon", &Certificate::horizon)
        .def_readonly("verified", &Certificate::verified)
        .def_readonly("exact", &Certificate::exact)
        .def_readonly("pairs_checked", &Certificate::pairs_checked)
        .def_readonly("pair_witness", &Certificate::pair_witness)
        .def_readonly("witness_distance", &Certificate::witness_distance)
        .def_readonly("extremal_pair", &Certificate::extremal_pair)
        .def_readonly("extremal_distance", &Certificate::extremal_distance);
    m.def("certify", &certify, py::arg("seq"), py::arg("space"), py::arg("property"),
          py::arg("epsilon"), py::arg("k") = 1, py::arg("horizon") = 100);

    py::class_<ClusterScan>(m, "ClusterScan")
        .def_readonly("indices", &ClusterScan::indices)
        .def_readonly("cutoff", &ClusterScan::cutoff)
        .def_readonly("all_beyond", &ClusterScan::all_beyond)
        .def_readonly("exact", &ClusterScan::exact);
    m.def("cluster_scan", &cluster_scan, py::arg("seq"), py::arg("space"), py::arg("center"),
          py::arg("radius"), py::arg("horizon") = 1000);

    py::class_<WeakGDemoCenter>(m, "WeakGDemoCenter")
        .def_readonly("center", &WeakGDemoCenter::center)
        .def_readonly("indices", &WeakGDemoCenter::indices)
        .def_readonly("cutoff", &WeakGDemoCenter::cutoff)
        .def_readonly("bounded", &WeakGDemoCenter::bounded);
    py::class_<WeakGDemo>(m, "WeakGDemo")
        .def_readonly("r", &WeakGDemo::r)
        .def_readonly("radius", &WeakGDemo::radius)
        .def_readonly("g_cauchy_certs", &WeakGDemo::g_cauchy_certs)
        .def_readonly("centers", &WeakGDemo::centers)
        .def("all_verified", &WeakGDemo::all_verified);
    m.def("weak_g_incompleteness_demo", &weak_g_incompleteness_demo, py::arg("r"),
          py::arg("centers"), py::arg("horizon") = 10000);

    py::class_<ProductLemmaResult>(m, "ProductLemmaResult")
        .def_readonly("x", &ProductLemmaResult::x)
        .def_readonly("y", &ProductLemmaResult::y)
        .def_readonly("paired", &ProductLemmaResult::paired)
        .def_readonly("consistent", &ProductLemmaResult::consistent);
    m.def("product_lemma_check", &product_lemma_check, py::arg("seq_x"), py::arg("seq_y"),
          py::arg("space_x"), py::arg("space_y"), py::arg("property"), py::arg("epsilon"),
          py::arg("k") = 1, py::arg("horizon") = 100);

    py::class_<CompletenessSeqCheck>(m, "CompletenessSeqCheck")
        .def_readonly("cauchy", &CompletenessSeqCheck::cauchy)
        .def_readonly("g_cauchy", &CompletenessSeqCheck::g_cauchy)
        .def_readonly("pseudo", &CompletenessSeqCheck::pseudo)
        .def_readonly("implications_ok", &CompletenessSeqCheck::implications_ok)
        .def_readonly("constant_from", &CompletenessSeqCheck::constant_from);
    py::class_<CompletenessReport>(m, "CompletenessReport")
        .def_readonly("points", &CompletenessReport::points)
        .def_readonly("index", &CompletenessReport::index)
        .def_readonly("min_offdiagonal", &CompletenessReport::min_offdiagonal)
        .def_readonly("threshold_eps", &CompletenessReport::threshold_eps)
        .def_readonly("threshold_separates", &CompletenessReport::threshold_separates)
        .def_readonly("complete", &CompletenessReport::complete)
        .def_readonly("g_complete", &CompletenessReport::g_complete)
        .def_readonly("weak_g_complete", &CompletenessReport::weak_g_complete)
        .def_readonly("lebesgue", &CompletenessReport::lebesgue)
        .def_readonly("strongly_lebesgue", &CompletenessReport::strongly_lebesgue)
        .def_readonly("reasoning", &CompletenessReport::reasoning)
        .def_readonly("sequence_checks", &CompletenessReport::sequence_checks);
    m.def("finite_space_completeness", &finite_space_completeness, py::arg("space"),
          py::arg("sample_seqs") = std::vector<SeqSpec>{});

    m.def("random_table_space",
          [](std::uint64_t seed, std::size_t min_points, std::size_t max_points,
             std::optional<Rational> index, const std::string& label_prefix) {
              RandomSpaceOptions o{min_points, max_points, std::move(index), label_prefix};
              return random_table_space(seed, o);
          },
          py::arg("seed"), py::arg("min_points") = 2, py::arg("max_points") = 6,
          py::arg("index") = std::nullopt, py::arg("label_prefix") = "p");
    m.def("random_table_sequence", &random_table_sequence, py::arg("space"), py::arg("seed"),
          py::arg("min_len") = 3, py::arg("max_len") = 10);

    py::class_<RandomBijection>(m, "RandomBijection")
        .def_property_readonly("domain", [](const RandomBijection& b) { return *b.domain; })
        .def_property_readonly("codomain", [](const RandomBijection& b) { return *b.codomain; })
        .def_readonly("map", &RandomBijection::map);
    m.def("random_bijection",
          [](std::uint64_t seed, std::size_t min_points, std::size_t max_points) {
              RandomSpaceOptions o;
              o.min_points = min_points;
              o.max_points = max_points;
              return random_bijection(seed, o);
          },
          py::arg("seed"), py::arg("min_points") = 2, py::arg("max_points") = 6);

    m.def("load_space", &io::load_space, py::arg("path"));
    m.def("load_seq", &io::load_seq, py::arg("path"));
    m.def("space_from_json",
          [](const std::string& text) { return io::space_from_json(nlohmann::json::parse(text)); },
          py::arg("text"));
    m.def("space_to_json",
          [](const GqmSpace& s) { return io::space_to_json(s).dump(); }, py::arg("space"));
    m.def("seq_from_json",
          [](const std::string& text) { return io::seq_from_json(nlohmann::json::parse(text)); },
          py::arg("text"));
    m.def("seq_to_json", [](const SeqSpec& q) { return io::seq_to_json(q).dump(); },
          py::arg("seq"));
}
