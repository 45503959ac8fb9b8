#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momentkit/certify.hpp"
#include "momentkit/cli.hpp"
#include "momentkit/fixtures.hpp"
#include "momentkit/hausdorff1d.hpp"
#include "momentkit/json_io.hpp"
#include "momentkit/moments.hpp"
#include "momentkit/vnorm.hpp"

namespace py = pybind11;
using namespace momentkit;

namespace {

py::dict terms_dict(const Polynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated moment problems: moment matrices and PSD checks, growth "
            "seminorm estimates, 1D atomic recovery, and cone positivity "
            "certificates.";

  py::register_exception<Error>(m, "MomentkitError");

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init(&Polynomial::parse), py::arg("text"), py::arg("num_vars") = 0)
      .def_static("constant", &Polynomial::constant, py::arg("num_vars"), py::arg("value"))
      .def_static("variable", &Polynomial::variable, py::arg("num_vars"), py::arg("index"))
      .def_property_readonly("num_vars", &Polynomial::num_vars)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("coefficient", &Polynomial::coefficient, py::arg("exponent"))
      .def("terms", &terms_dict)
      .def("pow", &Polynomial::pow, py::arg("k"))
      .def("evaluate",
           [](const Polynomial& p, const std::vector<double>& point) {
             return p.evaluate(point);
           },
           py::arg("point"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(\"" + p.str() + "\")"; });

  m.def("binomial_product", &binomial_product, py::arg("bound"), py::arg("a"), py::arg("p"),
        py::arg("q"), "Expanded (bound - a)^p (bound + a)^q");

  py::class_<Atom>(m, "Atom")
      .def(py::init([](std::vector<double> point, double weight) {
             return Atom{std::move(point), weight};
           }),
           py::arg("point"), py::arg("weight"))
      .def_readwrite("point", &Atom::point)
      .def_readwrite("weight", &Atom::weight);

  py::class_<AtomicMeasure>(m, "AtomicMeasure")
      .def(py::init<int, std::vector<Atom>>(), py::arg("num_vars"), py::arg("atoms"))
      .def_property_readonly("num_vars", &AtomicMeasure::num_vars)
      .def_property_readonly("atoms", &AtomicMeasure::atoms)
      .def("total_mass", &AtomicMeasure::total_mass)
      .def("is_normalized", &AtomicMeasure::is_normalized, py::arg("tol") = 1e-12)
      .def("normalized", &AtomicMeasure::normalized);

  py::class_<MomentSequence>(m, "MomentSequence")
      .def_property_readonly("num_vars", &MomentSequence::num_vars)
      .def_property_readonly("max_degree", &MomentSequence::max_degree)
      .def("value", &MomentSequence::value, py::arg("exponent"))
      .def("to_json", [](const MomentSequence& L) { return dump_json(moments_to_json(L)); })
      .def_static("from_json",
                  [](const std::string& text) { return moments_from_json(parse_json(text)); });

  m.def("moments_from_measure", &moments_from_measure, py::arg("measure"),
        py::arg("max_degree"), py::arg("normalize") = false);
  m.def("eval_functional", &eval_functional, py::arg("moments"), py::arg("p"));
  m.def("monomial_basis", &monomial_basis, py::arg("num_vars"), py::arg("max_degree"));

  py::class_<MomentMatrix>(m, "MomentMatrix")
      .def_readonly("basis", &MomentMatrix::basis)
      .def_readonly("entries", &MomentMatrix::entries)
      .def_readonly("shift", &MomentMatrix::shift);

  m.def("moment_matrix",
        py::overload_cast<const MomentSequence&, int, const Polynomial&>(&moment_matrix),
        py::arg("moments"), py::arg("level"), py::arg("shift"));
  m.def("moment_matrix", py::overload_cast<const MomentSequence&, int>(&moment_matrix),
        py::arg("moments"), py::arg("level"));

  py::class_<PsdReport>(m, "PsdReport")
      .def_readonly("psd", &PsdReport::psd)
      .def_readonly("min_eigenvalue", &PsdReport::min_eigenvalue)
      .def_readonly("max_abs_eigenvalue", &PsdReport::max_abs_eigenvalue)
      .def_readonly("witness", &PsdReport::witness)
      .def_readonly("witness_value", &PsdReport::witness_value);
  m.def("is_psd", &is_psd, py::arg("matrix"), py::arg("tol") = 1e-9);

  py::class_<ConeViolation>(m, "ConeViolation")
      .def_readonly("p", &ConeViolation::p)
      .def_readonly("q", &ConeViolation::q)
      .def_readonly("value", &ConeViolation::value);
  py::class_<ConeCheckReport>(m, "ConeCheckReport")
      .def_readonly("ok", &ConeCheckReport::ok)
      .def_readonly("bound", &ConeCheckReport::bound)
      .def_readonly("budget", &ConeCheckReport::budget)
      .def_readonly("terms_checked", &ConeCheckReport::terms_checked)
      .def_readonly("violations", &ConeCheckReport::violations);
  m.def("check_binomial_cone", &check_binomial_cone, py::arg("moments"), py::arg("a"),
        py::arg("bound"), py::arg("budget"), py::arg("tol") = 1e-9);

  py::class_<BallViolation>(m, "BallViolation")
      .def_readonly("label", &BallViolation::label)
      .def_readonly("value", &BallViolation::value);
  py::class_<BallCheckReport>(m, "BallCheckReport")
      .def_readonly("ok", &BallCheckReport::ok)
      .def_readonly("budget", &BallCheckReport::budget)
      .def_readonly("terms_checked", &BallCheckReport::terms_checked)
      .def_readonly("violations", &BallCheckReport::violations);
  m.def("check_ball_criterion", &check_ball_criterion, py::arg("moments"), py::arg("budget"),
        py::arg("tol") = 1e-9);

  py::enum_<VnormKind>(m, "VnormKind")
      .value("ratio", VnormKind::ratio)
      .value("root", VnormKind::root);
  py::class_<VnormEstimate>(m, "VnormEstimate")
      .def_readonly("value", &VnormEstimate::value)
      .def_readonly("kind", &VnormEstimate::kind)
      .def_readonly("level", &VnormEstimate::level)
      .def_readonly("budget", &VnormEstimate::budget)
      .def_readonly("denominator_floor", &VnormEstimate::denominator_floor)
      .def_readonly("unbounded_suspect", &VnormEstimate::unbounded_suspect)
      .def_readonly("sequence", &VnormEstimate::sequence)
      .def("to_json", [](const VnormEstimate& e) { return dump_json(vnorm_to_json(e)); });
  m.def("vnorm_ratio", &vnorm_ratio, py::arg("moments"), py::arg("a"), py::arg("budget"));
  m.def("vnorm_root", &vnorm_root, py::arg("moments"), py::arg("a"), py::arg("budget"));
  m.def("atom_max", &atom_max, py::arg("measure"), py::arg("a"),
        "Ground-truth oracle max |a(point)| over the atoms");

  py::class_<SeminormLawEntry>(m, "SeminormLawEntry")
      .def_readonly("a", &SeminormLawEntry::a)
      .def_readonly("b", &SeminormLawEntry::b)
      .def_readonly("v_a", &SeminormLawEntry::v_a)
      .def_readonly("v_b", &SeminormLawEntry::v_b)
      .def_readonly("v_sum", &SeminormLawEntry::v_sum)
      .def_readonly("v_product", &SeminormLawEntry::v_product)
      .def_readonly("additive_slack", &SeminormLawEntry::additive_slack)
      .def_readonly("multiplicative_slack", &SeminormLawEntry::multiplicative_slack)
      .def_readonly("additive_ok", &SeminormLawEntry::additive_ok)
      .def_readonly("multiplicative_ok", &SeminormLawEntry::multiplicative_ok);
  py::class_<SeminormLawReport>(m, "SeminormLawReport")
      .def_readonly("entries", &SeminormLawReport::entries)
      .def_readonly("all_ok", &SeminormLawReport::all_ok)
      .def_readonly("oracle_used", &SeminormLawReport::oracle_used)
      .def_readonly("caveat", &SeminormLawReport::caveat);
  m.def("check_seminorm_laws",
        [](const MomentSequence& L, const std::vector<std::pair<Polynomial, Polynomial>>& pairs,
           int budget, double tol, const AtomicMeasure* ground_truth) {
          return check_seminorm_laws(L, pairs, budget, tol, ground_truth);
        },
        py::arg("moments"), py::arg("pairs"), py::arg("budget"), py::arg("tol") = 1e-9,
        py::arg("ground_truth") = nullptr);

  m.def("support_radius", &support_radius, py::arg("moments"), py::arg("generators"),
        py::arg("budget"),
        "Largest consecutive power ratio of the generator square sum: a lower "
        "estimate of the squared support radius");

  py::class_<RatioRootAgreement>(m, "RatioRootAgreement")
      .def_readonly("root_by_level", &RatioRootAgreement::root_by_level)
      .def_readonly("ratio_sup_by_level", &RatioRootAgreement::ratio_sup_by_level)
      .def_readonly("max_gap", &RatioRootAgreement::max_gap)
      .def_readonly("ok", &RatioRootAgreement::ok);
  m.def("check_ratio_root_agreement", &check_ratio_root_agreement, py::arg("moments"),
        py::arg("a"), py::arg("budget"), py::arg("tol") = 1e-9);

  py::class_<Sequence1D>(m, "Sequence1D")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def_property_readonly("values", &Sequence1D::values)
      .def_property_readonly("max_index", &Sequence1D::max_index);
  m.def("marginal", &marginal, py::arg("moments"), py::arg("a"), py::arg("count"));

  py::class_<HankelPsdReport>(m, "HankelPsdReport")
      .def_readonly("psd", &HankelPsdReport::psd)
      .def_readonly("failing_order", &HankelPsdReport::failing_order)
      .def_readonly("min_eigenvalue", &HankelPsdReport::min_eigenvalue)
      .def_readonly("witness", &HankelPsdReport::witness);
  m.def("is_psd_on_n0", &is_psd_on_n0, py::arg("sequence"), py::arg("tol") = 1e-9);
  m.def("interval_bound", &interval_bound, py::arg("sequence"));

  py::class_<RecoveredAtom>(m, "RecoveredAtom")
      .def_readonly("location", &RecoveredAtom::location)
      .def_readonly("weight", &RecoveredAtom::weight);
  py::class_<Recovered1D>(m, "Recovered1D")
      .def_readonly("atoms", &Recovered1D::atoms)
      .def_readonly("residual", &Recovered1D::residual)
      .def_readonly("rank", &Recovered1D::rank)
      .def_readonly("vandermonde_condition", &Recovered1D::vandermonde_condition)
      .def_readonly("ill_conditioned", &Recovered1D::ill_conditioned);
  m.def("recover_atoms", &recover_atoms, py::arg("sequence"), py::arg("rank_tol") = 1e-8,
        py::arg("refine") = true);

  py::class_<RecoveryReport>(m, "RecoveryReport")
      .def_readonly("max_error", &RecoveryReport::max_error)
      .def_readonly("per_index_error", &RecoveryReport::per_index_error);
  m.def("verify_recovery", &verify_recovery, py::arg("sequence"), py::arg("recovered"));

  py::enum_<BasisKind>(m, "BasisKind")
      .value("ball", BasisKind::ball)
      .value("box", BasisKind::box)
      .value("binomial", BasisKind::binomial);
  py::class_<GeneratorTerm>(m, "GeneratorTerm")
      .def_readonly("label", &GeneratorTerm::label)
      .def_readonly("poly", &GeneratorTerm::poly);
  py::class_<BinomialGenerator>(m, "BinomialGenerator")
      .def(py::init([](Polynomial poly, double bound) {
             return BinomialGenerator{std::move(poly), bound};
           }),
           py::arg("poly"), py::arg("bound"))
      .def_readonly("poly", &BinomialGenerator::poly)
      .def_readonly("bound", &BinomialGenerator::bound);
  py::class_<GeneratorBasis>(m, "GeneratorBasis")
      .def_readonly("kind", &GeneratorBasis::kind)
      .def_readonly("num_vars", &GeneratorBasis::num_vars)
      .def_readonly("max_degree", &GeneratorBasis::max_degree)
      .def_readonly("terms", &GeneratorBasis::terms);
  m.def("enumerate_basis", &enumerate_basis, py::arg("kind"), py::arg("num_vars"),
        py::arg("max_degree"));
  m.def("enumerate_binomial_basis", &enumerate_binomial_basis, py::arg("generators"),
        py::arg("num_vars"), py::arg("max_degree"));

  py::class_<CertificateEntry>(m, "CertificateEntry")
      .def_readonly("label", &CertificateEntry::label)
      .def_readonly("value", &CertificateEntry::value)
      .def_readonly("term", &CertificateEntry::term);
  py::class_<Certificate>(m, "Certificate")
      .def_readonly("kind", &Certificate::kind)
      .def_readonly("num_vars", &Certificate::num_vars)
      .def_readonly("degree", &Certificate::degree)
      .def_readonly("entries", &Certificate::entries)
      .def_readonly("target", &Certificate::target)
      .def_readonly("residual", &Certificate::residual)
      .def_readonly("verified", &Certificate::verified)
      .def("to_json", [](const Certificate& c) { return dump_json(certificate_to_json(c)); });
  py::class_<CertificateSearch>(m, "CertificateSearch")
      .def_readonly("certificate", &CertificateSearch::certificate)
      .def_readonly("degree", &CertificateSearch::degree)
      .def_readonly("message", &CertificateSearch::message)
      .def_readonly("iterations", &CertificateSearch::iterations);
  m.def("find_certificate", &find_certificate, py::arg("target"), py::arg("basis"),
        py::arg("tol") = 1e-9);
  py::class_<VerifyResult>(m, "VerifyResult")
      .def_readonly("residual", &VerifyResult::residual)
      .def_readonly("verified", &VerifyResult::verified);
  m.def("verify_certificate", &verify_certificate, py::arg("certificate"),
        py::arg("tol") = 1e-9);

  py::enum_<Region>(m, "Region").value("ball", Region::ball).value("box", Region::box);
  py::class_<CounterexampleResult>(m, "CounterexampleResult")
      .def_readonly("found", &CounterexampleResult::found)
      .def_readonly("point", &CounterexampleResult::point)
      .def_readonly("value", &CounterexampleResult::value)
      .def_readonly("samples_used", &CounterexampleResult::samples_used);
  m.def("counterexample_search", &counterexample_search, py::arg("p"), py::arg("region"),
        py::arg("samples"), py::arg("seed") = 0);

  m.def("generate_fixture_json",
        [](const std::string& kind, std::uint64_t seed, int num_vars, int max_degree) {
          return dump_json(fixture_bundle_to_json(
              generate_fixture(fixture_kind_from_string(kind), seed, num_vars, max_degree)));
        },
        py::arg("kind"), py::arg("seed"), py::arg("num_vars") = 2, py::arg("max_degree") = 10);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          const RunResult result = run_cli(args);
          return py::make_tuple(result.exit_code, result.output);
        },
        py::arg("args"), "Run one CLI invocation; returns (exit_code, output)");
}
