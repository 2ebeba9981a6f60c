#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsallisq/axioms.hpp"
#include "tsallisq/quantum.hpp"
#include "tsallisq/sampling.hpp"
#include "tsallisq/serialization.hpp"
#include "tsallisq/werner.hpp"

namespace py = pybind11;
using namespace tsq;

namespace {

Subsystem parse_subsystem(const std::string& s) {
    if (s == "A" || s == "a") return Subsystem::A;
    if (s == "B" || s == "b") return Subsystem::B;
    throw std::domain_error("subsystem must be \"A\" or \"B\", got \"" + s + "\"");
}

JointDist make_joint(const std::vector<std::vector<double>>& table) { return JointDist(table); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tsallis entropies, q-conditional entropy, and entanglement tests";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);

    // -- classical ---------------------------------------------------------
    m.def("shannon_entropy",
          [](const std::vector<double>& p) { return shannon_entropy(ProbDist(p)); },
          py::arg("p"), "S_1[p] = -sum p ln p (natural log).");
    m.def("tsallis_entropy",
          [](const std::vector<double>& p, double q) {
              return tsallis_entropy(ProbDist(p), q);
          },
          py::arg("p"), py::arg("q"), "S_q[p] = (sum p^q - 1) / (1 - q).");
    m.def("marginal_a",
          [](const std::vector<std::vector<double>>& j) {
              return marginal_a(make_joint(j)).probs();
          },
          py::arg("joint"));
    m.def("marginal_b",
          [](const std::vector<std::vector<double>>& j) {
              return marginal_b(make_joint(j)).probs();
          },
          py::arg("joint"));
    m.def("conditional_dist",
          [](const std::vector<std::vector<double>>& j, std::size_t a) {
              return conditional_dist(make_joint(j), a).probs();
          },
          py::arg("joint"), py::arg("a"));
    m.def("conditional_tsallis",
          [](const std::vector<std::vector<double>>& j, double q) {
              return conditional_tsallis(make_joint(j), q);
          },
          py::arg("joint"), py::arg("q"),
          "q-expectation form of S_q[B|A]; rows of `joint` index A.");
    m.def("conditional_via_ratio",
          [](const std::vector<std::vector<double>>& j, double q) {
              return conditional_via_ratio(make_joint(j), q);
          },
          py::arg("joint"), py::arg("q"),
          "Ratio form (S_q[A,B] - S_q[A]) / (1 + (1-q) S_q[A]).");
    m.def("compose_pseudoadditive",
          [](double s_a, double s_b_given_a, double q) {
              return compose_pseudoadditive(s_a, s_b_given_a, q);
          },
          py::arg("s_a"), py::arg("s_b_given_a"), py::arg("q"));

    // -- quantum states ----------------------------------------------------
    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_static("validate", &DensityMatrix::validate, py::arg("matrix"))
        .def_static("maximally_mixed", &DensityMatrix::maximally_mixed, py::arg("dim"))
        .def_static("pure", &DensityMatrix::pure, py::arg("psi"))
        .def_static("diagonal",
                    [](const std::vector<double>& p) {
                        return DensityMatrix::diagonal(ProbDist(p));
                    },
                    py::arg("p"))
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def_property_readonly("matrix", &DensityMatrix::matrix)
        .def("spectrum", &DensityMatrix::spectrum)
        .def("__repr__", [](const DensityMatrix& d) {
            return "<DensityMatrix dim=" + std::to_string(d.dim()) + ">";
        });

    py::class_<BipartiteState>(m, "BipartiteState")
        .def(py::init<Eigen::Index, Eigen::Index, DensityMatrix>(), py::arg("d_a"),
             py::arg("d_b"), py::arg("rho"))
        .def(py::init([](Eigen::Index da, Eigen::Index db, const Matrix& m) {
                 return BipartiteState(da, db, DensityMatrix::validate(m));
             }),
             py::arg("d_a"), py::arg("d_b"), py::arg("matrix"))
        .def_property_readonly("dim_a", &BipartiteState::dim_a)
        .def_property_readonly("dim_b", &BipartiteState::dim_b)
        .def_property_readonly("matrix", &BipartiteState::matrix)
        .def_property_readonly("rho", &BipartiteState::rho)
        .def("__repr__", [](const BipartiteState& s) {
            return "<BipartiteState " + std::to_string(s.dim_a()) + "x" +
                   std::to_string(s.dim_b()) + ">";
        });

    py::class_<SeparableEnsemble>(m, "SeparableEnsemble")
        .def(py::init([](const std::vector<double>& w,
                         const std::vector<std::vector<double>>& pa,
                         const std::vector<std::vector<double>>& pb) {
                 std::vector<ProbDist> da, db;
                 for (const auto& p : pa) da.emplace_back(p);
                 for (const auto& p : pb) db.emplace_back(p);
                 return SeparableEnsemble(w, std::move(da), std::move(db));
             }),
             py::arg("weights"), py::arg("p_a"), py::arg("p_b"))
        .def(py::init([](const std::vector<double>& w,
                         const std::vector<std::vector<double>>& pa,
                         const std::vector<std::vector<double>>& pb, const Matrix& ua,
                         const Matrix& ub) {
                 std::vector<ProbDist> da, db;
                 for (const auto& p : pa) da.emplace_back(p);
                 for (const auto& p : pb) db.emplace_back(p);
                 return SeparableEnsemble(w, std::move(da), std::move(db), ua, ub);
             }),
             py::arg("weights"), py::arg("p_a"), py::arg("p_b"), py::arg("basis_a"),
             py::arg("basis_b"))
        .def_property_readonly("terms", &SeparableEnsemble::terms)
        .def_property_readonly("weights", &SeparableEnsemble::weights);

    m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
    m.def("partial_trace",
          [](const BipartiteState& s, const std::string& over) {
              return partial_trace(s, parse_subsystem(over));
          },
          py::arg("state"), py::arg("over"));
    m.def("partial_transpose",
          [](const BipartiteState& s, const std::string& on) {
              return partial_transpose(s, parse_subsystem(on));
          },
          py::arg("state"), py::arg("on"));
    m.def("eigenvalues_descending", &eigenvalues_descending, py::arg("matrix"));
    m.def("werner_popescu", &werner_popescu, py::arg("x"));
    m.def("singlet_projector", &singlet_projector);
    m.def("assemble_separable", &assemble_separable, py::arg("ensemble"));

    // -- quantum entropies -------------------------------------------------
    py::class_<ConditionalEntropyReport>(m, "ConditionalEntropyReport")
        .def_readonly("q", &ConditionalEntropyReport::q)
        .def_readonly("value", &ConditionalEntropyReport::value)
        .def_property_readonly("conditioned_on",
                               [](const ConditionalEntropyReport& r) {
                                   return std::string(to_string(r.conditioned_on));
                               })
        .def_readonly("s_joint", &ConditionalEntropyReport::s_joint)
        .def_readonly("s_marginal", &ConditionalEntropyReport::s_marginal)
        .def("__repr__", [](const ConditionalEntropyReport& r) {
            return "<ConditionalEntropyReport q=" + format_sig(r.q, 6) +
                   " value=" + format_sig(r.value, 6) + ">";
        });

    py::class_<PptVerdict>(m, "PptVerdict")
        .def_readonly("min_eigenvalue", &PptVerdict::min_eigenvalue)
        .def_readonly("positive", &PptVerdict::positive)
        .def("__repr__", [](const PptVerdict& v) {
            return std::string("<PptVerdict ") + (v.positive ? "positive" : "negative") +
                   " min_eigenvalue=" + format_sig(v.min_eigenvalue, 6) + ">";
        });

    py::class_<PositivitySummary>(m, "PositivitySummary")
        .def_readonly("n_samples", &PositivitySummary::n_samples)
        .def_readonly("seed", &PositivitySummary::seed)
        .def_readonly("q_grid", &PositivitySummary::q_grid)
        .def_readonly("min_value", &PositivitySummary::min_value)
        .def_readonly("violations", &PositivitySummary::violations)
        .def_property_readonly("control_value", [](const PositivitySummary& s) {
            return s.control_value ? py::cast(*s.control_value) : py::none().cast<py::object>();
        });

    m.def("quantum_tsallis",
          [](const DensityMatrix& rho, double q) { return quantum_tsallis(rho, q); },
          py::arg("rho"), py::arg("q"));
    m.def("von_neumann", &von_neumann, py::arg("rho"));
    m.def("conditional_quantum",
          [](const BipartiteState& s, double q, const std::string& given) {
              return conditional_quantum(s, q, parse_subsystem(given));
          },
          py::arg("state"), py::arg("q"), py::arg("given") = "A",
          "S_q[B|A] (negative => entangled).");
    m.def("ensemble_conditional",
          [](const SeparableEnsemble& e, double q) { return ensemble_conditional(e, q); },
          py::arg("ensemble"), py::arg("q"));
    m.def("ppt_test", &ppt_test, py::arg("state"));
    m.def("separable_positivity_experiment",
          [](long long n, const std::vector<double>& grid, std::uint64_t seed, bool inject) {
              return separable_positivity_experiment(n, grid, seed, inject);
          },
          py::arg("n_samples"), py::arg("q_grid"), py::arg("seed"),
          py::arg("inject_singlet_control") = false);

    // -- Werner analysis ----------------------------------------------------
    py::class_<ThresholdPoint>(m, "ThresholdPoint")
        .def_readonly("q", &ThresholdPoint::q)
        .def_readonly("x_star", &ThresholdPoint::x_star)
        .def_readonly("solver_residual", &ThresholdPoint::solver_residual)
        .def("__repr__", [](const ThresholdPoint& p) {
            return "<ThresholdPoint q=" + format_sig(p.q, 6) +
                   " x_star=" + format_sig(p.x_star, 12) + ">";
        });

    py::class_<CriterionTable>(m, "CriterionTable")
        .def_readonly("bell_bound", &CriterionTable::bell_bound)
        .def_readonly("von_neumann_zero", &CriterionTable::von_neumann_zero)
        .def_readonly("q_infinity_limit", &CriterionTable::q_infinity_limit)
        .def_readonly("ppt_threshold", &CriterionTable::ppt_threshold);

    m.def("werner_cond_entropy",
          [](double x, double q) { return werner_cond_entropy(x, q); }, py::arg("x"),
          py::arg("q"));
    m.def("threshold", [](double q) { return threshold(q); }, py::arg("q"));
    m.def("threshold_scan",
          [](const std::vector<double>& grid) { return threshold_scan(grid); },
          py::arg("q_grid"));
    m.def("log_spaced_q_grid", &log_spaced_q_grid, py::arg("lo") = 0.2, py::arg("hi") = 1e6,
          py::arg("points") = 40);
    m.def("criterion_table", &criterion_table);
    m.def("default_q_grid", [] { return default_q_grid(); });

    // -- axioms --------------------------------------------------------------
    py::class_<AxiomReport>(m, "AxiomReport")
        .def_property_readonly("axiom_id",
                               [](const AxiomReport& r) { return std::string(to_string(r.id)); })
        .def_readonly("label", &AxiomReport::label)
        .def_readonly("q", &AxiomReport::q)
        .def_readonly("trials", &AxiomReport::trials)
        .def_readonly("max_violation", &AxiomReport::max_violation)
        .def_readonly("tolerance", &AxiomReport::tolerance)
        .def_readonly("passed", &AxiomReport::passed)
        .def("__repr__", [](const AxiomReport& r) {
            return std::string("<AxiomReport ") + to_string(r.id) + " q=" + format_sig(r.q, 6) +
                   (r.passed ? " passed" : " FAILED") + ">";
        });

    m.def("run_axiom_suite",
          [](long long trials, std::uint64_t seed, const std::vector<double>& grid) {
              return run_axiom_suite(trials, seed, grid);
          },
          py::arg("trials") = 200, py::arg("seed") = 20240917,
          py::arg("q_grid") = default_q_grid());
}
