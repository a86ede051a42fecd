#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evobound/bounds.hpp"
#include "evobound/dynamics.hpp"
#include "evobound/fuzz.hpp"
#include "evobound/grover.hpp"
#include "evobound/linalg.hpp"
#include "evobound/random.hpp"

namespace py = pybind11;
using namespace evobound;

namespace {

EnvelopeKind parse_envelope_kind(const std::string& kind) {
    if (kind == "constant") return EnvelopeKind::Constant;
    if (kind == "sinusoidal") return EnvelopeKind::Sinusoidal;
    throw std::invalid_argument("envelope kind must be 'constant' or 'sinusoidal'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Certified deviation bounds for coherently perturbed quantum evolutions";

    py::class_<HermitianOperator>(m, "HermitianOperator")
        .def(py::init<ComplexMatrix>(), py::arg("entries"))
        .def_static("zero", &HermitianOperator::Zero, py::arg("dim"))
        .def_property_readonly("dim", &HermitianOperator::dim)
        .def_property_readonly("entries",
                               [](const HermitianOperator& a) { return a.entries(); })
        .def("__matmul__", [](const HermitianOperator& a, const ComplexVector& v) {
            return ComplexVector(a.entries() * v);
        });

    m.def("operator_norm",
          [](const ComplexMatrix& a) { return operator_norm(HermitianOperator(a)); },
          py::arg("entries"), "Spectral norm of a Hermitian matrix.");
    m.def("pauli_y", [] { return pauli_y().entries(); });
    m.def("embed_pauli_y",
          [](int n_qubits, int target) { return embed_pauli_y(n_qubits, target).entries(); },
          py::arg("n_qubits"), py::arg("target"),
          "Pauli-y on `target` (1-based) of an n-qubit register.");
    m.def("unitary_step",
          [](const ComplexMatrix& a, double dt, const ComplexVector& state) {
              return unitary_step(HermitianOperator(a), dt, state);
          },
          py::arg("hamiltonian"), py::arg("dt"), py::arg("state"),
          "exp(-i A dt) |state>.");

    py::class_<PerturbationSpec>(m, "PerturbationSpec")
        .def_static("constant",
                    [](const ComplexMatrix& g) {
                        return PerturbationSpec::constant(HermitianOperator(g));
                    },
                    py::arg("generator"))
        .def_static("sinusoidal",
                    [](const ComplexMatrix& g, double omega) {
                        return PerturbationSpec::sinusoidal(HermitianOperator(g), omega);
                    },
                    py::arg("generator"), py::arg("omega"))
        .def_static("custom",
                    [](const ComplexMatrix& g, std::function<double(double)> envelope) {
                        return PerturbationSpec::custom(HermitianOperator(g), std::move(envelope));
                    },
                    py::arg("generator"), py::arg("envelope"))
        .def_property_readonly("generator_norm", &PerturbationSpec::generator_norm)
        .def("envelope", &PerturbationSpec::envelope, py::arg("t"))
        .def("norm_at", &PerturbationSpec::norm_at, py::arg("t"));

    py::class_<EvolutionTrace>(m, "EvolutionTrace")
        .def_readonly("times", &EvolutionTrace::times)
        .def_readonly("psi", &EvolutionTrace::psi)
        .def_readonly("phi", &EvolutionTrace::phi)
        .def_readonly("deviation", &EvolutionTrace::deviation)
        .def_readonly("dt", &EvolutionTrace::dt)
        .def_readonly("h_norm", &EvolutionTrace::h_norm)
        .def_readonly("max_kappa", &EvolutionTrace::max_kappa);

    m.def("default_steps", &default_steps, py::arg("h_norm"), py::arg("max_kappa"),
          py::arg("T"));
    m.def("evolve_pair",
          [](const ComplexMatrix& h, const PerturbationSpec& k, const ComplexVector& psi0,
             double T, int steps) {
              return evolve_pair(HermitianOperator(h), k, psi0, T, steps);
          },
          py::arg("hamiltonian"), py::arg("perturbation"), py::arg("psi0"), py::arg("T"),
          py::arg("steps"),
          "Integrate the ideal/perturbed pair on a shared grid (exponential midpoint).");
    m.def("pointwise_inequality_residual", &pointwise_inequality_residual, py::arg("trace"),
          py::arg("perturbation"));
    m.def("discretization_tolerance", &discretization_tolerance, py::arg("trace"));

    py::class_<EnvelopeNorm>(m, "EnvelopeNorm")
        .def_static("constant", &EnvelopeNorm::constant, py::arg("gamma"))
        .def_static("sinusoidal", &EnvelopeNorm::sinusoidal, py::arg("gamma"), py::arg("omega"))
        .def_static("tabulated", &EnvelopeNorm::tabulated, py::arg("samples"))
        .def("kappa", &EnvelopeNorm::kappa, py::arg("t"))
        .def("integral", &EnvelopeNorm::integral, py::arg("t"));

    m.def("bound_general", &bound_general, py::arg("env"), py::arg("T"),
          py::arg("quad_points") = 4096);
    m.def("bound_general_closed", &bound_general_closed, py::arg("env"), py::arg("T"));
    m.def("bound_linear", &bound_linear, py::arg("env"), py::arg("T"));
    m.def("bound_constant", &bound_constant, py::arg("gamma"), py::arg("T"));
    m.def("c_factor", &c_factor, py::arg("gamma"), py::arg("omega"));
    m.def("bound_sinusoidal", &bound_sinusoidal, py::arg("gamma"), py::arg("omega"),
          py::arg("T"));
    m.def("bound_sinusoidal_period_sum", &bound_sinusoidal_period_sum, py::arg("gamma"),
          py::arg("omega"), py::arg("T"));

    py::enum_<GroverKind>(m, "GroverKind")
        .value("EFFECTIVE", GroverKind::Effective)
        .value("FULL", GroverKind::Full);

    py::class_<GroverModel>(m, "GroverModel")
        .def_readonly("kind", &GroverModel::kind)
        .def_readonly("n_items", &GroverModel::n_items)
        .def_readonly("target", &GroverModel::target)
        .def_readonly("theta", &GroverModel::theta)
        .def_readonly("rabi_frequency", &GroverModel::rabi_frequency)
        .def_readonly("t_paper", &GroverModel::t_paper)
        .def_readonly("t_exact", &GroverModel::t_exact)
        .def_property_readonly("hamiltonian",
                               [](const GroverModel& g) { return g.hamiltonian.entries(); })
        .def_readonly("initial", &GroverModel::initial);

    m.def("build_grover",
          [](const std::string& kind, std::int64_t n_items, std::int64_t target) {
              if (kind == "effective") return build_grover(GroverKind::Effective, n_items, target);
              if (kind == "full") return build_grover(GroverKind::Full, n_items, target);
              throw std::invalid_argument("kind must be 'effective' or 'full'");
          },
          py::arg("kind"), py::arg("n_items"), py::arg("target") = 0);
    m.def("success_probability", &success_probability, py::arg("model"), py::arg("perturbation"),
          py::arg("T"), py::arg("steps") = 0);
    m.def("success_lower_bound", &success_lower_bound, py::arg("deviation_bound"));
    m.def("success_lower_bound_constant", &success_lower_bound_constant, py::arg("gamma"),
          py::arg("T"));
    m.def("success_lower_bound_linearized", &success_lower_bound_linearized, py::arg("gamma"),
          py::arg("T"));
    m.def("gamma_tolerance", &gamma_tolerance, py::arg("n_items"), py::arg("epsilon"));

    py::class_<RobustnessRow>(m, "RobustnessRow")
        .def_readonly("gamma", &RobustnessRow::gamma)
        .def_readonly("envelope", &RobustnessRow::envelope)
        .def_readonly("time", &RobustnessRow::time)
        .def_readonly("deviation_bound", &RobustnessRow::deviation_bound)
        .def_readonly("psucc_simulated", &RobustnessRow::psucc_simulated)
        .def_readonly("psucc_lower_bound", &RobustnessRow::psucc_lower_bound)
        .def_readonly("certified", &RobustnessRow::certified);

    py::class_<RobustnessReport>(m, "RobustnessReport")
        .def_readonly("rows", &RobustnessReport::rows)
        .def_readonly("ideal_overlap_residual", &RobustnessReport::ideal_overlap_residual)
        .def("all_certified", &RobustnessReport::all_certified);

    m.def("robustness_sweep",
          [](const GroverModel& model, const std::vector<double>& gammas,
             const std::string& envelope, double omega, int steps, double time,
             int error_qubit) {
              SweepEnvelope env;
              env.kind = parse_envelope_kind(envelope);
              env.omega = omega;
              SweepOptions opts;
              opts.steps = steps;
              opts.time = time;
              opts.error_qubit = error_qubit;
              return robustness_sweep(model, gammas, {env}, opts);
          },
          py::arg("model"), py::arg("gammas"), py::arg("envelope") = "constant",
          py::arg("omega") = 0.0, py::arg("steps") = 0, py::arg("time") = 0.0,
          py::arg("error_qubit") = 1);

    m.def("run_fuzz",
          [](std::uint64_t seed, int count) {
              const auto outcomes = run_fuzz(seed, count);
              py::list out;
              for (const auto& o : outcomes) {
                  py::dict d;
                  d["instance"] = o.index;
                  d["dim"] = o.dim;
                  d["gamma"] = o.gamma;
                  d["T"] = o.t_final;
                  d["dev_actual"] = o.dev_actual;
                  d["bound_linear"] = o.bound_lin;
                  d["bound_gronwall"] = o.bound_gron;
                  d["pass"] = o.pass;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("seed"), py::arg("count"),
          "Randomized dominance-chain check; returns one dict per instance.");
}
