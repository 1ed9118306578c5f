#include "eitqnd/ensemble.hpp"
#include "eitqnd/lambda3.hpp"
#include "eitqnd/nsys4.hpp"
#include "eitqnd/numkernel.hpp"
#include "eitqnd/qnd.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eitqnd;

PYBIND11_MODULE(_eitqnd, m) {
    m.doc() = "EIT cross-Kerr / QND simulator core";

    py::register_exception<DegenerateSteadyStateError>(m, "DegenerateSteadyStateError");
    py::register_exception<SingularIntegrandError>(m, "SingularIntegrandError");
    py::register_exception<TruncationError>(m, "TruncationError");

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_readonly("m", &DensityMatrix::m)
        .def("hermiticity_defect", &DensityMatrix::hermiticity_defect)
        .def("trace_defect", &DensityMatrix::trace_defect)
        .def("min_eigenvalue", &DensityMatrix::min_eigenvalue)
        .def("is_physical", &DensityMatrix::is_physical, py::arg("herm_tol") = 1e-10,
             py::arg("trace_tol") = 1e-10, py::arg("eig_tol") = -1e-9)
        .def_static("from_matrix", &DensityMatrix::from_matrix);

    py::class_<Superoperator>(m, "Superoperator")
        .def_readonly("m", &Superoperator::m)
        .def("apply", &Superoperator::apply)
        .def("__add__",
             [](const Superoperator& a, const Superoperator& b) { return a + b; });

    m.def("hamiltonian_superoperator", &hamiltonian_superoperator);
    m.def("liouvillian_term", &liouvillian_term, py::arg("channel_operator"), py::arg("rate"));
    m.def("steady_state", &steady_state);
    m.def("dawson", &dawson);
    m.def("erfi", &erfi);

    py::class_<InhomLine>(m, "InhomLine")
        .def(py::init<>())
        .def_readwrite("delta0", &InhomLine::delta0)
        .def_readwrite("gamma_inh", &InhomLine::gamma_inh)
        .def_readwrite("nodes", &InhomLine::nodes);

    m.def("gauss_hermite_rule",
          [](int n) {
              const auto& rule = gauss_hermite_rule(n);
              return py::make_tuple(rule.nodes, rule.weights);
          });
    m.def("gauss_hermite_average", &gauss_hermite_average, py::arg("observable"),
          py::arg("line"));

    py::class_<LambdaParams>(m, "LambdaParams")
        .def(py::init<>())
        .def_readwrite("omega1", &LambdaParams::omega1)
        .def_readwrite("omega2", &LambdaParams::omega2)
        .def_readwrite("delta_mutual", &LambdaParams::delta_mutual)
        .def_readwrite("delta_two_photon", &LambdaParams::delta_two_photon)
        .def_readwrite("gamma_sp", &LambdaParams::gamma_sp);

    m.def("hamiltonian3", &hamiltonian3);
    m.def("generator3", &generator3);
    m.def("rho_cb_series", &rho_cb_series, py::arg("params"), py::arg("order"));
    m.def("dispersion_rcb", &dispersion_rcb);
    m.def("pulse_absorption", &pulse_absorption);
    m.def("bandwidth_for_absorption", &bandwidth_for_absorption);
    m.def("group_velocity", &group_velocity, py::arg("material"), py::arg("omega2"),
          py::arg("single_photon_omega1"), py::arg("n1"));

    py::class_<NParams>(m, "NParams")
        .def(py::init<>())
        .def_readwrite("lambda_", &NParams::lambda)
        .def_readwrite("omega3", &NParams::omega3)
        .def_readwrite("delta3", &NParams::delta3)
        .def_readwrite("epsilon", &NParams::epsilon)
        .def("perturbative_valid", &NParams::perturbative_valid);

    m.def("hamiltonian4", &hamiltonian4);
    m.def("generator4", &generator4);
    m.def("light_shift", &light_shift);

    py::class_<PerturbativeCoherences>(m, "PerturbativeCoherences")
        .def_readonly("rho_ab", &PerturbativeCoherences::rho_ab)
        .def_readonly("rho_cd", &PerturbativeCoherences::rho_cd)
        .def_readonly("rho_cb", &PerturbativeCoherences::rho_cb);
    m.def("coherences_perturbative", &coherences_perturbative);

    py::class_<PerturbativePopulations>(m, "PerturbativePopulations")
        .def_readonly("rho_bb", &PerturbativePopulations::rho_bb)
        .def_readonly("rho_dd", &PerturbativePopulations::rho_dd);
    m.def("populations_perturbative", &populations_perturbative);

    py::class_<EnsembleCoherence>(m, "EnsembleCoherence")
        .def_readonly("value", &EnsembleCoherence::value)
        .def_readonly("closed_form_valid", &EnsembleCoherence::closed_form_valid);
    m.def("ensemble_rho_cb_second_order", &ensemble_rho_cb_second_order);
    m.def("ensemble_coherence_ab", &ensemble_coherence_ab);
    m.def("ensemble_coherence_cd", &ensemble_coherence_cd);
    m.def("ensemble_coherence_ab_quadrature", &ensemble_coherence_ab_quadrature);
    m.def("j_curve", &j_curve);
    m.def("optimal_detuning", &optimal_detuning);

    py::class_<DetuningComparison>(m, "DetuningComparison")
        .def_readonly("d", &DetuningComparison::d)
        .def_readonly("j_at_d", &DetuningComparison::j_at_d)
        .def_readonly("j_at_optimum", &DetuningComparison::j_at_optimum)
        .def_readonly("ratio_to_optimum", &DetuningComparison::ratio_to_optimum)
        .def_readonly("ratio_to_homogeneous", &DetuningComparison::ratio_to_homogeneous);
    m.def("detuning_comparison", &detuning_comparison);

    py::class_<MaterialParams>(m, "MaterialParams")
        .def(py::init<>())
        .def_readwrite("wavelength", &MaterialParams::wavelength)
        .def_readwrite("gamma_sp", &MaterialParams::gamma_sp)
        .def_readwrite("gamma_inh", &MaterialParams::gamma_inh)
        .def_readwrite("density", &MaterialParams::density)
        .def_readwrite("length", &MaterialParams::length)
        .def_readwrite("dipole", &MaterialParams::dipole)
        .def_readwrite("eps_r", &MaterialParams::eps_r)
        .def_readwrite("bulk_index", &MaterialParams::bulk_index)
        .def_readwrite("bandwidth", &MaterialParams::bandwidth)
        .def_readwrite("kappa", &MaterialParams::kappa)
        .def_readwrite("omega2", &MaterialParams::omega2)
        .def_readwrite("j_scaling", &MaterialParams::j_scaling)
        .def_readwrite("mean_detuning", &MaterialParams::mean_detuning)
        .def("single_photon_omega1", &MaterialParams::single_photon_omega1)
        .def("carrier_omega", &MaterialParams::carrier_omega);

    m.def("nv_preset", &nv_preset);
    m.def("single_photon_rabi", &single_photon_rabi);

    py::enum_<KerrMode>(m, "KerrMode")
        .value("lossless", KerrMode::lossless)
        .value("lossy", KerrMode::lossy);
    py::enum_<TimeModel>(m, "TimeModel")
        .value("fixed", TimeModel::fixed)
        .value("per_fock", TimeModel::per_fock);

    m.def("phase_shift_kab", &phase_shift_kab, py::arg("material"), py::arg("n1"),
          py::arg("n3"), py::arg("mode") = KerrMode::lossless);
    m.def("phase_shift_kcd", &phase_shift_kcd, py::arg("material"), py::arg("n1"),
          py::arg("n3"), py::arg("mode") = KerrMode::lossless);

    py::class_<TScalings>(m, "TScalings")
        .def_readonly("t_ab", &TScalings::t_ab)
        .def_readonly("t_cd", &TScalings::t_cd);
    m.def("t_scalings", &t_scalings, py::arg("kappa"), py::arg("n1"));

    py::class_<ProbeState>(m, "ProbeState")
        .def_readonly("alpha", &ProbeState::alpha)
        .def_readonly("amplitudes", &ProbeState::amplitudes)
        .def_readonly("n_max", &ProbeState::n_max)
        .def("norm_squared", &ProbeState::norm_squared);

    m.def("evolve_probe", &evolve_probe, py::arg("material"), py::arg("alpha"), py::arg("n3"),
          py::arg("time_model") = TimeModel::per_fock, py::arg("mode") = KerrMode::lossless);

    py::class_<QGrid>(m, "QGrid")
        .def_readonly("extent", &QGrid::extent)
        .def_readonly("resolution", &QGrid::resolution)
        .def_readonly("values", &QGrid::values)
        .def("total_mass", &QGrid::total_mass);

    m.def("q_function", &q_function, py::arg("state"), py::arg("extent"), py::arg("resolution"),
          py::arg("jobs") = 1);
    m.def("state_overlap", &state_overlap);

    py::class_<Distinguishability>(m, "Distinguishability")
        .def_readonly("n3_values", &Distinguishability::n3_values)
        .def_readonly("overlaps", &Distinguishability::overlaps)
        .def_readonly("peak_phases", &Distinguishability::peak_phases);

    m.def("distinguishability", &distinguishability, py::arg("material"), py::arg("alpha"),
          py::arg("n3_list"), py::arg("time_model") = TimeModel::per_fock,
          py::arg("mode") = KerrMode::lossless);
}
