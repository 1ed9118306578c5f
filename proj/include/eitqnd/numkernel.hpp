#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Shared numerical substrate: dense complex linear algebra on superoperators,
// steady-state extraction, Dawson/erfi special functions and Gauss-Hermite
// quadrature over a Gaussian detuning line.
//
// Vectorization convention (global): column stacking, vec(rho)[col*d + row].
// Every superoperator in this library conforms to it.

namespace eitqnd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Generator has two or more singular directions; the steady state is not
/// unique. Carries all null-space candidates, reshaped to d x d.
class DegenerateSteadyStateError : public std::runtime_error {
public:
    DegenerateSteadyStateError(std::string msg, std::vector<ComplexMatrix> cands)
        : std::runtime_error(std::move(msg)), candidates(std::move(cands)) {}
    std::vector<ComplexMatrix> candidates;
};

class SingularIntegrandError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// d x d density matrix. Constructed through steady_state() or from_matrix(),
/// which enforce Hermiticity (1e-10), unit trace (1e-10) and positivity
/// (eigenvalues >= -1e-9).
struct DensityMatrix {
    ComplexMatrix m;

    Eigen::Index dim() const { return m.rows(); }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m(i, j); }

    double hermiticity_defect() const;
    double trace_defect() const;
    double min_eigenvalue() const;
    bool is_physical(double herm_tol = 1e-10, double trace_tol = 1e-10,
                     double eig_tol = -1e-9) const;

    static DensityMatrix from_matrix(const ComplexMatrix& candidate);
};

/// d^2 x d^2 generator acting on the column-stacked density matrix.
struct Superoperator {
    ComplexMatrix m;

    Eigen::Index dim() const { return m.rows(); }
    Eigen::Index state_dim() const;

    Superoperator& operator+=(const Superoperator& rhs);
    friend Superoperator operator+(Superoperator lhs, const Superoperator& rhs) {
        lhs += rhs;
        return lhs;
    }

    /// Applies the generator to a d x d matrix (vectorize, multiply, reshape).
    ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// -i [H, .] as a superoperator: -i (I (x) H - H^T (x) I).
Superoperator hamiltonian_superoperator(const ComplexMatrix& hamiltonian);

/// rate * (B . B^dag - 1/2 {B^dag B, .}) in the column-stacking convention.
Superoperator liouvillian_term(const ComplexMatrix& channel_operator, double rate);

/// Null vector of the generator via SVD (smallest singular direction),
/// reshaped, Hermitized as (M + M^dag)/2 and trace normalized.
/// Throws DegenerateSteadyStateError when two or more singular values fall
/// below 1e-12 * sigma_max.
DensityMatrix steady_state(const Superoperator& generator);

/// Dawson integral D(x) = exp(-x^2) int_0^x exp(t^2) dt.
/// Accurate to better than 1e-12 relative for |x| <= 10.
double dawson(double x);

/// erfi(x) = (2/sqrt(pi)) exp(x^2) dawson(x). Overflows to +/-inf for
/// |x| >~ 26.6; ensemble averages must route through the J-form
/// J(d) = (2/sqrt(pi)) dawson(d) = exp(-d^2) erfi(d), which never overflows.
double erfi(double x);

/// Gaussian distribution of mutual detunings: mean delta0, standard
/// deviation gamma_inh, plus the Gauss-Hermite node count used when
/// averaging over it.
struct InhomLine {
    double delta0 = 0.0;
    double gamma_inh = 1.0;
    int nodes = 64;

    void validate() const;
};

/// Gauss-Hermite rule for int exp(-x^2) f(x) dx ~= sum w_k f(x_k),
/// computed by Golub-Welsch. Nodes ascending; sum of weights = sqrt(pi).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const QuadratureRule& gauss_hermite_rule(int n);

/// int P(Delta) f(Delta) dDelta with P the Gaussian line, evaluated at
/// Delta_k = delta0 + sqrt(2) gamma x_k. Throws SingularIntegrandError if the
/// observable is non-finite at any node.
Complex gauss_hermite_average(const std::function<Complex(double)>& observable,
                              const InhomLine& line);

}  // namespace eitqnd
