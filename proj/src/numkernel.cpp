#include "eitqnd/numkernel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <map>
#include <mutex>

namespace eitqnd {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(what) + ": operator must be square, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

}  // namespace

double DensityMatrix::hermiticity_defect() const {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_defect() const { return std::abs(m.trace() - Complex(1.0)); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double herm_tol, double trace_tol, double eig_tol) const {
    return hermiticity_defect() <= herm_tol && trace_defect() <= trace_tol &&
           min_eigenvalue() >= eig_tol;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& candidate) {
    require_square(candidate, "DensityMatrix");
    DensityMatrix rho{candidate};
    if (!rho.is_physical()) {
        throw std::invalid_argument("DensityMatrix: candidate violates Hermiticity/trace/positivity");
    }
    return rho;
}

Eigen::Index Superoperator::state_dim() const {
    auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(m.rows()))));
    return d;
}

Superoperator& Superoperator::operator+=(const Superoperator& rhs) {
    if (m.rows() != rhs.m.rows()) throw DimensionError("Superoperator: size mismatch in sum");
    m += rhs.m;
    return *this;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
    const Eigen::Index d = state_dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionError("Superoperator::apply: state dimension mismatch");
    }
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d);
    Eigen::VectorXcd w = m * v;
    return Eigen::Map<const ComplexMatrix>(w.data(), d, d);
}

Superoperator hamiltonian_superoperator(const ComplexMatrix& hamiltonian) {
    require_square(hamiltonian, "hamiltonian_superoperator");
    const Eigen::Index d = hamiltonian.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    ComplexMatrix s = Eigen::kroneckerProduct(id, hamiltonian) -
                      Eigen::kroneckerProduct(hamiltonian.transpose(), id);
    return Superoperator{Complex(0.0, -1.0) * s};
}

Superoperator liouvillian_term(const ComplexMatrix& channel_operator, double rate) {
    require_square(channel_operator, "liouvillian_term");
    if (rate < 0.0) throw std::invalid_argument("liouvillian_term: rate must be >= 0");
    const Eigen::Index d = channel_operator.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix bdb = channel_operator.adjoint() * channel_operator;
    // vec(B rho B^dag) = (conj(B) (x) B) vec(rho) under column stacking.
    ComplexMatrix s = Eigen::kroneckerProduct(channel_operator.conjugate(), channel_operator) -
                      0.5 * Eigen::kroneckerProduct(id, bdb) -
                      0.5 * Eigen::kroneckerProduct(bdb.transpose(), id);
    return Superoperator{rate * s};
}

DensityMatrix steady_state(const Superoperator& generator) {
    const Eigen::Index d = generator.state_dim();
    if (d * d != generator.dim()) {
        throw DimensionError("steady_state: generator dimension is not a perfect square");
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(generator.m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double degeneracy_threshold = 1e-12 * smax;

    std::vector<Eigen::Index> null_idx;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) <= degeneracy_threshold) null_idx.push_back(k);  // smax == 0: all null
    }
    if (null_idx.size() >= 2) {
        std::vector<ComplexMatrix> candidates;
        for (Eigen::Index k : null_idx) {
            Eigen::VectorXcd v = svd.matrixV().col(k);
            candidates.push_back(Eigen::Map<const ComplexMatrix>(v.data(), d, d));
        }
        throw DegenerateSteadyStateError(
            "steady_state: " + std::to_string(null_idx.size()) +
                " singular values below 1e-12 * sigma_max; steady state not unique",
            std::move(candidates));
    }

    Eigen::VectorXcd v = svd.matrixV().col(sv.size() - 1);
    ComplexMatrix rho = Eigen::Map<const ComplexMatrix>(v.data(), d, d);
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Complex tr = rho.trace();
    if (std::abs(tr) < 1e-14) {
        throw std::runtime_error("steady_state: null vector has vanishing trace");
    }
    rho /= tr;

    const double residual = (generator.m * Eigen::Map<const Eigen::VectorXcd>(rho.data(), d * d)).norm();
    if (residual > 1e-9 * generator.m.norm()) {
        throw std::runtime_error("steady_state: residual " + std::to_string(residual) +
                                 " exceeds 1e-9 * ||generator||");
    }
    return DensityMatrix{rho};
}

// Dawson integral via the sampling series of Rybicki, which represents D(x)
// as a sum of Gaussians at odd multiples of a step h. Discretization error
// ~ exp(-(pi/2h)^2); with h = 0.25 that is ~7e-18. Maclaurin series for
// small |x| where the sampling form loses relative accuracy.
double dawson(double x) {
    const double ax = std::abs(x);
    if (ax < 0.2) {
        // D(x) = sum (-1)^k 2^k x^(2k+1) / (2k+1)!!
        const double x2 = x * x;
        double term = x;
        double sum = x;
        for (int k = 1; k <= 12; ++k) {
            term *= -2.0 * x2 / (2.0 * k + 1.0);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }

    constexpr double h = 0.25;
    constexpr int terms = 24;
    const int n0 = 2 * static_cast<int>(std::lround(0.5 * ax / h));
    const double xp = ax - n0 * h;
    const double e1 = std::exp(2.0 * xp * h);
    const double e2 = e1 * e1;

    double sum = 0.0;
    double d1 = n0 + 1.0;
    double d2 = d1 - 2.0;
    double e = e1;
    for (int i = 0; i < terms; ++i, d1 += 2.0, d2 -= 2.0, e *= e2) {
        const double m = (2.0 * i + 1.0) * h;
        const double a = std::exp(-m * m);
        if (a < 1e-20) break;
        sum += a * (e / d1 + 1.0 / (d2 * e));
    }
    const double result = 0.5641895835477563 * std::exp(-xp * xp) * sum;  // 1/sqrt(pi)
    return x >= 0.0 ? result : -result;
}

double erfi(double x) {
    // 2/sqrt(pi) * exp(x^2) * D(x); exp overflows past |x| ~ 26.6 and the
    // result is +/-inf by contract.
    return 1.1283791670955126 * std::exp(x * x) * dawson(x);
}

void InhomLine::validate() const {
    if (!(gamma_inh > 0.0)) throw std::invalid_argument("InhomLine: gamma_inh must be > 0");
    if (nodes < 16) throw std::invalid_argument("InhomLine: node count must be >= 16");
}

namespace {

QuadratureRule build_gauss_hermite(int n) {
    // Golub-Welsch on the Jacobi matrix of the (physicists') Hermite
    // polynomials: zero diagonal, off-diagonal sqrt(k/2).
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double sqrt_pi = std::sqrt(M_PI);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        rule.weights[k] = sqrt_pi * v0 * v0;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_hermite_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_rule: n must be >= 1");
    static std::map<int, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_gauss_hermite(n)).first;
    return it->second;
}

Complex gauss_hermite_average(const std::function<Complex(double)>& observable,
                              const InhomLine& line) {
    line.validate();
    const QuadratureRule& rule = gauss_hermite_rule(line.nodes);
    const double scale = std::sqrt(2.0) * line.gamma_inh;
    Complex acc(0.0, 0.0);
    for (int k = 0; k < line.nodes; ++k) {
        const double delta = line.delta0 + scale * rule.nodes[k];
        const Complex f = observable(delta);
        if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
            throw SingularIntegrandError(
                "gauss_hermite_average: observable non-finite at node Delta = " +
                std::to_string(delta));
        }
        acc += rule.weights[k] * f;
    }
    return acc / std::sqrt(M_PI);
}

}  // namespace eitqnd
