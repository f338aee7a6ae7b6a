#include "qss/lindblad.hpp"

namespace qss {

void LindbladModel::validate() const {
    if (dim < 1) throw DimensionError("LindbladModel: dim must be >= 1");
    if (hamiltonian.size() != 0) {
        if (hamiltonian.rows() != dim || hamiltonian.cols() != dim) {
            throw DimensionError("LindbladModel: hamiltonian must be dim x dim");
        }
        const double scale = std::max(1.0, hamiltonian.norm());
        if ((hamiltonian - hamiltonian.adjoint()).norm() > 1e-12 * scale) {
            throw NumericalError("LindbladModel: hamiltonian is not Hermitian");
        }
    }
    for (const auto& j : jumps) {
        if (j.op.rows() != dim || j.op.cols() != dim) {
            throw DimensionError("LindbladModel: jump operator must be dim x dim");
        }
        if (j.rate < 0.0) {
            throw NumericalError("LindbladModel: negative jump rate");
        }
    }
}

Superoperator::Superoperator(Eigen::Index hilbertDim, SparseOperator matrix)
    : dim_(hilbertDim), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != dim_ * dim_) {
        throw DimensionError("Superoperator: matrix must be D^2 x D^2");
    }
    matrix_.makeCompressed();
}

bool Superoperator::isHermitian(double tol) const {
    SparseOperator diff = SparseOperator(matrix_.adjoint()) - matrix_;
    return diff.norm() <= tol * std::max(matrix_.norm(), 1e-300);
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw DimensionError("Superoperator::apply: state dimension mismatch");
    }
    return devectorize(matrix_ * vectorize(rho));
}

double Superoperator::tracePreservationResidual() const {
    ComplexVector id = vectorize(ComplexMatrix::Identity(dim_, dim_));
    return (matrix_.adjoint() * id).norm();
}

Superoperator buildLiouvillian(const LindbladModel& model) {
    model.validate();
    const Eigen::Index d = model.dim;
    SparseOperator id(d, d);
    id.setIdentity();

    SparseOperator total(d * d, d * d);
    if (model.hamiltonian.size() != 0 && model.hamiltonian.norm() > 0.0) {
        SparseOperator h = model.hamiltonian.sparseView();
        SparseOperator ht = SparseOperator(h.transpose());
        total = Complex(0, -1) * (kronSparse(id, h) - kronSparse(ht, id));
    }
    for (const auto& jump : model.jumps) {
        // Rate folded in as sqrt(gamma) * L.
        ComplexMatrix l = std::sqrt(jump.rate) * jump.op;
        SparseOperator ls = l.sparseView();
        SparseOperator lconj = SparseOperator(ls.conjugate());
        SparseOperator ldl = ComplexMatrix(l.adjoint() * l).sparseView();
        SparseOperator ldlT = SparseOperator(ldl.transpose());
        total = total + kronSparse(lconj, ls)
              - 0.5 * (kronSparse(id, ldl) + kronSparse(ldlT, id));
    }
    total.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
        return v != Complex(0, 0);
    });
    return Superoperator(d, std::move(total));
}

}  // namespace qss
