#include "qss/models.hpp"

namespace qss {

ComplexMatrix pauliLowering() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauliX() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauliY() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauliZ() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

TwoQubitOps twoQubitCollectiveOps() {
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    TwoQubitOps ops;
    ops.sMinus = kron(pauliLowering(), id) + kron(id, pauliLowering());
    ops.sPlus = ops.sMinus.adjoint();
    ops.sx = kron(pauliX(), id) + kron(id, pauliX());
    ops.sz = 0.5 * (kron(pauliZ(), id) + kron(id, pauliZ()));
    const ComplexMatrix sy = 0.5 * (kron(pauliY(), id) + kron(id, pauliY()));
    const ComplexMatrix sxHalf = 0.5 * ops.sx;
    ops.sSquared = sxHalf * sxHalf + sy * sy + ops.sz * ops.sz;
    return ops;
}

ComplexVector twoQubitTriplet0() {
    ComplexVector v = ComplexVector::Zero(4);
    v(1) = v(2) = 1.0 / std::sqrt(2.0);
    return v;
}

ComplexVector twoQubitSinglet() {
    ComplexVector v = ComplexVector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return v;
}

LindbladModel twoQubitBalancedModel(double gamma) {
    const TwoQubitOps ops = twoQubitCollectiveOps();
    LindbladModel model;
    model.dim = 4;
    model.hamiltonian = ComplexMatrix::Zero(4, 4);
    model.jumps = {{ops.sMinus, gamma}, {ops.sPlus, gamma}};
    return model;
}

LindbladModel twoQubitSingleDecayModel(double gamma) {
    const TwoQubitOps ops = twoQubitCollectiveOps();
    LindbladModel model;
    model.dim = 4;
    model.hamiltonian = ComplexMatrix::Zero(4, 4);
    model.jumps = {{ops.sMinus, gamma}};
    return model;
}

LindbladModel twoQubitDrivenModel(double omega, double gamma) {
    const TwoQubitOps ops = twoQubitCollectiveOps();
    LindbladModel model;
    model.dim = 4;
    model.hamiltonian = omega * ops.sx;
    model.jumps = {{ops.sMinus, gamma}};
    return model;
}

LindbladModel singleQubitDecayModel(double gamma) {
    LindbladModel model;
    model.dim = 2;
    model.hamiltonian = ComplexMatrix::Zero(2, 2);
    model.jumps = {{pauliLowering(), gamma}};
    return model;
}

LindbladModel twoEnsembleModel(const SpinEnsemblePair& pair, bool balanced, double gamma) {
    const CollectiveOps ops = collectiveOps(pair);
    LindbladModel model;
    model.dim = pair.productDim();
    model.hamiltonian = ComplexMatrix::Zero(model.dim, model.dim);
    model.jumps = {{ops.sMinus, gamma}};
    if (balanced) model.jumps.push_back({ops.sPlus, gamma});
    return model;
}

}  // namespace qss
