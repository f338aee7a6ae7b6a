#pragma once

#include <string>

#include "qss/lindblad.hpp"

namespace qss {

inline constexpr int kSchemaVersion = 1;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Model file schema (JSON):
/// {
///   "schema_version": 1,
///   "dim": D,
///   "hamiltonian": {"triplets": [[row, col, re, im], ...]},
///   "jumps": [{"triplets": [...], "rate": gamma}, ...]
/// }
LindbladModel loadModel(const std::string& path);
void saveModel(const LindbladModel& model, const std::string& path);

/// Dense matrix schema (JSON):
/// {"schema_version": 1, "rows": R, "cols": C,
///  "entries": [[re, im], ...]}   // column-major
ComplexMatrix loadMatrix(const std::string& path);
void saveMatrix(const ComplexMatrix& m, const std::string& path);

std::string matrixToJson(const ComplexMatrix& m);
ComplexMatrix matrixFromJson(const std::string& text);

}  // namespace qss
