#include "qss/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace qss {

namespace {

using nlohmann::json;

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

void writeJsonFile(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

ComplexMatrix matrixFromTriplets(const json& j, Eigen::Index dim) {
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : j.at("triplets")) {
        if (!t.is_array() || t.size() != 4) {
            throw ParseError("triplet entries must be [row, col, re, im]");
        }
        const auto row = t[0].get<Eigen::Index>();
        const auto col = t[1].get<Eigen::Index>();
        if (row < 0 || row >= dim || col < 0 || col >= dim) {
            throw ParseError("triplet index out of range");
        }
        out(row, col) += Complex(t[2].get<double>(), t[3].get<double>());
    }
    return out;
}

json tripletsFromMatrix(const ComplexMatrix& m) {
    json triplets = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) != Complex(0, 0)) {
                triplets.push_back({r, c, m(r, c).real(), m(r, c).imag()});
            }
        }
    }
    return {{"triplets", triplets}};
}

void checkSchemaVersion(const json& j, const std::string& path) {
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kSchemaVersion) {
        throw ParseError(path + ": missing or unsupported schema_version");
    }
}

}  // namespace

LindbladModel loadModel(const std::string& path) {
    const json j = readJsonFile(path);
    checkSchemaVersion(j, path);
    LindbladModel model;
    try {
        model.dim = j.at("dim").get<Eigen::Index>();
        if (model.dim < 1) throw ParseError(path + ": dim must be >= 1");
        model.hamiltonian = j.contains("hamiltonian")
                                ? matrixFromTriplets(j["hamiltonian"], model.dim)
                                : ComplexMatrix::Zero(model.dim, model.dim);
        for (const auto& jump : j.value("jumps", json::array())) {
            model.jumps.push_back(
                {matrixFromTriplets(jump, model.dim), jump.at("rate").get<double>()});
        }
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    model.validate();
    return model;
}

void saveModel(const LindbladModel& model, const std::string& path) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = model.dim;
    j["hamiltonian"] = tripletsFromMatrix(model.hamiltonian);
    j["jumps"] = json::array();
    for (const auto& jump : model.jumps) {
        json entry = tripletsFromMatrix(jump.op);
        entry["rate"] = jump.rate;
        j["jumps"].push_back(entry);
    }
    writeJsonFile(j, path);
}

std::string matrixToJson(const ComplexMatrix& m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            entries.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    j["entries"] = entries;
    return j.dump(2);
}

ComplexMatrix matrixFromJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
    checkSchemaVersion(j, "matrix");
    try {
        const auto rows = j.at("rows").get<Eigen::Index>();
        const auto cols = j.at("cols").get<Eigen::Index>();
        const auto& entries = j.at("entries");
        if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
            throw ParseError("matrix entry count does not match rows*cols");
        }
        ComplexMatrix m(rows, cols);
        Eigen::Index i = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            for (Eigen::Index r = 0; r < rows; ++r, ++i) {
                m(r, c) = Complex(entries[i][0].get<double>(), entries[i][1].get<double>());
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

ComplexMatrix loadMatrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return matrixFromJson(text);
}

void saveMatrix(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << matrixToJson(m) << "\n";
}

}  // namespace qss
