#include "entbounds/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace entbounds {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(where + ": complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::pair<int, int> dims_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const int d = j.get<int>();
        if (d < 1) throw ParseError(path + ": dims must be positive");
        return {d, 1};
    }
    if (!j.is_array() || j.size() != 2)
        throw ParseError(path + ": \"dims\" must be [dimA, dimB] or an integer");
    const int da = j[0].get<int>();
    const int db = j[1].get<int>();
    if (da < 1 || db < 1) throw ParseError(path + ": dims must be positive");
    return {da, db};
}

json dump_state_json(const Matrix* mat, const Vector* vec,
                     const BipartiteSplit& split) {
    json j;
    j["dims"] = json::array({split.dimA(), split.dimB()});
    if (vec) {
        json v = json::array();
        for (Eigen::Index i = 0; i < vec->size(); ++i)
            v.push_back(complex_to_json((*vec)(i)));
        j["vector"] = std::move(v);
    } else {
        json rows = json::array();
        for (Eigen::Index i = 0; i < mat->rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < mat->cols(); ++k)
                row.push_back(complex_to_json((*mat)(i, k)));
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    }
    return j;
}

void write_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

StateFile load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("dims"))
        throw ParseError(path + ": expected an object with a \"dims\" key");

    const auto [da, db] = dims_from_json(j["dims"], path);
    const BipartiteSplit split(da, db);
    const int d = split.total();

    try {
        if (j.contains("vector")) {
            const json& v = j["vector"];
            if (!v.is_array() || static_cast<int>(v.size()) != d)
                throw ParseError(path + ": \"vector\" must have dimA*dimB entries");
            Vector amps(d);
            for (int i = 0; i < d; ++i)
                amps(i) = complex_from_json(v[i], path);
            PureState psi(std::move(amps));
            return {density_from_pure(psi), split, psi};
        }
        if (!j.contains("matrix"))
            throw ParseError(path + ": need a \"matrix\" or \"vector\" key");
        const json& rows = j["matrix"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != d)
            throw ParseError(path + ": \"matrix\" must have dimA*dimB rows");
        Matrix m(d, d);
        for (int i = 0; i < d; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || static_cast<int>(row.size()) != d)
                throw ParseError(path + ": matrix row " + std::to_string(i) +
                                 " has wrong length");
            for (int k = 0; k < d; ++k)
                m(i, k) = complex_from_json(row[k], path);
        }
        return {validate_density(m), split, std::nullopt};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void save_state(const QuantumState& state, const BipartiteSplit& split,
                const std::string& path) {
    if (state.dim() != split.total())
        throw DimensionMismatch("save_state: state dimension does not match split");
    write_file(dump_state_json(&state.matrix(), nullptr, split), path);
}

void save_state(const PureState& psi, const BipartiteSplit& split,
                const std::string& path) {
    if (psi.dim() != split.total())
        throw DimensionMismatch("save_state: state dimension does not match split");
    write_file(dump_state_json(nullptr, &psi.amplitudes(), split), path);
}

}  // namespace entbounds
