#include "nonclass/statefile.hpp"

#include <fstream>

#include <json.hpp>

namespace nonclass {

using nlohmann::json;

void save_state(std::ostream& out, const DensityOperator& rho,
                const std::map<std::string, std::string>& metadata) {
    json j;
    j["dims"] = {rho.dim_a(), rho.dim_b()};
    json rows = json::array();
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d; ++c) {
            const cplx v = rho.matrix()(r, c);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    j["metadata"] = metadata;
    out << j.dump(1) << '\n';
}

void save_state(const std::string& path, const DensityOperator& rho,
                const std::map<std::string, std::string>& metadata) {
    std::ofstream f(path);
    if (!f) throw StateFileError("cannot open for writing: " + path);
    save_state(f, rho, metadata);
}

StateFile load_state(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StateFileError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2)
        throw StateFileError("state file: missing or malformed dims");
    const std::size_t m = j["dims"][0].get<std::size_t>();
    const std::size_t n = j["dims"][1].get<std::size_t>();
    const std::size_t d = m * n;
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != d)
        throw StateFileError("state file: matrix row count does not match dims");

    ComplexMatrix mat(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = j["matrix"][r];
        if (!row.is_array() || row.size() != d)
            throw StateFileError("state file: matrix column count does not match dims");
        for (std::size_t c = 0; c < d; ++c) {
            const json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2)
                throw StateFileError("state file: matrix entries must be [re, im] pairs");
            mat(r, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    StateFile out{DensityOperator(m, n, std::move(mat)), {}};
    if (j.contains("metadata")) {
        for (const auto& [k, v] : j["metadata"].items())
            out.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

StateFile load_state(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw StateFileError("cannot open state file: " + path);
    return load_state(f);
}

} // namespace nonclass
