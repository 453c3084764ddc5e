#include "faultloc/linear_system.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "faultloc/errors.hpp"

namespace faultloc {

namespace {

void check_ids(int dimension, const std::vector<int>& ids, const char* name) {
    std::unordered_set<int> seen;
    for (int id : ids) {
        if (id < 0 || id >= dimension)
            throw InputError(std::string(name) + " id " + std::to_string(id) +
                             " out of range");
        if (!seen.insert(id).second)
            throw InputError(std::string(name) + " contains duplicate id " +
                             std::to_string(id));
    }
}

} // namespace

LinearSystem::LinearSystem(Eigen::MatrixXd A_, std::vector<int> sensors,
                           std::vector<int> ground, Eigen::VectorXd x0_)
    : A(std::move(A_)), sensor_set(std::move(sensors)),
      ground_set(std::move(ground)), x0(std::move(x0_)) {
    if (A.rows() != A.cols()) throw InputError("state matrix A must be square");
    if (!A.allFinite()) throw InputError("state matrix A has non-finite entries");
    check_ids(dimension(), sensor_set, "sensor");
    check_ids(dimension(), ground_set, "ground");
    if (x0.size() == 0) x0 = Eigen::VectorXd::Zero(dimension());
    if (x0.size() != dimension())
        throw InputError("x0 length does not match state dimension");
}

InfluenceGraph influence_graph(const Eigen::MatrixXd& A) {
    InfluenceGraph graph(static_cast<int>(A.rows()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (A(i, j) != 0.0) graph.add_edge(j, i, A(i, j));
    return graph;
}

Gammoid gammoid_of(const LinearSystem& sys) {
    return Gammoid(influence_graph(sys.A), sys.ground_set, sys.sensor_set);
}

LinearSystem linear_system_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed model JSON: ") + e.what());
    }
    if (!j.contains("A")) throw InputError("model JSON missing \"A\"");
    const auto& rows = j.at("A");
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw InputError("model matrix A must be square");
        for (int k = 0; k < n; ++k) A(i, k) = rows[i][k].get<double>();
    }
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    if (j.contains("x0")) {
        const auto v = j.at("x0").get<std::vector<double>>();
        if (static_cast<int>(v.size()) != n)
            throw InputError("x0 length does not match A");
        for (int i = 0; i < n; ++i) x0[i] = v[i];
    }
    std::vector<int> ground = j.value("ground_set", std::vector<int>{});
    if (ground.empty()) {
        ground.resize(n);
        std::iota(ground.begin(), ground.end(), 0);
    }
    return LinearSystem(std::move(A), j.value("output_set", std::vector<int>{}),
                        std::move(ground), std::move(x0));
}

std::string linear_system_to_json(const LinearSystem& sys) {
    nlohmann::json j;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < sys.dimension(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < sys.dimension(); ++k) row.push_back(sys.A(i, k));
        rows.push_back(std::move(row));
    }
    j["A"] = std::move(rows);
    j["x0"] = std::vector<double>(sys.x0.data(), sys.x0.data() + sys.x0.size());
    j["output_set"] = sys.sensor_set;
    j["ground_set"] = sys.ground_set;
    return j.dump(2);
}

LinearSystem load_linear_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return linear_system_from_json(buffer.str());
}

void save_linear_system(const LinearSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write model file: " + path);
    out << linear_system_to_json(sys) << '\n';
}

} // namespace faultloc
