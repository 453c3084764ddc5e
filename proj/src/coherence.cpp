#include "faultloc/coherence.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>

#include <nlohmann/json.hpp>

#include "faultloc/errors.hpp"
#include "faultloc/gammoid.hpp"

namespace faultloc {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kFloorTol = 1e-9;

} // namespace

Eigen::MatrixXcd transfer_matrix(const LinearSystem& sys, std::complex<double> s) {
    const int n = sys.dimension();
    Eigen::MatrixXcd shifted = -sys.A.cast<std::complex<double>>();
    shifted.diagonal().array() += s;

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
    const double rcond = lu.rcond();
    if (!(rcond > 1.0 / kConditionLimit))
        throw NumericError("sI - A is near-singular at s = (" +
                           std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                           "); perturb the evaluation point");

    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, sys.input_count());
    for (int c = 0; c < sys.input_count(); ++c) B(sys.ground_set[c], c) = 1.0;
    const Eigen::MatrixXcd X = lu.solve(B);

    Eigen::MatrixXcd T(sys.sensor_count(), sys.input_count());
    for (int r = 0; r < sys.sensor_count(); ++r) T.row(r) = X.row(sys.sensor_set[r]);
    return T;
}

Eigen::MatrixXcd input_gramian(const LinearSystem& sys, std::complex<double> s) {
    const Eigen::MatrixXcd T = transfer_matrix(sys, s);
    return T.adjoint() * T;
}

namespace {

double coherence_from_gramian(const Eigen::MatrixXcd& G, int i, int j,
                              const std::vector<int>& ground_set) {
    const double gii = G(i, i).real();
    const double gjj = G(j, j).real();
    if (!(gii > 0.0))
        throw NumericError("unobservable input node " +
                           std::to_string(ground_set[i]) +
                           ": zero Gramian diagonal");
    if (!(gjj > 0.0))
        throw NumericError("unobservable input node " +
                           std::to_string(ground_set[j]) +
                           ": zero Gramian diagonal");
    // Separate square roots: the diagonal product can underflow at large |s|.
    return std::abs(G(i, j)) / (std::sqrt(gii) * std::sqrt(gjj));
}

} // namespace

double coherence(const LinearSystem& sys, std::complex<double> s, int i, int j) {
    const int m = sys.input_count();
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw InputError("coherence index out of range");
    return coherence_from_gramian(input_gramian(sys, s), i, j, sys.ground_set);
}

Eigen::MatrixXd coherence_matrix(const LinearSystem& sys, std::complex<double> s) {
    const Eigen::MatrixXcd G = input_gramian(sys, s);
    const int m = sys.input_count();
    Eigen::MatrixXd mu(m, m);
    for (int i = 0; i < m; ++i) {
        mu(i, i) = 1.0;
        for (int j = i + 1; j < m; ++j) {
            mu(i, j) = coherence_from_gramian(G, i, j, sys.ground_set);
            mu(j, i) = mu(i, j);
        }
    }
    return mu;
}

double mutual_coherence(const LinearSystem& sys, std::complex<double> s) {
    const int m = sys.input_count();
    if (m <= 1) return 0.0;
    const Eigen::MatrixXd mu = coherence_matrix(sys, s);
    double best = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) best = std::max(best, mu(i, j));
    return best;
}

namespace {

int saturated_bound(const LinearSystem& sys) {
    return static_cast<int>(std::min(sys.ground_set.size(), sys.sensor_set.size())) + 1;
}

} // namespace

int spark_lower_bound(const LinearSystem& sys,
                      const std::vector<std::complex<double>>& eval_points) {
    if (eval_points.empty())
        throw InputError("spark_lower_bound needs at least one evaluation point");
    double mu_best = std::numeric_limits<double>::infinity();
    int valid = 0;
    for (const auto& s : eval_points) {
        try {
            mu_best = std::min(mu_best, mutual_coherence(sys, s));
            ++valid;
        } catch (const NumericError&) {
            // skip invalid points; counted below
        }
    }
    if (valid == 0)
        throw NumericError("no valid evaluation point for the spark bound");
    if (mu_best <= std::numeric_limits<double>::epsilon())
        return saturated_bound(sys);
    const int bound = static_cast<int>(std::floor(1.0 / mu_best + 1.0 + kFloorTol));
    return std::min(bound, saturated_bound(sys));
}

namespace {

// Sum of path weights over all shortest paths from `start` to every node of
// the graph: BFS distances, then weight sums accumulated along level edges.
struct ShortestPathSums {
    std::vector<int> dist;
    std::vector<double> weight_sum;
};

ShortestPathSums shortest_path_sums(const InfluenceGraph& graph, int start) {
    const int n = graph.node_count();
    ShortestPathSums out{std::vector<int>(n, -1), std::vector<double>(n, 0.0)};
    out.dist[start] = 0;
    out.weight_sum[start] = 1.0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (const auto& [w, weight] : graph.out(v)) {
            if (out.dist[w] == -1) {
                out.dist[w] = out.dist[v] + 1;
                frontier.push(w);
            }
            if (out.dist[w] == out.dist[v] + 1)
                out.weight_sum[w] += out.weight_sum[v] * weight;
        }
    }
    return out;
}

} // namespace

Eigen::MatrixXd shortest_path_coherence(const LinearSystem& sys) {
    const Gammoid gamma = gammoid_of(sys);
    const Gammoid gamma_prime = transpose(gamma);
    const Gammoid combined = concatenate(gamma, gamma_prime);
    const std::vector<int> prime_map =
        concatenation_second_node_map(gamma, gamma_prime);

    const int m = sys.input_count();
    // target node of l_j' inside the combined graph
    std::vector<int> targets(m);
    for (int j = 0; j < m; ++j) targets[j] = combined.output_set[j];

    Eigen::MatrixXd F_short(m, m);
    std::vector<double> diagonal(m);
    for (int i = 0; i < m; ++i) {
        const ShortestPathSums sums =
            shortest_path_sums(combined.graph, combined.ground_set[i]);
        for (int j = 0; j < m; ++j)
            F_short(i, j) = sums.dist[targets[j]] == -1 ? 0.0 : sums.weight_sum[targets[j]];
        diagonal[i] = sums.dist[targets[i]] == -1 ? 0.0 : sums.weight_sum[targets[i]];
        if (sums.dist[targets[i]] == -1)
            throw NumericError("unobservable input node " +
                               std::to_string(sys.ground_set[i]) +
                               ": no path to any sensor");
        if (!(diagonal[i] > 0.0))
            throw NumericError("shortest-path weights cancel exactly on node " +
                               std::to_string(sys.ground_set[i]));
    }

    Eigen::MatrixXd mu(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mu(i, j) = std::abs(F_short(i, j)) /
                       (std::sqrt(diagonal[i]) * std::sqrt(diagonal[j]));
    return mu;
}

bool diagonal_dominance_check(const Eigen::MatrixXcd& gramian) {
    for (int i = 0; i < gramian.rows(); ++i) {
        double off = 0.0;
        for (int j = 0; j < gramian.cols(); ++j)
            if (j != i) off += std::abs(gramian(i, j));
        if (!(std::abs(gramian(i, i)) > off)) return false;
    }
    return true;
}

std::vector<std::complex<double>> default_eval_points(int count) {
    std::vector<std::complex<double>> points;
    points.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double exponent = -1.0 + 7.0 * k / (count - 1);  // 10^-1 .. 10^6
        points.emplace_back(std::pow(10.0, exponent), 0.0);
    }
    return points;
}

CoherenceReport analyze_coherence(const LinearSystem& sys,
                                  std::vector<std::complex<double>> eval_points) {
    if (eval_points.empty()) eval_points = default_eval_points();
    CoherenceReport report;
    const int m = sys.input_count();
    report.min_coherence =
        Eigen::MatrixXd::Constant(m, m, std::numeric_limits<double>::infinity());

    for (std::complex<double> s : eval_points) {
        Eigen::MatrixXd mu;
        try {
            mu = coherence_matrix(sys, s);
        } catch (const NumericError& first_failure) {
            const std::complex<double> nudged = s + 1e-3 * (1.0 + std::abs(s));
            try {
                mu = coherence_matrix(sys, nudged);
                s = nudged;
            } catch (const NumericError&) {
                report.warnings.push_back("dropped ill-conditioned point s = " +
                                          std::to_string(s.real()) + ": " +
                                          first_failure.what());
                continue;
            }
        }
        report.eval_points.push_back(s);
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                report.min_coherence(i, j) = std::min(report.min_coherence(i, j), mu(i, j));
                if (i != j) worst = std::max(worst, mu(i, j));
            }
        report.mutual_coherence_per_point.push_back(m <= 1 ? 0.0 : worst);
    }
    if (report.eval_points.empty())
        throw NumericError("all coherence evaluation points failed");

    report.shortest_path = shortest_path_coherence(sys);
    report.spark_lower_bound = spark_lower_bound(sys, report.eval_points);
    return report;
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string coherence_report_to_json(const CoherenceReport& report,
                                     const std::vector<int>& ground_set) {
    nlohmann::json j;
    auto points = nlohmann::json::array();
    for (const auto& s : report.eval_points)
        points.push_back({s.real(), s.imag()});
    j["eval_points"] = std::move(points);
    j["mutual_coherence_per_point"] = report.mutual_coherence_per_point;
    j["min_coherence"] = matrix_to_json(report.min_coherence);
    j["shortest_path_coherence"] = matrix_to_json(report.shortest_path);
    j["spark_lower_bound"] = report.spark_lower_bound;
    j["ground_set"] = ground_set;
    j["warnings"] = report.warnings;
    return j.dump(2);
}

void save_matrix_csv(const Eigen::MatrixXd& matrix,
                     const std::vector<int>& ground_set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write matrix file: " + path);
    for (size_t c = 0; c < ground_set.size(); ++c)
        out << (c ? "," : "") << ground_set[c];
    out << '\n';
    char buf[32];
    for (int i = 0; i < matrix.rows(); ++i) {
        for (int j = 0; j < matrix.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", matrix(i, j));
            out << (j ? "," : "") << buf;
        }
        out << '\n';
    }
}

} // namespace faultloc
