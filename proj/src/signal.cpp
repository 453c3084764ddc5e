#include "faultloc/signal.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "faultloc/errors.hpp"

namespace faultloc {

TimeGrid::TimeGrid(double horizon, int n_steps) : horizon(horizon), n_steps(n_steps) {
    if (!(horizon > 0.0)) throw InputError("time horizon must be positive");
    if (n_steps < 1) throw InputError("n_steps must be >= 1");
}

double TimeGrid::quad_weight(int k) const {
    const double h = dt();
    return (k == 0 || k == n_steps) ? 0.5 * h : h;
}

Signal::Signal(TimeGrid grid, std::vector<int> ids)
    : grid(grid), channel_ids(std::move(ids)),
      values(Eigen::MatrixXd::Zero(grid.n_points(), channel_ids.size())) {}

Signal::Signal(TimeGrid grid, std::vector<int> ids, Eigen::MatrixXd vals)
    : grid(grid), channel_ids(std::move(ids)), values(std::move(vals)) {
    if (values.rows() != grid.n_points() ||
        values.cols() != static_cast<Eigen::Index>(channel_ids.size()))
        throw InputError("signal value matrix does not match grid/channels");
}

bool Signal::has_channel(int id) const {
    return std::find(channel_ids.begin(), channel_ids.end(), id) != channel_ids.end();
}

int Signal::channel_index(int id) const {
    auto it = std::find(channel_ids.begin(), channel_ids.end(), id);
    if (it == channel_ids.end())
        throw InputError("signal has no channel " + std::to_string(id));
    return static_cast<int>(it - channel_ids.begin());
}

Eigen::VectorXd Signal::channel(int id) const { return values.col(channel_index(id)); }

namespace {

void check_compatible(const Signal& a, const Signal& b) {
    if (!(a.grid == b.grid) || a.channel_ids != b.channel_ids)
        throw InputError("signals have mismatched grids or channels");
}

} // namespace

Signal& Signal::operator+=(const Signal& other) {
    check_compatible(*this, other);
    values += other.values;
    return *this;
}

Signal& Signal::operator-=(const Signal& other) {
    check_compatible(*this, other);
    values -= other.values;
    return *this;
}

Signal& Signal::operator*=(double scale) {
    values *= scale;
    return *this;
}

Signal operator+(Signal lhs, const Signal& rhs) { return lhs += rhs; }
Signal operator-(Signal lhs, const Signal& rhs) { return lhs -= rhs; }
Signal operator*(double scale, Signal sig) { return sig *= scale; }

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void save_signal_csv(const Signal& sig, const std::string& path,
                     const std::string& prefix) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write signal file: " + path);
    out << "t";
    for (int id : sig.channel_ids) out << ',' << prefix << id;
    out << '\n';
    for (int k = 0; k < sig.grid.n_points(); ++k) {
        out << format_double(sig.grid.time_at(k));
        for (int c = 0; c < sig.channel_count(); ++c)
            out << ',' << format_double(sig.values(k, c));
        out << '\n';
    }
}

Signal load_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open signal file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty signal file: " + path);

    std::vector<int> ids;
    {
        std::stringstream header(line);
        std::string cell;
        if (!std::getline(header, cell, ',') || cell != "t")
            throw InputError("signal CSV must start with a t column");
        while (std::getline(header, cell, ',')) {
            const auto underscore = cell.find('_');
            if (underscore == std::string::npos)
                throw InputError("signal column name must look like w_<id>: " + cell);
            ids.push_back(std::stoi(cell.substr(underscore + 1)));
        }
    }

    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        times.push_back(std::stod(cell));
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != ids.size())
            throw InputError("signal CSV row width mismatch in " + path);
        rows.push_back(std::move(vals));
    }
    if (times.size() < 2) throw InputError("signal CSV needs at least two rows");

    TimeGrid grid(times.back(), static_cast<int>(times.size()) - 1);
    Eigen::MatrixXd values(grid.n_points(), ids.size());
    for (int k = 0; k < grid.n_points(); ++k)
        for (size_t c = 0; c < ids.size(); ++c) values(k, c) = rows[k][c];
    return Signal(grid, std::move(ids), std::move(values));
}

} // namespace faultloc
