#include "socioeco/csv.hpp"

#include <charconv>
#include <fstream>

#include "socioeco/errors.hpp"

namespace socioeco {

std::vector<std::string> full_state_columns(int n_agents) {
    std::vector<std::string> cols{"t", "x"};
    for (int i = 1; i <= n_agents; ++i) cols.push_back("y" + std::to_string(i));
    return cols;
}

std::vector<std::string> aggregate_columns() {
    return {"t", "z", "u"};
}

std::vector<std::string> shifted_columns() {
    return {"t", "v", "w"};
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const std::vector<std::string>& columns) {
    if (static_cast<int>(columns.size()) != traj.dim() + 1) {
        throw ValidationError("csv: " + std::to_string(columns.size()) + " column names for a " +
                              std::to_string(traj.dim()) + "-dimensional trajectory");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out << ',';
        out << columns[c];
    }
    out << '\n';
    for (std::size_t k = 0; k < traj.samples(); ++k) {
        out << format_double(traj.times[k]);
        const auto& s = traj.states[k];
        for (Eigen::Index i = 0; i < s.size(); ++i) out << ',' << format_double(s(i));
        out << '\n';
    }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const std::vector<std::string>& columns) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    write_trajectory_csv(f, traj, columns);
}

}  // namespace socioeco
