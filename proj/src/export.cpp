#include "hopfcm/export.hpp"

#include "hopfcm/errors.hpp"

#include <cstdio>
#include <fstream>

namespace hopfcm {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path.string());
    return os;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory<double>& tr,
                          const std::array<std::string, 3>& names) {
    auto os = open_out(path);
    os << "t," << names[0] << "," << names[1] << "," << names[2] << "\n";
    for (std::size_t i = 0; i < tr.t.size(); ++i)
        os << num(tr.t[i]) << "," << num(tr.x[i][0]) << "," << num(tr.x[i][1]) << "," << num(tr.x[i][2]) << "\n";
    if (!os) throw Error("write failed for " + path.string());
}

std::vector<std::filesystem::path> write_series_csv(const std::filesystem::path& stem, const Trajectory<double>& tr,
                                                    const std::array<std::string, 3>& names) {
    std::vector<std::filesystem::path> out;
    for (int v = 0; v < 3; ++v) {
        std::filesystem::path p = stem;
        p += "_" + names[v] + ".csv";
        auto os = open_out(p);
        os << "t," << names[v] << "\n";
        for (std::size_t i = 0; i < tr.t.size(); ++i) os << num(tr.t[i]) << "," << num(tr.x[i][v]) << "\n";
        if (!os) throw Error("write failed for " + p.string());
        out.push_back(p);
    }
    return out;
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<DisplacementSample<double>>& samples) {
    auto os = open_out(path);
    os << "rho0,dbar\n";
    for (const auto& s : samples) os << num(s.rho0) << "," << num(s.dbar) << "\n";
    if (!os) throw Error("write failed for " + path.string());
}

void write_plot_script(const std::filesystem::path& path, const std::vector<std::filesystem::path>& csv_files,
                       const std::string& title, const std::array<std::string, 3>& names) {
    auto os = open_out(path);
    os << "import csv\n"
          "import matplotlib.pyplot as plt\n\n"
          "files = [\n";
    for (const auto& f : csv_files) os << "    r\"" << f.filename().string() << "\",\n";
    os << "]\n\n"
          "fig = plt.figure()\n"
          "ax = fig.add_subplot(projection=\"3d\")\n"
          "for name in files:\n"
          "    with open(name) as fh:\n"
          "        rows = list(csv.DictReader(fh))\n"
          "    ax.plot([float(r[\"" << names[0] << "\"]) for r in rows],\n"
          "            [float(r[\"" << names[1] << "\"]) for r in rows],\n"
          "            [float(r[\"" << names[2] << "\"]) for r in rows], lw=0.6)\n"
          "ax.set_xlabel(\"" << names[0] << "\")\n"
          "ax.set_ylabel(\"" << names[1] << "\")\n"
          "ax.set_zlabel(\"" << names[2] << "\")\n"
          "ax.set_title(\"" << title << "\")\n"
          "plt.savefig(\"" << path.stem().string() << ".png\", dpi=150)\n";
    if (!os) throw Error("write failed for " + path.string());
}

}  // namespace hopfcm
