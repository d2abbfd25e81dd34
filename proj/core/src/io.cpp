#include "sric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sric {

namespace {
std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}
}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const auto& c : traj.columns) {
    out += ",";
    out += c;
  }
  out += "\n";
  for (const auto& s : traj.samples) {
    out += format_double(s.t);
    for (double v : s.state) {
      out += ",";
      out += format_double(v);
    }
    out += "\n";
  }
  return out;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  f << trajectory_to_csv(traj);
}

Trajectory read_trajectory_csv(const std::string& path, const std::string& equation_label) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open trajectory file '" + path + "'");
  Trajectory traj;
  traj.equation = equation_label;

  std::string line;
  if (!std::getline(f, line)) throw ValidationError("trajectory file is empty");
  std::stringstream header(line);
  std::string cell;
  bool first = true;
  while (std::getline(header, cell, ',')) {
    if (first) {
      if (cell != "t") throw ValidationError("trajectory header must start with 't'");
      first = false;
    } else {
      traj.columns.push_back(cell);
    }
  }

  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    TrajectorySample sample;
    std::size_t idx = 0;
    while (std::getline(row, cell, ',')) {
      try {
        const double v = std::stod(cell);
        if (idx == 0) {
          sample.t = v;
        } else {
          sample.state.push_back(v);
        }
      } catch (const std::exception&) {
        throw ValidationError("malformed number '" + cell + "' in trajectory file");
      }
      ++idx;
    }
    if (sample.state.size() != traj.columns.size()) {
      throw ValidationError("trajectory row width does not match header");
    }
    traj.samples.push_back(std::move(sample));
  }
  if (traj.samples.empty()) throw ValidationError("trajectory file has no samples");
  return traj;
}

}  // namespace sric
