#include "framelab/signal_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace framelab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": cannot parse number '" + s + "'");
  }
}

long parse_long(const std::string& s, const std::string& where) {
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": cannot parse integer '" + s + "'");
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SampledSignal read_signal_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || split(line, ',').size() != 3)
    throw std::runtime_error(path + ": expected header 'x,re,im'");

  std::vector<double> xs;
  std::vector<cplx> samples;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3)
      throw std::runtime_error(path + ": row " + std::to_string(row) + " is not x,re,im");
    const std::string where = path + ":" + std::to_string(row);
    xs.push_back(parse_double(fields[0], where));
    samples.emplace_back(parse_double(fields[1], where), parse_double(fields[2], where));
  }
  if (xs.size() < 2) throw std::runtime_error(path + ": need at least 2 samples");

  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(dx > 0.0)) throw std::runtime_error(path + ": x must be increasing");
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double step = xs[k] - xs[k - 1];
    if (std::abs(step - dx) > 1e-9 * std::abs(dx))
      throw std::runtime_error(path + ": non-uniform spacing at row " + std::to_string(k + 2));
  }
  return SampledSignal(Grid{xs.front(), dx, xs.size()}, std::move(samples));
}

void write_signal_csv(const std::string& path, const SampledSignal& f) {
  std::ofstream out = open_out(path);
  out << "x,re,im\n";
  for (std::size_t k = 0; k < f.size(); ++k)
    out << format_double(f.grid.point(k)) << ',' << format_double(f.samples[k].real())
        << ',' << format_double(f.samples[k].imag()) << '\n';
}

std::string frame_kind_name(FrameKind kind) {
  return kind == FrameKind::time ? "time" : "frequency";
}

FrameKind frame_kind_from_name(const std::string& name) {
  if (name == "time") return FrameKind::time;
  if (name == "frequency") return FrameKind::frequency;
  throw std::runtime_error("unknown frame kind '" + name + "' (time|frequency)");
}

void write_table(const std::string& csv_path, const std::string& json_path,
                 const FrameConfig& cfg, const CoefficientTable& table,
                 const Grid& grid) {
  {
    std::ofstream out = open_out(csv_path);
    out << "n,m,re,im\n";
    for (long n = table.window.n1; n <= table.window.n2; ++n)
      for (long m = table.window.m1; m <= table.window.m2; ++m) {
        const cplx c = table.at(n, m);
        out << n << ',' << m << ',' << format_double(c.real()) << ','
            << format_double(c.imag()) << '\n';
      }
  }

  ordered_json j;
  j["config"] = {{"A", cfg.A},   {"B", cfg.B},   {"a0", cfg.a0}, {"b0", cfg.b0},
                 {"L", cfg.L},   {"q0", cfg.q0}, {"chi", cfg.chi},
                 {"eps", cfg.eps}, {"p0", cfg.p0()}};
  j["kind"] = frame_kind_name(table.kind);
  j["window"] = {{"n1", table.window.n1}, {"n2", table.window.n2},
                 {"m1", table.window.m1}, {"m2", table.window.m2}};
  j["frame_constant"] = frame_constant(cfg);
  j["grid"] = {{"x0", grid.x0}, {"dx", grid.dx}, {"count", grid.count}};

  std::ofstream out = open_out(json_path);
  out << j.dump(2) << '\n';
}

TableBundle read_table(const std::string& csv_path, const std::string& json_path) {
  ordered_json j;
  {
    std::ifstream in = open_in(json_path);
    in >> j;
  }

  TableBundle bundle;
  const auto& c = j.at("config");
  bundle.cfg = FrameConfig{c.at("A"),  c.at("B"),   c.at("a0"),
                           c.at("b0"), c.at("L"),   c.at("q0"),
                           c.at("chi"), c.at("eps")};
  const auto& w = j.at("window");
  bundle.table.window = IndexWindow{w.at("n1"), w.at("n2"), w.at("m1"), w.at("m2")};
  bundle.table.kind = frame_kind_from_name(j.at("kind"));
  bundle.table.eps = bundle.cfg.eps;
  bundle.frame_const = j.at("frame_constant");
  const auto& g = j.at("grid");
  bundle.grid = Grid{g.at("x0"), g.at("dx"), g.at("count")};
  bundle.table.entries.assign(bundle.table.window.size(), cplx{});

  std::ifstream in = open_in(csv_path);
  std::string line;
  if (!std::getline(in, line) || split(line, ',').size() != 4)
    throw std::runtime_error(csv_path + ": expected header 'n,m,re,im'");
  std::size_t row = 1, seen = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4)
      throw std::runtime_error(csv_path + ": row " + std::to_string(row) + " is not n,m,re,im");
    const std::string where = csv_path + ":" + std::to_string(row);
    const long n = parse_long(fields[0], where);
    const long m = parse_long(fields[1], where);
    bundle.table.at(n, m) =
        cplx{parse_double(fields[2], where), parse_double(fields[3], where)};
    ++seen;
  }
  if (seen != bundle.table.window.size())
    throw std::runtime_error(csv_path + ": table does not fill the sidecar window");
  return bundle;
}

}  // namespace framelab
