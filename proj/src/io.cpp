#include "hotspot/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hotspot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return false;
  return std::isfinite(out);
}

[[noreturn]] void fail_line(const std::string& what, std::size_t line_no) {
  throw std::runtime_error(what + " at line " + std::to_string(line_no));
}

// Splits text into lines, LF or CRLF, calling fn(line, line_no) for each
// nonempty line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    fn(line, line_no);
  }
}

}  // namespace

Trajectory parse_trajectory(std::string_view text) {
  std::vector<Vertex> vertices;
  bool first_line = true;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (first_line) {
      first_line = false;
      // optional header
      std::string lowered(trim(line));
      for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      lowered.erase(std::remove_if(lowered.begin(), lowered.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                    lowered.end());
      if (lowered == "t,x,y") return;
    }
    double vals[3];
    std::size_t field = 0;
    std::string_view rest = line;
    while (field < 3) {
      std::size_t comma = rest.find(',');
      std::string_view piece = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      if (!parse_double(piece, vals[field])) fail_line("malformed row", line_no);
      ++field;
      if (comma == std::string_view::npos) {
        rest = {};
        break;
      }
      rest = rest.substr(comma + 1);
    }
    if (field != 3 || !trim(rest).empty()) fail_line("malformed row", line_no);
    if (!vertices.empty() && !(vertices.back().tstamp < vals[0])) {
      fail_line("non-increasing time", line_no);
    }
    vertices.push_back(Vertex{vals[0], Point{vals[1], vals[2]}});
  });
  if (vertices.empty()) throw std::runtime_error("empty trajectory file");
  return Trajectory(std::move(vertices));
}

Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trajectory file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trajectory(buf.str());
}

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string serialize_trajectory(const Trajectory& traj) {
  std::string out = "t,x,y\n";
  for (const Vertex& v : traj.vertices()) {
    append_number(out, v.tstamp);
    out += ',';
    append_number(out, v.loc.x);
    out += ',';
    append_number(out, v.loc.y);
    out += '\n';
  }
  return out;
}

void serialize_trajectory(const Trajectory& traj, std::ostream& out) {
  out << serialize_trajectory(traj);
}

Trajectory generate(std::size_t n, std::uint64_t seed, const GenParams& params) {
  if (n == 0) throw std::invalid_argument("trajectory size must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coord(0.0, params.box_size);
  std::uniform_real_distribution<double> dt_dist(0.5, 1.5);

  std::vector<Vertex> vertices;
  vertices.reserve(n);
  double t = 0.0;
  Point pos{coord(rng), coord(rng)};
  vertices.push_back(Vertex{t, pos});

  enum class Mode { travel, dwell };
  Mode mode = Mode::travel;
  Point waypoint{coord(rng), coord(rng)};
  Point dwell_center = pos;
  std::size_t mode_steps_left = 0;

  auto pick_mode = [&] {
    if (unit(rng) < params.dwell_fraction) {
      if (mode != Mode::dwell) dwell_center = pos;  // contiguous dwells share a center
      mode = Mode::dwell;
      mode_steps_left =
          1 + static_cast<std::size_t>(unit(rng) * 2.0 * params.mean_dwell_steps);
    } else {
      mode = Mode::travel;
      waypoint = Point{coord(rng), coord(rng)};
      mode_steps_left = 1 + static_cast<std::size_t>(unit(rng) * 10.0);
    }
  };
  pick_mode();

  while (vertices.size() < n) {
    double dt = dt_dist(rng);
    t += dt;
    if (mode == Mode::dwell) {
      double r = params.dwell_radius;
      pos = Point{dwell_center.x + (2.0 * unit(rng) - 1.0) * r,
                  dwell_center.y + (2.0 * unit(rng) - 1.0) * r};
    } else {
      double dx = waypoint.x - pos.x;
      double dy = waypoint.y - pos.y;
      double dist = std::hypot(dx, dy);
      double step = std::min(dist, params.max_speed * dt * (0.25 + 0.75 * unit(rng)));
      if (dist < 1e-6) {
        waypoint = Point{coord(rng), coord(rng)};
      } else {
        pos = Point{pos.x + dx / dist * step, pos.y + dy / dist * step};
      }
    }
    vertices.push_back(Vertex{t, pos});
    if (mode_steps_left == 0 || --mode_steps_left == 0) pick_mode();
  }
  return Trajectory(std::move(vertices));
}

std::vector<Window> parse_query_batch(std::string_view text) {
  std::vector<Window> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::istringstream ss{std::string(line)};
    std::string a, b, extra;
    ss >> a >> b;
    double x, y;
    if (!parse_double(a, x) || !parse_double(b, y) || (ss >> extra)) {
      fail_line("malformed query row", line_no);
    }
    out.push_back(Window{x, y});
  });
  return out;
}

}  // namespace hotspot
