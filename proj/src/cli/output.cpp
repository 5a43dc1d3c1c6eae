#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "multitime/cli.hpp"

namespace multitime::cli {

namespace {

ProperTimeKind parse_kind(const std::string& s) {
  if (s == "tau") return ProperTimeKind::tau;
  if (s == "sigma") return ProperTimeKind::sigma;
  if (s == "phi") return ProperTimeKind::phi;
  throw ConfigurationError("unknown world-line kind '" + s + "'");
}

double parse_number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigurationError("malformed number '" + s + "'");
  }
  return v;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid "-0.00"
  if (std::strcmp(buf, "-0.00") == 0) return "0.00";
  return buf;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string worldlines_csv(const WorldlineSet& set) {
  std::string s = kCsvHeader;
  s += '\n';
  for (const auto& line : set.lines) {
    for (const auto& sample : line.samples) {
      s += to_string(line.kind);
      s += ',';
      s += format_number(sample.proper_time);
      for (int i = 0; i < 6; ++i) {
        s += ',';
        s += format_number(sample.event[i]);
      }
      s += '\n';
    }
  }
  return s;
}

std::vector<Worldline> parse_worldlines_csv(const std::string& text) {
  std::istringstream in(text);
  std::string row;
  if (!std::getline(in, row) || row != kCsvHeader) {
    throw ConfigurationError("world-line CSV must start with the header " +
                             std::string(kCsvHeader));
  }
  std::vector<Worldline> lines;
  while (std::getline(in, row)) {
    if (row.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) cells.push_back(cell);
    if (cells.size() != 8) throw ConfigurationError("world-line CSV rows need 8 columns");
    const ProperTimeKind kind = parse_kind(cells[0]);
    if (lines.empty() || lines.back().kind != kind) lines.push_back({kind, {}});
    Vector6d x;
    for (int i = 0; i < 6; ++i) x[i] = parse_number(cells[i + 2]);
    lines.back().samples.push_back({parse_number(cells[1]), Event6(x)});
  }
  return lines;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

std::string render_svg(const std::vector<Panel>& panels) {
  constexpr double kPanelWidth = 400.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 40.0;
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(1, panels.size()));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed(width) << ' '
     << fixed(kHeight) << "\" width=\"" << fixed(width) << "\" height=\"" << fixed(kHeight)
     << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width) << "\" height=\"" << fixed(kHeight)
     << "\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& p = panels[k];
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    const auto grow = [&](const Eigen::Vector2d& v) {
      xmin = std::min(xmin, v.x());
      xmax = std::max(xmax, v.x());
      ymin = std::min(ymin, v.y());
      ymax = std::max(ymax, v.y());
    };
    for (const auto& l : p.lines) std::for_each(l.points.begin(), l.points.end(), grow);
    std::for_each(p.markers.begin(), p.markers.end(), grow);
    if (!(xmax > xmin)) {
      xmin -= 1.0;
      xmax += 1.0;
    }
    if (!(ymax > ymin)) {
      ymin -= 1.0;
      ymax += 1.0;
    }
    const double x0 = kPanelWidth * static_cast<double>(k) + kMargin;
    const double span = kPanelWidth - 2.0 * kMargin;
    const auto sx = [&](double x) { return x0 + span * (x - xmin) / (xmax - xmin); };
    const auto sy = [&](double y) { return kHeight - kMargin - span * (y - ymin) / (ymax - ymin); };

    os << "<g>\n";
    os << "<rect x=\"" << fixed(x0) << "\" y=\"" << fixed(kMargin) << "\" width=\"" << fixed(span)
       << "\" height=\"" << fixed(span) << "\" fill=\"none\" stroke=\"#888\"/>\n";
    os << "<text x=\"" << fixed(x0 + 0.5 * span) << "\" y=\"" << fixed(kMargin - 12.0)
       << "\" text-anchor=\"middle\" font-size=\"14\">" << p.title << "</text>\n";
    os << "<text x=\"" << fixed(x0 + 0.5 * span) << "\" y=\"" << fixed(kHeight - 10.0)
       << "\" text-anchor=\"middle\" font-size=\"12\">" << p.x_label << "</text>\n";
    os << "<text x=\"" << fixed(x0 - 28.0) << "\" y=\"" << fixed(kHeight * 0.5)
       << "\" font-size=\"12\">" << p.y_label << "</text>\n";
    for (const auto& l : p.lines) {
      if (l.points.empty()) continue;
      os << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"1\" points=\"";
      for (std::size_t i = 0; i < l.points.size(); ++i) {
        if (i) os << ' ';
        os << fixed(sx(l.points[i].x())) << ',' << fixed(sy(l.points[i].y()));
      }
      os << "\"/>\n";
    }
    for (const auto& m : p.markers) {
      os << "<circle cx=\"" << fixed(sx(m.x())) << "\" cy=\"" << fixed(sy(m.y()))
         << "\" r=\"2.5\" fill=\"black\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace multitime::cli
