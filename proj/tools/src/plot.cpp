#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "zoopt/csv.hpp"
#include "zoopt/error.hpp"
#include "zoopt/experiment.hpp"

namespace zoopt::experiment {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Axis {
  double lo;
  double hi;
  bool log;

  double unit(double v) const {
    if (log) v = std::log10(v);
    return hi == lo ? 0.5 : (v - lo) / (hi - lo);
  }
};

Axis make_axis(const std::vector<double>& values, bool log) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values) {
    const double t = log ? std::log10(v) : v;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (log) {
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi == lo) hi = lo + 1.0;
  } else if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, log};
}

class Canvas {
 public:
  Canvas(std::string title, std::string xlabel, std::string ylabel, Axis x, Axis y)
      : x_(x), y_(y) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
         << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
    axes(xlabel, ylabel);
  }

  double px(double v) const { return kLeft + x_.unit(v) * (kWidth - kLeft - kRight); }
  double py(double v) const { return kHeight - kBottom - y_.unit(v) * (kHeight - kTop - kBottom); }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys) {
    out_ << "<polyline class=\"series\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
            "points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out_ << (i ? " " : "") << num(px(xs[i])) << ',' << num(py(ys[i]));
    }
    out_ << "\"/>\n";
  }

  void marker(double x, double y) {
    out_ << "<circle class=\"marker\" cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
         << "\" r=\"3.5\" fill=\"#d62728\" fill-opacity=\"0.7\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void axes(const std::string& xlabel, const std::string& ylabel) {
    const double x0 = kLeft;
    const double x1 = kWidth - kRight;
    const double y0 = kHeight - kBottom;
    const double y1 = kTop;
    out_ << "<g stroke=\"black\" stroke-width=\"1\">\n"
         << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
         << "\"/>\n"
         << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
         << "\"/>\n</g>\n";
    out_ << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (double t : ticks(x_)) {
      out_ << "<text x=\"" << num(px(t)) << "\" y=\"" << y0 + 16
           << "\" text-anchor=\"middle\">" << label(t) << "</text>\n";
    }
    for (double t : ticks(y_)) {
      out_ << "<text x=\"" << x0 - 6 << "\" y=\"" << num(py(t) + 4)
           << "\" text-anchor=\"end\">" << label(t) << "</text>\n";
    }
    out_ << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 14
         << "\" text-anchor=\"middle\">" << xlabel << "</text>\n"
         << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" "
         << "transform=\"rotate(-90 18 " << (y0 + y1) / 2 << ")\">" << ylabel << "</text>\n"
         << "</g>\n";
  }

  static std::vector<double> ticks(const Axis& a) {
    std::vector<double> out;
    if (a.log) {
      for (double e = a.lo; e <= a.hi + 1e-9; e += 1.0) out.push_back(std::pow(10.0, e));
    } else {
      for (int i = 0; i <= 4; ++i) out.push_back(a.lo + (a.hi - a.lo) * i / 4.0);
    }
    return out;
  }

  Axis x_;
  Axis y_;
  std::ostringstream out_;
};

bool has_column(const CsvTable& t, const std::string& name) {
  return std::find(t.header.begin(), t.header.end(), name) != t.header.end();
}

void require_rows(const CsvTable& t) {
  if (t.rows.empty()) throw ParseError(2, "no data rows after the header");
}

std::string render_trace(const CsvTable& t) {
  require_rows(t);
  const std::size_t ci = t.column("iter");
  const std::size_t cg = t.column("gap");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    xs.push_back(parse_number(t.rows[r][ci], t.row_lines[r]));
    ys.push_back(parse_number(t.rows[r][cg], t.row_lines[r]));
  }
  Canvas canvas("Optimality gap of the averaged iterate", "iteration", "f(x) - f*",
                make_axis(xs, false), make_axis(ys, false));
  canvas.polyline(xs, ys);
  return canvas.finish();
}

// Log axes cannot show zero: zero deltas sit one decade below the smallest
// positive delta and zero gaps one decade below the smallest positive gap.
std::vector<double> lift_zeros(std::vector<double> v) {
  double smallest = std::numeric_limits<double>::infinity();
  for (double x : v) {
    if (x > 0.0) smallest = std::min(smallest, x);
  }
  const double floor = std::isfinite(smallest) ? smallest / 10.0 : 1e-3;
  for (double& x : v) {
    if (!(x > 0.0)) x = floor;
  }
  return v;
}

std::string render_sweep(const CsvTable& t) {
  require_rows(t);
  const std::size_t cd = t.column("delta");
  const std::size_t cg = t.column("final_gap");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    xs.push_back(parse_number(t.rows[r][cd], t.row_lines[r]));
    ys.push_back(parse_number(t.rows[r][cg], t.row_lines[r]));
  }
  xs = lift_zeros(std::move(xs));
  ys = lift_zeros(std::move(ys));
  Canvas canvas("Final gap against noise level", "noise level delta", "final gap",
                make_axis(xs, true), make_axis(ys, true));
  for (std::size_t i = 0; i < xs.size(); ++i) canvas.marker(xs[i], ys[i]);
  return canvas.finish();
}

}  // namespace

std::string render_plot(const CsvTable& table) {
  if (has_column(table, "iter") && has_column(table, "gap")) return render_trace(table);
  if (has_column(table, "delta") && has_column(table, "final_gap")) return render_sweep(table);
  throw ParseError(1, "unrecognised CSV schema (expected a trace or sweep header)");
}

void emit_plot(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path) {
  std::ifstream in(csv_path);
  if (!in) throw IoError(csv_path.string(), "cannot open CSV");
  const std::string svg = render_plot(read_csv(in));
  std::ofstream out(svg_path, std::ios::binary);
  if (!out) throw IoError(svg_path.string(), "cannot open for writing");
  out << svg;
  if (!out) throw IoError(svg_path.string(), "write failed");
}

}  // namespace zoopt::experiment
