#include "hopflift/design_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "hopflift/errors.hpp"

namespace hopflift {
namespace {

using nlohmann::json;

constexpr std::size_t arity_of(Sphere s) {
  switch (s) {
    case Sphere::kS1: return 2;
    case Sphere::kS2: return 3;
    default: return 4;
  }
}

Sphere parse_sphere(const std::string& name) {
  if (name == "s1") return Sphere::kS1;
  if (name == "s2") return Sphere::kS2;
  if (name == "s3") return Sphere::kS3;
  throw ParseError("unknown sphere \"" + name + "\" (expected s1, s2 or s3)");
}

std::vector<std::vector<double>> parse_rows(const json& points, std::size_t arity) {
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (!p.is_array() || p.size() != arity) {
      throw ParseError("point " + std::to_string(rows.size()) + " must be an array of " +
                       std::to_string(arity) + " coordinates");
    }
    std::vector<double> row;
    row.reserve(arity);
    for (const auto& c : p) {
      if (!c.is_number()) throw ParseError("point coordinates must be numbers");
      row.push_back(c.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class P, class Make>
WeightedDesign<P> assemble(const std::vector<std::vector<double>>& rows,
                           const std::vector<double>* weights, const Make& make) {
  std::vector<P> pts;
  pts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      pts.push_back(make(rows[i]));
    } catch (const OffSphereError& e) {
      throw OffSphereError("point " + std::to_string(i) + ": " + e.what());
    }
  }
  if (weights) return WeightedDesign<P>(std::move(pts), *weights);
  return WeightedDesign<P>::with_equal_weights(std::move(pts));
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_row(std::ostream& out, const double* xs, std::size_t n) {
  out << "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ", ";
    out << fmt(xs[i]);
  }
  out << "]";
}

}  // namespace

std::string to_string(Sphere s) {
  switch (s) {
    case Sphere::kS1: return "s1";
    case Sphere::kS2: return "s2";
    default: return "s3";
  }
}

Sphere sphere_of(const AnyDesign& d) {
  switch (d.index()) {
    case 0: return Sphere::kS1;
    case 1: return Sphere::kS2;
    default: return Sphere::kS3;
  }
}

AnyDesign read_design(std::istream& in, const ReadOptions& options) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid design file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("design file must be a JSON object");
  if (!j.contains("sphere") || !j["sphere"].is_string())
    throw ParseError("design file needs a string \"sphere\" field");
  Sphere sphere = parse_sphere(j["sphere"].get<std::string>());
  if (options.expect_sphere && *options.expect_sphere != sphere) {
    throw ParseError("expected a design on " + to_string(*options.expect_sphere) + ", file is on " +
                     to_string(sphere));
  }
  if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw ParseError("design file needs a nonempty \"points\" array");
  auto rows = parse_rows(j["points"], arity_of(sphere));

  std::vector<double> weights;
  const std::vector<double>* weights_ptr = nullptr;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw ParseError("\"weights\" must be an array");
    for (const auto& w : j["weights"]) {
      if (!w.is_number()) throw ParseError("weights must be numbers");
      weights.push_back(w.get<double>());
    }
    weights_ptr = &weights;
  }

  bool renorm = options.renormalize;
  switch (sphere) {
    case Sphere::kS1:
      return assemble<PointS1>(rows, weights_ptr, [renorm](const std::vector<double>& r) {
        Complex z(r[0], r[1]);
        return renorm ? PointS1::renormalized(z) : PointS1(z);
      });
    case Sphere::kS2:
      return assemble<PointS2>(rows, weights_ptr, [renorm](const std::vector<double>& r) {
        Complex eta(r[1], r[2]);
        return renorm ? PointS2::renormalized(r[0], eta) : PointS2(r[0], eta);
      });
    default:
      return assemble<PointS3>(rows, weights_ptr, [renorm](const std::vector<double>& r) {
        Complex a(r[0], r[1]), b(r[2], r[3]);
        return renorm ? PointS3::renormalized(a, b) : PointS3(a, b);
      });
  }
}

AnyDesign read_design_file(const std::string& path, const ReadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  return read_design(in, options);
}

void write_design(std::ostream& out, const AnyDesign& d, const WriteOptions& options) {
  out << "{\n  \"sphere\": \"" << to_string(sphere_of(d)) << "\",\n  \"points\": [\n";
  std::size_t count = 0;
  bool equal_weight = true;
  const std::vector<double>* weights = nullptr;
  std::visit(
      [&](const auto& design) {
        count = design.size();
        equal_weight = design.is_equal_weight();
        weights = &design.weights();
        for (std::size_t i = 0; i < count; ++i) {
          const auto& p = design.points()[i];
          double xs[4];
          std::size_t n;
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, PointS1>) {
            xs[0] = p.z().real();
            xs[1] = p.z().imag();
            n = 2;
          } else if constexpr (std::is_same_v<P, PointS2>) {
            xs[0] = p.xi();
            xs[1] = p.eta().real();
            xs[2] = p.eta().imag();
            n = 3;
          } else {
            xs[0] = p.a().real();
            xs[1] = p.a().imag();
            xs[2] = p.b().real();
            xs[3] = p.b().imag();
            n = 4;
          }
          out << "    ";
          write_row(out, xs, n);
          out << (i + 1 < count ? ",\n" : "\n");
        }
      },
      d);
  out << "  ]";
  if (!equal_weight) {
    out << ",\n  \"weights\": [\n";
    for (std::size_t i = 0; i < weights->size(); ++i)
      out << "    " << fmt((*weights)[i]) << (i + 1 < weights->size() ? ",\n" : "\n");
    out << "  ]";
  }
  if (!options.meta_json.empty()) {
    json meta;
    try {
      meta = json::parse(options.meta_json);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid meta JSON: ") + e.what());
    }
    out << ",\n  \"meta\": " << meta.dump();
  }
  out << "\n}\n";
}

void write_design_file(const std::string& path, const AnyDesign& d, const WriteOptions& options) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  write_design(out, d, options);
  out.flush();
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

}  // namespace hopflift
