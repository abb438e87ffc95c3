#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "hopflift/design.hpp"

namespace hopflift {

enum class Sphere { kS1, kS2, kS3 };

std::string to_string(Sphere s);

using AnyDesign = std::variant<DesignS1, DesignS2, DesignS3>;

Sphere sphere_of(const AnyDesign& d);

struct ReadOptions {
  std::optional<Sphere> expect_sphere;  // reject other spheres when set
  bool renormalize = false;             // project slightly-off points back instead of failing
};

/// Parses the JSON design format:
///   { "sphere": "s1"|"s2"|"s3", "points": [[...], ...],
///     "weights": [...]?, "meta": {...}? }
/// Point coords are [re,im] on S1, [xi,re_eta,im_eta] on S2,
/// [re_a,im_a,re_b,im_b] on S3. Missing weights mean equal weight. Throws
/// ParseError on malformed input, OffSphereError on points off the sphere.
AnyDesign read_design(std::istream& in, const ReadOptions& options = {});
AnyDesign read_design_file(const std::string& path, const ReadOptions& options = {});

struct WriteOptions {
  std::string meta_json;  // verbatim JSON object for the "meta" field; empty = omit
};

/// Writes the same format with 17 significant digits per coordinate, so a
/// write/read round trip is bitwise exact. The "weights" field is omitted for
/// equal-weight designs.
void write_design(std::ostream& out, const AnyDesign& d, const WriteOptions& options = {});
void write_design_file(const std::string& path, const AnyDesign& d, const WriteOptions& options = {});

}  // namespace hopflift
