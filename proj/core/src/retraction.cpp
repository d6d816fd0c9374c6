#include "knotgrp/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "knotgrp/error.hpp"

namespace knotgrp::geometry {

double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

RetractionParams::RetractionParams(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0 && lambda < std::numbers::pi / 2)) {
    throw DomainError("lambda must lie in (0, pi/2)");
  }
}

Point RetractionParams::p() const { return {std::cos(lambda_), std::sin(lambda_)}; }
Point RetractionParams::q() const { return {-std::cos(lambda_), std::sin(lambda_)}; }

bool in_region(const RetractionParams& params, Point p, double tol) {
  double r = std::hypot(p.x, p.y);
  if (r > 1.0 + tol) return false;
  if (r <= tol) return true;
  double theta = std::atan2(p.y, p.x);
  double lo = params.lambda();
  double hi = std::numbers::pi - params.lambda();
  // Angular slack scaled so the linear tolerance holds near the origin.
  double slack = tol / r;
  return theta >= lo - slack && theta <= hi + slack;
}

namespace {

double distance_to_segment(Point p, Point end) {
  // Segment from the origin to `end`, |end| = 1.
  double s = std::clamp(p.x * end.x + p.y * end.y, 0.0, 1.0);
  return distance(p, {s * end.x, s * end.y});
}

}  // namespace

double distance_to_segments(const RetractionParams& params, Point p) {
  return std::min(distance_to_segment(p, params.p()),
                  distance_to_segment(p, params.q()));
}

Point retract(const RetractionParams& params, Point p) {
  if (distance(p, {0.0, 1.0}) <= kRegionTolerance) {
    throw DomainError("the puncture (0, 1) is not in the domain");
  }
  if (!in_region(params, p)) {
    throw DomainError("point lies outside the sector region");
  }
  if (std::abs(p.x) < kAxisTolerance) return {0.0, 0.0};
  const double t = std::tan(params.lambda());
  const double q = p.x * p.x + p.y * p.y - 1.0;
  const double disc = q * q + 4.0 * p.x * p.x * (t * t + 1.0);
  // (q + sqrt(D)) / (2 x0 (t^2 + 1)) rationalised; q <= 0 in the region.
  const double x = 2.0 * p.x / (std::sqrt(disc) - q);
  return p.x > 0 ? Point{x, t * x} : Point{x, -t * x};
}

RetractionReport verify_retraction(const RetractionParams& params,
                                   std::size_t grid) {
  if (grid < 2) throw DomainError("grid must be at least 2");
  RetractionReport rep;
  rep.lambda = params.lambda();
  rep.grid = grid;

  const double lo = params.lambda();
  const double hi = std::numbers::pi - params.lambda();
  const Point puncture{0.0, 1.0};

  struct Sample {
    Point p;
    Point image;
  };
  std::vector<std::optional<Sample>> samples(grid * grid);
  auto at = [&](std::size_t i, std::size_t j) -> std::optional<Sample>& {
    return samples[i * grid + j];
  };

  for (std::size_t i = 0; i < grid; ++i) {
    const double radius = static_cast<double>(i) / static_cast<double>(grid - 1);
    for (std::size_t j = 0; j < grid; ++j) {
      const double theta =
          lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(grid - 1);
      Point p{radius * std::cos(theta), radius * std::sin(theta)};
      if (distance(p, puncture) < kPunctureExclusion) continue;
      Point image = retract(params, p);
      at(i, j) = Sample{p, image};
      ++rep.samples;

      rep.max_image_distance =
          std::max(rep.max_image_distance, distance_to_segments(params, image));
      Point twice = retract(params, image);
      rep.max_idempotence_error =
          std::max(rep.max_idempotence_error, distance(twice, image));

      const bool on_segment = i == 0 || j == 0 || j == grid - 1;
      const double moved = distance(image, p);
      if (on_segment) {
        rep.max_fixed_point_error = std::max(rep.max_fixed_point_error, moved);
      } else if (moved <= kCheckTolerance &&
                 distance_to_segments(params, p) > kCheckTolerance) {
        ++rep.spurious_fixed_points;
      }
    }
  }

  auto side = [](Point p) {
    if (p.x >= kAxisTolerance) return 1;
    if (p.x <= -kAxisTolerance) return -1;
    return 0;
  };
  auto compare = [&](const std::optional<Sample>& u, const std::optional<Sample>& v) {
    if (!u || !v) return;
    int s = side(u->p);
    if (s == 0 || s != side(v->p)) return;
    double step = distance(u->p, v->p);
    if (step == 0.0) return;
    rep.max_continuity_ratio =
        std::max(rep.max_continuity_ratio, distance(u->image, v->image) / step);
  };
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      if (i + 1 < grid) compare(at(i, j), at(i + 1, j));
      if (j + 1 < grid) compare(at(i, j), at(i, j + 1));
    }
  }
  return rep;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

std::string format_report(const RetractionReport& r) {
  char lambda[32];
  std::snprintf(lambda, sizeof lambda, "%.12g", r.lambda);
  std::string out;
  out += "lambda: " + std::string(lambda) + "\n";
  out += "grid: " + std::to_string(r.grid) + "\n";
  out += "samples: " + std::to_string(r.samples) + "\n";
  out += "image on OP u OQ: max distance " + sci(r.max_image_distance) + " " +
         verdict(r.image_ok()) + "\n";
  out += "segment points fixed: max error " + sci(r.max_fixed_point_error) +
         ", spurious fixed points " + std::to_string(r.spurious_fixed_points) +
         " " + verdict(r.fixed_points_ok()) + "\n";
  out += "idempotence: max error " + sci(r.max_idempotence_error) + " " +
         verdict(r.idempotence_ok()) + "\n";
  out += "continuity: max ratio " + sci(r.max_continuity_ratio) + " " +
         verdict(r.continuity_ok()) + "\n";
  out += std::string("result: ") + (r.passed() ? "pass" : "FAIL") + "\n";
  return out;
}

std::string format_report_kv(const RetractionReport& r) {
  char lambda[32];
  std::snprintf(lambda, sizeof lambda, "%.12g", r.lambda);
  std::string out;
  out += "lambda\t" + std::string(lambda) + "\n";
  out += "grid\t" + std::to_string(r.grid) + "\n";
  out += "samples\t" + std::to_string(r.samples) + "\n";
  out += "max_image_distance\t" + sci(r.max_image_distance) + "\n";
  out += "max_fixed_point_error\t" + sci(r.max_fixed_point_error) + "\n";
  out += "spurious_fixed_points\t" + std::to_string(r.spurious_fixed_points) + "\n";
  out += "max_idempotence_error\t" + sci(r.max_idempotence_error) + "\n";
  out += "max_continuity_ratio\t" + sci(r.max_continuity_ratio) + "\n";
  out += std::string("passed\t") + (r.passed() ? "true" : "false") + "\n";
  return out;
}

}  // namespace knotgrp::geometry
