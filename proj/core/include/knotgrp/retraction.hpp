#pragma once

// Closed-form retraction of the punctured sector onto its two bounding
// radii, and a sampled verification of its defining properties.
//
// The region R is the closed unit-disk sector between the rays at polar
// angles lambda and pi - lambda, with the puncture N = (0, 1) removed. The
// map sends M = (x0, y0) along the circle through M and N centred on the
// x-axis until it meets OP (x0 > 0) or OQ (x0 < 0), where
// P = (cos lambda, sin lambda) and Q = (-cos lambda, sin lambda). Points on
// the y-axis go to the origin.
//
// With t = tan lambda, q = x0^2 + y0^2 - 1 and
// D = q^2 + 4 x0^2 (t^2 + 1), both branches are
//   x = (q + sqrt(D)) / (2 x0 (t^2 + 1)),   y = +-t x,
// with + for x0 > 0 and - for x0 < 0. Note the root is +sqrt(D) on both
// sides: with -sqrt(D) on the x0 < 0 branch, points of OQ are not fixed
// (the intersection lands on the opposite ray). x is evaluated as
// 2 x0 / (sqrt(D) - q), the same quantity without cancellation near the
// y-axis.

#include <cstddef>
#include <string>

namespace knotgrp::geometry {

inline constexpr double kRegionTolerance = 1e-12;
inline constexpr double kAxisTolerance = 1e-12;
inline constexpr double kCheckTolerance = 1e-9;
inline constexpr double kPunctureExclusion = 1e-6;
inline constexpr double kContinuityFactor = 50.0;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point p, Point q);

class RetractionParams {
 public:
  // Requires 0 < lambda < pi/2; throws DomainError.
  explicit RetractionParams(double lambda);

  double lambda() const noexcept { return lambda_; }
  Point p() const;
  Point q() const;

 private:
  double lambda_;
};

bool in_region(const RetractionParams& params, Point p,
               double tol = kRegionTolerance);
double distance_to_segments(const RetractionParams& params, Point p);

// Throws DomainError at the puncture or outside the region.
Point retract(const RetractionParams& params, Point p);

struct RetractionReport {
  double lambda = 0.0;
  std::size_t grid = 0;
  std::size_t samples = 0;
  double max_image_distance = 0.0;    // image to OP u OQ
  double max_fixed_point_error = 0.0; // |r(p) - p| over segment samples
  std::size_t spurious_fixed_points = 0;  // off-segment samples with r(p) = p
  double max_idempotence_error = 0.0;
  double max_continuity_ratio = 0.0;  // image step / sample step

  bool image_ok() const { return max_image_distance <= kCheckTolerance; }
  bool fixed_points_ok() const {
    return max_fixed_point_error <= kCheckTolerance && spurious_fixed_points == 0;
  }
  bool idempotence_ok() const { return max_idempotence_error <= kCheckTolerance; }
  bool continuity_ok() const { return max_continuity_ratio <= kContinuityFactor; }
  bool passed() const {
    return image_ok() && fixed_points_ok() && idempotence_ok() && continuity_ok();
  }
};

// Samples a grid x grid polar lattice of the region (radii i/(grid-1),
// angles from lambda to pi - lambda), skipping samples within 1e-6 of the
// puncture. Failures are reported, never thrown. Requires grid >= 2.
RetractionReport verify_retraction(const RetractionParams& params, std::size_t grid);

std::string format_report(const RetractionReport& report);
std::string format_report_kv(const RetractionReport& report);

}  // namespace knotgrp::geometry
