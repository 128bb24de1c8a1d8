#pragma once

#include <Eigen/Core>

#include "orthoplane/errors.hpp"

namespace orthoplane {

/// A scene plane n^T w = delta with unit normal n, in camera coordinates
/// (x right, y down, z forward).
struct Plane {
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  double delta = 1.0;  // signed distance to the camera origin, meters

  Plane() = default;
  Plane(const Eigen::Vector3d& n, double d) : normal(n), delta(d) { validate(); }

  void validate() const {
    if (std::abs(normal.norm() - 1.0) > 1e-12)
      throw Error("Plane: normal must be unit length");
    if (!std::isfinite(delta)) throw Error("Plane: non-finite distance");
  }

  static Plane vertical(double depth) { return Plane(Eigen::Vector3d::UnitZ(), depth); }
  static Plane ground(double height) { return Plane(Eigen::Vector3d::UnitY(), height); }
};

enum class PlaneKind { Vertical, Ground };

}  // namespace orthoplane
