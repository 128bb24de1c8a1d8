#include "orthoplane/camera.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace orthoplane {

void Intrinsics::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0)) throw Error("Intrinsics: focal lengths must be positive");
  if (width < 1 || height < 1) throw Error("Intrinsics: image size must be at least 1x1");
  if (!std::isfinite(cx) || !std::isfinite(cy)) throw Error("Intrinsics: non-finite principal point");
}

Eigen::Matrix3d Intrinsics::matrix() const {
  Eigen::Matrix3d k = Eigen::Matrix3d::Identity();
  k(0, 0) = fx;
  k(1, 1) = fy;
  k(0, 2) = cx;
  k(1, 2) = cy;
  return k;
}

Eigen::Matrix3d Intrinsics::inverse_matrix() const {
  Eigen::Matrix3d k = Eigen::Matrix3d::Identity();
  k(0, 0) = 1.0 / fx;
  k(1, 1) = 1.0 / fy;
  k(0, 2) = -cx / fx;
  k(1, 2) = -cy / fy;
  return k;
}

void RigidPose::validate() const {
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error("RigidPose: rotation is not orthonormal");
  if (std::abs(rotation.determinant() - 1.0) > 1e-12)
    throw Error("RigidPose: rotation determinant is not +1");
}

void GeneralPose::validate() const {
  if (std::abs(linear.determinant()) <= 1e-12)
    throw Error("GeneralPose: linear part is singular");
}

void AugmentParams::validate() const {
  if (!(fs > 0.0)) throw Error("AugmentParams: scale factor must be positive");
  if (!std::isfinite(px) || !std::isfinite(py)) throw Error("AugmentParams: non-finite crop center");
}

void StereoRig::validate() const {
  if (!(baseline > 0.0)) throw Error("StereoRig: baseline must be positive");
}

Eigen::Matrix3d resize_crop_matrix(const Intrinsics& intr, const AugmentParams& aug) {
  intr.validate();
  aug.validate();
  Eigen::Matrix3d rc = Eigen::Matrix3d::Identity();
  rc(0, 2) = (intr.cx - aug.px) / intr.fx;
  rc(1, 2) = (intr.cy - aug.py) / intr.fy;
  rc(2, 2) = aug.fs;
  return rc;
}

Eigen::Vector2d resize_crop_pixel(const Intrinsics& intr, const AugmentParams& aug,
                                  const Eigen::Vector2d& u) {
  return {(u.x() - aug.px) / aug.fs + intr.cx, (u.y() - aug.py) / aug.fs + intr.cy};
}

Eigen::Vector2d resize_crop_pixel_inverse(const Intrinsics& intr, const AugmentParams& aug,
                                          const Eigen::Vector2d& u_aug) {
  return {aug.px + aug.fs * (u_aug.x() - intr.cx), aug.py + aug.fs * (u_aug.y() - intr.cy)};
}

namespace {

Eigen::Matrix3d checked_inverse(const Eigen::Matrix3d& rc) {
  if (std::abs(rc.determinant()) <= 1e-12)
    throw InvalidTransformError("world transform is singular");
  return rc.inverse();
}

}  // namespace

Plane rectify_plane(const Plane& plane, const Eigen::Matrix3d& rc) {
  plane.validate();
  const Eigen::Matrix3d rc_inv_t = checked_inverse(rc).transpose();
  const Eigen::Vector3d m = rc_inv_t * plane.normal;
  const double scale = m.norm();
  if (scale <= 0.0 || !std::isfinite(scale))
    throw InvalidTransformError("rectify_plane: degenerate normal image");
  Plane out;
  out.normal = m / scale;
  out.delta = plane.delta / scale;
  return out;
}

GeneralPose rectify_pose(const RigidPose& pose, const Eigen::Matrix3d& rc) {
  const Eigen::Matrix3d rc_inv = checked_inverse(rc);
  GeneralPose out;
  out.linear = rc * pose.rotation * rc_inv;
  out.translation = rc * pose.translation;
  return out;
}

AugmentGrid augment_grid(const AugmentParams& aug, const Intrinsics& intr) {
  intr.validate();
  aug.validate();
  AugmentGrid out;
  out.coords = Grid<double>(intr.height, intr.width, 2);
  // Pixel-grid center; corners 0 and W-1 normalize to -1 and +1.
  const double cx = 0.5 * (intr.width - 1);
  const double cy = 0.5 * (intr.height - 1);
  double max_abs = 0.0;
  for (int y = 0; y < intr.height; ++y) {
    const double orig_y = aug.py + aug.fs * (y - cy);
    const double gy = cy > 0.0 ? (orig_y - cy) / cy : 0.0;
    for (int x = 0; x < intr.width; ++x) {
      const double orig_x = aug.px + aug.fs * (x - cx);
      const double gx = cx > 0.0 ? (orig_x - cx) / cx : 0.0;
      out.coords.at(y, x, 0) = gx;
      out.coords.at(y, x, 1) = gy;
      max_abs = std::max(max_abs, std::max(std::abs(gx), std::abs(gy)));
    }
  }
  out.out_of_range = max_abs > 1.0 + 1e-12;
  return out;
}

Plane plane_in_view(const Plane& plane, const RigidPose& pose) {
  Plane out;
  out.normal = pose.rotation * plane.normal;
  out.delta = plane.delta + out.normal.dot(pose.translation);
  return out;
}

Plane plane_in_view(const Plane& plane, const GeneralPose& pose) {
  pose.validate();
  const Eigen::Vector3d q = pose.linear.inverse().transpose() * plane.normal;
  const double scale = q.norm();
  if (scale <= 0.0 || !std::isfinite(scale))
    throw InvalidTransformError("plane_in_view: degenerate normal image");
  Plane out;
  out.normal = q / scale;
  out.delta = (plane.delta + q.dot(pose.translation)) / scale;
  return out;
}

}  // namespace orthoplane
