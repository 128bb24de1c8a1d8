#pragma once

#include <Eigen/Core>

#include "orthoplane/grid.hpp"
#include "orthoplane/plane.hpp"

namespace orthoplane {

/// Pinhole camera. Pixel (0,0) is the top-left pixel center; homogeneous
/// pixels are [x, y, 1].
struct Intrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 1;
  int height = 1;

  void validate() const;

  Eigen::Matrix3d matrix() const;
  Eigen::Matrix3d inverse_matrix() const;

  /// K^{-1} [x y 1]^T, the ray with unit z through a pixel.
  Eigen::Vector3d ray(double x, double y) const {
    return {(x - cx) / fx, (y - cy) / fy, 1.0};
  }

  /// Camera-space point on the pixel ray at the given depth.
  Eigen::Vector3d backproject(double x, double y, double depth) const {
    return depth * ray(x, y);
  }

  /// Pixel of a camera-space point (z > 0).
  Eigen::Vector2d project(const Eigen::Vector3d& p) const {
    return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy};
  }
};

/// Proper rigid motion w' = R w + t.
struct RigidPose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  void validate() const;

  Eigen::Vector3d apply(const Eigen::Vector3d& w) const { return rotation * w + translation; }

  static RigidPose identity() { return {}; }
};

/// Motion w' = M w + t where M need not be a rotation (the conjugated pose of
/// a resize-crop rectification is generally not orthogonal).
struct GeneralPose {
  Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  void validate() const;

  Eigen::Vector3d apply(const Eigen::Vector3d& w) const { return linear * w + translation; }

  static GeneralPose from_rigid(const RigidPose& pose) {
    return {pose.rotation, pose.translation};
  }
};

/// Resize-crop augmentation: scale factor f_s and crop-center pixel (p_x, p_y).
struct AugmentParams {
  double fs = 1.0;
  double px = 0.0;
  double py = 0.0;

  void validate() const;

  /// No-op augmentation for a camera (crop centered at the principal point).
  static AugmentParams identity_for(const Intrinsics& intr) {
    return {1.0, intr.cx, intr.cy};
  }
};

/// Rectified stereo pair. The reference (right) camera sits at +B along x
/// from the target (left) camera, so the target-to-reference transform is
/// R = I, t = [-B, 0, 0] and disparity d = fx * B / D is nonnegative.
struct StereoRig {
  double baseline = 0.54;  // meters

  void validate() const;

  RigidPose target_to_reference() const {
    RigidPose pose;
    pose.translation = Eigen::Vector3d(-baseline, 0.0, 0.0);
    return pose;
  }

  double disparity_of_depth(const Intrinsics& intr, double depth) const {
    return intr.fx * baseline / depth;
  }
  double depth_of_disparity(const Intrinsics& intr, double disp) const {
    return intr.fx * baseline / disp;
  }
};

/// World-coordinate transform R_C induced by scaling an image by f_s about a
/// crop window centered at (p_x, p_y):
///
///   [ 1  0  (c_x-p_x)/f_x ]
///   [ 0  1  (c_y-p_y)/f_y ]
///   [ 0  0       f_s      ]
Eigen::Matrix3d resize_crop_matrix(const Intrinsics& intr, const AugmentParams& aug);

/// Pixel map matching resize_crop_matrix: the augmented pixel of an original
/// pixel u. Defined so that backprojecting u at depth D and applying R_C
/// equals backprojecting the mapped pixel at depth f_s * D, exactly, for any
/// intrinsics (the crop center maps onto the principal point).
Eigen::Vector2d resize_crop_pixel(const Intrinsics& intr, const AugmentParams& aug,
                                  const Eigen::Vector2d& u);
Eigen::Vector2d resize_crop_pixel_inverse(const Intrinsics& intr, const AugmentParams& aug,
                                          const Eigen::Vector2d& u_aug);

/// Rectified plane under a world transform: n' = rc^{-T} n / ||rc^{-T} n||,
/// delta' = delta / ||rc^{-T} n||. Membership is preserved:
/// n^T w = delta  <=>  n'^T (rc w) = delta'.
Plane rectify_plane(const Plane& plane, const Eigen::Matrix3d& rc);

/// Conjugated pose under a world transform: M = rc R rc^{-1}, t' = rc t, so
/// that rc w_r = M (rc w) + t' whenever w_r = R w + t.
GeneralPose rectify_pose(const RigidPose& pose, const Eigen::Matrix3d& rc);

/// Positional grid of an augmented image: for each augmented pixel, the
/// normalized coordinate of its original-image pre-image, with original
/// pixel x in [0, W-1] mapped linearly onto [-1, 1] (corner aligned).
struct AugmentGrid {
  Grid<double> coords;    // H x W x 2, (gx, gy)
  bool out_of_range = false;  // crop window left the original image
};
AugmentGrid augment_grid(const AugmentParams& aug, const Intrinsics& intr);

/// Plane parameters expressed in a second view: for w' = R w + t the plane
/// (n, delta) becomes (R n, delta + (R n)^T t); general poses additionally
/// renormalize M^{-T} n.
Plane plane_in_view(const Plane& plane, const RigidPose& pose);
Plane plane_in_view(const Plane& plane, const GeneralPose& pose);

}  // namespace orthoplane
