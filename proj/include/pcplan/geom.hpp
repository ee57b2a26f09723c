#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcplan {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using PointSet = std::vector<Vec3>;
using ObjectId = std::int32_t;

/// Label reserved for points that belong to the static scene (table, walls).
inline constexpr ObjectId kStaticSceneId = -1;

inline constexpr double kDefaultVoxelSize = 0.01;

// ---------------------------------------------------------------------------
// SE(3)

class RigidTransform {
 public:
  static constexpr double kTolerance = 1e-9;

  RigidTransform() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}

  /// Validates orthonormality and det = +1 within kTolerance; throws InvalidTransform.
  static RigidTransform from(const Mat3& rotation, const Vec3& translation);
  static RigidTransform from_matrix(const Mat4& m);
  static RigidTransform from_translation(const Vec3& t);
  /// Rotation by `yaw` radians about the world z axis.
  static RigidTransform from_yaw(double yaw, const Vec3& t = Vec3::Zero());
  /// Rotation about the vertical axis through `pivot`, then translation so that
  /// `pivot` lands on `target`.
  static RigidTransform yaw_about(const Vec3& pivot, double yaw, const Vec3& target);

  const Mat3& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }
  Mat4 matrix() const;

  Vec3 apply(const Vec3& p) const { return rotation_ * p + translation_; }
  RigidTransform operator*(const RigidTransform& rhs) const;
  RigidTransform inverse() const;

  /// Geodesic rotation angle in radians, in [0, pi].
  double rotation_angle() const;
  /// Heading change about z, atan2(R10, R00).
  double yaw() const;

  bool is_valid(double tol = kTolerance) const;
  bool operator==(const RigidTransform& o) const {
    return rotation_ == o.rotation_ && translation_ == o.translation_;
  }

 private:
  RigidTransform(const Mat3& r, const Vec3& t) : rotation_(r), translation_(t) {}
  Mat3 rotation_;
  Vec3 translation_;
};

/// Angle between two rotations in radians.
double rotation_distance(const Mat3& a, const Mat3& b);

// ---------------------------------------------------------------------------
// Segmented point clouds

/// Points of one labeled rigid object. Shared between clouds that did not move it.
struct ObjectCloud {
  ObjectId id = 0;
  std::string object_class;
  PointSet points;
};

struct Aabb {
  Vec3 min;
  Vec3 max;
  Vec2 center_xy() const { return {(min.x() + max.x()) / 2.0, (min.y() + max.y()) / 2.0}; }
  bool overlaps_xy(const Aabb& o, double eps = 1e-9) const;
};

/// A scene observation: points partitioned into labeled rigid objects, plus an
/// optional static part. Immutable; copies share untouched object storage.
class SegmentedCloud {
 public:
  SegmentedCloud() = default;

  /// Builds from flat arrays. `classes` defines the movable object set; every
  /// label must be a key of `classes` or kStaticSceneId, and every object must
  /// own at least one point. Throws InvalidCloud.
  SegmentedCloud(const PointSet& points, std::span<const ObjectId> labels,
                 const std::map<ObjectId, std::string>& classes);

  /// Builds from per-object clouds (ids must be unique, point sets non-empty).
  explicit SegmentedCloud(std::vector<ObjectCloud> objects, PointSet static_points = {});

  const std::vector<ObjectId>& object_ids() const { return ids_; }
  std::size_t num_objects() const { return ids_.size(); }
  bool has_object(ObjectId id) const;
  /// Position of `id` within object_ids(); throws UnknownObject.
  std::size_t index_of(ObjectId id) const;

  const ObjectCloud& object(ObjectId id) const { return entries_[index_of(id)]->cloud; }
  const PointSet& object_points(ObjectId id) const { return object(id).points; }
  const std::string& object_class(ObjectId id) const { return object(id).object_class; }
  std::map<ObjectId, std::string> object_classes() const;
  const PointSet& static_points() const;

  /// Bounding box of one object; cached per object storage.
  const Aabb& bounds(ObjectId id) const;

  /// Flat view: object points in object_ids() order, then static points.
  PointSet points() const;
  std::vector<ObjectId> labels() const;
  std::size_t size() const;

  /// Copy with the points of `id` replaced. Point count must match.
  SegmentedCloud with_object_points(ObjectId id, PointSet points) const;

  bool operator==(const SegmentedCloud& o) const;

 private:
  struct Entry {
    ObjectCloud cloud;
    Aabb box;
  };
  static std::shared_ptr<const Entry> make_entry(ObjectCloud c);

  std::vector<ObjectId> ids_;
  std::vector<std::shared_ptr<const Entry>> entries_;
  std::shared_ptr<const PointSet> static_;
};

struct Action {
  ObjectId object = 0;
  RigidTransform transform;
  bool operator==(const Action& o) const { return object == o.object && transform == o.transform; }
};

// ---------------------------------------------------------------------------
// Operations

/// Applies the action's transform to the points of action.object only.
SegmentedCloud transform_object(const SegmentedCloud& cloud, const Action& action);

/// Symmetric mean-of-squared nearest-neighbour distance. Exact kd-tree queries,
/// OpenMP-parallel over query points; the sum is accumulated serially.
double chamfer_distance(std::span<const Vec3> a, std::span<const Vec3> b);

/// Per-axis midpoint of the object's XY bounding box.
Vec2 object_center(const SegmentedCloud& cloud, ObjectId object);

struct VoxelKey {
  std::int64_t x = 0, y = 0, z = 0;
  bool operator==(const VoxelKey&) const = default;
};

struct VoxelKeyHash {
  std::size_t operator()(const VoxelKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B185EBCA87ULL;
    h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Occupancy grid anchored at the world origin. Each occupied voxel lists the
/// movable objects with at least one point inside it (sorted, unique).
class VoxelGrid {
 public:
  VoxelGrid(const SegmentedCloud& cloud, double voxel_size);
  VoxelKey key_of(const Vec3& p) const;
  double voxel_size() const { return voxel_size_; }
  const Vec3& origin() const { return origin_; }
  const std::unordered_map<VoxelKey, std::vector<ObjectId>, VoxelKeyHash>& occupied() const { return occupied_; }
  /// True when the voxel holds any object other than `except`.
  bool occupied_by_other(const VoxelKey& k, ObjectId except) const;
  bool occupied_by_any(const VoxelKey& k) const { return occupied_.contains(k); }

 private:
  double voxel_size_;
  Vec3 origin_ = Vec3::Zero();
  std::unordered_map<VoxelKey, std::vector<ObjectId>, VoxelKeyHash> occupied_;
};

VoxelKey voxel_key(const Vec3& p, double voxel_size);

/// Fraction of voxels containing `moved` that also contain another movable object.
double voxel_overlap(const SegmentedCloud& cloud, ObjectId moved, double voxel_size = kDefaultVoxelSize);

struct RansacParams {
  std::size_t iterations = 256;
  std::size_t sample_size = 3;
  double inlier_threshold = 1e-3;
  std::uint64_t seed = 0;
};

/// Least-squares rigid fit (Kabsch) of dst ~ R*src + t over the given indices.
RigidTransform kabsch(std::span<const Vec3> src, std::span<const Vec3> dst, std::span<const std::size_t> indices);

/// RANSAC over minimal samples followed by Kabsch refinement on the inliers.
/// Hypotheses are drawn serially from the seed and scored in parallel.
RigidTransform estimate_rigid_transform(std::span<const Vec3> src, std::span<const Vec3> dst,
                                        const RansacParams& params = {});

/// Farthest-point subsampling; returns indices into `points`. The distance
/// update runs in parallel, the argmax (lowest index on ties) is serial.
std::vector<std::size_t> farthest_point_sample(std::span<const Vec3> points, std::size_t count,
                                               std::uint64_t seed);

/// Object-frame anchor points derived from a cloud (no orientation estimate).
Vec3 bottom_center(const SegmentedCloud& cloud, ObjectId id);
Vec3 top_center(const SegmentedCloud& cloud, ObjectId id);
Vec3 centroid(std::span<const Vec3> points);

}  // namespace pcplan
