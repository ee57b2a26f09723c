#pragma once

// Serial reference kernels. They define the expected output of the parallel
// kernels and are kept for tests and the benchmark target.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcplan/geom.hpp"

namespace pcplan::reference {

/// Brute-force O(|a||b|) Chamfer distance.
double chamfer_distance(std::span<const Vec3> a, std::span<const Vec3> b);

/// Single-threaded RANSAC with the same hypothesis stream as the parallel one.
RigidTransform estimate_rigid_transform(std::span<const Vec3> src, std::span<const Vec3> dst,
                                        const RansacParams& params = {});

std::vector<std::size_t> farthest_point_sample(std::span<const Vec3> points, std::size_t count,
                                               std::uint64_t seed);

}  // namespace pcplan::reference
