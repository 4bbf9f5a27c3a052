#pragma once

#include "normvol/linalg.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace normvol {

/// Interpolation stencil: up to three node indices with barycentric weights.
struct Stencil {
    std::array<std::size_t, 3> index{};
    std::array<double, 3> weight{};
    int size = 0;
};

/// Quadrature nodes and weights on the Euclidean unit sphere.
///
/// dim 2: `resolution` equally spaced angles (resolution even, >= 4).
/// dim 3: icosahedron subdivided `resolution` times; weights are the spherical
///        areas of the barycentric dual cells, so they partition the sphere.
/// dim 1: the point pair {+1, -1} with unit weights (used for sections of
///        planar star bodies).
///
/// Nodes are antipodally symmetric in every case.
class DirectionGrid {
  public:
    int dim() const { return dim_; }
    int resolution() const { return resolution_; }
    std::size_t size() const { return nodes_.size(); }

    const Vec& node(std::size_t i) const { return nodes_[i]; }
    std::span<const Vec> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }
    std::size_t antipode(std::size_t i) const { return antipode_[i]; }

    /// Finest-level triangles (dim 3 only).
    std::span<const std::array<std::size_t, 3>> triangles() const { return levels_.empty() ? std::span<const std::array<std::size_t, 3>>{} : std::span<const std::array<std::size_t, 3>>(levels_.back()); }

    /// Undirected mesh edges: neighbouring angles in 2D, triangle edges in 3D.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    /// Interpolation stencil for a nonzero direction.
    ///
    /// 2D: linear in angle between the two neighbouring nodes.
    /// 3D: barycentric weights on the containing icosphere triangle.
    Stencil locate(const Vec& direction) const;

    bool same_as(const DirectionGrid& other) const { return dim_ == other.dim_ && resolution_ == other.resolution_; }

    friend std::shared_ptr<const DirectionGrid> make_sphere_grid(int dim, int resolution);

  private:
    DirectionGrid() = default;

    int dim_ = 0;
    int resolution_ = 0;
    std::vector<Vec> nodes_;
    std::vector<double> weights_;
    std::vector<std::size_t> antipode_;
    // Triangles per subdivision level; triangle t at level l has children
    // 4t..4t+3 at level l+1.
    std::vector<std::vector<std::array<std::size_t, 3>>> levels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

/// Build a direction grid; throws InputError for unsupported parameters.
GridPtr make_sphere_grid(int dim, int resolution);

/// Default resolution: 720 angles in 2D, icosphere level 5 in 3D.
int default_resolution(int dim);

GridPtr default_grid(int dim);

}  // namespace normvol
