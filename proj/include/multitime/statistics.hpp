#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multitime/worldlines.hpp"

namespace multitime {

/// Cubic region of space with an interaction distance.
struct Cell {
  Vector3d origin = Vector3d::Zero();  // minimum corner
  double side = kTwoPi;
  double tolerance = kTwoPi * 1e-6;  // ε

  /// Cell of one Compton wavelength h/(m0 c), ε = side / 10⁶.
  static Cell compton(double m0, const Vector3d& origin = Vector3d::Zero());

  Vector3d center() const { return origin + Vector3d::Constant(0.5 * side); }
  void validate() const;
};

struct PairDistance {
  int i;
  int j;
  double distance;

  friend bool operator==(const PairDistance&, const PairDistance&) = default;
};

struct OccupancyResult {
  int placed = 0;
  /// Pairs of placed particles closer than ε.
  std::vector<PairDistance> intersections;
  bool capacity_reached = false;
  /// Minimum world-line distance of every placed pair.
  std::vector<PairDistance> distances;
  /// Fermion search: extra placements tried after the last accepted one and
  /// how many of them met an existing set.
  int third_attempts = 0;
  int third_intersections = 0;

  std::optional<double> min_distance() const;
};

struct PackingOptions {
  /// Offset between consecutive copies, as a fraction of the cell side.
  double offset_fraction = 1e-4;
  SampleGrid grid{32, 1};
};

/// Straight proper-time axes of a particle sitting at `position`: τ along
/// x0, σ along x4 and φ along x5, sampled over `grid` periods of h/(m0 c²).
/// These are the mutually orthogonal world lines drawn in the packing figure.
WorldlineSet packing_family(const ParticleSpec& spec, const Vector3d& position,
                            const SampleGrid& grid = {32, 1});

/// Brute-force minimum distance between the sampled world lines of two sets.
double family_distance(const WorldlineSet& a, const WorldlineSet& b);

/// Pairwise distances and intersections of already placed families.
OccupancyResult pack_worldline_families(const std::vector<WorldlineSet>& families,
                                        double tolerance);

/// n copies of packing_family at the cell center, copy k displaced by k δ
/// along the direction of motion (x3 at rest), δ = offset_fraction · side.
OccupancyResult boson_packing(int n, const Cell& cell, const ParticleSpec& spec,
                              const PackingOptions& options = {});

/// Families placed by boson_packing, for plotting.
std::vector<WorldlineSet> boson_packing_families(int n, const Cell& cell, const ParticleSpec& spec,
                                                 const PackingOptions& options = {});

/// Hemisphere world-line set of a fermion: the part of the sphere of radius
/// r0 = h/(2 m0 c) about `center` lying at least ε beyond the equator plane,
/// on the +x3 side for orientation up and the -x3 side for down.
struct FermionCap {
  Vector3d center = Vector3d::Zero();
  double radius = 0.5 * kTwoPi;
  SpinOrientation orientation = SpinOrientation::up;
  double margin = 0.0;  // ε

  bool contains_direction(const Vector3d& offset_from_center) const;
};

/// Exact distance from point q to the cap.
double point_cap_distance(const Vector3d& q, const FermionCap& cap);

/// Minimum distance between two caps; 0 when they cross.
double cap_distance(const FermionCap& a, const FermionCap& b);

/// Candidate centers at which a cap of this orientation fits inside the cell,
/// on a uniform grid of about `budget` points.
std::vector<Vector3d> placement_grid(const Cell& cell, double radius,
                                     SpinOrientation orientation, int budget);

struct CapacityOptions {
  /// Number of fermions to try to place; negative means until the cell is full.
  int max_particles = -1;
  int grid_budget = 1000;  // per orientation
};

/// Places an up fermion and a down fermion at the cell center, then searches
/// the placement grid for any further non-intersecting set.
OccupancyResult fermion_capacity(const Cell& cell, const ParticleSpec& spec,
                                 const CapacityOptions& options = {});

/// One apparatus draw compared with the particle's phases.
struct CoincidenceTrial {
  double apparatus_sigma;
  double apparatus_phi;
  double particle_sigma;
  double particle_phi;
  double window;
  bool detected;
};

/// detected iff both (apparatus - particle) mod 2π are below the window.
CoincidenceTrial coincidence(double apparatus_sigma, double apparatus_phi, double particle_sigma,
                             double particle_phi, double window);

struct MeasurementOptions {
  std::uint64_t trials = 1000000;
  double window = kPi / 8.0;
  std::uint64_t seed = 1;
  int positions = 8;
};

struct MeasurementResult {
  std::vector<LatticePoint> positions;
  std::vector<std::uint64_t> detections;
  std::vector<double> frequency;
  double total_rate = 0.0;  // sum of the per-position frequencies
  std::uint64_t trials = 0;
  double window = 0.0;
  /// (w/2π)², the detection probability of the independent-uniform model.
  double model_probability = 0.0;
};

/// Uniform double in [0, 1) from (seed, trial, position, stream); the same
/// inputs give the same value on every thread layout.
double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t position,
                       std::uint64_t stream);

/// Monte Carlo of the triple-time coincidence rule at the de Broglie lattice
/// positions of a moving massive particle.
MeasurementResult measurement_mc(const ParticleSpec& spec, const MeasurementOptions& options);

}  // namespace multitime
