#include "multitime/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace multitime {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign_of(SpinOrientation o) { return o == SpinOrientation::up ? 1.0 : -1.0; }

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Horizontal radius and relative height of the cap's boundary circle.
double edge_radius(const FermionCap& cap) {
  return std::sqrt(std::max(0.0, cap.radius * cap.radius - cap.margin * cap.margin));
}

Vector3d edge_point(const FermionCap& cap, double angle) {
  const double rho = edge_radius(cap);
  return cap.center + Vector3d(rho * std::cos(angle), rho * std::sin(angle),
                               sign_of(cap.orientation) * cap.margin);
}

// Minimum over the boundary circle of `from` of the distance to `to`:
// coarse scan, then golden-section refinement around the best sample.
double edge_to_cap(const FermionCap& from, const FermionCap& to) {
  constexpr int kSamples = 720;
  const double step = kTwoPi / kSamples;
  double best = kInf;
  double best_angle = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double angle = k * step;
    const double d = point_cap_distance(edge_point(from, angle), to);
    if (d < best) {
      best = d;
      best_angle = angle;
    }
  }
  const auto f = [&](double angle) { return point_cap_distance(edge_point(from, angle), to); };
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_angle - step;
  double hi = best_angle + step;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min({best, f1, f2});
}

bool caps_cross(const FermionCap& a, const FermionCap& b) {
  const Vector3d d = b.center - a.center;
  const double D = d.norm();
  if (D == 0.0) {
    return a.radius == b.radius && a.orientation == b.orientation;
  }
  if (D > a.radius + b.radius || D < std::abs(a.radius - b.radius)) return false;
  // circle of intersection: center m, radius rc, plane normal n
  const Vector3d n = d / D;
  const double x = (D * D + a.radius * a.radius - b.radius * b.radius) / (2.0 * D);
  const double rc = std::sqrt(std::max(0.0, a.radius * a.radius - x * x));
  const Vector3d m = a.center + x * n;
  const double spread = rc * std::sqrt(std::max(0.0, 1.0 - n.z() * n.z()));
  double lo = m.z() - spread;
  double hi = m.z() + spread;
  // each cap is a half-space in z on its sphere
  for (const FermionCap* cap : {&a, &b}) {
    if (cap->orientation == SpinOrientation::up) {
      lo = std::max(lo, cap->center.z() + cap->margin);
    } else {
      hi = std::min(hi, cap->center.z() - cap->margin);
    }
  }
  return lo <= hi;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  if (n <= 1 || hi <= lo) {
    v.push_back(0.5 * (lo + hi));
    return v;
  }
  for (int k = 0; k < n; ++k) v.push_back(lo + (hi - lo) * k / (n - 1));
  return v;
}

}  // namespace

Cell Cell::compton(double m0, const Vector3d& origin) {
  if (!(m0 > 0.0)) throw ConfigurationError("rest mass must be positive");
  Cell c;
  c.origin = origin;
  c.side = kTwoPi / m0;
  c.tolerance = c.side * 1e-6;
  return c;
}

void Cell::validate() const {
  if (!(side > 0.0)) throw ConfigurationError("cell side must be positive");
  if (!(tolerance > 0.0) || tolerance >= side) {
    throw ConfigurationError("cell tolerance must satisfy 0 < ε < side");
  }
}

std::optional<double> OccupancyResult::min_distance() const {
  if (distances.empty()) return std::nullopt;
  double best = kInf;
  for (const auto& d : distances) best = std::min(best, d.distance);
  return best;
}

WorldlineSet packing_family(const ParticleSpec& spec, const Vector3d& position,
                            const SampleGrid& grid) {
  spec.validate();
  if (spec.cls != ParticleClass::spinless && spec.cls != ParticleClass::boson) {
    throw ConfigurationError(std::string("packing needs a spinless or boson particle, got ") +
                             to_string(spec.cls));
  }
  grid.validate();
  WorldlineSet set{spec.cls};
  for (int j = 0; j < grid.total(); ++j) {
    const double s = grid.angle(j) / spec.m0;
    Vector6d base;
    base << 0.0, position, 0.0, 0.0;
    for (int k = 0; k < 3; ++k) {
      const auto kind = static_cast<ProperTimeKind>(k);
      Vector6d x = base;
      x[kind == ProperTimeKind::tau ? 0 : (kind == ProperTimeKind::sigma ? 4 : 5)] = s;
      set.line(kind).samples.push_back({s, Event6(x)});
    }
  }
  set.period = kTwoPi / spec.m0;
  set.wavelength = kTwoPi / spec.m0;
  return set;
}

double family_distance(const WorldlineSet& a, const WorldlineSet& b) {
  double best = kInf;
  for (const auto& la : a.lines) {
    for (const auto& lb : b.lines) {
      for (const auto& p : la.samples) {
        for (const auto& q : lb.samples) {
          best = std::min(best, (p.event.coords() - q.event.coords()).squaredNorm());
        }
      }
    }
  }
  return std::sqrt(best);
}

OccupancyResult pack_worldline_families(const std::vector<WorldlineSet>& families,
                                        double tolerance) {
  OccupancyResult r;
  r.placed = static_cast<int>(families.size());
  for (int i = 0; i < r.placed; ++i) {
    for (int j = i + 1; j < r.placed; ++j) {
      const double d = family_distance(families[i], families[j]);
      r.distances.push_back({i, j, d});
      if (d <= tolerance) r.intersections.push_back({i, j, d});
    }
  }
  return r;
}

std::vector<WorldlineSet> boson_packing_families(int n, const Cell& cell, const ParticleSpec& spec,
                                                 const PackingOptions& options) {
  cell.validate();
  if (n < 0) throw ConfigurationError("particle count must be non-negative");
  if (!(options.offset_fraction > 0.0)) {
    throw ConfigurationError("packing offset must be positive");
  }
  const double delta = options.offset_fraction * cell.side;
  const Vector3d along = spec.direction();
  std::vector<WorldlineSet> families;
  for (int k = 0; k < n; ++k) {
    families.push_back(packing_family(spec, cell.center() + (k * delta) * along, options.grid));
  }
  return families;
}

OccupancyResult boson_packing(int n, const Cell& cell, const ParticleSpec& spec,
                              const PackingOptions& options) {
  OccupancyResult r =
      pack_worldline_families(boson_packing_families(n, cell, spec, options), cell.tolerance);
  r.capacity_reached = false;
  return r;
}

bool FermionCap::contains_direction(const Vector3d& offset_from_center) const {
  return sign_of(orientation) * offset_from_center.z() >= margin;
}

double point_cap_distance(const Vector3d& q, const FermionCap& cap) {
  const Vector3d v = q - cap.center;
  const double nv = v.norm();
  if (nv == 0.0) return cap.radius;
  if (cap.contains_direction(v * (cap.radius / nv))) return std::abs(nv - cap.radius);
  const double rho = edge_radius(cap);
  const double h = sign_of(cap.orientation) * cap.margin;
  const double vxy = std::hypot(v.x(), v.y());
  return std::hypot(vxy - rho, v.z() - h);
}

double cap_distance(const FermionCap& a, const FermionCap& b) {
  if (caps_cross(a, b)) return 0.0;
  double best = kInf;
  const Vector3d d = b.center - a.center;
  const double D = d.norm();
  if (D > 0.0) {
    const Vector3d n = d / D;
    for (double s : {1.0, -1.0}) {
      const Vector3d pa = s * a.radius * n;
      if (a.contains_direction(pa)) best = std::min(best, point_cap_distance(a.center + pa, b));
      const Vector3d pb = s * b.radius * n;
      if (b.contains_direction(pb)) best = std::min(best, point_cap_distance(b.center + pb, a));
    }
  }
  best = std::min(best, edge_to_cap(a, b));
  best = std::min(best, edge_to_cap(b, a));
  return best;
}

std::vector<Vector3d> placement_grid(const Cell& cell, double radius, SpinOrientation orientation,
                                     int budget) {
  cell.validate();
  if (budget < 1) throw ConfigurationError("placement budget must be positive");
  const double m = cell.tolerance;
  const double rho = std::sqrt(std::max(0.0, radius * radius - m * m));
  const Vector3d o = cell.origin;
  const double S = cell.side;

  // admissible center ranges: the whole cap must lie in the cell
  const double xy_lo = rho;
  const double xy_hi = S - rho;
  const bool xy_free = xy_hi - xy_lo > m;
  double z_lo = 0.0;
  double z_hi = 0.0;
  if (orientation == SpinOrientation::up) {
    z_lo = -m;
    z_hi = S - radius;
  } else {
    z_lo = radius;
    z_hi = S + m;
  }

  const int per_axis =
      xy_free ? std::max(1, static_cast<int>(std::lround(std::cbrt(static_cast<double>(budget)))))
              : budget;
  const auto xs = xy_free ? linspace(xy_lo, xy_hi, per_axis) : std::vector<double>{0.5 * S};
  const auto zs = linspace(z_lo, z_hi, per_axis);
  std::vector<Vector3d> out;
  for (double x : xs) {
    for (double y : xs) {
      for (double z : zs) out.push_back(o + Vector3d(x, y, z));
    }
  }
  return out;
}

OccupancyResult fermion_capacity(const Cell& cell, const ParticleSpec& spec,
                                 const CapacityOptions& options) {
  if (spec.cls != ParticleClass::fermion) {
    throw ConfigurationError("fermion capacity needs a fermion spec");
  }
  spec.validate();
  cell.validate();
  const double r0 = fermion_radius(spec.m0);
  if (cell.side < 2.0 * r0 * (1.0 - 1e-12)) {
    throw CellTooSmall("cell side " + std::to_string(cell.side) +
                       " is below one Compton wavelength " + std::to_string(2.0 * r0));
  }
  const double tol = cell.tolerance * (1.0 + 1e-9);
  const auto make_cap = [&](const Vector3d& c, SpinOrientation o) {
    return FermionCap{c, r0, o, cell.tolerance};
  };

  OccupancyResult r;
  std::vector<FermionCap> placed;
  const auto limit_reached = [&] {
    return options.max_particles >= 0 && static_cast<int>(placed.size()) >= options.max_particles;
  };
  // returns true when the cap was accepted
  const auto try_place = [&](const FermionCap& cap) {
    std::vector<double> d;
    bool clear = true;
    for (const auto& other : placed) {
      d.push_back(cap_distance(cap, other));
      if (d.back() <= tol) clear = false;
    }
    if (!clear) return false;
    const int idx = static_cast<int>(placed.size());
    for (int i = 0; i < idx; ++i) r.distances.push_back({i, idx, d[i]});
    placed.push_back(cap);
    return true;
  };

  for (auto o : {SpinOrientation::up, SpinOrientation::down}) {
    if (limit_reached()) break;
    try_place(make_cap(cell.center(), o));
  }

  bool searched = false;
  if (!limit_reached()) {
    searched = true;
    for (auto o : {SpinOrientation::up, SpinOrientation::down}) {
      for (const auto& c : placement_grid(cell, r0, o, options.grid_budget)) {
        if (limit_reached()) break;
        ++r.third_attempts;
        if (try_place(make_cap(c, o))) {
          r.third_attempts = 0;
          r.third_intersections = 0;
        } else {
          ++r.third_intersections;
        }
      }
    }
  }
  r.placed = static_cast<int>(placed.size());
  r.capacity_reached =
      searched && r.third_attempts > 0 && r.third_attempts == r.third_intersections;
  return r;
}

CoincidenceTrial coincidence(double apparatus_sigma, double apparatus_phi, double particle_sigma,
                             double particle_phi, double window) {
  CoincidenceTrial t{apparatus_sigma, apparatus_phi, particle_sigma, particle_phi, window, false};
  t.detected = wrap_angle(apparatus_sigma - particle_sigma) < window &&
               wrap_angle(apparatus_phi - particle_phi) < window;
  return t;
}

double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t position,
                       std::uint64_t stream) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ position);
  h = splitmix64(h ^ stream);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

MeasurementResult measurement_mc(const ParticleSpec& spec, const MeasurementOptions& options) {
  if (options.trials == 0) throw ConfigurationError("measurement needs at least one trial");
  if (!(options.window > 0.0) || options.window >= kTwoPi) {
    throw ConfigurationError("coincidence window must satisfy 0 < w < 2π");
  }
  if (options.positions < 1) throw ConfigurationError("need at least one lattice position");
  const DeBroglieLattice lattice = debroglie_lattice(spec, options.positions);
  const Vector3d along = spec.direction();

  MeasurementResult r;
  r.positions = lattice.positions;
  r.trials = options.trials;
  r.window = options.window;
  r.model_probability = std::pow(options.window / kTwoPi, 2);
  for (std::size_t j = 0; j < lattice.positions.size(); ++j) {
    const LatticePoint& pt = lattice.positions[j];
    // σ and φ share the phase (E t - p.x)/ħ
    const double phase = wrap_angle(spec.phase(pt.t, pt.x * along));
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      const double as = kTwoPi * counter_uniform(options.seed, i, j, 0);
      const double af = kTwoPi * counter_uniform(options.seed, i, j, 1);
      if (coincidence(as, af, phase, phase, options.window).detected) ++hits;
    }
    r.detections.push_back(hits);
    const double f = static_cast<double>(hits) / static_cast<double>(options.trials);
    r.frequency.push_back(f);
    r.total_rate += f;
  }
  return r;
}

}  // namespace multitime
