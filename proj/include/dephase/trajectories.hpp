#pragma once

// Two-arm interferometer geometries in the x-z plane. Each arm is a chain of
// pieces; a piece exposes a smooth parameterization s -> (t(s), r(s)) so the
// line integral  int g0 dt + g.dr  can be taken over s without endpoint
// singularities.

#include <string>
#include <variant>
#include <vector>

#include "dephase/vec3.hpp"

namespace dephase {

// Straight segment at constant velocity; parameter s = t.
struct LinearPiece {
    double t_begin = 0.0;
    double t_end = 0.0;
    Vec3 p_begin;
    Vec3 p_end;

    double parameter_begin() const { return t_begin; }
    double parameter_end() const { return t_end; }
    double time_at(double s) const { return s; }
    double time_rate(double) const { return 1.0; }
    Vec3 position_at(double s) const { return position(s); }
    Vec3 position_rate(double) const { return velocity(t_begin); }
    double time_rate_bound() const { return 1.0; }
    // max |dr/ds . axis| over the piece.
    double position_rate_bound(const Vec3& axis) const;

    Vec3 position(double t) const;
    Vec3 velocity(double t) const;
    double start_time() const { return t_begin; }
    double end_time() const { return t_end; }
};

// Half ellipse: constant drift from p_begin to p_end plus a transverse
// excursion bulge * sqrt(1 - u^2), u = 2 (t - t_begin) / duration - 1.
// Parameter s = theta in [0, pi] with t = t_begin + duration (1 - cos theta) / 2,
// which turns the 1/sqrt(1 - u^2) velocity singularity into cos(theta).
struct EllipticPiece {
    double t_begin = 0.0;
    double duration = 0.0;
    Vec3 p_begin;
    Vec3 p_end;
    Vec3 bulge;

    double parameter_begin() const { return 0.0; }
    double parameter_end() const;
    double time_at(double theta) const;
    double time_rate(double theta) const;
    Vec3 position_at(double theta) const;
    Vec3 position_rate(double theta) const;
    double time_rate_bound() const { return 0.5 * duration; }
    double position_rate_bound(const Vec3& axis) const;

    Vec3 position(double t) const;
    // Diverges at the two endpoints.
    Vec3 velocity(double t) const;
    double start_time() const { return t_begin; }
    double end_time() const { return t_begin + duration; }
};

using ArmPiece = std::variant<LinearPiece, EllipticPiece>;

class Arm {
public:
    explicit Arm(std::vector<ArmPiece> pieces);

    const std::vector<ArmPiece>& pieces() const noexcept { return pieces_; }
    double start_time() const noexcept { return start_time_; }
    double end_time() const noexcept { return end_time_; }
    double flight_time() const noexcept { return end_time_ - start_time_; }
    double arc_length() const noexcept { return arc_length_; }

    // t outside [start_time, end_time] throws DomainError.
    Vec3 position(double t) const;
    Vec3 velocity(double t) const;

    Vec3 start_point() const;
    Vec3 end_point() const;

private:
    const ArmPiece& piece_at(double t) const;

    std::vector<ArmPiece> pieces_;
    double start_time_ = 0.0;
    double end_time_ = 0.0;
    double arc_length_ = 0.0;
};

enum class GeometryKind { Elliptic, Asymmetric, Piecewise };

// Closed loop C1 - C2: both arms leave the same point at the same time and
// recombine at the same point at the same time.
class PathPair {
public:
    PathPair(Arm arm_1, Arm arm_2, GeometryKind kind, double separation, double longitudinal_length, double speed,
             std::vector<std::string> warnings = {});

    const Arm& arm_1() const noexcept { return arm_1_; }
    const Arm& arm_2() const noexcept { return arm_2_; }
    GeometryKind kind() const noexcept { return kind_; }
    double separation() const noexcept { return separation_; }
    double longitudinal_length() const noexcept { return longitudinal_length_; }
    double speed() const noexcept { return speed_; }
    double flight_time() const noexcept { return arm_1_.flight_time(); }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    // Same loop traversed the other way round (C1 <-> C2).
    PathPair swapped() const;

private:
    Arm arm_1_;
    Arm arm_2_;
    GeometryKind kind_;
    double separation_;
    double longitudinal_length_;
    double speed_;
    std::vector<std::string> warnings_;
};

struct Waypoint {
    double t = 0.0;
    Vec3 position;

    friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

inline constexpr double kDefaultRiserFraction = 0.05;

// Mirror-image half ellipses from the origin to (s', 0, 0), full maximum
// separation alpha, constant longitudinal speed v; tau = s' / v.
// arm_1 bulges towards -z, arm_2 towards +z.
PathPair build_elliptic_pair(double separation, double longitudinal_length, double speed);

// arm_1: straight line origin -> (s', 0, 0). arm_2: rises by alpha along z in
// the first riser_fraction * tau, runs parallel to x, descends in the last
// riser_fraction * tau.
PathPair build_asymmetric_pair(double separation, double longitudinal_length, double speed,
                               double riser_fraction = kDefaultRiserFraction);

// Piecewise-linear arms through the given waypoints. Throws ValidationError
// naming the broken invariant.
PathPair build_piecewise_pair(const std::vector<Waypoint>& waypoints_1, const std::vector<Waypoint>& waypoints_2);

// Signed area of the x-z projection of C1 - C2 (counter-clockwise positive
// with x to the right and z up), by the shoelace rule over dense samples.
double enclosed_area(const PathPair& pair, int samples_per_piece = 2048);

}  // namespace dephase
