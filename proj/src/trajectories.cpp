#include "dephase/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dephase/errors.hpp"
#include "dephase/quadrature.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

double piece_arc_length(const ArmPiece& piece) {
    return std::visit(overloaded{
                          [](const LinearPiece& p) { return norm(p.p_end - p.p_begin); },
                          [](const EllipticPiece& p) {
                              return numerics::integrate_oscillatory(
                                  [&](double th) { return norm(p.position_rate(th)); }, p.parameter_begin(),
                                  p.parameter_end(), 0.0, numerics::QuadratureSpec{});
                          },
                      },
                      piece);
}

std::string describe(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double LinearPiece::position_rate_bound(const Vec3& axis) const { return std::abs(dot(velocity(t_begin), axis)); }

Vec3 LinearPiece::position(double t) const {
    const double f = (t - t_begin) / (t_end - t_begin);
    return p_begin + (p_end - p_begin) * f;
}

Vec3 LinearPiece::velocity(double) const { return (p_end - p_begin) * (1.0 / (t_end - t_begin)); }

double EllipticPiece::parameter_end() const { return kPi; }

double EllipticPiece::time_at(double theta) const { return t_begin + 0.5 * duration * (1.0 - std::cos(theta)); }

double EllipticPiece::time_rate(double theta) const { return 0.5 * duration * std::sin(theta); }

Vec3 EllipticPiece::position_at(double theta) const {
    return p_begin + (p_end - p_begin) * (0.5 * (1.0 - std::cos(theta))) + bulge * std::sin(theta);
}

Vec3 EllipticPiece::position_rate(double theta) const {
    return (p_end - p_begin) * (0.5 * std::sin(theta)) + bulge * std::cos(theta);
}

double EllipticPiece::position_rate_bound(const Vec3& axis) const {
    return 0.5 * std::abs(dot(p_end - p_begin, axis)) + std::abs(dot(bulge, axis));
}

Vec3 EllipticPiece::position(double t) const {
    const double f = (t - t_begin) / duration;
    const double u = 2.0 * f - 1.0;
    return p_begin + (p_end - p_begin) * f + bulge * std::sqrt(std::max(0.0, 1.0 - u * u));
}

Vec3 EllipticPiece::velocity(double t) const {
    const double u = 2.0 * (t - t_begin) / duration - 1.0;
    return (p_end - p_begin) * (1.0 / duration) + bulge * (-u / std::sqrt(1.0 - u * u) * 2.0 / duration);
}

Arm::Arm(std::vector<ArmPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("Arm: needs at least one piece");
    auto start = [](const ArmPiece& p) { return std::visit([](const auto& q) { return q.start_time(); }, p); };
    auto end = [](const ArmPiece& p) { return std::visit([](const auto& q) { return q.end_time(); }, p); };
    start_time_ = start(pieces_.front());
    end_time_ = end(pieces_.back());
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!(end(pieces_[i]) > start(pieces_[i]))) throw DomainError("Arm: piece has non-positive duration");
        if (i > 0 && end(pieces_[i - 1]) != start(pieces_[i])) throw DomainError("Arm: pieces are not contiguous");
        arc_length_ += piece_arc_length(pieces_[i]);
    }
}

const ArmPiece& Arm::piece_at(double t) const {
    if (!(t >= start_time_ && t <= end_time_))
        throw DomainError("Arm: time " + describe(t) + " outside [" + describe(start_time_) + ", " +
                          describe(end_time_) + "]");
    for (const auto& p : pieces_)
        if (t <= std::visit([](const auto& q) { return q.end_time(); }, p)) return p;
    return pieces_.back();
}

Vec3 Arm::position(double t) const {
    return std::visit([t](const auto& q) { return q.position(t); }, piece_at(t));
}

Vec3 Arm::velocity(double t) const {
    return std::visit([t](const auto& q) { return q.velocity(t); }, piece_at(t));
}

Vec3 Arm::start_point() const {
    return std::visit([](const auto& q) { return q.position_at(q.parameter_begin()); }, pieces_.front());
}

Vec3 Arm::end_point() const {
    return std::visit([](const auto& q) { return q.position_at(q.parameter_end()); }, pieces_.back());
}

PathPair::PathPair(Arm arm_1, Arm arm_2, GeometryKind kind, double separation, double longitudinal_length,
                   double speed, std::vector<std::string> warnings)
    : arm_1_(std::move(arm_1)),
      arm_2_(std::move(arm_2)),
      kind_(kind),
      separation_(separation),
      longitudinal_length_(longitudinal_length),
      speed_(speed),
      warnings_(std::move(warnings)) {
    if (arm_1_.start_time() != arm_2_.start_time() || arm_1_.end_time() != arm_2_.end_time())
        throw ValidationError("shared flight time", "arms must start and end at the same times");
    const Vec3 a0 = arm_1_.start_point();
    const Vec3 a1 = arm_1_.end_point();
    const double scale = std::max({1.0, norm(a0), norm(a1)});
    if (norm(a0 - arm_2_.start_point()) > 1e-12 * scale || norm(a1 - arm_2_.end_point()) > 1e-12 * scale)
        throw ValidationError("closed loop", "arms must share start and end points");
}

PathPair PathPair::swapped() const {
    return PathPair(arm_2_, arm_1_, kind_, separation_, longitudinal_length_, speed_, warnings_);
}

PathPair build_elliptic_pair(double separation, double longitudinal_length, double speed) {
    require_positive(separation, "separation");
    require_positive(longitudinal_length, "longitudinal length");
    require_positive(speed, "speed");
    const double tau = longitudinal_length / speed;
    const Vec3 end{longitudinal_length, 0.0, 0.0};
    auto arm = [&](double sign) {
        return Arm({EllipticPiece{0.0, tau, Vec3{}, end, kUnitZ * (sign * 0.5 * separation)}});
    };
    std::vector<std::string> warnings;
    if (speed > 0.3) warnings.push_back("speed " + describe(speed) + " c is not small compared with c");
    return PathPair(arm(-1.0), arm(+1.0), GeometryKind::Elliptic, separation, longitudinal_length, speed,
                    std::move(warnings));
}

PathPair build_asymmetric_pair(double separation, double longitudinal_length, double speed, double riser_fraction) {
    require_positive(separation, "separation");
    require_positive(longitudinal_length, "longitudinal length");
    require_positive(speed, "speed");
    if (!(riser_fraction > 0.0 && riser_fraction <= 0.2))
        throw DomainError("riser_fraction must lie in (0, 0.2], got " + describe(riser_fraction));

    const double tau = longitudinal_length / speed;
    const double t_up = riser_fraction * tau;
    const double t_down = tau - t_up;
    const Vec3 origin{};
    const Vec3 end{longitudinal_length, 0.0, 0.0};
    const Vec3 top_begin{0.0, 0.0, separation};
    const Vec3 top_end{longitudinal_length, 0.0, separation};

    Arm straight({LinearPiece{0.0, tau, origin, end}});
    Arm staircase({LinearPiece{0.0, t_up, origin, top_begin}, LinearPiece{t_up, t_down, top_begin, top_end},
                   LinearPiece{t_down, tau, top_end, end}});

    std::vector<std::string> warnings;
    const double riser_speed = separation / t_up;
    if (riser_speed > 1.0)
        warnings.push_back("riser speed " + describe(riser_speed) + " c exceeds the speed of light (idealized jump)");
    return PathPair(std::move(straight), std::move(staircase), GeometryKind::Asymmetric, separation,
                    longitudinal_length, speed, std::move(warnings));
}

namespace {

Arm piecewise_arm(const std::vector<Waypoint>& w, const char* label) {
    if (w.size() < 2) throw ValidationError("waypoint count", std::string(label) + " needs at least 2 waypoints");
    std::vector<ArmPiece> pieces;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i].t) || !is_finite(w[i].position))
            throw ValidationError("finite waypoints", std::string(label) + " has a non-finite waypoint");
        if (w[i].position.y != 0.0)
            throw ValidationError("planarity", std::string(label) + " leaves the x-z plane (y = " +
                                                   describe(w[i].position.y) + ")");
        if (i > 0) {
            if (!(w[i].t > w[i - 1].t))
                throw ValidationError("monotone time", std::string(label) + " waypoint times must strictly increase");
            pieces.emplace_back(LinearPiece{w[i - 1].t, w[i].t, w[i - 1].position, w[i].position});
        }
    }
    return Arm(std::move(pieces));
}

}  // namespace

PathPair build_piecewise_pair(const std::vector<Waypoint>& waypoints_1, const std::vector<Waypoint>& waypoints_2) {
    Arm arm_1 = piecewise_arm(waypoints_1, "arm_1");
    Arm arm_2 = piecewise_arm(waypoints_2, "arm_2");
    if (waypoints_1.front().t != waypoints_2.front().t || waypoints_1.back().t != waypoints_2.back().t)
        throw ValidationError("shared flight time", "arms must start and end at the same times");
    if (waypoints_1.front().position != waypoints_2.front().position ||
        waypoints_1.back().position != waypoints_2.back().position)
        throw ValidationError("closed loop", "arms must share start and end points");

    // |z1 - z2| is piecewise linear in t; its maximum sits on a breakpoint.
    std::vector<double> times;
    for (const auto& w : waypoints_1) times.push_back(w.t);
    for (const auto& w : waypoints_2) times.push_back(w.t);
    double separation = 0.0;
    for (double t : times) separation = std::max(separation, std::abs(arm_1.position(t).z - arm_2.position(t).z));

    const double length = norm(waypoints_1.back().position - waypoints_1.front().position);
    const double speed = length / arm_1.flight_time();
    return PathPair(std::move(arm_1), std::move(arm_2), GeometryKind::Piecewise, separation, length, speed);
}

double enclosed_area(const PathPair& pair, int samples_per_piece) {
    if (samples_per_piece < 2) throw DomainError("enclosed_area: need at least 2 samples per piece");
    std::vector<Vec3> loop;
    auto sample_arm = [&](const Arm& arm, std::vector<Vec3>& out) {
        for (const auto& piece : arm.pieces())
            std::visit(
                [&](const auto& q) {
                    const double s0 = q.parameter_begin();
                    const double s1 = q.parameter_end();
                    for (int i = 0; i < samples_per_piece; ++i)
                        out.push_back(q.position_at(s0 + (s1 - s0) * i / samples_per_piece));
                },
                piece);
        out.push_back(arm.end_point());
    };
    sample_arm(pair.arm_1(), loop);
    std::vector<Vec3> back;
    sample_arm(pair.arm_2(), back);
    loop.insert(loop.end(), back.rbegin(), back.rend());

    double twice = 0.0;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) twice += loop[i].x * loop[i + 1].z - loop[i + 1].x * loop[i].z;
    twice += loop.back().x * loop.front().z - loop.front().x * loop.back().z;
    return 0.5 * twice;
}

}  // namespace dephase
