// SPDX-License-Identifier: Apache-2.0
#include "dflsim/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dflsim/errors.hpp"

namespace dflsim {

Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double norm(const Vec3& v) {
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

LinkLayout::LinkLayout(double wavelength, double los_length, double spacing,
                       int half_size, double height)
    : wavelength_(wavelength),
      los_length_(los_length),
      spacing_(spacing),
      half_size_(half_size),
      height_(height) {
    std::ostringstream bad;
    auto fail = [&bad](const char* what) { bad << (bad.tellp() > 0 ? "; " : "") << what; };
    if (!(std::isfinite(wavelength_) && wavelength_ > 0.0)) fail("wavelength must be > 0");
    if (!(std::isfinite(los_length_) && los_length_ > 0.0)) fail("los_length must be > 0");
    if (!(std::isfinite(spacing_) && spacing_ > 0.0)) fail("spacing must be > 0");
    if (half_size_ < 0) fail("half_size must be >= 0");
    if (!(std::isfinite(height_) && height_ >= 0.0)) fail("height must be >= 0");
    if (bad.tellp() > 0) throw ValidationError("LinkLayout: " + bad.str());
}

bool LinkLayout::coupling_assumption_ok() const {
    return spacing_ > wavelength_ / 4.0;
}

void LinkLayout::check_index(int m) const {
    if (m < -half_size_ || m > half_size_)
        throw std::out_of_range("antenna index " + std::to_string(m) +
                                " outside [-M, M] with M = " + std::to_string(half_size_));
}

Vec3 LinkLayout::antenna_position(int m) const {
    check_index(m);
    return {los_length_, m * spacing_, 0.0};
}

double LinkLayout::link_distance(int m) const {
    check_index(m);
    const double offset = m * spacing_;
    return std::sqrt(los_length_ * los_length_ + offset * offset);
}

double LinkLayout::incidence_angle(double gamma, int m) const {
    // d0 <= d_m keeps the argument inside [-1, 1] for any gamma.
    return std::asin(los_length_ / link_distance(m) * std::sin(gamma));
}

TargetSheet::TargetSheet(double half_width, double half_height, double rotation,
                         double center_x, double center_y)
    : half_width_(half_width),
      half_height_(half_height),
      rotation_(rotation),
      center_x_(center_x),
      center_y_(center_y),
      sin_rot_(std::sin(rotation)),
      cos_rot_(std::cos(rotation)) {
    std::ostringstream bad;
    auto fail = [&bad](const char* what) { bad << (bad.tellp() > 0 ? "; " : "") << what; };
    if (!(std::isfinite(half_width_) && half_width_ > 0.0)) fail("half_width must be > 0");
    if (!(std::isfinite(half_height_) && half_height_ > 0.0)) fail("half_height must be > 0");
    if (!(std::isfinite(rotation_) && std::abs(rotation_) <= std::numbers::pi / 2))
        fail("rotation must lie in [-pi/2, pi/2]");
    if (!std::isfinite(center_x_) || !std::isfinite(center_y_)) fail("barycenter must be finite");
    if (bad.tellp() > 0) throw ValidationError("TargetSheet: " + bad.str());
}

Vec3 TargetSheet::point(double xi2, double xi3) const {
    if (std::abs(xi2) > half_width_ || std::abs(xi3) > half_height_)
        throw std::domain_error("sheet coordinates outside the target rectangle");
    return {center_x_ - xi2 * sin_rot_, center_y_ + xi2 * cos_rot_, xi3};
}

std::pair<double, double> path_lengths(const LinkLayout& layout,
                                       const TargetSheet& sheet, int m,
                                       double xi2, double xi3) {
    const Vec3 p = sheet.point(xi2, xi3);
    const double r1 = norm(p);
    const double r2 = norm(p - layout.antenna_position(m));
    if (r1 < layout.wavelength() || r2 < layout.wavelength())
        throw SingularityError(
            "sheet point within one wavelength of an antenna: the scalar "
            "diffraction integrand is singular there");
    return {r1, r2};
}

double fresnel_radius(double wavelength, double distance) {
    return std::sqrt(wavelength * distance) / 2.0;
}

} // namespace dflsim
