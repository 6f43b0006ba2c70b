// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>
#include <utility>

namespace dflsim {

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};
};

Vec3 operator-(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

inline double to_degrees(double rad) { return rad / std::numbers::pi * 180.0; }
inline double to_radians(double deg) { return deg / 180.0 * std::numbers::pi; }

/// Single TX / uniform linear RX array link.
///
/// The TX sits at the origin, the LoS runs along +X, and the 2M+1 receive
/// antennas sit at (d0, m*spacing, 0) for m in [-M, M]. Z is measured from
/// the link plane; the physical height above the floor is carried only as
/// metadata since the floor is electromagnetically inert here.
class LinkLayout {
public:
    LinkLayout(double wavelength, double los_length, double spacing,
               int half_size, double height);

    double wavelength() const { return wavelength_; }
    double los_length() const { return los_length_; }
    double spacing() const { return spacing_; }
    int half_size() const { return half_size_; }
    int size() const { return 2 * half_size_ + 1; }
    double height() const { return height_; }

    /// False when spacing <= wavelength/4 and the no-coupling assumption
    /// becomes questionable. A warning condition, never an error.
    bool coupling_assumption_ok() const;

    /// Position of RX_m; throws std::out_of_range for |m| > M.
    Vec3 antenna_position(int m) const;

    /// TX-to-RX_m distance d_m = sqrt(d0^2 + m^2 spacing^2).
    double link_distance(int m) const;

    /// Arrival angle at RX_m for a wave scanned at angle gamma from the
    /// array axis: asin((d0/d_m) sin gamma). Equals gamma at m = 0.
    double incidence_angle(double gamma, int m) const;

private:
    void check_index(int m) const;

    double wavelength_;
    double los_length_;
    double spacing_;
    int half_size_;
    double height_;
};

/// Vertical absorbing rectangular sheet standing on the link plane.
///
/// Local coordinates (xi2, xi3) span [-half_width, half_width] x
/// [-half_height, half_height]; xi2 runs along the sheet's horizontal axis,
/// which is the +Y direction rotated by `rotation` about the vertical
/// through the barycenter (positive rotation turns the +xi2 edge toward
/// the TX). rotation = 0 leaves the sheet orthogonal to the LoS.
class TargetSheet {
public:
    TargetSheet(double half_width, double half_height, double rotation,
                double center_x, double center_y);

    double half_width() const { return half_width_; }
    double half_height() const { return half_height_; }
    double rotation() const { return rotation_; }
    double center_x() const { return center_x_; }
    double center_y() const { return center_y_; }

    /// World position of the sheet point (xi2, xi3); throws
    /// std::domain_error outside the sheet rectangle.
    Vec3 point(double xi2, double xi3) const;

private:
    double half_width_;
    double half_height_;
    double rotation_;
    double center_x_;
    double center_y_;
    double sin_rot_;
    double cos_rot_;
};

/// Distances from the sheet point (xi2, xi3) to the TX and to RX_m.
/// Throws SingularityError when either drops below one wavelength, where
/// the scalar diffraction model stops being meaningful.
std::pair<double, double> path_lengths(const LinkLayout& layout,
                                       const TargetSheet& sheet, int m,
                                       double xi2, double xi3);

/// Minor semi-axis of the first Fresnel ellipsoid, sqrt(lambda d)/2.
double fresnel_radius(double wavelength, double distance);

} // namespace dflsim
