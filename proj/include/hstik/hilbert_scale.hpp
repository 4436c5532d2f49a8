#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hstik {

/// Truncated coordinate vector (u_1, ..., u_N) of the sequence space.
///
/// All coordinates are finite; construction from non-finite data throws
/// InvalidParameter. Index 0 holds the first coordinate u_1.
class SeqVector {
 public:
  SeqVector() = default;
  explicit SeqVector(std::size_t n, double value = 0.0);
  explicit SeqVector(std::vector<double> coords);

  static SeqVector unit(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }

  /// Plain Euclidean norm, i.e. the tau = 0 norm.
  double norm() const;

  SeqVector& operator+=(const SeqVector& other);
  SeqVector& operator-=(const SeqVector& other);
  SeqVector& operator*=(double factor);

  friend SeqVector operator+(SeqVector lhs, const SeqVector& rhs) { return lhs += rhs; }
  friend SeqVector operator-(SeqVector lhs, const SeqVector& rhs) { return lhs -= rhs; }
  friend SeqVector operator*(double factor, SeqVector v) { return v *= factor; }

  friend bool operator==(const SeqVector&, const SeqVector&) = default;

 private:
  std::vector<double> coords_;
};

/// Diagonal generator B with eigenvalues b_n, together with the degree of
/// ill-posedness a that fixes the smoothing operator G = B^{-(2a+2)}.
class DiagonalScale {
 public:
  /// Throws InvalidParameter unless all multipliers are finite and > 0 and
  /// degree_a > 0.
  DiagonalScale(std::vector<double> multipliers, double degree_a);

  /// b_n = n for n = 1..N.
  static DiagonalScale identity_index(std::size_t n, double degree_a);

  std::size_t size() const noexcept { return multipliers_.size(); }
  double degree_a() const noexcept { return degree_a_; }
  std::span<const double> multipliers() const noexcept { return multipliers_; }
  double multiplier(std::size_t i) const { return multipliers_[i]; }

  /// Smallest eigenvalue m of B.
  double lower_bound() const noexcept { return lower_bound_; }

  /// b_i^tau, evaluated as exp(tau * ln b_i).
  double power(std::size_t i, double tau) const;

  /// Exponent 2a + 2 of the smoothing operator.
  double smoothing_exponent() const noexcept { return 2.0 * degree_a_ + 2.0; }

  /// Eigenvalue g_i = b_i^{-(2a+2)} of G.
  double g(std::size_t i) const { return power(i, -smoothing_exponent()); }

  /// All eigenvalues of G.
  std::vector<double> g_spectrum() const;

 private:
  std::vector<double> multipliers_;
  std::vector<double> log_multipliers_;
  double degree_a_;
  double lower_bound_;
};

/// ||u||_tau = (sum_n b_n^{2 tau} u_n^2)^{1/2}. Throws OverflowError when
/// the sum is not finite.
double norm_tau(const DiagonalScale& scale, const SeqVector& u, double tau);

/// Coordinate-wise (b_n^tau u_n).
SeqVector apply_B_power(const DiagonalScale& scale, const SeqVector& u, double tau);

/// G (G + alpha I)^{-1} u, i.e. coordinates g_n / (g_n + alpha) * u_n.
/// Throws InvalidParameter for alpha <= 0.
SeqVector apply_G_filter(const DiagonalScale& scale, const SeqVector& u, double alpha);

/// Filter factor g / (g + alpha) in (0, 1).
double tikhonov_filter(double g, double alpha);

}  // namespace hstik
