#include "hstik/hilbert_scale.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hstik/errors.hpp"

namespace hstik {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidParameter(std::string(what) + ": length mismatch (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
  }
}

double checked_sqrt_sum(double sum, const char* what) {
  if (!std::isfinite(sum)) throw OverflowError(std::string(what) + ": non-finite result");
  return std::sqrt(sum);
}

}  // namespace

SeqVector::SeqVector(std::size_t n, double value) : coords_(n, value) {
  if (!std::isfinite(value)) throw InvalidParameter("SeqVector: non-finite fill value");
}

SeqVector::SeqVector(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InvalidParameter("SeqVector: non-finite coordinate");
  }
}

SeqVector SeqVector::unit(std::size_t n, std::size_t index) {
  if (index >= n) throw InvalidParameter("SeqVector::unit: index out of range");
  SeqVector e(n);
  e[index] = 1.0;
  return e;
}

double SeqVector::norm() const {
  double sum = 0.0;
  for (double c : coords_) sum += c * c;
  return checked_sqrt_sum(sum, "SeqVector::norm");
}

SeqVector& SeqVector::operator+=(const SeqVector& other) {
  require_same_size(size(), other.size(), "SeqVector::operator+=");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

SeqVector& SeqVector::operator-=(const SeqVector& other) {
  require_same_size(size(), other.size(), "SeqVector::operator-=");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

SeqVector& SeqVector::operator*=(double factor) {
  for (double& c : coords_) c *= factor;
  return *this;
}

DiagonalScale::DiagonalScale(std::vector<double> multipliers, double degree_a)
    : multipliers_(std::move(multipliers)), degree_a_(degree_a) {
  if (multipliers_.empty()) throw InvalidParameter("DiagonalScale: empty multiplier sequence");
  if (!(degree_a_ > 0.0) || !std::isfinite(degree_a_)) {
    throw InvalidParameter("DiagonalScale: degree a must be positive");
  }
  log_multipliers_.reserve(multipliers_.size());
  for (double b : multipliers_) {
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw InvalidParameter("DiagonalScale: multipliers must be finite and positive");
    }
    log_multipliers_.push_back(std::log(b));
  }
  lower_bound_ = *std::min_element(multipliers_.begin(), multipliers_.end());
}

DiagonalScale DiagonalScale::identity_index(std::size_t n, double degree_a) {
  std::vector<double> b(n);
  std::iota(b.begin(), b.end(), 1.0);
  return DiagonalScale(std::move(b), degree_a);
}

double DiagonalScale::power(std::size_t i, double tau) const {
  return std::exp(tau * log_multipliers_[i]);
}

std::vector<double> DiagonalScale::g_spectrum() const {
  std::vector<double> g(size());
  for (std::size_t i = 0; i < size(); ++i) g[i] = this->g(i);
  return g;
}

double norm_tau(const DiagonalScale& scale, const SeqVector& u, double tau) {
  require_same_size(scale.size(), u.size(), "norm_tau");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = scale.power(i, tau) * u[i];
    sum += w * w;
  }
  return checked_sqrt_sum(sum, "norm_tau");
}

SeqVector apply_B_power(const DiagonalScale& scale, const SeqVector& u, double tau) {
  require_same_size(scale.size(), u.size(), "apply_B_power");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = scale.power(i, tau) * u[i];
    if (!std::isfinite(out[i])) throw OverflowError("apply_B_power: non-finite coordinate");
  }
  return SeqVector(std::move(out));
}

double tikhonov_filter(double g, double alpha) { return g / (g + alpha); }

SeqVector apply_G_filter(const DiagonalScale& scale, const SeqVector& u, double alpha) {
  if (!(alpha > 0.0)) throw InvalidParameter("apply_G_filter: alpha must be positive");
  require_same_size(scale.size(), u.size(), "apply_G_filter");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = tikhonov_filter(scale.g(i), alpha) * u[i];
  return SeqVector(std::move(out));
}

}  // namespace hstik
