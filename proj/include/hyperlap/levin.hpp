#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "hyperlap/errors.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

/// Levin u-transform over a stream of series terms.
///
/// Terms a_m, a_{m+1}, ... are pushed one at a time, where m is the index
/// offset and prefix holds S_{m-1} = a_0 + ... + a_{m-1}. estimate() returns
/// the order-k extrapolant L_k built from the partial sums S_m..S_{m+k} and
/// the remainder estimates w_n = (beta + n) a_n.
class LevinU {
 public:
  explicit LevinU(double beta = 1.0, std::size_t offset = 0, Complex prefix = 0.0)
      : beta_(beta + static_cast<double>(offset)), sum_(prefix) {}

  void push(Complex term) {
    sum_ += term;
    sums_.push_back(sum_);
    const double n = static_cast<double>(weights_.size());
    weights_.push_back((beta_ + n) * term);
  }

  std::size_t size() const noexcept { return sums_.size(); }
  Complex partial_sum() const noexcept { return sum_; }

  /// Extrapolant of order size()-1. nullopt when a remainder estimate vanishes.
  std::optional<Complex> estimate() const {
    const std::size_t k = sums_.size() - 1;
    const double bk = beta_ + static_cast<double>(k);
    Complex num = 0.0;
    Complex den = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
      if (weights_[j] == Complex{0.0}) return std::nullopt;
      const double ratio = (beta_ + static_cast<double>(j)) / bk;
      const double c = ((j % 2) ? -1.0 : 1.0) * binomial(static_cast<int>(k), static_cast<int>(j)) *
                       std::pow(ratio, static_cast<double>(k) - 1.0);
      num += c * sums_[j] / weights_[j];
      den += c / weights_[j];
    }
    if (den == Complex{0.0}) return std::nullopt;
    return num / den;
  }

 private:
  double beta_;
  Complex sum_ = 0.0;
  std::vector<Complex> sums_;
  std::vector<Complex> weights_;
};

}  // namespace hyperlap
