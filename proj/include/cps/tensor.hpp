#pragma once

#include <cstddef>
#include <vector>

#include "cps/rational.hpp"

namespace cps {

/// Dense rank-3 tensor of rationals.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
      : d1_(d1), d2_(d2), d3_(d3), e_(d1 * d2 * d3) {}

  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return e_[(i * d2_ + j) * d3_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * d2_ + j) * d3_ + k];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Rational> e_;
};

/// Dense rank-4 tensor of rationals.
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(std::size_t d1, std::size_t d2, std::size_t d3, std::size_t d4)
      : d1_(d1), d2_(d2), d3_(d3), d4_(d4), e_(d1 * d2 * d3 * d4) {}

  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }
  std::size_t dim4() const { return d4_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return e_[((i * d2_ + j) * d3_ + k) * d4_ + l];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return e_[((i * d2_ + j) * d3_ + k) * d4_ + l];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Tensor4&) const = default;

 private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0, d4_ = 0;
  std::vector<Rational> e_;
};

}  // namespace cps
