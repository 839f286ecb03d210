#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "albnn/common.hpp"

namespace albnn {

// Dense row-major tensor. Shape is a list of extents; data length equals
// the product of the extents (empty shape = scalar with one element).
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape, real fill = real(0))
        : shape_(std::move(shape)), data_(count(shape_), fill) {}

    Tensor(std::vector<std::size_t> shape, std::vector<real> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        require(data_.size() == count(shape_), "Tensor: data length does not match shape");
    }

    static Tensor matrix(std::size_t rows, std::size_t cols, real fill = real(0)) {
        return Tensor({rows, cols}, fill);
    }
    static Tensor vec(std::vector<real> values) {
        std::size_t n = values.size();
        return Tensor({n}, std::move(values));
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t ndim() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    std::size_t extent(std::size_t axis) const { return shape_[axis]; }

    // 2-D convenience accessors.
    std::size_t rows() const { return shape_[0]; }
    std::size_t cols() const { return shape_[1]; }

    real* data() { return data_.data(); }
    const real* data() const { return data_.data(); }
    std::vector<real>& values() { return data_; }
    const std::vector<real>& values() const { return data_; }

    real& operator[](std::size_t i) { return data_[i]; }
    real operator[](std::size_t i) const { return data_[i]; }

    real& operator()(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
    real operator()(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

    real& at3(std::size_t t, std::size_t i, std::size_t j) {
        return data_[(t * shape_[1] + i) * shape_[2] + j];
    }
    real at3(std::size_t t, std::size_t i, std::size_t j) const {
        return data_[(t * shape_[1] + i) * shape_[2] + j];
    }

    void fill(real v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

    static std::size_t count(const std::vector<std::size_t>& shape) {
        return std::accumulate(shape.begin(), shape.end(), std::size_t(1),
                               [](std::size_t a, std::size_t b) { return a * b; });
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<real> data_;
};

}  // namespace albnn
