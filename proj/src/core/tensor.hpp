#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace rbfcnn {

/// Dense row-major tensor of doubles. Shapes are explicit; there is no
/// broadcasting anywhere in the library.
struct Tensor {
    std::vector<std::int64_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::int64_t> s) : shape(std::move(s)) {
        data.assign(static_cast<std::size_t>(numel_of(shape)), 0.0);
    }
    Tensor(std::vector<std::int64_t> s, std::vector<double> d)
        : shape(std::move(s)), data(std::move(d)) {
        require(static_cast<std::int64_t>(data.size()) == numel_of(shape),
                "tensor: data length does not match shape");
    }

    static std::int64_t numel_of(const std::vector<std::int64_t>& s) {
        std::int64_t n = 1;
        for (auto d : s) {
            require(d >= 0, "tensor: negative dimension");
            n *= d;
        }
        return n;
    }

    static Tensor zeros(std::vector<std::int64_t> s) { return Tensor(std::move(s)); }

    static Tensor full(std::vector<std::int64_t> s, double v) {
        Tensor t(std::move(s));
        for (auto& x : t.data) x = v;
        return t;
    }

    static Tensor scalar(double v) { return Tensor({}, {v}); }

    static Tensor from_vector(std::vector<double> d) {
        auto n = static_cast<std::int64_t>(d.size());
        return Tensor({n}, std::move(d));
    }

    std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
    int rank() const { return static_cast<int>(shape.size()); }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    std::int64_t dim(int i) const { return shape.at(static_cast<std::size_t>(i)); }

    // 2-D / 3-D / 4-D accessors; callers guarantee rank.
    double& at(std::int64_t i, std::int64_t j) { return data[static_cast<std::size_t>(i * shape[1] + j)]; }
    double at(std::int64_t i, std::int64_t j) const { return data[static_cast<std::size_t>(i * shape[1] + j)]; }
    double& at(std::int64_t i, std::int64_t j, std::int64_t k) {
        return data[static_cast<std::size_t>((i * shape[1] + j) * shape[2] + k)];
    }
    double at(std::int64_t i, std::int64_t j, std::int64_t k) const {
        return data[static_cast<std::size_t>((i * shape[1] + j) * shape[2] + k)];
    }
    double& at(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) {
        return data[static_cast<std::size_t>(((i * shape[1] + j) * shape[2] + k) * shape[3] + l)];
    }
    double at(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t l) const {
        return data[static_cast<std::size_t>(((i * shape[1] + j) * shape[2] + k) * shape[3] + l)];
    }

    bool all_finite() const;

    std::string shape_str() const;
};

/// Same shape and bitwise-identical payload.
bool bitwise_equal(const Tensor& a, const Tensor& b);

double max_abs_diff(const Tensor& a, const Tensor& b);

double l1_norm(const Tensor& t);
double l2_norm(const Tensor& t);
double linf_norm(const Tensor& t);
double lp_norm(const Tensor& t, int p);

} // namespace rbfcnn
