#pragma once

#include <cstdint>

#include "core/tensor.hpp"

namespace rbfcnn {

/// Geometry of a stride-1 valid sliding window over an H x W x C image.
/// Patch vectors are flattened row-major with channel fastest:
/// element ((r * k) + c) * channels + ch.
struct PatchGrid {
    std::int64_t image_h = 0;
    std::int64_t image_w = 0;
    std::int64_t channels = 0;
    std::int64_t patch_size = 0;

    PatchGrid() = default;
    PatchGrid(std::int64_t h, std::int64_t w, std::int64_t c, std::int64_t k);

    std::int64_t rows() const { return image_h - patch_size + 1; }
    std::int64_t cols() const { return image_w - patch_size + 1; }
    std::int64_t n_patches() const { return rows() * cols(); }
    std::int64_t patch_dim() const { return patch_size * patch_size * channels; }

    /// Number of windows covering each pixel; depends on geometry only.
    Tensor coverage() const;
};

/// Image [H,W,C] -> patches [n_patches, k*k*C], window origins row-major.
Tensor extract_patches(const Tensor& image, std::int64_t k);

/// Inverse of extraction up to overlap averaging: each pixel is the mean of
/// all patch contributions covering it.
Tensor stitch(const Tensor& patches, const PatchGrid& grid);

} // namespace rbfcnn
