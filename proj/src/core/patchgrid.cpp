#include "core/patchgrid.hpp"

namespace rbfcnn {

PatchGrid::PatchGrid(std::int64_t h, std::int64_t w, std::int64_t c, std::int64_t k)
    : image_h(h), image_w(w), channels(c), patch_size(k) {
    require(h >= 1 && w >= 1 && c >= 1, "patchgrid: empty image");
    require(k >= 1, "patchgrid: patch size must be positive");
    require(k <= h && k <= w,
            "patchgrid: patch size " + std::to_string(k) + " exceeds image side " +
                std::to_string(std::min(h, w)));
}

Tensor PatchGrid::coverage() const {
    Tensor cov({image_h, image_w});
    for (std::int64_t pr = 0; pr < rows(); ++pr)
        for (std::int64_t pc = 0; pc < cols(); ++pc)
            for (std::int64_t r = 0; r < patch_size; ++r)
                for (std::int64_t c = 0; c < patch_size; ++c) cov.at(pr + r, pc + c) += 1.0;
    return cov;
}

Tensor extract_patches(const Tensor& image, std::int64_t k) {
    require(image.rank() == 3, "extract_patches: expected H x W x C image, got " + image.shape_str());
    PatchGrid grid(image.dim(0), image.dim(1), image.dim(2), k);
    const std::int64_t C = grid.channels;
    Tensor out({grid.n_patches(), grid.patch_dim()});
    std::int64_t p = 0;
    for (std::int64_t pr = 0; pr < grid.rows(); ++pr) {
        for (std::int64_t pc = 0; pc < grid.cols(); ++pc, ++p) {
            double* dst = &out.at(p, 0);
            for (std::int64_t r = 0; r < k; ++r)
                for (std::int64_t c = 0; c < k; ++c)
                    for (std::int64_t ch = 0; ch < C; ++ch)
                        dst[(r * k + c) * C + ch] = image.at(pr + r, pc + c, ch);
        }
    }
    return out;
}

Tensor stitch(const Tensor& patches, const PatchGrid& grid) {
    require(patches.rank() == 2, "stitch: expected [n_patches, dim] matrix");
    require(patches.dim(0) == grid.n_patches() && patches.dim(1) == grid.patch_dim(),
            "stitch: patch matrix " + patches.shape_str() + " does not match grid");
    const std::int64_t k = grid.patch_size;
    const std::int64_t C = grid.channels;
    Tensor out({grid.image_h, grid.image_w, grid.channels});
    // fixed accumulation order: patches in stream order, then one divide pass
    std::int64_t p = 0;
    for (std::int64_t pr = 0; pr < grid.rows(); ++pr) {
        for (std::int64_t pc = 0; pc < grid.cols(); ++pc, ++p) {
            const double* src = &patches.at(p, 0);
            for (std::int64_t r = 0; r < k; ++r)
                for (std::int64_t c = 0; c < k; ++c)
                    for (std::int64_t ch = 0; ch < C; ++ch)
                        out.at(pr + r, pc + c, ch) += src[(r * k + c) * C + ch];
        }
    }
    Tensor cov = grid.coverage();
    for (std::int64_t i = 0; i < grid.image_h; ++i)
        for (std::int64_t j = 0; j < grid.image_w; ++j) {
            double inv = 1.0 / cov.at(i, j);
            for (std::int64_t ch = 0; ch < C; ++ch) out.at(i, j, ch) *= inv;
        }
    return out;
}

} // namespace rbfcnn
