#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alglift/error.hpp"
#include "alglift/exact/matrix.hpp"

namespace alglift {

/*
 * Finitely generated free chain complex
 *
 *   Z^{n_top} --d_top--> ... --d_2--> Z^{n_1} --d_1--> Z^{n_0}
 *
 * with d_k stored as an n_{k-1} x n_k integer matrix acting on column
 * vectors of cell coefficients. The constructor checks shapes and
 * d_k * d_{k+1} = 0.
 */
class ChainComplex {
 public:
  ChainComplex() = default;

  ChainComplex(std::vector<std::size_t> dims, std::vector<ZMatrix> boundaries)
      : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw Error(ErrorCode::MalformedInput, "chain complex needs at least degree 0");
    if (boundaries_.size() + 1 != dims_.size())
      throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(dims_.size() - 1) + " boundary maps");
    for (std::size_t k = 1; k < dims_.size(); ++k) {
      const ZMatrix& d = boundaries_[k - 1];
      if (d.rows() != dims_[k - 1] || d.cols() != dims_[k])
        throw Error(ErrorCode::ShapeMismatch, "boundary d_" + std::to_string(k) + " has wrong shape");
    }
    for (std::size_t k = 1; k + 1 < dims_.size(); ++k)
      if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
        throw Error(ErrorCode::NotAChainComplex,
                    "d_" + std::to_string(k) + " * d_" + std::to_string(k + 1) + " != 0");
  }

  std::size_t top() const noexcept { return dims_.size() - 1; }
  std::size_t dim(std::size_t k) const { return k < dims_.size() ? dims_[k] : 0; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<ZMatrix>& boundaries() const noexcept { return boundaries_; }

  /// d_k for any k >= 0; d_0 and d_{top+1} are the zero maps of the
  /// appropriate (possibly empty) shapes.
  ZMatrix boundary(std::size_t k) const {
    if (k == 0) return ZMatrix(0, dim(0));
    if (k > top()) return ZMatrix(dim(k - 1), 0);
    return boundaries_[k - 1];
  }

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<ZMatrix> boundaries_;
};

}  // namespace alglift
