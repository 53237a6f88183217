#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "alglift/complex.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"

namespace alglift {

/// Cochain-level origin of a period matrix.
struct PresentationSource {
  ChainComplex complex;
  Cochain curvature;        // closed 2-cochain with values in K^ell
  HomologyResult homology;  // degree 2

  friend bool operator==(const PresentationSource&, const PresentationSource&) = default;
};

/*
 * A trivially abelian transitive algebroid TM (+)_omega (M x R^ell), reduced
 * to its monodromy data: the r x ell matrix of periods of omega over a basis
 * of the free part of H_2. Simple connectivity cannot be computed from this
 * data and is carried as a caller assertion.
 */
class AlgebroidPresentation {
 public:
  AlgebroidPresentation() = default;

  AlgebroidPresentation(SymbolBasis symbols, KMatrix periods, bool simply_connected,
                        std::optional<PresentationSource> source = std::nullopt)
      : symbols_(std::move(symbols)),
        periods_(std::move(periods)),
        simply_connected_(simply_connected),
        source_(std::move(source)) {
    if (symbol_span(periods_) > symbols_.size())
      throw Error(ErrorCode::SymbolMismatch, "periods use undeclared symbols");
    if (source_) {
      if (source_->homology.degree != 2 || source_->curvature.degree != 2)
        throw Error(ErrorCode::DegreeMismatch, "curvature data must live in degree 2");
      if (alglift::periods(source_->complex, source_->curvature, source_->homology) != periods_)
        throw Error(ErrorCode::ShapeMismatch, "periods disagree with the cochain source");
    }
  }

  /// Presentation whose periods are computed from a closed 2-cochain.
  static AlgebroidPresentation from_cochain(SymbolBasis symbols, const ChainComplex& complex,
                                            Cochain curvature, bool simply_connected) {
    HomologyResult h = homology(complex, 2);
    KMatrix p = alglift::periods(complex, curvature, h);
    return {std::move(symbols), std::move(p), simply_connected,
            PresentationSource{complex, std::move(curvature), std::move(h)}};
  }

  const SymbolBasis& symbols() const noexcept { return symbols_; }
  std::size_t r() const noexcept { return periods_.rows(); }
  std::size_t ell() const noexcept { return periods_.cols(); }
  const KMatrix& periods() const noexcept { return periods_; }
  bool simply_connected() const noexcept { return simply_connected_; }
  const std::optional<PresentationSource>& source() const noexcept { return source_; }

  friend bool operator==(const AlgebroidPresentation&, const AlgebroidPresentation&) = default;

 private:
  SymbolBasis symbols_;
  KMatrix periods_;
  bool simply_connected_ = false;
  std::optional<PresentationSource> source_;
};

/*
 * Summary of the group generated by the rows of a matrix in K^ell.
 *
 * A finitely generated subgroup of R^ell is discrete iff its free rank equals
 * the dimension of its real span. With symbols algebraically independent the
 * free rank is the Q-rank of the flattened rows and the real span dimension
 * is the rank over Q(s_1..s_d).
 */
struct MonodromyReport {
  KMatrix generators;
  std::size_t free_rank = 0;
  std::size_t real_span_dim = 0;
  bool discrete = true;

  friend bool operator==(const MonodromyReport&, const MonodromyReport&) = default;
};

}  // namespace alglift
