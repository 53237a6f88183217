#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alglift/algebroid.hpp"
#include "alglift/complex.hpp"
#include "alglift/equivariant.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"
#include "alglift/lift.hpp"

/*
 * JSON encodings of every value the CLI reads or writes.
 *
 * K-numbers are strings in the text form of knumber.hpp; rationals never
 * appear as JSON floats. Integers are JSON numbers when they fit in 64 bits
 * and decimal strings otherwise. Object keys are emitted in sorted order, so
 * output is byte-stable.
 */
namespace alglift::io {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& why) { throw Error(ErrorCode::SchemaError, why); }

inline const json& require(const json& j, const char* key) {
  if (!j.is_object()) schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing key '") + key + "'");
  return *it;
}

inline bool is_natural(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

inline std::size_t require_size(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!is_natural(v)) schema_error(std::string("'") + key + "' must be a natural number");
  return v.get<std::size_t>();
}

// integers

inline json encode(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline Integer decode_integer(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) schema_error("expected an integer, got '" + j.get<std::string>() + "'");
    return q.get_num();
  }
  schema_error("expected an integer");
}

inline json encode(const ZMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(encode(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Rows of integers. An empty array is a 0 x cols matrix.
inline ZMatrix decode_zmatrix(const json& j, std::size_t rows_hint, std::size_t cols) {
  if (!j.is_array()) schema_error("expected an array of rows");
  if (j.empty()) return ZMatrix(0, cols);
  ZMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) schema_error("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = decode_integer(j[i][c]);
  }
  (void)rows_hint;
  return m;
}

inline ZMatrix decode_zmatrix(const json& j) {
  if (!j.is_array()) schema_error("expected an array of rows");
  std::size_t cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return decode_zmatrix(j, j.size(), cols);
}

// K-matrices

inline json encode(const KMatrix& m, const SymbolBasis& b) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline KNumber decode_knumber(const json& j, const SymbolBasis& b) {
  if (j.is_string()) return parse_knumber(j.get<std::string>(), b);
  if (j.is_number_integer()) return KNumber(Rational(decode_integer(j)));
  schema_error("K-numbers must be strings");
}

inline KMatrix decode_kmatrix(const json& j, const SymbolBasis& b, std::size_t cols) {
  if (!j.is_array()) schema_error("expected an array of rows");
  KMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) schema_error("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = decode_knumber(j[i][c], b);
  }
  return m;
}

inline KMatrix decode_kmatrix(const json& j, const SymbolBasis& b) {
  if (!j.is_array()) schema_error("expected an array of rows");
  std::size_t cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return decode_kmatrix(j, b, cols);
}

inline json encode(const SymbolBasis& b) { return b.symbols(); }

inline SymbolBasis decode_symbols(const json& j) {
  auto it = j.find("symbols");
  if (it == j.end()) return {};
  if (!it->is_array()) schema_error("'symbols' must be an array of strings");
  SymbolBasis b;
  for (const auto& s : *it) {
    if (!s.is_string()) schema_error("'symbols' must be an array of strings");
    b.add(s.get<std::string>());
  }
  return b;
}

// complexes

inline json encode(const ChainComplex& c) {
  json bs = json::array();
  for (const auto& d : c.boundaries()) bs.push_back(encode(d));
  return {{"dims", c.dims()}, {"boundaries", std::move(bs)}};
}

inline SimplicialInput decode_simplicial(const json& j) {
  SimplicialInput s;
  const json& facets = require(j, "facets");
  if (!facets.is_array()) schema_error("'facets' must be an array");
  std::size_t max_vertex = 0;
  for (const auto& f : facets) {
    if (!f.is_array()) schema_error("each facet must be an array of vertex indices");
    std::vector<std::size_t> facet;
    for (const auto& v : f) {
      if (!is_natural(v)) schema_error("vertex indices must be natural numbers");
      facet.push_back(v.get<std::size_t>());
      max_vertex = std::max(max_vertex, facet.back() + 1);
    }
    s.facets.push_back(std::move(facet));
  }
  s.vertices = j.contains("vertices") ? require_size(j, "vertices") : max_vertex;
  return s;
}

/// Either {"dims", "boundaries"} or a simplicial {"facets"} description.
inline ChainComplex decode_complex(const json& j) {
  if (!j.is_object()) schema_error("complex must be an object");
  if (j.contains("facets")) return from_simplicial(decode_simplicial(j));
  const json& dims_j = require(j, "dims");
  if (!dims_j.is_array()) schema_error("'dims' must be an array");
  std::vector<std::size_t> dims;
  for (const auto& d : dims_j) {
    if (!is_natural(d)) schema_error("'dims' entries must be natural numbers");
    dims.push_back(d.get<std::size_t>());
  }
  const json& bj = require(j, "boundaries");
  if (!bj.is_array()) schema_error("'boundaries' must be an array");
  if (dims.empty() || bj.size() + 1 != dims.size()) schema_error("need one boundary matrix per positive degree");
  std::vector<ZMatrix> boundaries;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    const json& m = bj[k - 1];
    if (!m.is_array()) schema_error("boundary must be an array of rows");
    if (dims[k - 1] == 0) {
      if (!m.empty()) schema_error("boundary d_" + std::to_string(k) + " should have no rows");
      boundaries.emplace_back(0, dims[k]);
    } else {
      ZMatrix d = decode_zmatrix(m, dims[k - 1], dims[k]);
      if (d.rows() != dims[k - 1]) schema_error("boundary d_" + std::to_string(k) + " has wrong row count");
      boundaries.push_back(std::move(d));
    }
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

inline json encode(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(encode(t));
  return {{"degree", h.degree},
          {"betti", h.betti},
          {"torsion", std::move(torsion)},
          {"cells", h.cycle_basis.cols()},
          {"cycle_basis", encode(h.cycle_basis)}};
}

inline HomologyResult decode_homology(const json& j) {
  HomologyResult h;
  h.degree = require_size(j, "degree");
  h.betti = require_size(j, "betti");
  const json& t = require(j, "torsion");
  if (!t.is_array()) schema_error("'torsion' must be an array");
  for (const auto& x : t) h.torsion.push_back(decode_integer(x));
  h.cycle_basis = decode_zmatrix(require(j, "cycle_basis"), h.betti, require_size(j, "cells"));
  if (h.cycle_basis.rows() != h.betti) schema_error("cycle_basis must have betti rows");
  return h;
}

// presentations

inline json encode(const AlgebroidPresentation& p) {
  json j = {{"symbols", encode(p.symbols())},
            {"r", p.r()},
            {"ell", p.ell()},
            {"periods", encode(p.periods(), p.symbols())},
            {"simply_connected", p.simply_connected()}};
  if (const auto& src = p.source()) {
    j["complex"] = encode(src->complex);
    j["cochain"] = encode(src->curvature.values, p.symbols());
    j["cycle_basis"] = encode(src->homology.cycle_basis);
  }
  return j;
}

namespace detail {

// A supplied H_2 basis must consist of cycles whose homology coordinates
// (read off with dual cocycles) form a unimodular matrix.
inline HomologyResult adopt_cycle_basis(const ChainComplex& c, const ZMatrix& basis) {
  HomologyResult h = homology(c, 2);
  if (basis.rows() != h.betti || (h.betti > 0 && basis.cols() != c.dim(2)))
    schema_error("cycle_basis must have betti_2 rows of length n_2");
  if (h.betti == 0) return h;
  if (!(c.boundary(2) * basis.transpose()).is_zero()) schema_error("cycle_basis rows are not cycles");
  if (!is_unimodular(basis * dual_cocycle_basis(c, h))) schema_error("cycle_basis is not a basis of H_2 mod torsion");
  h.cycle_basis = basis;
  return h;
}

}  // namespace detail

/*
 * {"symbols", "r", "ell", "periods", "simply_connected"}; alternatively
 * "complex" + "cochain" (values on the 2-cells), from which periods are
 * computed. When both are present they must agree.
 */
inline AlgebroidPresentation decode_presentation(const json& j) {
  if (!j.is_object()) schema_error("presentation must be an object");
  SymbolBasis symbols = decode_symbols(j);
  const json& sc = require(j, "simply_connected");
  if (!sc.is_boolean()) schema_error("'simply_connected' must be a boolean");
  bool simply_connected = sc.get<bool>();

  std::optional<AlgebroidPresentation> from_source;
  if (j.contains("complex") || j.contains("cochain")) {
    ChainComplex c = decode_complex(require(j, "complex"));
    if (c.top() < 2) schema_error("complex has no 2-cells");
    const json& cj = require(j, "cochain");
    std::size_t ell = j.contains("ell") ? require_size(j, "ell") : (cj.empty() ? 0 : cj[0].size());
    KMatrix values = decode_kmatrix(cj, symbols, ell);
    if (values.rows() != c.dim(2)) schema_error("cochain needs one row per 2-cell");
    Cochain omega{2, values};
    if (j.contains("cycle_basis")) {
      HomologyResult h = detail::adopt_cycle_basis(c, decode_zmatrix(j["cycle_basis"], 0, c.dim(2)));
      from_source.emplace(symbols, periods(c, omega, h), simply_connected, PresentationSource{c, omega, h});
    } else {
      from_source = AlgebroidPresentation::from_cochain(symbols, c, omega, simply_connected);
    }
  }

  if (!j.contains("periods")) {
    if (!from_source) schema_error("missing key 'periods'");
    return *from_source;
  }
  std::size_t r = require_size(j, "r");
  std::size_t ell = require_size(j, "ell");
  KMatrix p = decode_kmatrix(require(j, "periods"), symbols, ell);
  if (p.rows() != r) schema_error("'periods' must have r rows");
  if (from_source) {
    if (!(from_source->periods() == p)) schema_error("'periods' disagree with the cochain");
    return *from_source;
  }
  return {symbols, p, simply_connected};
}

inline json encode(const MonodromyReport& m, const SymbolBasis& b) {
  return {{"generators", encode(m.generators, b)},
          {"free_rank", m.free_rank},
          {"real_span_dim", m.real_span_dim},
          {"discrete", m.discrete}};
}

inline MonodromyReport decode_monodromy(const json& j, const SymbolBasis& b) {
  MonodromyReport m;
  m.generators = decode_kmatrix(require(j, "generators"), b);
  m.free_rank = require_size(j, "free_rank");
  m.real_span_dim = require_size(j, "real_span_dim");
  const json& d = require(j, "discrete");
  if (!d.is_boolean()) schema_error("'discrete' must be a boolean");
  m.discrete = d.get<bool>();
  return m;
}

inline json encode(const NOfBResult& n, const SymbolBasis& b) {
  return {{"n", n.n}, {"u", encode(n.u)}, {"transformed_periods", encode(n.transformed_periods, b)}};
}

inline const char* to_string(LiftKind k) { return k == LiftKind::AlmeidaMolino ? "almeida-molino" : "de-rham"; }

inline json encode(const LiftResult& lr) {
  const SymbolBasis& b = lr.base.symbols();
  return {{"construction", to_string(lr.kind)},
          {"symbols", encode(b)},
          {"n", lr.n},
          {"u", encode(lr.u)},
          {"base", encode(lr.base)},
          {"total", encode(lr.total)},
          {"total_periods", encode(lr.total.periods(), b)},
          {"fiber_map", encode(lr.fiber_map, b)},
          {"kernel", encode(lr.kernel_basis, b)},
          {"free_rank", lr.certificate.free_rank},
          {"real_span_dim", lr.certificate.real_span_dim},
          {"discrete", lr.certificate.discrete},
          {"degenerate", lr.degenerate}};
}

inline LiftResult decode_lift(const json& j) {
  LiftResult lr;
  const json& kind = require(j, "construction");
  if (kind == "almeida-molino")
    lr.kind = LiftKind::AlmeidaMolino;
  else if (kind == "de-rham")
    lr.kind = LiftKind::DeRham;
  else
    schema_error("unknown construction");
  lr.base = decode_presentation(require(j, "base"));
  lr.total = decode_presentation(require(j, "total"));
  const SymbolBasis& b = lr.base.symbols();
  lr.n = require_size(j, "n");
  lr.u = decode_zmatrix(require(j, "u"), lr.base.r(), lr.base.r());
  if (lr.u.rows() != lr.base.r()) schema_error("'u' must be r x r");
  if (!(decode_kmatrix(require(j, "total_periods"), b, lr.total.ell()) == lr.total.periods()))
    schema_error("'total_periods' disagree with 'total'");
  lr.fiber_map = decode_kmatrix(require(j, "fiber_map"), b, lr.total.ell());
  lr.kernel_basis = decode_kmatrix(require(j, "kernel"), b, lr.total.ell());
  lr.certificate = is_discrete(lr.total.periods());
  const json& degenerate = require(j, "degenerate");
  if (!degenerate.is_boolean()) schema_error("'degenerate' must be a boolean");
  lr.degenerate = degenerate.get<bool>();
  const json& discrete = require(j, "discrete");
  if (!discrete.is_boolean()) schema_error("'discrete' must be a boolean");
  lr.certificate.discrete = lr.certificate.discrete && discrete.get<bool>();
  return lr;
}

// group actions

inline json encode(const GroupAction& a) {
  json elements = json::array();
  for (const auto& e : a.elements()) {
    json mats = json::array();
    for (const auto& m : e) mats.push_back(encode(m));
    elements.push_back({{"matrices", std::move(mats)}});
  }
  return {{"complex", encode(a.complex())}, {"elements", std::move(elements)}, {"table", a.table()}};
}

inline GroupAction decode_group_action(const json& j) {
  ChainComplex c = decode_complex(require(j, "complex"));
  const json& ej = require(j, "elements");
  if (!ej.is_array()) schema_error("'elements' must be an array");
  std::vector<GroupAction::Element> elements;
  for (const auto& e : ej) {
    const json& mats = require(e, "matrices");
    if (!mats.is_array() || mats.size() != c.top() + 1) schema_error("each element needs one matrix per degree");
    GroupAction::Element el;
    for (std::size_t k = 0; k <= c.top(); ++k) {
      ZMatrix m = c.dim(k) == 0 ? ZMatrix(0, 0) : decode_zmatrix(mats[k], c.dim(k), c.dim(k));
      if (m.rows() != c.dim(k)) schema_error("element matrix has wrong size");
      el.push_back(std::move(m));
    }
    elements.push_back(std::move(el));
  }
  const json& tj = require(j, "table");
  std::vector<std::vector<std::size_t>> table;
  try {
    table = tj.get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception&) {
    schema_error("'table' must be a square array of natural numbers");
  }
  return GroupAction(std::move(c), std::move(elements), std::move(table));
}

/// "forms": one array of per-cell K-number values per basis form.
inline FormSubspace decode_forms(const json& j, const ChainComplex& c, const SymbolBasis& b, std::size_t degree = 2) {
  const json& fj = require(j, "forms");
  if (!fj.is_array()) schema_error("'forms' must be an array");
  std::vector<Cochain> basis;
  for (const auto& f : fj) {
    if (!f.is_array() || f.size() != c.dim(degree)) schema_error("each form needs one value per cell");
    Cochain form{degree, KMatrix(c.dim(degree), 1)};
    for (std::size_t i = 0; i < f.size(); ++i) form.values(i, 0) = decode_knumber(f[i], b);
    basis.push_back(std::move(form));
  }
  return FormSubspace(c, degree, std::move(basis));
}

inline json encode_forms(const FormSubspace& e, const SymbolBasis& b) {
  json out = json::array();
  for (const auto& f : e.basis()) {
    json vals = json::array();
    for (std::size_t i = 0; i < f.values.rows(); ++i) vals.push_back(to_string(f.values(i, 0), b));
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace alglift::io
