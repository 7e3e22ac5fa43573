#pragma once

#include <array>
#include <optional>
#include <string>

#include "tslab/geometry.hpp"
#include "tslab/rational.hpp"

namespace tslab {

// Ambient dimension d and the exact dimensions of the dilation set:
// beta = Minkowski, gamma = Assouad, with beta <= gamma.
struct DimensionParams {
  int d = 2;
  Rat beta;
  Rat gamma;

  // d >= 2, 0 <= beta <= gamma <= 1. Theorem regimes additionally need
  // beta > 0; beta = 0 is tolerated here so the CLI can surface per-vertex
  // vanishing-denominator diagnostics.
  void validate() const;
};

enum class VertexName {
  Q1, Q2, Q3, Q4, Q2tilde, Q3tilde, Q4tilde, Q5, Q6, QA, QB, QC, QD, QD1,
};

constexpr std::array<VertexName, 14> kAllVertexNames = {
    VertexName::Q1, VertexName::Q2,     VertexName::Q3,     VertexName::Q4,
    VertexName::Q2tilde, VertexName::Q3tilde, VertexName::Q4tilde, VertexName::Q5,
    VertexName::Q6, VertexName::QA,     VertexName::QB,     VertexName::QC,
    VertexName::QD, VertexName::QD1,
};

const char* vertex_name_str(VertexName v);
std::optional<VertexName> vertex_name_parse(const std::string& s);

struct NamedVertexValue {
  VertexName name;
  ExponentTriple value;
  bool in_unit_cube = true;  // false marks a flagged (out-of-range) vertex
};

// Exact vertex per the closed-form tables. Throws std::domain_error on a
// vanishing denominator (e.g. Q5/Q6 at beta = 0); out-of-cube coordinates are
// flagged, not clamped.
NamedVertexValue named_vertex(VertexName name, const DimensionParams& p);

// 1/q_gamma = (d-1)/(2(d-1+2*gamma)) and 1/q_{LS,beta} = (d-1)/(2(d-1+beta)).
Rat inv_q_gamma(const DimensionParams& p);
Rat inv_q_ls(const DimensionParams& p);

enum class ThetaCase { Q4, QD, Q2, QB, Q3, QC, QA_ls, QD_ls, Q4_ls };

constexpr std::array<ThetaCase, 9> kAllThetaCases = {
    ThetaCase::Q4, ThetaCase::QD, ThetaCase::Q2,    ThetaCase::QB,   ThetaCase::Q3,
    ThetaCase::QC, ThetaCase::QA_ls, ThetaCase::QD_ls, ThetaCase::Q4_ls,
};

const char* theta_case_str(ThetaCase c);

// Closed-form critical interpolation weight for the case. Pure algebra: no
// range restriction beyond nonzero denominators.
Rat critical_theta(ThetaCase c, const DimensionParams& p);

// The two interpolation endpoints for the case (theta weights endpoint_a),
// whether the result is lifted to 1/r = 1 by the dilation-index Hoelder move,
// and the named vertex the critical combination must reproduce. The *_ls
// cases target vertices evaluated at gamma = beta.
struct ThetaInterpolation {
  Rat theta;
  ExponentTriple endpoint_a;
  ExponentTriple endpoint_b;
  bool lift_r_to_one = false;
  VertexName target;
  DimensionParams target_params;
};

ThetaInterpolation theta_interpolation(ThetaCase c, const DimensionParams& p);

// theta * a + (1-theta) * b, with the optional lift applied.
ExponentTriple theta_combination(const ThetaInterpolation& t);

}  // namespace tslab
