#pragma once

#include <string_view>
#include <utility>

#include "qmana/linalg.hpp"
#include "qmana/prime_dim.hpp"
#include "qmana/state.hpp"

namespace qmana {

// G = ((alpha, beta), (gamma, delta)) over Z_d with g = det(G)^{-1} mod d.
class BeamsplitterSpec {
 public:
  BeamsplitterSpec(PrimeDim dim, long long alpha, long long beta, long long gamma, long long delta);

  PrimeDim dim() const noexcept { return dim_; }
  int alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }
  int gamma() const noexcept { return gamma_; }
  int delta() const noexcept { return delta_; }
  int det() const noexcept { return det_; }
  int g() const noexcept { return g_; }

  bool beta_delta_nonzero() const noexcept { return beta_ != 0 && delta_ != 0; }

 private:
  PrimeDim dim_;
  int alpha_, beta_, gamma_, delta_, det_, g_;
};

namespace qutrit {
BeamsplitterSpec g1();
BeamsplitterSpec g2();
BeamsplitterSpec g3();
BeamsplitterSpec g4();
}  // namespace qutrit

BeamsplitterSpec csum_spec(PrimeDim dim);
BeamsplitterSpec swap_spec(PrimeDim dim);

// "G1".."G4" (qutrit), "csum", "swap", or "a,b,c,d".
BeamsplitterSpec parse_beamsplitter(std::string_view text, PrimeDim dim);

// B_G |j1, j2> = |g(delta j1 - gamma j2), g(alpha j2 - beta j1)>
ComplexMatrix beamsplitter(const BeamsplitterSpec& spec);

// z, phase, fourier, csum, swap
ComplexMatrix clifford_gate(PrimeDim dim, std::string_view name);

// Index map of B_G (D_{p1} (x) D_{p2}) B_G^dagger.
std::pair<PhasePoint, PhasePoint> conjugate_weyl(const BeamsplitterSpec& spec, PhasePoint p1, PhasePoint p2);

// B_G^dagger (A_{k,l} (x) 1) B_G (side a) or B_G^dagger (1 (x) A_{k,l}) B_G (side b),
// summed as a Weyl series.
ComplexMatrix heisenberg_pullback(const BeamsplitterSpec& spec, Side side, PhasePoint pt);
// Same operator by direct conjugation.
ComplexMatrix heisenberg_pullback_dense(const BeamsplitterSpec& spec, Side side, PhasePoint pt);

// tr((rho (x) |0><0|) B_G^dagger (A_{k,l} on side) B_G) by dense evaluation.
double prop3_expectation(const DensityState& rho, const BeamsplitterSpec& spec, Side side, PhasePoint pt);
// Diagonal index j with prop3_expectation = rho_{jj}: k delta^{-1} det G (a), -k beta^{-1} det G (b).
int prop3_diagonal_index(const BeamsplitterSpec& spec, Side side, int k);

// B_G (rho (x) |0><0|) B_G^dagger
DensityState beamsplitter_output(const DensityState& rho, const BeamsplitterSpec& spec);

}  // namespace qmana
