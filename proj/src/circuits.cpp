#include "qmana/circuits.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "qmana/phasespace.hpp"
#include "qmana/states.hpp"

namespace qmana {

BeamsplitterSpec::BeamsplitterSpec(PrimeDim dim, long long alpha, long long beta, long long gamma, long long delta)
    : dim_(dim),
      alpha_(dim.mod(alpha)),
      beta_(dim.mod(beta)),
      gamma_(dim.mod(gamma)),
      delta_(dim.mod(delta)),
      det_(dim.mod(static_cast<long long>(alpha_) * delta_ - static_cast<long long>(beta_) * gamma_)),
      g_(0) {
  if (det_ == 0)
    throw Error(ErrorKind::SingularG, "G is singular mod " + std::to_string(dim.value()));
  g_ = dim.inverse(det_);
}

namespace qutrit {
BeamsplitterSpec g1() { return {PrimeDim(3), 1, 2, 0, 1}; }
BeamsplitterSpec g2() { return {PrimeDim(3), 1, 0, 2, 1}; }
BeamsplitterSpec g3() { return {PrimeDim(3), 0, 1, 1, 2}; }
BeamsplitterSpec g4() { return {PrimeDim(3), 2, 1, 1, 0}; }
}  // namespace qutrit

BeamsplitterSpec csum_spec(PrimeDim dim) { return {dim, 1, dim.value() - 1, 0, 1}; }
BeamsplitterSpec swap_spec(PrimeDim dim) { return {dim, 0, 1, 1, 0}; }

BeamsplitterSpec parse_beamsplitter(std::string_view text, PrimeDim dim) {
  if (text == "csum") return csum_spec(dim);
  if (text == "swap") return swap_spec(dim);
  if (text.size() == 2 && (text[0] == 'G' || text[0] == 'g') && text[1] >= '1' && text[1] <= '4') {
    if (dim.value() != 3) throw Error(ErrorKind::InvalidDimension, "G1..G4 are qutrit beamsplitters");
    switch (text[1]) {
      case '1': return qutrit::g1();
      case '2': return qutrit::g2();
      case '3': return qutrit::g3();
      default: return qutrit::g4();
    }
  }
  std::vector<long long> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view part = text.substr(pos, comma - pos);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw Error(ErrorKind::Parse, "cannot parse beamsplitter '" + std::string(text) + "'");
    entries.push_back(v);
    pos = comma + 1;
  }
  if (entries.size() != 4) throw Error(ErrorKind::Parse, "beamsplitter matrix needs four entries alpha,beta,gamma,delta");
  return {dim, entries[0], entries[1], entries[2], entries[3]};
}

ComplexMatrix beamsplitter(const BeamsplitterSpec& spec) {
  const PrimeDim dim = spec.dim();
  const int d = dim.value();
  ComplexMatrix b = ComplexMatrix::Zero(d * d, d * d);
  for (long long j1 = 0; j1 < d; ++j1)
    for (long long j2 = 0; j2 < d; ++j2) {
      const int o1 = dim.mod(spec.g() * (spec.delta() * j1 - spec.gamma() * j2));
      const int o2 = dim.mod(spec.g() * (spec.alpha() * j2 - spec.beta() * j1));
      b(o1 * d + o2, j1 * d + j2) = 1.0;
    }
  return b;
}

ComplexMatrix clifford_gate(PrimeDim dim, std::string_view name) {
  const int d = dim.value();
  if (name == "z") return weyl(dim, {0, 1});
  if (name == "phase") {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (long long j = 0; j < d; ++j) m(j, j) = tau_power(dim, j * j);
    return m;
  }
  if (name == "fourier") {
    ComplexMatrix m(d, d);
    const double norm = 1.0 / std::sqrt(double(d));
    for (long long k = 0; k < d; ++k)
      for (long long j = 0; j < d; ++j) m(k, j) = norm * omega_power(dim, j * k);
    return m;
  }
  if (name == "csum") return beamsplitter(csum_spec(dim));
  if (name == "swap") return beamsplitter(swap_spec(dim));
  throw Error(ErrorKind::UnknownGate, "unknown gate '" + std::string(name) + "'");
}

std::pair<PhasePoint, PhasePoint> conjugate_weyl(const BeamsplitterSpec& spec, PhasePoint p1, PhasePoint p2) {
  const PrimeDim dim = spec.dim();
  require_in_range(dim, p1);
  require_in_range(dim, p2);
  const long long a = spec.alpha(), b = spec.beta(), c = spec.gamma(), e = spec.delta(), g = spec.g();
  const PhasePoint q1{dim.mod(g * (e * p1.k - c * p2.k)), dim.mod(a * p1.l + b * p2.l)};
  const PhasePoint q2{dim.mod(g * (a * p2.k - b * p1.k)), dim.mod(e * p2.l + c * p1.l)};
  return {q1, q2};
}

ComplexMatrix heisenberg_pullback(const BeamsplitterSpec& spec, Side side, PhasePoint pt) {
  const PrimeDim dim = spec.dim();
  require_in_range(dim, pt);
  const int d = dim.value();
  const auto& ops = operators(dim);
  const long long a = spec.alpha(), b = spec.beta(), c = spec.gamma(), e = spec.delta(), g = spec.g();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (long long m = 0; m < d; ++m)
    for (long long n = 0; n < d; ++n) {
      PhasePoint left, right;
      if (side == Side::a) {
        left = {dim.mod(a * m), dim.mod(g * e * n)};
        right = {dim.mod(b * m), dim.mod(-g * c * n)};
      } else {
        // Printed with both indices negated; this sign matches B^dagger (1 (x) A) B.
        left = {dim.mod(c * m), dim.mod(-g * b * n)};
        right = {dim.mod(e * m), dim.mod(g * a * n)};
      }
      out += omega_power(dim, pt.l * m - pt.k * n) *
             kron(ops.weyl[point_index(dim, left)], ops.weyl[point_index(dim, right)]);
    }
  return out / static_cast<double>(d);
}

ComplexMatrix heisenberg_pullback_dense(const BeamsplitterSpec& spec, Side side, PhasePoint pt) {
  const PrimeDim dim = spec.dim();
  require_in_range(dim, pt);
  const int d = dim.value();
  const ComplexMatrix& a = operators(dim).phase_point[point_index(dim, pt)];
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix local = side == Side::a ? kron(a, id) : kron(id, a);
  const ComplexMatrix bs = beamsplitter(spec);
  return bs.adjoint() * local * bs;
}

double prop3_expectation(const DensityState& rho, const BeamsplitterSpec& spec, Side side, PhasePoint pt) {
  if (!spec.beta_delta_nonzero())
    throw Error(ErrorKind::BetaDeltaZero, "beta*delta = 0 mod d");
  if (rho.subsystems() != 1 || rho.dims()[0] != spec.dim().value())
    throw Error(ErrorKind::InvalidDimension, "expectation needs a single qudit of the beamsplitter dimension");
  const DensityState input = tensor(rho, basis_projector(spec.dim(), 0));
  return trace_product(input.matrix(), heisenberg_pullback_dense(spec, side, pt)).real();
}

int prop3_diagonal_index(const BeamsplitterSpec& spec, Side side, int k) {
  if (!spec.beta_delta_nonzero())
    throw Error(ErrorKind::BetaDeltaZero, "beta*delta = 0 mod d");
  const PrimeDim dim = spec.dim();
  // |j,0> leaves as |g delta j, -g beta j>, so side b picks up a minus sign.
  const long long inv = dim.inverse(side == Side::a ? spec.delta() : spec.beta());
  const long long j = static_cast<long long>(k) * inv % dim.value() * spec.det();
  return dim.mod(side == Side::a ? j : -j);
}

DensityState beamsplitter_output(const DensityState& rho, const BeamsplitterSpec& spec) {
  if (rho.subsystems() != 1 || rho.dims()[0] != spec.dim().value())
    throw Error(ErrorKind::InvalidDimension, "beamsplitter input must be one qudit of the beamsplitter dimension");
  return apply_unitary(beamsplitter(spec), tensor(rho, basis_projector(spec.dim(), 0)));
}

}  // namespace qmana
