#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "qmana/errors.hpp"
#include "qmana/phasespace.hpp"
#include "qmana/random.hpp"
#include "qmana/states.hpp"

using namespace qmana;

TEST_CASE("prime dimensions") {
  CHECK(PrimeDim(3).value() == 3);
  CHECK(PrimeDim(7).inverse(3) == 5);
  for (int bad : {-3, 0, 1, 2, 4, 9, 15}) CHECK_THROWS_AS(PrimeDim{bad}, Error);
  try {
    PrimeDim{4};
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDimension);
  }
  CHECK_THROWS_AS(PrimeDim(5).inverse(10), Error);
}

TEST_CASE("weyl operators match tau^{kl} X^k Z^l") {
  for (int d : {3, 5, 7}) {
    const PrimeDim dim(d);
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) CHECK(max_abs_diff(weyl(dim, {k, l}), brute::weyl(d, k, l)) < 1e-12);
  }
  CHECK(max_abs_diff(weyl(PrimeDim(3), {0, 0}), ComplexMatrix::Identity(3, 3)) == 0);
  CHECK(max_abs_diff(weyl(PrimeDim(3), {1, 0}), brute::shift(3)) < 1e-15);
  CHECK_THROWS_AS(weyl(PrimeDim(3), {3, 0}), Error);
}

TEST_CASE("weyl operators in long double agree") {
  const PrimeDim dim(5);
  const auto hi = weyl<long double>(dim, {2, 3});
  CHECK(max_abs_diff(hi.cast<cplx>(), weyl(dim, {2, 3})) < 1e-15);
}

TEST_CASE("phase point operators are displaced parities") {
  for (int d : {3, 5}) {
    const PrimeDim dim(d);
    const auto& ops = operators(dim);
    for (int p = 0; p < d * d; ++p) {
      const PhasePoint pt = point_at(dim, p);
      const ComplexMatrix a = phase_point_operator(dim, pt);
      CHECK(max_abs_diff(a, brute::point_op(d, pt.k, pt.l)) < 1e-12);
      CHECK(max_abs_diff(ops.phase_point[p], a) < 1e-12);
      CHECK(hermitian_defect(a) < 1e-12);
      CHECK(std::abs(a.trace() - cplx(1)) < 1e-12);
      // monomial form reproduces the dense operator
      const Monomial& m = ops.phase_point_monomial[p];
      ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
      for (int r = 0; r < d; ++r) rebuilt(r, m.column[r]) = m.value[r];
      CHECK(max_abs_diff(rebuilt, a) < 1e-12);
      for (int q = 0; q < d * d; ++q)
        CHECK(std::abs(trace_product(a, ops.phase_point[q]) - cplx(p == q ? d : 0)) < 1e-10);
    }
  }
}

TEST_CASE("wigner of the maximally mixed qutrit is uniform") {
  const WignerTable w = wigner(maximally_mixed({3}));
  for (int i = 0; i < 9; ++i) CHECK(w.values()[i] == doctest::Approx(1.0 / 9).epsilon(1e-14));
  const DensityState back = reconstruct(w);
  CHECK(max_abs_diff(back.matrix(), ComplexMatrix::Identity(3, 3) / 3.0) < 1e-14);
}

TEST_CASE("wigner of the strange state") {
  const WignerTable w = wigner(named_state("strange").projector());
  const Eigen::MatrixXd g = w.grid();
  CHECK(g(0, 0) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
  CHECK(g(0, 1) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(g(0, 2) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  for (int k = 1; k < 3; ++k)
    for (int l = 0; l < 3; ++l) CHECK(g(k, l) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(w.abs_sum() == doctest::Approx(5.0 / 3).epsilon(1e-14));
  CHECK(w.at(PhasePoint{0, 0}) == doctest::Approx(-1.0 / 3));
}

TEST_CASE("wigner agrees with brute force on random states") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const DensityState one = random_density({5}, rng);
    const auto ref1 = brute::wigner(one.matrix(), 5, 1);
    const WignerTable w1 = wigner(one);
    for (int i = 0; i < 25; ++i) CHECK(w1.values()[i] == doctest::Approx(ref1[i]).epsilon(1e-12));

    const DensityState two = random_density({3, 3}, rng);
    const auto ref2 = brute::wigner(two.matrix(), 3, 2);
    const WignerTable w2 = wigner(two);
    double worst = 0;
    for (int i = 0; i < 81; ++i) worst = std::max(worst, std::abs(w2.values()[i] - ref2[i]));
    CHECK(worst < 1e-13);
    CHECK(max_abs_diff(reconstruct(w2).matrix(), two.matrix()) < 1e-12);
  }
}

TEST_CASE("pure wigner matches the density route") {
  Rng rng(3);
  for (int d : {3, 5, 7}) {
    const ComplexVector psi = random_unit_vector(d, rng);
    const Eigen::VectorXd fast = pure_wigner(PrimeDim(d), psi);
    const WignerTable slow = wigner(PureVector(psi).projector());
    CHECK((fast - slow.values()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("displacement shifts the table") {
  Rng rng(4);
  const DensityState rho = random_density({3}, rng);
  const WignerTable w = wigner(rho);
  const PhasePoint shift{1, 2};
  const WignerTable moved = w.displaced({&shift, 1});
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      CHECK(moved.at(PhasePoint{(k + 1) % 3, (l + 2) % 3}) == doctest::Approx(w.at(PhasePoint{k, l})));
}

TEST_CASE("wigner table validation") {
  CHECK_THROWS_AS(WignerTable({3}, Eigen::VectorXd::Constant(9, 0.2)), Error);
  CHECK_THROWS_AS(WignerTable({3}, Eigen::VectorXd::Constant(8, 1.0 / 8)), Error);
}
