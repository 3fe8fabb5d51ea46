#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "test_util.hpp"

using namespace aeqsvm;
using testutil::state_distance;

TEST(PrepareState, BasisState) {
  const Statevector s = prepare_state(std::vector<double>{1.0, 0.0});
  EXPECT_EQ(s.num_qubits, 1);
  EXPECT_DOUBLE_EQ(s.amps[0].real(), 1.0);
  EXPECT_DOUBLE_EQ(s.amps[1].real(), 0.0);
}

TEST(PrepareState, UniformTwoQubits) {
  const Statevector s = prepare_state(std::vector<double>{1.0, 1.0, 1.0, 1.0});
  for (const Complex& a : s.amps) EXPECT_NEAR(a.real(), 0.5, 1e-15);
}

TEST(PrepareState, DirectNormalization) {
  const Statevector s = prepare_state(std::vector<double>{3.0, 4.0});
  EXPECT_NEAR(s.amps[0].real(), 0.6, 1e-15);
  EXPECT_NEAR(s.amps[1].real(), 0.8, 1e-15);
}

TEST(PrepareState, Errors) {
  EXPECT_THROW(prepare_state(std::vector<double>{0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(prepare_state(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(prepare_state(std::vector<double>{}), std::invalid_argument);
}

TEST(Hadamard, PlusAndMinus) {
  const double inv = 1.0 / std::sqrt(2.0);
  Statevector plus = apply_hadamard(zero_state(1), 0);
  EXPECT_NEAR(plus.amps[0].real(), inv, 1e-15);
  EXPECT_NEAR(plus.amps[1].real(), inv, 1e-15);

  Statevector minus = apply_hadamard(basis_state(1, 1), 0);
  EXPECT_NEAR(minus.amps[0].real(), inv, 1e-15);
  EXPECT_NEAR(minus.amps[1].real(), -inv, 1e-15);
}

TEST(Hadamard, Involution) {
  Rng rng(11);
  const Statevector s = random_state(3, rng);
  const Statevector round = apply_hadamard(apply_hadamard(s, 1), 1);
  EXPECT_LT(state_distance(round, s), 1e-12);
}

TEST(Hadamard, OutOfRange) {
  EXPECT_THROW(apply_hadamard(zero_state(2), 2), std::out_of_range);
}

TEST(ControlledX, FlipsOnControlValueZero) {
  // control qubit 1 at |0>, target qubit 0: |00> -> |01> (index 0 -> 1)
  Statevector s = apply_controlled_x(zero_state(2), 1, 0, 0);
  EXPECT_NEAR(std::abs(s.amps[1]), 1.0, 1e-15);

  // control at |1>: untouched
  Statevector t = apply_controlled_x(basis_state(2, 2), 1, 0, 0);
  EXPECT_NEAR(std::abs(t.amps[2]), 1.0, 1e-15);
}

TEST(ControlledX, Involution) {
  Rng rng(12);
  const Statevector s = random_state(3, rng);
  const Statevector round =
      apply_controlled_x(apply_controlled_x(s, 2, 1, 0), 2, 1, 0);
  EXPECT_LT(state_distance(round, s), 1e-12);
}

TEST(ControlledX, ControlEqualsTarget) {
  EXPECT_THROW(apply_controlled_x(zero_state(2), 1, 0, 1), std::invalid_argument);
}

TEST(ControlledPower, PowerZeroIsIdentity) {
  Rng rng(13);
  const Statevector s = random_state(3, rng);
  const LinearOperator x = LinearOperator::pauli_x(0);
  EXPECT_LT(state_distance(apply_controlled_power(s, 2, x, 0), s), 1e-15);
}

TEST(ControlledPower, ControlZeroLeavesStateAlone) {
  const Statevector s = zero_state(2);  // control qubit 1 is |0>
  const LinearOperator x = LinearOperator::pauli_x(0);
  EXPECT_LT(state_distance(apply_controlled_power(s, 1, x, 5), s), 1e-15);
}

TEST(ControlledPower, PlusControlMakesBellPair) {
  Statevector s = apply_hadamard(zero_state(2), 0);  // control qubit 0 in |+>
  s = apply_controlled_power(s, 0, LinearOperator::pauli_x(1), 1);
  const double inv = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.amps[0].real(), inv, 1e-15);
  EXPECT_NEAR(s.amps[3].real(), inv, 1e-15);
  EXPECT_NEAR(std::abs(s.amps[1]) + std::abs(s.amps[2]), 0.0, 1e-15);
}

TEST(ControlledPower, SupportOverlapRejected) {
  EXPECT_THROW(apply_controlled_power(zero_state(2), 0, LinearOperator::pauli_x(0), 1),
               std::invalid_argument);
}

TEST(ControlledPower, PowersCompose) {
  Rng rng(14);
  const Statevector s = random_state(3, rng);
  const LinearOperator u = LinearOperator::dense(random_unitary(4, rng), {0, 1});
  const Statevector once = apply_controlled_power(s, 2, u, 5);
  const Statevector split =
      apply_controlled_power(apply_controlled_power(s, 2, u, 2), 2, u, 3);
  EXPECT_LT(state_distance(once, split), 1e-12);
}

TEST(InverseQft, UniformGoesToZero) {
  Statevector s = zero_state(3);
  for (int q = 0; q < 3; ++q) s = apply_hadamard(std::move(s), q);
  s = inverse_qft(std::move(s), QubitRange{0, 3});
  EXPECT_NEAR(std::abs(s.amps[0]), 1.0, 1e-12);
}

TEST(InverseQft, PureToneRecoversFrequency) {
  std::vector<Complex> amps(8);
  const double inv = 1.0 / std::sqrt(8.0);
  for (int t = 0; t < 8; ++t)
    amps[t] = std::polar(inv, 2.0 * kPi * 3.0 * t / 8.0);
  Statevector s;
  s.num_qubits = 3;
  s.amps = std::move(amps);
  s = inverse_qft(std::move(s), QubitRange{0, 3});
  EXPECT_NEAR(std::abs(s.amps[3]), 1.0, 1e-12);
  for (int y = 0; y < 8; ++y)
    if (y != 3) EXPECT_NEAR(std::abs(s.amps[y]), 0.0, 1e-12);
}

TEST(InverseQft, RoundTripOnEmbeddedRegister) {
  Rng rng(15);
  const Statevector s = random_state(6, rng);
  const QubitRange reg{2, 3};
  const Statevector round = qft(inverse_qft(s, reg), reg);
  EXPECT_LT(state_distance(round, s), 1e-12);
}

TEST(InverseQft, UnknownRegister) {
  RegisterMap regs(4);
  regs.add("counting", 0, 3);
  EXPECT_THROW(inverse_qft(zero_state(4), regs, "data"), std::invalid_argument);
}

TEST(Reflect, AxisIsNegated) {
  Rng rng(16);
  const Statevector axis = random_state(3, rng);
  Statevector reflected = reflect_about_state(axis, axis);
  for (std::size_t i = 0; i < axis.dimension(); ++i)
    EXPECT_NEAR(std::abs(reflected.amps[i] + axis.amps[i]), 0.0, 1e-12);
}

TEST(Reflect, OrthogonalStateUntouched) {
  const Statevector axis = basis_state(2, 0);
  const Statevector other = basis_state(2, 3);
  EXPECT_LT(state_distance(reflect_about_state(other, axis), other), 1e-15);
}

TEST(Reflect, Involution) {
  Rng rng(17);
  const Statevector axis = random_state(3, rng);
  const Statevector s = random_state(3, rng);
  const Statevector round = reflect_about_state(reflect_about_state(s, axis), axis);
  EXPECT_LT(state_distance(round, s), 1e-12);
}

TEST(Reflect, DimensionMismatch) {
  EXPECT_THROW(reflect_about_state(zero_state(2), zero_state(3)), std::invalid_argument);
}

TEST(FlipSign, FlagBehaviour) {
  const Statevector zero = zero_state(1);
  EXPECT_LT(state_distance(flip_sign_on_flag(zero, 0, 1), zero), 1e-15);

  const Statevector one = basis_state(1, 1);
  Statevector flipped = flip_sign_on_flag(one, 0, 1);
  EXPECT_NEAR(flipped.amps[1].real(), -1.0, 1e-15);

  Rng rng(18);
  const Statevector s = random_state(3, rng);
  EXPECT_LT(state_distance(flip_sign_on_flag(flip_sign_on_flag(s, 1, 1), 1, 1), s), 1e-15);
}

TEST(Measurement, PointMassAndUniform) {
  const std::vector<double> zero = measurement_distribution(zero_state(2), QubitRange{0, 2});
  EXPECT_NEAR(zero[0], 1.0, 1e-15);

  Statevector s = zero_state(3);
  for (int q = 0; q < 3; ++q) s = apply_hadamard(std::move(s), q);
  for (double p : measurement_distribution(s, QubitRange{0, 3}))
    EXPECT_NEAR(p, 1.0 / 8.0, 1e-12);
}

TEST(Measurement, BellMarginal) {
  Statevector bell = apply_hadamard(zero_state(2), 0);
  bell = apply_controlled_power(bell, 0, LinearOperator::pauli_x(1), 1);
  const std::vector<double> marginal = measurement_distribution(bell, QubitRange{0, 1});
  EXPECT_NEAR(marginal[0], 0.5, 1e-12);
  EXPECT_NEAR(marginal[1], 0.5, 1e-12);
}

TEST(Measurement, FullRegisterMatchesAmplitudes) {
  Rng rng(19);
  const Statevector s = random_state(4, rng);
  const std::vector<double> dist = measurement_distribution(s, QubitRange{0, 4});
  double sum = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    EXPECT_NEAR(dist[i], std::norm(s.amps[i]), 1e-14);
    sum += dist[i];
  }
  EXPECT_NEAR(sum, 1.0, 1e-10);
}

TEST(Sampling, PointMassDeterministic) {
  std::vector<double> dist(8, 0.0);
  dist[5] = 1.0;
  for (std::uint64_t seed = 0; seed < 32; ++seed) EXPECT_EQ(sample_outcome(dist, seed), 5u);
}

TEST(Sampling, SeedReproducible) {
  const std::vector<double> dist{0.5, 0.5};
  const std::size_t first = sample_outcome(dist, 12345);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(sample_outcome(dist, 12345), first);
}

TEST(Sampling, EmpiricalFrequencyWithinThreeSigma) {
  const std::vector<double> dist{0.15, 0.35, 0.5};
  const int trials = 100000;
  std::vector<int> counts(dist.size(), 0);
  for (int i = 0; i < trials; ++i) ++counts[sample_outcome(dist, 777000 + i)];
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double sigma = std::sqrt(dist[k] * (1.0 - dist[k]) * trials);
    EXPECT_NEAR(counts[k], dist[k] * trials, 3.0 * sigma);
  }
}

TEST(Sampling, MalformedDistributionRejected) {
  EXPECT_THROW(sample_outcome({0.5, 0.6}, 1), std::invalid_argument);
  EXPECT_THROW(sample_outcome({-0.1, 1.1}, 1), std::invalid_argument);
  EXPECT_THROW(sample_outcome({}, 1), std::invalid_argument);
}

TEST(InnerProduct, BasicValues) {
  Rng rng(20);
  const Statevector v = random_state(3, rng);
  EXPECT_NEAR(inner_product(v, v).real(), 1.0, 1e-12);
  EXPECT_NEAR(inner_product(v, v).imag(), 0.0, 1e-12);

  EXPECT_NEAR(std::abs(inner_product(zero_state(1), basis_state(1, 1))), 0.0, 1e-15);

  const Statevector plus = apply_hadamard(zero_state(1), 0);
  EXPECT_NEAR(inner_product(plus, zero_state(1)).real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(InnerProduct, ConjugateLinearInFirstArgument) {
  Statevector a = zero_state(1);
  a.amps = {Complex{0.0, 1.0}, Complex{0.0, 0.0}};  // i|0>
  const Complex ip = inner_product(a, zero_state(1));
  EXPECT_NEAR(ip.imag(), -1.0, 1e-15);
}

TEST(NormPreservation, RandomGateChains) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Statevector s = random_state(4, rng);
    for (int step = 0; step < 10; ++step) {
      switch (rng.below(4)) {
        case 0: s = apply_hadamard(std::move(s), static_cast<int>(rng.below(4))); break;
        case 1: s = apply_pauli_x(std::move(s), static_cast<int>(rng.below(4))); break;
        case 2: s = flip_sign_on_flag(std::move(s), static_cast<int>(rng.below(4)), 1); break;
        default: s = reflect_about_state(std::move(s), random_state(4, rng)); break;
      }
    }
    EXPECT_NEAR(norm_l2(s), 1.0, 1e-10);
  }
}

TEST(RegisterMap, OverlapAndBounds) {
  RegisterMap regs(6);
  regs.add("work", 0, 4);
  EXPECT_THROW(regs.add("count", 3, 2), std::invalid_argument);
  EXPECT_THROW(regs.add("count", 5, 2), std::invalid_argument);
  regs.add("count", 4, 2);
  EXPECT_EQ(regs.range("count").start, 4);
  EXPECT_THROW(regs.range("missing"), std::invalid_argument);
}

TEST(LinearOperator, DenseRoundTrip) {
  Rng rng(22);
  const LinearOperator u = LinearOperator::dense(random_unitary(8, rng), {0, 1, 2});
  const Statevector s = random_state(5, rng);
  EXPECT_LT(state_distance(u.apply_inverse(u.apply(s)), s), 1e-12);
}

TEST(LinearOperator, NonUnitaryRejected) {
  std::vector<Complex> m{Complex{1.0, 0.0}, Complex{0.0, 0.0},
                         Complex{0.0, 0.0}, Complex{2.0, 0.0}};
  EXPECT_THROW(LinearOperator::dense(m, {0}), std::invalid_argument);
}

TEST(LinearOperator, SequenceInverseReversesOrder) {
  Rng rng(23);
  const LinearOperator seq = LinearOperator::sequence(
      {LinearOperator::hadamard(0), LinearOperator::controlled_x(0, 1, 1),
       LinearOperator::dense(random_unitary(4, rng), {1, 2})});
  const Statevector s = random_state(3, rng);
  EXPECT_LT(state_distance(seq.apply_inverse(seq.apply(s)), s), 1e-12);
}
