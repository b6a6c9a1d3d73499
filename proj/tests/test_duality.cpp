#include "photondual/duality.hpp"
#include "photondual/evolve.hpp"
#include "photondual/measure.hpp"
#include "photondual/search.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace photondual;
namespace pt = photondual::testing;

namespace {

PureState partially(double beta) {
  const double alpha = std::sqrt(1.0 - beta * beta);
  return partially_distinguishable(3, Complex(alpha, 0), Complex(beta, 0));
}

}  // namespace

TEST_CASE("first quantization of the indistinguishable pair") {
  // [[1,0],[1,0]] -> (|12> + |21>)/sqrt(2) tensor |RR>, combined indices
  // m = s * L + l with L = 1 here.
  const FirstQuantizedState fq = first_quantize(fock_indistinguishable(2, {0, 1}));
  CHECK(fq.single_particle_dim == 2);
  REQUIRE(fq.terms.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(fq.terms.at({0, 1}) - Complex(r, 0)) <= 1e-12);
  CHECK(std::abs(fq.terms.at({1, 0}) - Complex(r, 0)) <= 1e-12);
}

TEST_CASE("first quantization of the distinguishable pair") {
  // [[1,0],[0,1]] -> (|1R,2G> + |2G,1R>)/sqrt(2); indices 0=1R, 3=2G.
  const FirstQuantizedState fq = first_quantize(fock_distinguishable(2, {0, 1}));
  CHECK(fq.single_particle_dim == 4);
  REQUIRE(fq.terms.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(fq.terms.at({0, 3}) - Complex(r, 0)) <= 1e-12);
  CHECK(std::abs(fq.terms.at({3, 0}) - Complex(r, 0)) <= 1e-12);
}

TEST_CASE("doubly occupied modes are already symmetric") {
  PureState state;
  state.shape = {2, 1};
  state.particles = 2;
  state.add_term(FockArray::from_grid({{2}, {0}}), Complex(1, 0));
  const FirstQuantizedState fq = first_quantize(state);
  REQUIRE(fq.terms.size() == 1);
  CHECK(std::abs(fq.terms.at({0, 0}) - Complex(1, 0)) <= 1e-12);
}

TEST_CASE("first quantization requires two particles") {
  CHECK_THROWS_AS(first_quantize(fock_indistinguishable(3, {0})), std::invalid_argument);
  CHECK_THROWS_AS(first_quantize(fock_indistinguishable(3, {0, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("first-quantized states are exchange symmetric and norm preserving") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState state = pt::random_state(3, 2, 2, rng);
    const FirstQuantizedState fq = first_quantize(state);
    double sq = 0.0;
    for (const auto& [pair, amplitude] : fq.terms) {
      sq += std::norm(amplitude);
      const auto swapped = fq.terms.find({pair.second, pair.first});
      REQUIRE(swapped != fq.terms.end());
      CHECK(std::abs(amplitude - swapped->second) <= 1e-12);
    }
    CHECK(std::sqrt(sq) == doctest::Approx(1.0));
  }
}

TEST_CASE("indistinguishable pair is a pure symmetric product") {
  const DualityDecomposition d = decompose(fock_indistinguishable(2, {0, 1}));
  REQUIRE(d.triplet_block.size() == 1);
  CHECK(d.singlet_block.empty());
  const auto& [key, amplitude] = *d.triplet_block.begin();
  CHECK(key.first == IndexPair{0, 1});   // sym(system 0, system 1)
  CHECK(key.second == IndexPair{0, 0});  // both photons share label 0
  CHECK(std::abs(amplitude - Complex(1, 0)) <= 1e-12);
  CHECK(schmidt_rank(fock_indistinguishable(2, {0, 1})) == 1);
}

TEST_CASE("distinguishable pair splits evenly between the sectors") {
  const DualityDecomposition d = decompose(fock_distinguishable(2, {0, 1}));
  const double r = 1.0 / std::sqrt(2.0);
  REQUIRE(d.triplet_block.size() == 1);
  REQUIRE(d.singlet_block.size() == 1);
  CHECK(std::abs(d.triplet_block.at({{0, 1}, {0, 1}}) - Complex(r, 0)) <= 1e-12);
  CHECK(std::abs(d.singlet_block.at({{0, 1}, {0, 1}}) - Complex(r, 0)) <= 1e-12);
  CHECK(schmidt_rank(fock_distinguishable(2, {0, 1})) == 2);
  REQUIRE(d.schmidt_coefficients.size() >= 2);
  CHECK(d.schmidt_coefficients[0] == doctest::Approx(r));
  CHECK(d.schmidt_coefficients[1] == doctest::Approx(r));
}

TEST_CASE("postselected filter output has no antisymmetric component") {
  for (double beta : {0.0, 0.5, 1.0}) {
    const PureState out = apply(canonical_filter(), partially(beta));
    const PostselectionResult post = postselect_vacuum(out, 0);
    REQUIRE(post.probability > 0.0);
    CHECK(singlet_weight(post.conditional_state) <= 1e-12);
    CHECK(schmidt_rank(post.conditional_state) == 1);
  }
}

TEST_CASE("decomposition reconstructs the first-quantized state exactly") {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState state = pt::random_state(3, 2, 2, rng);
    const FirstQuantizedState direct = first_quantize(state);
    const FirstQuantizedState rebuilt = reconstruct(decompose(state));
    for (const auto& [pair, amplitude] : direct.terms) {
      const auto it = rebuilt.terms.find(pair);
      const Complex other = it == rebuilt.terms.end() ? Complex(0, 0) : it->second;
      CHECK(std::abs(amplitude - other) <= 1e-12);
    }
    double direct_sq = 0.0, rebuilt_sq = 0.0;
    for (const auto& [pair, amplitude] : direct.terms) direct_sq += std::norm(amplitude);
    for (const auto& [pair, amplitude] : rebuilt.terms) rebuilt_sq += std::norm(amplitude);
    CHECK(direct_sq == doctest::Approx(rebuilt_sq));
  }
}

TEST_CASE("sector weights sum to one") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 10; ++trial) {
    const DualityDecomposition d = decompose(pt::random_state(3, 2, 2, rng));
    CHECK(d.triplet_weight() + d.singlet_weight() == doctest::Approx(1.0));
  }
}

TEST_CASE("singlet weight of the canonical inputs") {
  CHECK(singlet_weight(fock_distinguishable(2, {0, 1})) == doctest::Approx(0.5));
  CHECK(singlet_weight(fock_indistinguishable(2, {0, 1})) <= 1e-14);
}

TEST_CASE("partially distinguishable pair carries singlet weight |beta|^2/2") {
  for (double beta : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
    CHECK(singlet_weight(partially(beta)) == doctest::Approx(beta * beta / 2.0));
    CHECK(schmidt_rank(partially(beta)) == (beta == 0.0 ? 1 : 2));
  }
}

TEST_CASE("rank one exactly when the singlet sector is empty") {
  for (double beta : {0.0, 0.1, 0.3, 0.7, 0.9, 1.0}) {
    const PureState state = partially(beta);
    const bool rank_one = schmidt_rank(state) == 1;
    const bool singlet_free = singlet_weight(state) <= 1e-14;
    CHECK(rank_one == singlet_free);
  }
}

TEST_CASE("system interferometers never change the Schmidt spectrum") {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState state = pt::random_state(3, 2, 2, rng);
    const Interferometer u(pt::haar_unitary(3, rng));
    const auto before = decompose(state).schmidt_coefficients;
    const auto after = decompose(apply(u, state)).schmidt_coefficients;
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k)
      CHECK(std::abs(before[k] - after[k]) <= 1e-10);
    CHECK(schmidt_rank(apply(u, state)) <= schmidt_rank(state));
  }
}

TEST_CASE("declared-but-unoccupied labels are projected away") {
  PureState padded;
  padded.shape = {2, 4};
  padded.particles = 2;
  FockArray same = FockArray::vacuum({2, 4});
  same.at(0, 1) = 1;
  same.at(1, 1) = 1;
  FockArray cross = FockArray::vacuum({2, 4});
  cross.at(0, 1) = 1;
  cross.at(1, 3) = 1;
  const double r = 1.0 / std::sqrt(2.0);
  padded.add_term(same, Complex(r, 0));
  padded.add_term(cross, Complex(r, 0));

  const DualityDecomposition d = decompose(padded);
  CHECK(d.label_modes == 2);
  CHECK(d.singlet_weight() == doctest::Approx(0.25));
  CHECK(schmidt_rank(padded) == 2);
}
