#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fibspec/errors.hpp"
#include "fibspec/hamiltonian.hpp"

using namespace fibspec;

namespace {

// Fibonacci word from the substitution 1 -> 10, 0 -> 1.
std::string substitution_word(std::size_t min_len) {
  std::string w = "1";
  while (w.size() < min_len) {
    std::string next;
    for (char c : w) next += (c == '1') ? "10" : "1";
    w = std::move(next);
  }
  return w;
}

std::vector<double> dense_eigenvalues(const TridiagonalMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = m.diagonal[static_cast<std::size_t>(i)];
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

TEST_CASE("potential values") {
  const FibonacciPotential p(1.0);
  const std::vector<int> expected{1, 0, 1, 1, 0};
  CHECK(p.values(1, 5) == expected);
  CHECK(p.value(0) == 0);
  CHECK_THROWS_AS(p.values(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(FibonacciPotential(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FibonacciPotential(-1.0), std::invalid_argument);
}

TEST_CASE("potential word has the factors of the substitution word") {
  const std::string word = substitution_word(400);
  for (double omega0 : {0.0, 0.1, 0.5, 0.77}) {
    const auto v = FibonacciPotential(1.0, omega0).values(1, 100);
    std::string s;
    for (int b : v) s += static_cast<char>('0' + b);
    CHECK(s.find("00") == std::string::npos);
    CHECK(s.find("111") == std::string::npos);
    for (std::size_t len : {5u, 8u, 13u}) {
      for (std::size_t i = 0; i + len <= s.size(); ++i) {
        REQUIRE(word.find(s.substr(i, len)) != std::string::npos);
      }
    }
  }
  // omega0 = 0 gives the word itself, shifted by one site.
  const auto v = FibonacciPotential(1.0).values(1, 100);
  std::string s;
  for (int b : v) s += static_cast<char>('0' + b);
  CHECK(s == word.substr(0, 100));
}

TEST_CASE("eigenvalue examples") {
  const double tol = 1e-12;
  auto e2 = eigenvalues(TridiagonalMatrix{{0, 0}}, tol);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == doctest::Approx(-1).epsilon(1e-11));
  CHECK(e2[1] == doctest::Approx(1).epsilon(1e-11));

  auto e3 = eigenvalues(TridiagonalMatrix{{0, 0, 0}}, tol);
  REQUIRE(e3.size() == 3);
  CHECK(e3[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-11));
  CHECK(std::abs(e3[1]) < 1e-11);
  CHECK(e3[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));

  auto e = eigenvalues(TridiagonalMatrix{{2, 0, 2}}, tol);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == doctest::Approx(1 - std::sqrt(3.0)).epsilon(1e-11));
  CHECK(e[1] == doctest::Approx(2).epsilon(1e-11));
  CHECK(e[2] == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-11));

  CHECK_THROWS_AS(eigenvalues(TridiagonalMatrix{}, tol), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalues(TridiagonalMatrix{{0}}, 0.0), std::invalid_argument);
}

TEST_CASE("tolerance below resolution reports a failure") {
  const auto m = truncated_hamiltonian(FibonacciPotential(3.0), 55);
  CHECK_THROWS_AS(eigenvalues(m, 1e-300), NumericFailure);
}

TEST_CASE("eigenvalues agree with a dense symmetric solver") {
  for (double lambda : {0.0, 1.0, 5.0}) {
    const auto m = truncated_hamiltonian(FibonacciPotential(lambda, 0.3), 144);
    const auto ours = eigenvalues(m);
    const auto ref = dense_eigenvalues(m);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) REQUIRE(std::abs(ours[i] - ref[i]) < 1e-9);
  }
}

TEST_CASE("property: Sturm counts at the bounds and spectral range") {
  for (double lambda : {0.5, 2.0, 8.0}) {
    const auto m = truncated_hamiltonian(FibonacciPotential(lambda), 233);
    CHECK(eigenvalues_below(m, -2.0 - lambda - 1e-9) == 0);
    CHECK(eigenvalues_below(m, 2.0 + lambda + 1e-9) == 233);
    const auto e = eigenvalues(m);
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(e.front() >= -2.0 - lambda);
    CHECK(e.back() <= 2.0 + lambda);
  }
}

TEST_CASE("square eigenvalue sample") {
  const std::vector<double> pm{-1, 1};
  CHECK(square_eigenvalue_sample(pm, pm) == std::vector<double>{-2, 0, 0, 2});
  const std::vector<double> zero{0}, ab{0.3, 1.7};
  CHECK(square_eigenvalue_sample(zero, ab) == ab);
  const double r = std::sqrt(2.0);
  const std::vector<double> three{-r, 0, r};
  const auto s = square_eigenvalue_sample(three, three);
  const std::vector<double> expected{-2 * r, -r, -r, 0, 0, 0, r, r, 2 * r};
  REQUIRE(s.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(s[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  CHECK_THROWS_AS(square_eigenvalue_sample({}, ab), std::invalid_argument);
  const std::vector<double> big(2001, 0.0);
  CHECK_THROWS_AS(square_eigenvalue_sample(big, big), SizeCapExceeded);
}
