// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/repr.hpp"
#include "qdeform/spectrum.hpp"

using namespace qdeform;

TEST_CASE("denominator examples") {
  for (double q : {0.2, 1.0, 3.0}) {
    CHECK(denominator(SpinLabel(0), 0, DeformationParameter::from_q(q)) == 2.0);
  }
  CHECK(denominator(SpinLabel(2), 2, DeformationParameter()) == 18.0);
  const auto two = DeformationParameter::from_q(2.0);
  CHECK(denominator(SpinLabel(2), 2, two) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(denominator(SpinLabel(2), -2, two) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(denominator(SpinLabel(2), 0, two) == doctest::Approx(22.0).epsilon(1e-14));
  CHECK_THROWS_AS(denominator(SpinLabel(2), 1, two), std::invalid_argument);
  CHECK_THROWS_AS(denominator(SpinLabel(2), 4, two), std::invalid_argument);
}

TEST_CASE("denominator agrees with the high-precision oracle") {
  std::mt19937 gen(20261014);
  std::uniform_real_distribution<double> log_q(std::log(0.2), std::log(5.0));
  std::uniform_int_distribution<int> tj_dist(0, 16);
  for (int i = 0; i < 200; ++i) {
    const int tj = tj_dist(gen);
    std::uniform_int_distribution<int> k_dist(0, tj);
    const int tm = tj - 2 * k_dist(gen);
    const double q = std::exp(log_q(gen));
    const double got = denominator(SpinLabel(tj), tm, DeformationParameter::from_q(q));
    const double want =
        oracle::denominator(0.5 * tj, 0.5 * tm, oracle::High(q)).convert_to<double>();
    CAPTURE(tj);
    CAPTURE(tm);
    CAPTURE(q);
    CHECK(oracle::rel_diff(got, want) <= 1e-13);
  }
}

TEST_CASE("energy examples") {
  for (double q : {0.5, 1.0, 4.0}) {
    const auto d = DeformationParameter::from_q(q);
    CHECK(energy(SpinLabel(0), 0, d) == -1.0);
    CHECK(energy(SpinLabel(1), 1, d) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(energy(SpinLabel(1), -1, d) == doctest::Approx(-0.25).epsilon(1e-15));
  }
  const auto two = DeformationParameter::from_q(2.0);
  CHECK(energy(SpinLabel(2), 2, two) == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(energy(SpinLabel(2), 0, two) == doctest::Approx(-1.0 / 11.0).epsilon(1e-14));

  CHECK(energy_undeformed(SpinLabel(0)) == -1.0);
  CHECK(energy_undeformed(SpinLabel(1)) == -0.25);
  CHECK(energy_undeformed(SpinLabel(3)) == -1.0 / 16.0);
}

TEST_CASE("spin one-half level does not move with q") {
  for (int i = 0; i < 100; ++i) {
    const double q = std::pow(10.0, -1.0 + 2.0 * i / 99.0);
    const auto d = DeformationParameter::from_q(q);
    CHECK(std::abs(denominator(SpinLabel(1), 1, d) - 8.0) <= 1e-13 * 8.0);
    CHECK(std::abs(energy(SpinLabel(1), 1, d) + 0.25) <= 1e-13);
    CHECK(std::abs(energy(SpinLabel(1), -1, d) + 0.25) <= 1e-13);
  }
}

TEST_CASE("non-positive denominators are rejected") {
  for (double bad : {0.0, -1.0, std::nan(""), -std::numeric_limits<double>::infinity()}) {
    try {
      energy_from_denominator(bad, SpinLabel(4), -2);
      FAIL("expected NonPositiveDenominator");
    } catch (const NonPositiveDenominator& e) {
      CHECK(e.twice_j() == 4);
      CHECK(e.twice_m() == -2);
    }
  }
  CHECK(energy_from_denominator(8.0, SpinLabel(1), 1) == -0.25);
}

TEST_CASE("state enumeration examples") {
  const auto one = enumerate_states(SpinLabel(2), Mode::deformed);
  const std::vector<QuantumState> want{{SpinLabel(2), 2, 2},
                                       {SpinLabel(2), 2, -2},
                                       {SpinLabel(2), 0, 0},
                                       {SpinLabel(2), -2, 2},
                                       {SpinLabel(2), -2, -2}};
  CHECK(one == want);
  for (Mode mode : {Mode::deformed, Mode::undeformed}) {
    const auto zero = enumerate_states(SpinLabel(0), mode);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == QuantumState{SpinLabel(0), 0, 0});
  }
  CHECK(enumerate_states(SpinLabel(1), Mode::deformed).size() == 4);
  CHECK(enumerate_states(SpinLabel(2), Mode::undeformed).size() == 9);
}

TEST_CASE("state enumeration matches brute force") {
  for (int tj = 0; tj <= 20; ++tj) {
    for (Mode mode : {Mode::deformed, Mode::undeformed}) {
      const auto got = enumerate_states(SpinLabel(tj), mode);
      const auto brute = oracle::states(tj, mode == Mode::deformed);
      CHECK(got.size() == brute.size());
      std::set<std::pair<int, int>> seen;
      for (std::size_t i = 0; i < got.size(); ++i) {
        seen.insert({got[i].twice_m, got[i].twice_p});
        if (i > 0) {
          const auto& a = got[i - 1];
          const auto& b = got[i];
          CHECK((a.twice_m > b.twice_m || (a.twice_m == b.twice_m && a.twice_p > b.twice_p)));
        }
      }
      CHECK(seen == std::set<std::pair<int, int>>(brute.begin(), brute.end()));
    }
    const std::size_t n = tj + 1;
    CHECK(enumerate_states(SpinLabel(tj), Mode::undeformed).size() == n * n);
    CHECK(enumerate_states(SpinLabel(tj), Mode::deformed).size() ==
          static_cast<std::size_t>(tj % 2 == 0 ? 2 * tj + 1 : 2 * tj + 2));
  }
}

TEST_CASE("degeneracy summary") {
  CHECK(degeneracy_summary(SpinLabel(2)) == DegeneracySummary{2, 5});
  CHECK(degeneracy_summary(SpinLabel(0)) == DegeneracySummary{1, 1});
  CHECK(degeneracy_summary(SpinLabel(3)) == DegeneracySummary{2, 8});
  for (int tj = 0; tj <= 20; ++tj) {
    const auto sum = degeneracy_summary(SpinLabel(tj));
    if (tj % 2 == 0) {
      // (j+1, 4j+1)
      CHECK(sum == DegeneracySummary{tj / 2 + 1, 2 * tj + 1});
    } else {
      // half-integer j: (j+1/2, 4j+2), one state more than 4j+1 would give
      CHECK(sum == DegeneracySummary{(tj + 1) / 2, 2 * tj + 2});
    }
  }
}

TEST_CASE("level table examples") {
  const auto bohr = level_table(SpinLabel(2), DeformationParameter(), Mode::undeformed);
  REQUIRE(bohr.size() == 3);
  for (int k = 0; k < 3; ++k) {
    const int n = k + 1;
    CHECK(bohr[k].energy_ry == -1.0 / (n * n));
    CHECK(bohr[k].multiplicity == n * n);
    CHECK(bohr[k].principal_n == n);
    CHECK_FALSE(bohr[k].twice_abs_m.has_value());
  }

  const auto split = level_table(SpinLabel(2), DeformationParameter::from_q(2.0), Mode::deformed);
  REQUIRE(split.size() == 4);
  CHECK(split[0].energy_ry == -1.0);
  CHECK(split[0].multiplicity == 1);
  CHECK(split[1].energy_ry == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(split[1].multiplicity == 4);
  CHECK(split[1].j == SpinLabel(1));
  CHECK(split[2].energy_ry == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(split[2].twice_abs_m == 2);
  CHECK(split[2].multiplicity == 4);
  CHECK(split[3].energy_ry == doctest::Approx(-1.0 / 11.0).epsilon(1e-14));
  CHECK(split[3].twice_abs_m == 0);
  CHECK(split[3].multiplicity == 1);

  for (Mode mode : {Mode::deformed, Mode::undeformed}) {
    const auto ground = level_table(SpinLabel(0), DeformationParameter::from_q(3.0), mode);
    REQUIRE(ground.size() == 1);
    CHECK(ground[0].energy_ry == -1.0);
    CHECK(ground[0].multiplicity == 1);
  }
}

TEST_CASE("level table ordering and counting") {
  for (double q : {0.5, 1.0, 1.3, 4.0}) {
    const auto d = DeformationParameter::from_q(q);
    const auto table = level_table(SpinLabel(16), d, Mode::deformed);
    std::map<int, int> per_j;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& l = table[i];
      CHECK(l.energy_ry < 0.0);
      CHECK(l.multiplicity == (*l.twice_abs_m == 0 ? 1 : 4));
      CHECK(l.principal_n == l.j.twice_j() + 1);
      per_j[l.j.twice_j()] += l.multiplicity;
      if (i > 0) {
        const auto& p = table[i - 1];
        const bool ordered =
            p.energy_ry < l.energy_ry ||
            (p.energy_ry == l.energy_ry &&
             (p.j < l.j || (p.j == l.j && *p.twice_abs_m < *l.twice_abs_m)));
        CHECK(ordered);
      }
    }
    for (const auto& [tj, count] : per_j) {
      CHECK(static_cast<std::size_t>(count) ==
            enumerate_states(SpinLabel(tj), Mode::deformed).size());
    }
    for (const auto& l : level_table(SpinLabel(16), d, Mode::undeformed)) {
      CHECK(l.multiplicity == l.principal_n * l.principal_n);
    }
  }
}

TEST_CASE("m reflection and q inversion") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> log_q(std::log(0.1), std::log(10.0));
  for (int i = 0; i < 200; ++i) {
    const int tj = static_cast<int>(gen() % 21);
    const int tm = tj - 2 * static_cast<int>(gen() % (tj + 1));
    const double q = std::exp(log_q(gen));
    const auto d = DeformationParameter::from_q(q);
    const double e = energy(SpinLabel(tj), tm, d);
    CHECK(e == energy(SpinLabel(tj), -tm, d));
    CHECK(oracle::rel_diff(e, energy(SpinLabel(tj), tm, DeformationParameter::from_q(1.0 / q))) <=
          1e-13);
  }
}

TEST_CASE("energies approach the Bohr levels quadratically in s") {
  const std::vector<double> ss{1e-2, 1e-3, 1e-4};
  for (auto [tj, tm] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {4, 2}, {3, 1}, {6, 4}}) {
    std::vector<double> dev;
    for (double s : ss) {
      dev.push_back(energy(SpinLabel(tj), tm, DeformationParameter::from_s(s)) -
                    energy_undeformed(SpinLabel(tj)));
    }
    CAPTURE(tj);
    CAPTURE(tm);
    CHECK(std::abs(oracle::fitted_order(ss, dev) - 2.0) <= 0.1);
    CHECK(std::abs(dev[0]) <= 1e-2 * 1e-2 * 10.0);
  }
}

TEST_CASE("denominator equals 4 (I^2 + J^2) + 2 from the matrices") {
  for (double q : {0.9, 1.5}) {
    const auto d = DeformationParameter::from_q(q);
    for (int tj = 0; tj <= 8; ++tj) {
      const auto r = build_irrep(SpinLabel(tj), d);
      const ComplexMatrix c = casimir_symmetrized(r);
      const int n = r.dim();
      const ComplexMatrix total = kron(c, ComplexMatrix::Identity(n, n)) +
                                  kron(ComplexMatrix::Identity(n, n), c);
      for (const auto& st : enumerate_states(SpinLabel(tj), Mode::deformed)) {
        const int ki = (tj - st.twice_m) / 2;
        const int kj = (tj - st.twice_p) / 2;
        const double eig = total(ki * n + kj, ki * n + kj).real();
        CHECK(std::abs(denominator(SpinLabel(tj), st.twice_m, d) - (4.0 * eig + 2.0)) <= 1e-11);
      }
    }
  }
}

TEST_CASE("units") {
  UnitsConfig u;
  CHECK(u.convert(-1.0) == -1.0);
  u.output_unit = EnergyUnit::ev;
  CHECK(u.convert(-1.0) == -13.605693122994);
  u.output_unit = EnergyUnit::wavenumber_per_cm;
  CHECK(u.convert(0.75) == doctest::Approx(82302.98676).epsilon(1e-15));
  u.rydberg_ev = 0.0;
  CHECK_THROWS_AS(u.validate(), std::invalid_argument);
  CHECK(to_string(EnergyUnit::ev) == "ev");
  CHECK(to_string(Mode::undeformed) == "undeformed");
}
