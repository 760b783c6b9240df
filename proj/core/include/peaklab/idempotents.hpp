#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peaklab/group_algebra.hpp"

namespace peaklab {

// Construction caps; kept modest because the downstream diagnostics are
// full-group convolutions.
inline constexpr int kEulerianCapA = 7;
inline constexpr int kEulerianCapB = 6;

struct EulerianFamily {
  GroupId group;
  // Indexed by k: 0..n-1 for type A, 0..n for type B.
  std::vector<GroupAlgebraElement> elements;
};

struct PeakFamily {
  int n = 0;
  // pi_k for k = 0..n; zero members are stored as exact zeros.
  std::vector<GroupAlgebraElement> elements;
  std::vector<bool> is_zero;
};

// Coefficient extraction from the degree-n expansion of
//   sum_k t^{k+1} E_k = sum_sigma binom(t-1+n-des(sigma), n) sigma.
EulerianFamily eulerian_A(int n, int n_max = kEulerianCapA);

// Same with x = (t-1)/2 + n - des(w) and t^k on the left side.
EulerianFamily eulerian_B(int n, int n_max = kEulerianCapB);

// pi_k = phi(E^B_k).
PeakFamily peak_idempotents(int n, int n_max = kEulerianCapB);

// Groups the coefficients of an element by a statistic of the indexing group
// element and records whether the coefficient is constant on each fiber.
struct StatisticGrouping {
  // statistic value (sorted index set) -> the common coefficient.
  std::map<std::vector<int>, Rat> coefficient_by_statistic;
  std::map<std::vector<int>, size_t> fiber_size;
  bool constant = true;  // false if some fiber carries two coefficients
};

StatisticGrouping group_by_descent_set(const GroupAlgebraElement& e);
StatisticGrouping group_by_peak_set(const GroupAlgebraElement& e);

// Plug-in equality test: given an externally supplied complete family
// {E_lambda} of primitive idempotents of the type-A descent algebra indexed
// by partitions of n, tests pi_mu = sum over oddparts(lambda)=mu of E_lambda
// for every odd mu, including the vanishing cases.  Returns a human-readable
// mismatch description, or nullopt if every comparison holds.
std::optional<std::string> check_peak_sum_against_family(
    int n, const std::map<Partition, GroupAlgebraElement>& type_a_family);

}  // namespace peaklab
