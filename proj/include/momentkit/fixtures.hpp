#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "momentkit/moments.hpp"
#include "momentkit/rng.hpp"

namespace momentkit {

enum class FixtureKind { random_ball_atoms, uniform_interval, worked_examples };

std::string to_string(FixtureKind kind);
FixtureKind fixture_kind_from_string(const std::string& name);

/// One reproducible test case: a measure (when one exists), its truncated
/// moments, and closed-form reference values for checks against it.
struct Fixture {
  std::string name;
  std::optional<AtomicMeasure> measure;
  MomentSequence moments;
  nlohmann::json expected;
};

struct FixtureBundle {
  FixtureKind kind;
  std::uint64_t seed;
  std::vector<Fixture> fixtures;
};

/// Deterministic per seed. random_ball_atoms draws atoms inside the unit ball
/// of the requested dimension; uniform_interval emits the exact moments of
/// the normalized uniform measure on [-1, 1]; worked_examples bundles small
/// hand-checked cases (point masses, symmetric pairs, a certificate target).
FixtureBundle generate_fixture(FixtureKind kind, std::uint64_t seed, int num_vars = 2,
                               int max_degree = 10);

nlohmann::json fixture_bundle_to_json(const FixtureBundle& bundle);

/// Exact moments of the uniform measure on [-1, 1] with total mass one:
/// value 1/(k+1) at even degree k, zero at odd degrees.
MomentSequence uniform_interval_moments(int max_degree);

/// Random measure in the unit ball: atom count in [1, max_atoms], weights
/// bounded below by 0.05 and summing to one.
AtomicMeasure random_ball_measure(Rng& rng, int num_vars, int max_atoms = 4);

}  // namespace momentkit
