#pragma once

#include <string>
#include <string_view>

#include "rwg/group.hpp"
#include "rwg/measure.hpp"

namespace rwg {

enum class WalkName {
  kSimpleCircle,          // simple-circle:n      on cyclic:n
  kCubeNearestNeighbour,  // cube-nn:n            on cube:n
  kCubeLoops,             // cube-loops:n         on cube:n
  kRandomTranspositions,  // random-transpositions:n on symmetric:n
  kRandomToTop,           // random-to-top:n      on symmetric:n
  kTopToRandom,           // top-to-random:n      on symmetric:n
  kHeisenbergGenerators,  // heisenberg-gen:n     on heisenberg:n
  kUrbanStep,             // urban-step:n:i       on symmetric:n
};

/// A named driving measure. Descriptors look like `simple-circle:11`,
/// `cube-nn:6` or `urban-step:4:2` (n = 4, i = 2).
struct WalkSpec {
  WalkName name = WalkName::kSimpleCircle;
  int n = 0;
  int step = 0;  // urban-step only

  static WalkSpec parse(std::string_view text);
  std::string to_string() const;
  GroupDescriptor group_descriptor() const;

  friend bool operator==(const WalkSpec&, const WalkSpec&) = default;
};

/// Driving measure of `spec` on `group`; the group must match
/// `spec.group_descriptor()`.
///
/// Card-shuffle conventions: a permutation sends position p to position
/// sigma(p), and a shuffle h moves the deck g to h g. Top-to-random is the
/// uniform measure on the cycles (1 m m-1 ... 2), m = 1..n (m = 1 is the
/// identity); random-to-top is its reflection, the cycles (1 2 ... m).
Measure driving_measure(const WalkSpec& spec, const GroupPtr& group);
Measure driving_measure(const WalkSpec& spec);

/// Hamming weight of a cube element.
int weight(const Group& cube, Element s);

}  // namespace rwg
