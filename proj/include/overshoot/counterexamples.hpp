#pragma once

#include <cstddef>
#include <vector>

#include "overshoot/random.hpp"
#include "overshoot/rational.hpp"

// Two deterministic chains, run on Poisson clocks, for which 0 is locally
// recurrent yet the overshoot chain misbehaves:
//
//   One: x -> 1/x (|x|>1), -(1+|x|)/x (0<|x|<=1), 1 (x=0)
//        orbit from 0: 0, 1, -2, -1/2, 3, 1/3, -4, -1/4, ...
//        overshoots from x in (0,1]: Y_n = 1/x + 2n -> inf
//   Two: x -> -1/x (|x|>1), (1+|x|)/x (0<|x|<=1), 1 (x=0)
//        orbit from 0: 0, 1, 2, -1/2, -3, 1/3, 4, -1/4, -5, ...
//        overshoots from x > 1: Y_n = 1/(x + 2n - 1) -> 0

namespace overshoot {

enum class Variant { One, Two };

Rational step(Variant variant, const Rational& x);
double step(Variant variant, double x);

/// x0 followed by n applications of step.
std::vector<Rational> orbit(Variant variant, const Rational& x0, std::size_t n);

/// Y_n in closed form. Y_0 = x0; One needs x0 in (0,1], Two needs x0 > 1.
/// Throws DomainError otherwise.
Rational overshoot_orbit(Variant variant, const Rational& x0, std::size_t n);

/// Y_0..Y_n by iterating step from x0 > 0 and recording every entry into
/// (0, inf) after a visit to (-inf, 0].
std::vector<Rational> overshoots_by_iteration(Variant variant, const Rational& x0, std::size_t n);

/// Right-continuous piecewise-constant path: the chain jumps at the events
/// of a Poisson process. times[0] = 0 holds x0; times[k] is the k-th event.
struct SubordinatedPath {
    std::vector<double> times;
    std::vector<Rational> states;

    /// State at time t >= 0.
    Rational at(double t) const;
};

/// Runs the chain on a Poisson clock of the given rate up to `horizon`.
SubordinatedPath subordinate(Variant variant, const Rational& x0, double rate, double horizon, Stream& rng);

}  // namespace overshoot
