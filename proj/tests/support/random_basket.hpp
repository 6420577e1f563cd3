#pragma once

// Generators of random valid basket data for property tests.

#include <random>

#include "orbirr/basket.hpp"

namespace orbirr::testing {

inline PointBasketEntry random_point(std::mt19937& rng, int max_s) {
  std::uniform_int_distribution<int> s_dist(2, max_s);
  for (;;) {
    PointBasketEntry p;
    p.s = s_dist(rng);
    std::uniform_int_distribution<int> a_dist(1, p.s - 1), n_dist(0, p.s - 1);
    for (int& ai : p.a) ai = a_dist(rng);
    p.n = n_dist(rng);
    if (validate_point(p).ok()) return p;
  }
}

inline CurveBasketEntry random_curve(std::mt19937& rng, int max_r) {
  std::uniform_int_distribution<int> r_dist(2, max_r), tau_dist(1, 4), num_dist(1, 30), n_dist(-30, 30);
  for (;;) {
    CurveBasketEntry c;
    c.r = r_dist(rng);
    std::uniform_int_distribution<int> k_dist(1, c.r - 1);
    c.k = k_dist(rng);
    c.tau = tau_dist(rng);
    c.degD = make_rat(num_dist(rng), c.r * c.tau);
    c.N = c.r == 2 ? 0 : n_dist(rng);
    if (validate_curve(c).ok()) return c;
  }
}

/// Calabi-Yau data with 0-2 points, 0-2 curves and random global terms.
inline PolarizedData random_cy_data(std::mt19937& rng, int max_s, int max_r) {
  std::uniform_int_distribution<int> count(0, 2), num(1, 60), den(1, 30), sgn(-40, 40);
  PolarizedData d;
  d.calabi_yau = true;
  for (int i = count(rng); i > 0; --i) d.points.push_back(random_point(rng, max_s));
  for (int i = count(rng); i > 0; --i) d.curves.push_back(random_curve(rng, max_r));
  d.D3 = make_rat(num(rng), den(rng));
  d.Dc2 = make_rat(sgn(rng), den(rng));
  return d;
}

}  // namespace orbirr::testing
