#include <doctest.h>

#include <cmath>

#include "locbmo/geometry.hpp"

using namespace locbmo;

namespace {

DiscreteSpace lebesgue_1d(double extent, double h) {
  SpaceSpec spec;
  spec.dim = 1;
  spec.extent = extent;
  spec.spacing = h;
  return DiscreteSpace::build_grid(spec);
}

DiscreteSpace integer_line(double extent = 10.0) {
  SpaceSpec spec;
  spec.dim = 1;
  spec.extent = extent;
  spec.spacing = 1.0;
  spec.weight.kind = WeightSpec::Kind::Counting;
  return DiscreteSpace::build_grid(spec);
}

DiscreteSpace graph_grid(int dim, double extent, double h) {
  SpaceSpec spec;
  spec.dim = dim;
  spec.extent = extent;
  spec.spacing = h;
  spec.metric = Metric::GraphPath;
  return DiscreteSpace::build_grid(spec);
}

}  // namespace

TEST_CASE("annular decay on the 1D Lebesgue grid: delta 1, K near 1") {
  const auto space = lebesgue_1d(4.0, 0.01);
  const auto cert = annular_decay_certificate(space);
  CHECK(cert.delta == 1.0);
  CHECK(cert.k_const >= 1.0);
  CHECK(cert.k_const <= 1.2);
  CHECK_FALSE(cert.trivial);
  // emitted pair holds on a fresh sample
  for (int c : {40, 400, 760})
    for (double r : {0.5, 1.0, 2.0})
      for (double s : {0.1, 0.25}) {
        const double inner = space.ball_measure(c, r);
        CHECK(space.ball_measure(c, r + s) - inner <=
              cert.k_const * std::pow(s / r, cert.delta) * inner * (1 + 1e-9));
      }
}

TEST_CASE("annular decay on the integer line with unit annuli") {
  const auto space = integer_line();
  AnnularDecayOptions opts;
  opts.s_floor_factor = 1.0;  // integer annuli are exact, no counting error
  const auto cert = annular_decay_certificate(space, opts);
  CHECK(cert.delta > 0.0);
  CHECK(std::isfinite(cert.k_const));
  CHECK(cert.k_const >= 1.0);
}

TEST_CASE("annular decay with a power weight stays near delta 1") {
  SpaceSpec spec;
  spec.dim = 1;
  spec.extent = 2.0;
  spec.spacing = 0.01;
  spec.weight.kind = WeightSpec::Kind::Power;
  spec.weight.exponent = 1.0;
  const auto space = DiscreteSpace::build_grid(spec);
  const auto cert = annular_decay_certificate(space);
  CHECK(cert.delta == 1.0);
  CHECK(cert.k_const <= 4.0);  // the weighted annulus pays 2r s + s^2 against s r
}

TEST_CASE("single-point-free precondition") {
  // build_grid already refuses degenerate windows; the checker guards anyway
  const auto space = lebesgue_1d(1.0, 0.5);
  CHECK_NOTHROW(annular_decay_certificate(space, [] {
    AnnularDecayOptions o;
    o.s_floor_factor = 1.0;
    o.radius_count = 4;
    return o;
  }()));
}

TEST_CASE("weak geodesic: fine grids hold with C3 near 1 at lattice scales") {
  for (const auto& space : {graph_grid(1, 2.0, 0.05), graph_grid(2, 1.0, 0.25)}) {
    const auto cert = weak_geodesic_certificate(space);
    CHECK(cert.holds);
    CHECK_FALSE(cert.trivial);
    // C3 <= 1 + spacing/s_min on all samples; s_min = spacing by default
    CHECK(cert.constant <= 2.0 + 1e-9);
    for (const auto& [s, sup] : cert.ratio_by_s)
      CHECK(sup <= 1.0 + space.spacing() / s + 1e-9);
  }
}

TEST_CASE("weak geodesic: the integer line fails at sub-lattice scales") {
  const auto space = integer_line();
  WeakGeodesicOptions opts;
  opts.s_factors = {0.05, 0.25, 1.0, 4.0};
  opts.include_sub_spacing_radii = true;
  const auto cert = weak_geodesic_certificate(space, opts);
  CHECK_FALSE(cert.holds);
  // the witness reproduces the sub-unit enlargement picture: a radius below 1,
  // an enlargement reaching the next integer, and a unit jump
  CHECK(cert.witness.ratio > 10.0);
  CHECK(cert.witness.dist_to_ball >= 1.0);
  CHECK(cert.witness.s < 1.0);
  CHECK(cert.witness.r + cert.witness.s >=
        space.distance(cert.witness.x, cert.witness.y));
}

TEST_CASE("monotone geodesic chains on the path graph") {
  const auto space = graph_grid(1, 1.0, 0.05);
  const double h = space.spacing();
  const double s = 2.0 * h;
  int pairs = 0;
  for (int x = 0; x < space.size(); x += 5)
    for (int y = 0; y < space.size(); y += 7) {
      if (space.distance(x, y) < s) continue;
      const auto chain = monotone_geodesic_chain(space, x, y, s, 2.0);
      REQUIRE(chain.ok);
      CHECK(chain.points.front() == y);
      CHECK(chain.points.back() == x);
      CHECK(chain.points.size() <= std::ceil(space.distance(x, y) / s) + 1);
      for (size_t i = 0; i + 1 < chain.points.size(); ++i) {
        CHECK(space.distance(chain.points[i], chain.points[i + 1]) <= 2.0 * s + 1e-12);
        CHECK(space.distance(chain.points[i + 1], x) <=
              space.distance(chain.points[i], x) - s + 1e-12);
      }
      ++pairs;
    }
  CHECK(pairs >= 50);
}

TEST_CASE("monotone geodesic rejects bad arguments and close pairs") {
  const auto space = graph_grid(1, 1.0, 0.1);
  CHECK_THROWS(monotone_geodesic_chain(space, 0, 0, 0.2, 2.0));    // d(x,y) < s
  CHECK_THROWS(monotone_geodesic_chain(space, 0, 5, 0.2, 0.5));    // c4 < 1
  CHECK_THROWS(monotone_geodesic_chain(space, 0, 5, -0.1, 2.0));   // s <= 0
}

TEST_CASE("monotone geodesic fails on the integer line at s = 1/2, c4 = 1") {
  const auto space = integer_line();
  const int x = space.nearest_point({5.0});
  const int y = space.nearest_point({0.0});
  const auto chain = monotone_geodesic_chain(space, x, y, 0.5, 1.0);
  CHECK_FALSE(chain.ok);
  CHECK(chain.stuck_at == y);  // no integer both within 0.5 and closer by 0.5
}

TEST_CASE("chain ball construction: trivial case inside the central ball") {
  const auto space = graph_grid(1, 1.0, 0.05);
  const int z = space.nearest_point({0.0});
  const Ball base{z, 0.8};
  const int x = space.nearest_point({0.3});  // d < 3r/4 = 0.6
  const auto w = chain_ball_construct(space, base, x, 2.0);
  CHECK(w.chain.size() == 1);
  CHECK(w.chain[0].center == z);
  CHECK(w.chain[0].radius == doctest::Approx(0.6));
  CHECK(w.alpha == doctest::Approx(8.0 / 3.0));
  CHECK(w.beta == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("chain ball construction: first ball radius relation") {
  const auto space = graph_grid(1, 2.0, 0.05);
  const int z = space.nearest_point({0.0});
  const Ball base{z, 1.53};
  const int x = space.nearest_point({1.4});  // outside B(z, 3r/4)
  const auto w = chain_ball_construct(space, base, x, 2.0);
  REQUIRE(w.chain.size() >= 2);
  // (4/3) * (3 t0 / 2) = r - d(x, z), with the last chain ball centered at x
  const Ball& first = w.chain.back();
  CHECK(first.center == x);
  CHECK(w.beta * first.radius ==
        doctest::Approx(base.radius - space.distance(x, z)).epsilon(1e-12));
}

TEST_CASE("chain ball witnesses verify on 1D and 2D graph grids") {
  const double c4 = 2.0;
  for (const auto& space : {graph_grid(1, 2.0, 0.05), graph_grid(2, 0.8, 0.1)}) {
    const int z = space.nearest_point(std::vector<double>(space.dim(), 0.1));
    const double r = 0.45 * space.diam();
    const Ball base{z, r};
    int attempted = 0, succeeded = 0;
    for (int x : space.ball_members(z, r)) {
      const bool in_central = space.distance(x, z) < 0.75 * r;
      const double margin = r - space.distance(x, z);
      if (!in_central && margin < 2.0 * c4 * space.spacing()) continue;
      ++attempted;
      const auto w = chain_ball_construct(space, base, x, c4);
      const auto check = verify_chain_ball_witness(space, w);
      CHECK(check.ok);
      // trace growth t_{j+1} - t_j >= t_j / (2 c4)
      for (size_t j = 0; j + 1 < w.t_trace.size(); ++j)
        CHECK(w.t_trace[j + 1] - w.t_trace[j] >= w.t_trace[j] / (2.0 * c4) - 1e-12);
      // termination bound through the geometric growth of t_j
      if (w.t_trace.size() > 1) {
        const double t0 = w.t_trace.front();
        const double bound =
            std::log(base.radius / (4.0 * t0)) / std::log1p(1.0 / (2.0 * c4)) + 2.0;
        CHECK(static_cast<double>(w.chain.size()) <= bound + 1.0);
      }
      ++succeeded;
    }
    CHECK(attempted == succeeded);
    CHECK(attempted > 20);
  }
}

TEST_CASE("chain ball verifier rejects corrupted witnesses") {
  const auto space = graph_grid(1, 2.0, 0.05);
  const int z = space.nearest_point({0.0});
  const Ball base{z, 1.5};
  const int x = space.nearest_point({1.3});
  auto w = chain_ball_construct(space, base, x, 2.0);
  auto bad = w;
  bad.chain.back().center = space.nearest_point({-1.4});  // target no longer inside
  CHECK_FALSE(verify_chain_ball_witness(space, bad).ok);
  bad = w;
  bad.chain.front().radius = base.radius;  // depth clause breaks
  CHECK_FALSE(verify_chain_ball_witness(space, bad).ok);
}

TEST_CASE("p_tau conversion formula and domination on the 1D grid") {
  CHECK(p_tau_convert(2.0, 3.0, 1.0, 2.0) == doctest::Approx(6.0));
  CHECK(p_tau_convert(2.0, 3.0, 0.5, 2.0) == doctest::Approx(std::sqrt(2.0) * 6.0));
  CHECK_THROWS(p_tau_convert(1.0, 3.0, 0.5, 2.0));
  CHECK_THROWS(p_tau_convert(2.0, 3.0, 1.5, 2.0));

  const auto space = lebesgue_1d(4.0, 0.01);
  const auto direct = annular_decay_certificate(space);
  AnnularDecayOptions topts;
  topts.tau = 2.0;
  const auto restricted = annular_decay_certificate(space, topts);
  const auto doubling = doubling_certificate(space);
  const double converted =
      p_tau_convert(2.0, restricted.k_const, restricted.delta, doubling.c1);
  CHECK(converted >= direct.k_const);
}

TEST_CASE("monotone geodesic at lattice scales comes with annular decay") {
  // the implication chain: spaces passing the monotone checker at every
  // tested scale also carry a finite annular-decay certificate with
  // delta in (0,1]
  for (const auto& space : {graph_grid(1, 2.0, 0.05), graph_grid(2, 1.0, 0.1)}) {
    bool monotone_all = true;
    const double h = space.spacing();
    for (double s : {h, 2 * h, 4 * h})
      for (int x = 0; x < space.size(); x += 17)
        for (int y = 0; y < space.size(); y += 13) {
          if (space.distance(x, y) < s) continue;
          monotone_all =
              monotone_all && monotone_geodesic_chain(space, x, y, s, 2.0).ok;
        }
    CHECK(monotone_all);
    const auto cert = annular_decay_certificate(space);
    CHECK(cert.delta > 0.0);
    CHECK(cert.delta <= 1.0);
    CHECK(std::isfinite(cert.k_const));
  }
}

TEST_CASE("property battery on the integer line: doubling yes, weak geodesic no") {
  const auto space = integer_line();
  const auto doubling = doubling_certificate(space);
  CHECK(doubling.c1 >= 1.0);
  CHECK(std::isfinite(doubling.c1));
  WeakGeodesicOptions opts;
  opts.s_factors = {0.05, 0.25, 1.0, 4.0};
  opts.include_sub_spacing_radii = true;
  CHECK_FALSE(weak_geodesic_certificate(space, opts).holds);
}
