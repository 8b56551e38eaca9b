#include <gtest/gtest.h>

#include "wblab/experiments.hpp"

using namespace wblab;

// The measured doubling time must be a property of the PDE, not of the grid.
TEST(LifespanConvergence, GridRefinement) {
  LifespanSetup coarse;
  coarse.data.D0 = 300.0;
  coarse.T = 15.0;
  LifespanSetup fine = coarse;
  fine.n = 2 * coarse.n;
  fine.dt = coarse.dt / 2;
  fine.snapshot_stride = 2 * coarse.snapshot_stride;
  const LifespanRow a = lifespan_point(1.0, 0.5, coarse);
  const LifespanRow b = lifespan_point(1.0, 0.5, fine);
  ASSERT_EQ(a.fired, "doubling");
  ASSERT_EQ(b.fired, "doubling");
  EXPECT_NEAR(a.lifespan / b.lifespan, 1.0, 0.1) << a.lifespan << " vs " << b.lifespan;
}
