#include <algorithm>

#include <gtest/gtest.h>

#include "uff/catalog.hpp"

using namespace uff::catalog;

TEST(Catalog, IdsSortedAndUnique) {
  auto ids = list_fixtures();
  EXPECT_GE(ids.size(), 6u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_THROW(run_fixture("no-such-fixture"), std::out_of_range);
}

TEST(Catalog, EveryFixturePasses) {
  for (const auto& id : list_fixtures()) {
    auto r = run_fixture(id);
    EXPECT_EQ(r.id, id);
    EXPECT_FALSE(r.claims.empty()) << id;
    for (const auto& c : r.claims) EXPECT_TRUE(c.pass) << id << "/" << c.id << ": " << c.observed;
    EXPECT_TRUE(r.passed());
  }
}

TEST(Catalog, ReportsAreByteStable) {
  for (const auto& id : list_fixtures()) {
    EXPECT_EQ(to_json(run_fixture(id)).dump(), to_json(run_fixture(id)).dump()) << id;
    EXPECT_EQ(to_text(run_fixture(id)), to_text(run_fixture(id))) << id;
  }
}
