#include <cmath>
#include <random>

#include "doctest.h"
#include "moran/csv.hpp"
#include "moran/table.hpp"
#include "support/tempdir.hpp"

using moran::DomainError;
using moran::LoadError;
using moran::Vector;
using testsupport::TempDir;

TEST_CASE("csv reader handles LF, CRLF and blank lines") {
  TempDir dir;
  const auto path = dir.file("t.csv", "id,x\r\na,1\n\nb,2\r\n\n");
  const auto table = moran::csv::read(path);
  REQUIRE(table.header == std::vector<std::string>{"id", "x"});
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[1][1] == "2");
}

TEST_CASE("csv reader rejects ragged rows with the offending line") {
  TempDir dir;
  const auto path = dir.file("t.csv", "id,x\na,1\nb,2,3\n");
  CHECK_THROWS_WITH_AS(moran::csv::read(path), doctest::Contains(":3:"), LoadError);
}

TEST_CASE("csv reader rejects missing and empty files") {
  TempDir dir;
  CHECK_THROWS_AS(moran::csv::read(dir.at("absent.csv")), LoadError);
  CHECK_THROWS_AS(moran::csv::read(dir.file("empty.csv", "")), LoadError);
}

TEST_CASE("parse_double rejects trailing garbage and empty cells") {
  CHECK(moran::csv::parse_double("2.5", "ctx") == 2.5);
  CHECK_THROWS_WITH_AS(moran::csv::parse_double("2.5x", "f:1"),
                       doctest::Contains("f:1"), LoadError);
  CHECK_THROWS_AS(moran::csv::parse_double("", "ctx"), LoadError);
}

TEST_CASE("format_exact round-trips doubles bit-for-bit") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    const std::string s = moran::csv::format_exact(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(moran::csv::format_exact(0.1) == "0.1");
}

TEST_CASE("attribute table loads ids and columns") {
  TempDir dir;
  const auto path = dir.file("v.csv", "id,pop,gdp\nu1,10,3\nu2,20,5\nu3,15,4\n");
  const auto table = moran::load_attribute_table(path);
  REQUIRE(table.n() == 3);
  CHECK(table.ids == std::vector<std::string>{"u1", "u2", "u3"});
  CHECK(table.has_column("gdp"));
  CHECK_FALSE(table.has_column("area"));
  CHECK(table.column("pop")(1) == 20.0);
  CHECK_THROWS_AS(table.column("area"), DomainError);
}

TEST_CASE("attribute table rejects duplicate and empty ids, bad numbers") {
  TempDir dir;
  CHECK_THROWS_WITH_AS(
      moran::load_attribute_table(dir.file("d.csv", "id,x\na,1\na,2\nc,3\n")),
      doctest::Contains("duplicate id 'a'"), LoadError);
  CHECK_THROWS_WITH_AS(
      moran::load_attribute_table(dir.file("e.csv", "id,x\na,1\n,2\nc,3\n")),
      doctest::Contains("empty id"), LoadError);
  CHECK_THROWS_WITH_AS(
      moran::load_attribute_table(dir.file("n.csv", "id,x\na,1\nb,oops\nc,3\n")),
      doctest::Contains("column 'x'"), LoadError);
  CHECK_THROWS_AS(moran::load_attribute_table(dir.file("one.csv", "id\na\n")),
                  LoadError);
}

TEST_CASE("distance matrix loads and validates") {
  TempDir dir;
  const auto good = dir.file("r.csv",
                             "id,a,b,c\n"
                             "a,0,1,2\n"
                             "b,1,0,1\n"
                             "c,2,1,0\n");
  const auto d = moran::load_distance_matrix(good);
  REQUIRE(d.n() == 3);
  CHECK(d.r(0, 2) == 2.0);

  CHECK_THROWS_WITH_AS(moran::load_distance_matrix(
                           dir.file("asym.csv", "id,a,b\na,0,1\nb,2,0\n")),
                       doctest::Contains("asymmetry"), LoadError);
  CHECK_THROWS_WITH_AS(moran::load_distance_matrix(
                           dir.file("diag.csv", "id,a,b\na,3,1\nb,1,0\n")),
                       doctest::Contains("diagonal"), LoadError);
  CHECK_THROWS_WITH_AS(moran::load_distance_matrix(
                           dir.file("zero.csv", "id,a,b\na,0,0\nb,0,0\n")),
                       doctest::Contains("strictly positive"), LoadError);
  CHECK_THROWS_WITH_AS(moran::load_distance_matrix(
                           dir.file("ids.csv", "id,a,b\na,0,1\nc,1,0\n")),
                       doctest::Contains("does not match header id"), LoadError);
  CHECK_THROWS_WITH_AS(moran::load_distance_matrix(
                           dir.file("rect.csv", "id,a,b,c\na,0,1,2\nb,1,0,1\n")),
                       doctest::Contains("not square"), LoadError);
}

TEST_CASE("standardize produces a mean-0, norm-n vector") {
  Vector x(4);
  x << 3, 7, 1, 9;
  const auto z = moran::standardize(x, false, "x");
  CHECK(z.n == 4);
  CHECK(z.source_column == "x");
  CHECK_FALSE(z.log_applied);
  CHECK(std::abs(z.z.sum()) <= 1e-12);
  CHECK(std::abs(z.z.squaredNorm() - 4.0) <= 1e-12);
}

TEST_CASE("standardize of [1,2,3] hits the closed form") {
  Vector x(3);
  x << 1, 2, 3;
  const auto z = moran::standardize(x, false);
  const double s = std::sqrt(1.5);  // (3-2)/sd with sd = sqrt(2/3)
  CHECK(z.z(0) == doctest::Approx(-s).epsilon(1e-14));
  CHECK(z.z(1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(z.z(2) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("standardize applies the log transform before z-scoring") {
  Vector x(3);
  x << 1.0, std::exp(1.0), std::exp(2.0);
  const auto z = moran::standardize(x, true);
  // ln(x) = (0, 1, 2), which standardizes like any arithmetic progression.
  const double s = std::sqrt(1.5);
  CHECK(z.z(0) == doctest::Approx(-s).epsilon(1e-12));
  CHECK(z.z(1) == doctest::Approx(0).epsilon(1e-12));
  CHECK(z.z(2) == doctest::Approx(s).epsilon(1e-12));
  CHECK(z.log_applied);
}

TEST_CASE("standardize error cases") {
  Vector small(2);
  small << 1, 2;
  CHECK_THROWS_AS(moran::standardize(small, false), DomainError);

  Vector constant(3);
  constant << 5, 5, 5;
  CHECK_THROWS_WITH_AS(moran::standardize(constant, false),
                       doctest::Contains("constant input"), DomainError);

  Vector with_zero(3);
  with_zero << 0, 1, 2;
  CHECK_THROWS_WITH_AS(moran::standardize(with_zero, true),
                       doctest::Contains("log transform"), DomainError);

  Vector with_nan(3);
  with_nan << 1, std::nan(""), 2;
  CHECK_THROWS_AS(moran::standardize(with_nan, false), DomainError);
}

TEST_CASE("standardize invariants hold on random inputs of many sizes") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int n = 3; n <= 60; ++n) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = u(rng);
    const auto z = moran::standardize(x, false);
    CHECK(std::abs(z.z.sum()) <= 1e-10 * n);
    CHECK(std::abs(z.z.squaredNorm() - n) <= 1e-10 * n);
  }
}

TEST_CASE("attribute and distance writers round-trip") {
  TempDir dir;
  moran::AttributeTable table;
  table.ids = {"a", "b", "c"};
  table.column_names = {"x"};
  Vector col(3);
  col << 0.1, 2.5e-7, 39.25;
  table.columns = {col};
  const auto vpath = dir.at("v.csv");
  moran::write_attribute_table(table, vpath);
  const auto back = moran::load_attribute_table(vpath);
  CHECK(back.ids == table.ids);
  CHECK(back.column("x") == col);

  moran::Matrix r(3, 3);
  r << 0, 0.3, 1.7,
       0.3, 0, 2.2,
       1.7, 2.2, 0;
  const auto d = moran::DistanceMatrix::validated({"a", "b", "c"}, r);
  const auto rpath = dir.at("r.csv");
  moran::write_distance_matrix(d, rpath);
  const auto dback = moran::load_distance_matrix(rpath);
  CHECK(dback.r == d.r);
  CHECK(dback.ids == d.ids);
}
