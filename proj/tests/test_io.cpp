#include <doctest.h>

#include <filesystem>

#include "quaplectic/fock.hpp"
#include "quaplectic/io.hpp"

using namespace quaplectic;

namespace io_tests {

TEST_CASE("fmt_is_round_trip_exact") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 1.0, -1.0}) CHECK(std::stod(io::fmt(v)) == v);
  CHECK(io::fmt(0.0) == "0");
  CHECK(io::fmt(-0.0) == "0");
  CHECK(io::fmt(0.5) == "0.5");
  CHECK(io::fmt(0.1) == "0.10000000000000001");
}

TEST_CASE("matrix_market_round_trip") {
  const FockBasis b = build_basis(1, 4);
  SparseOperator op = ladder_op(0, Sign::plus, b) + ladder_op(1, Sign::minus, b) * cd(0.25, -1.0 / 3.0);
  const std::string text = io::matrix_market(op, "ladder sum");
  CHECK(text.rfind("%%MatrixMarket matrix coordinate complex general\n% ladder sum\n", 0) == 0);
  const SparseOperator back = io::read_matrix_market(text);
  CHECK(back.rows() == op.rows());
  CHECK(DenseOperator(back - op).cwiseAbs().maxCoeff() == 0.0);
  CHECK(io::matrix_market(back, "ladder sum") == text);
  CHECK_THROWS(io::read_matrix_market("not a header\n"));
}

TEST_CASE("matrix_market_real_field") {
  const SparseOperator m = io::read_matrix_market("%%MatrixMarket matrix coordinate real general\n%c\n2 2 1\n2 1 4.5\n");
  CHECK(m.coeff(1, 0) == cd(4.5, 0));
}

TEST_CASE("csv_quoting") {
  CHECK(io::csv_field("plain") == "plain");
  CHECK(io::csv_field("a,b") == "\"a,b\"");
  CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(io::csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(io::csv_row({"x", "1,2", ""}) == "x,\"1,2\",\r\n");
}

TEST_CASE("key_values") {
  const auto kv = io::parse_key_values("# header\n n = 2 \n\nnmax=10 # trailing\ns=1.5\r\n");
  CHECK(kv.size() == 3);
  CHECK(kv.at("n") == "2");
  CHECK(kv.at("nmax") == "10");
  CHECK(kv.at("s") == "1.5");
  CHECK(io::parse_key_values(io::write_key_values(kv)) == kv);
  CHECK_THROWS(io::parse_key_values("novalue\n"));
}

TEST_CASE("write_atomic_replaces") {
  const auto dir = std::filesystem::temp_directory_path() / "quaplectic_io_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "sub" / "out.txt";
  io::write_atomic(path, "first");
  io::write_atomic(path, "second");
  CHECK(io::read_file(path) == "second");
  CHECK(!std::filesystem::exists(dir / "sub" / "out.txt.tmp"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS(io::read_file(path));
}

}  // namespace io_tests
