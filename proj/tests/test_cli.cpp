#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperlap/cli.hpp"

using namespace hyperlap;
using namespace hyperlap::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(parse_complex("-2") == Complex(-2.0, 0.0));
  CHECK(parse_complex("0.5+0.25i") == Complex(0.5, 0.25));
  CHECK(parse_complex("1e-3-2e+1i") == Complex(1e-3, -20.0));
  CHECK(parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
  CHECK_THROWS_AS(parse_complex("abc"), UsageError);
  CHECK_THROWS_AS(parse_complex(""), UsageError);
  CHECK_THROWS_AS(parse_complex("1.5x"), UsageError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1.0");
  CHECK(format_number(0.7853981633974483) == "0.7853981633974483");
  CHECK(format_number(0.5833333333333334) == "0.5833333333333334");
  CHECK(format_number(1e-5) == "1e-05");
  CHECK(format_number(123456.0) == "123456.0");
  CHECK(format_number(1e16) == "1e+16");
  CHECK(format_number(Complex(0.5, -0.25)) == "0.5-0.25i");
  CHECK(format_number(Complex(0.0, 2.0)) == "0.0+2.0i");
}

TEST_CASE("grids") {
  const auto& e = Catalog::instance().get("entry-I");
  const auto g = parse_grid(e, "s=4;beta=1;ν=0:1:3;m=1,2");
  REQUIRE(g.size() == 6);
  // Cross product in schema order: ν varies slower than m.
  CHECK(g[0]["ν"] == Complex(0.0));
  CHECK(g[1]["m"] == Complex(2.0));
  CHECK(g[2]["ν"] == Complex(0.5));
  CHECK(g[5]["ν"] == Complex(1.0));
  CHECK_THROWS_AS(parse_grid(e, "q=1"), UsageError);
  CHECK_THROWS_AS(parse_grid(e, "s=1;s=2"), UsageError);
  CHECK_THROWS_AS(parse_grid(e, "s=1:2"), UsageError);
  CHECK_THROWS_AS(parse_grid(e, "s=0:1:1000;β=0:1:1000;ν=0:1:2"), UsageError);
}

TEST_CASE("eval") {
  auto r = run_cli({"eval", "novel-V", "α=0", "β=1", "p=1"});
  CHECK(r.code == kOk);
  CHECK(first_line(r.out) == "1.0");
  CHECK(r.out.find("conditions: hold") != std::string::npos);

  r = run_cli({"eval", "eq-111", "a=2"});
  CHECK(first_line(r.out) == "0.7853981633974483");

  r = run_cli({"eval", "entry-I", "s=4", "beta=1", "nu=1", "m=1", "--oracle"});
  CHECK(r.code == kOk);
  CHECK(first_line(r.out) == "0.5833333333333334");
  CHECK(r.out.find("oracle: 0.58333333333") != std::string::npos);
  CHECK(r.out.find("difference: ") != std::string::npos);

  r = run_cli({"eval", "entry-I", "s=4+1i", "beta=1", "nu=0.5", "m=1"});
  CHECK(r.code == kOk);
  CHECK(first_line(r.out).back() == 'i');
}

TEST_CASE("eval errors map to exit codes") {
  CHECK(run_cli({"eval", "no-such"}).code == kUnknownEntry);
  auto r = run_cli({"eval", "novel-V", "α=0", "β=1", "p=-1"});
  CHECK(r.code == kDomain);
  CHECK(r.err.find("Re(p) > 0") != std::string::npos);
  r = run_cli({"eval", "novel-V", "α=0", "β=1", "p=-1", "--relaxed"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("violated (relaxed)") != std::string::npos);
  CHECK(run_cli({"eval", "novel-V", "α=0", "β=1"}).code == kDomain);
  CHECK(run_cli({"eval", "novel-V", "α=0", "β=1", "p=x"}).code == kUsage);
  CHECK(run_cli({"eval", "novel-V", "gamma=1"}).code == kUsage);
  CHECK(run_cli({"eval", "eq-116", "a=0"}).code == kDomain);
}

TEST_CASE("expand") {
  auto r = run_cli({"expand", "cos", "2", "1.0"});
  CHECK(r.code == kOk);
  CHECK(r.out == "0.5·cos(2x) + 0.5\n");
  r = run_cli({"expand", "sinh", "3", "1.0"});
  CHECK(r.out == "0.25·sinh(3x) − 0.75·sinh(x)\n");
  r = run_cli({"expand", "sin", "1", "2.0", "--laplace", "s=1"});
  CHECK(r.out == "sin(2x)\n0.4\n");
  CHECK(run_cli({"expand", "tan", "2", "1"}).code == kUsage);
  CHECK(run_cli({"expand", "cos", "0", "1"}).code == kDomain);
  CHECK(run_cli({"expand", "cosh", "2", "1", "--laplace", "s=1"}).code == kDomain);
}

TEST_CASE("list") {
  auto r = run_cli({"list"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("novel-V  Eq. (46)") != std::string::npos);
  CHECK(r.out.find("[not enforced]") != std::string::npos);
  r = run_cli({"list", "--section", "5"});
  CHECK(r.out.find("eq-97 ") != std::string::npos);
  CHECK(r.out.find("eq-116") != std::string::npos);
  CHECK(r.out.find("novel-V") == std::string::npos);
  r = run_cli({"list", "--section", "9"});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "novel-VI", "--grid", "α=0;β=2", "--tol", "1e-9"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("1 pass, 0 fail, 0 skip") != std::string::npos);

  r = run_cli({"verify", "novel-V", "--grid", "α=0;β=1;p=-1"});
  CHECK(r.code == kOk);
  CHECK(r.err.find("warning") != std::string::npos);

  CHECK(run_cli({"verify", "nope"}).code == kUnknownEntry);
  CHECK(run_cli({"verify", "all", "--grid", "s=1"}).code == kUsage);

  // Passing rows are dropped from the 'all' table but still counted.
  r = run_cli({"verify", "all"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("eq-116: 8 pass, 0 fail, 0 skip") != std::string::npos);
  CHECK(r.out.find("eq-116    pass") == std::string::npos);
  CHECK(run_cli({"verify", "novel-V", "--out", "/nonexistent-dir/x.jsonl"}).code == kIo);
  CHECK(run_cli({"bogus"}).code == kUsage);
  CHECK(run_cli({}).code == kUsage);
}

TEST_CASE("reports are byte-stable") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "hyperlap_report_a.jsonl").string();
  const auto b = (dir / "hyperlap_report_b.jsonl").string();
  REQUIRE(run_cli({"verify", "eq-98", "--out", a}).code == kOk);
  REQUIRE(run_cli({"verify", "eq-98", "--out", b}).code == kOk);
  auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string ra = slurp(a);
  CHECK(!ra.empty());
  CHECK(ra == slurp(b));
  CHECK(ra.find("\"record\":\"header\"") != std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

}
