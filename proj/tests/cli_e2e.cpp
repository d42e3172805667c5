#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end tests that drive the installed CLI binary as a subprocess.
// The binary path and the golden-file directory arrive via KDECOMP_CLI
// and KDECOMP_GOLDEN, set by the ctest registration.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("KDECOMP_CLI");
    REQUIRE_MESSAGE(env != nullptr, "KDECOMP_CLI must point at the binary");
    return std::string(env);
  }();
  return path;
}

const std::string& golden_dir() {
  static const std::string path = [] {
    const char* env = std::getenv("KDECOMP_GOLDEN");
    REQUIRE_MESSAGE(env != nullptr, "KDECOMP_GOLDEN must point at the goldens");
    return std::string(env);
  }();
  return path;
}

const std::string& work_dir() {
  static const std::string path = [] {
    char tpl[] = "/tmp/kdecomp_e2e_XXXXXX";
    const char* dir = mkdtemp(tpl);
    REQUIRE(dir != nullptr);
    return std::string(dir);
  }();
  return path;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path = work_dir() + "/stdout.txt";
  const std::string err_path = work_dir() + "/stderr.txt";
  const std::string cmd = env_prefix + "\"" + cli_path() + "\" " + args +
                          " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Fixture tables, written once into the scratch directory.
struct Fixtures {
  std::string boolean, z4, bxb, sat3, counterexample, truncated, bad_axioms;

  Fixtures() {
    const std::string d = work_dir();
    boolean = d + "/b.srs";
    write_file(boolean,
               "semiring b\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n");
    z4 = d + "/z4.srs";
    write_file(z4,
               "semiring z4\norder 4\nadd\n0 1 2 3\n1 2 3 0\n2 3 0 1\n"
               "3 0 1 2\nmul\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n");
    bxb = d + "/bxb.srs";
    write_file(bxb,
               "semiring bxb\norder 4\nadd\n0 1 2 3\n1 1 1 1\n2 1 2 1\n"
               "3 1 1 3\nmul\n0 0 0 0\n0 1 2 3\n0 2 2 0\n0 3 0 3\n");
    sat3 = d + "/sat3.srs";
    write_file(sat3,
               "semiring sat3\norder 3\nadd\n0 1 2\n1 2 2\n2 2 2\nmul\n"
               "0 0 0\n0 1 2\n0 2 2\n");
    // Max-chain addition 0<3<2<1 with an idempotent 2 and nilpotent 3:
    // its zero ideal cannot be split into primary components.
    counterexample = d + "/chain4.srs";
    write_file(counterexample,
               "semiring chain4\norder 4\nadd\n0 1 2 3\n1 1 1 1\n2 1 2 2\n"
               "3 1 2 3\nmul\n0 0 0 0\n0 1 2 3\n0 2 2 0\n0 3 0 0\n");
    truncated = d + "/truncated.srs";
    write_file(truncated, "semiring broken\norder 2\nadd\n0 1\n");
    bad_axioms = d + "/bad_axioms.srs";
    write_file(bad_axioms,
               "semiring noident\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 0\n");
  }
};

const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("check inspects a table and reports structure") {
  RunResult r = run("check " + fixtures().bxb);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "command kdecomp check "));
  CHECK(contains(r.out, "digest 5f153588f75c0510"));
  CHECK(contains(r.out, "semiring bxb order 4"));
  CHECK(contains(r.out,
                 "flags cancellative=false yoked=false zerosumfree=true "
                 "ring=false"));
  CHECK(contains(r.out, "result pass findings 0"));
  CHECK(r.err.empty());

  SUBCASE("output is deterministic across runs") {
    RunResult again = run("check " + fixtures().bxb);
    CHECK(again.out == r.out);
  }
  SUBCASE("--out duplicates the report") {
    const std::string copy = work_dir() + "/report_copy.txt";
    RunResult dup = run("check " + fixtures().bxb + " --out " + copy);
    CHECK(dup.exit_code == 0);
    CHECK(read_file(copy) == dup.out);
  }
  SUBCASE("--json mirrors the payload") {
    RunResult json = run("check " + fixtures().bxb + " --json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.front() == '{');
    CHECK(contains(json.out, "\"digest\": \"5f153588f75c0510\""));
    CHECK(contains(json.out, "\"k_ideal_count\": 4"));
    CHECK(contains(json.out, "\"result\": \"pass\""));
    CHECK(contains(json.out, "\"finding_count\": 0"));
  }
}

TEST_CASE("input problems exit with code 2") {
  SUBCASE("missing file") {
    RunResult r = run("check /nonexistent/nowhere.srs");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "error"));
  }
  SUBCASE("truncated file") {
    RunResult r = run("check " + fixtures().truncated);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "error"));
  }
  SUBCASE("well-formed table that breaks the axioms") {
    RunResult r = run("check " + fixtures().bad_axioms);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "error"));
  }
  SUBCASE("malformed --set") {
    RunResult r = run("classify " + fixtures().z4 + " --set 0,x");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("--set element out of range") {
    RunResult r = run("classify " + fixtures().z4 + " --set 0,9");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("no subcommand") {
    RunResult r = run("");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown option") {
    RunResult r = run("check " + fixtures().z4 + " --bogus");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("--help exits cleanly") {
    RunResult r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Usage"));
  }
}

TEST_CASE("ideals lists the lattice") {
  RunResult r = run("ideals " + fixtures().bxb);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "{0}\n{0,2}\n{0,3}\n{0,1,2,3}\n"));

  SUBCASE("--k-only drops non-subtractive ideals") {
    RunResult all = run("ideals " + fixtures().sat3);
    CHECK(contains(all.out, "{0,2}"));
    RunResult k = run("ideals " + fixtures().sat3 + " --k-only");
    CHECK(k.exit_code == 0);
    CHECK(!contains(k.out, "{0,2}"));
    CHECK(contains(k.out, "{0}\n{0,1,2}\n"));
  }
}

TEST_CASE("closure reports the least subtractive ideal above a set") {
  RunResult r = run("closure " + fixtures().sat3 + " --set 0,2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "set {0,2}\n"));
  CHECK(contains(r.out, "k_closure {0,1,2}\n"));
  CHECK(contains(r.out, "already_k false\n"));

  SUBCASE("fixed point on a subtractive ideal") {
    RunResult fixed = run("closure " + fixtures().bxb + " --set 0,2");
    CHECK(contains(fixed.out, "k_closure {0,2}\n"));
    CHECK(contains(fixed.out, "already_k true\n"));
  }
}

TEST_CASE("classify prints the full verdict line") {
  RunResult r = run("classify " + fixtures().z4 + " --set 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out,
                 "proper=true prime=false primary=true radical={0,2} "
                 "k_irreducible=true\n"));

  SUBCASE("k-irreducibility is n/a for non-subtractive ideals") {
    RunResult na = run("classify " + fixtures().sat3 + " --set 0,2");
    CHECK(na.exit_code == 0);
    CHECK(contains(na.out, "k_irreducible=na"));
  }
}

TEST_CASE("decompose splits, reduces, and lists associated primes") {
  RunResult r = run("decompose " + fixtures().bxb + " --set 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "input {0}\n"));
  CHECK(contains(r.out, "component {0,2} radical {0,2}\n"));
  CHECK(contains(r.out, "component {0,3} radical {0,3}\n"));
  CHECK(contains(r.out, "reduced true\n"));
  CHECK(contains(r.out, "associated_prime {0,2} witness 3\n"));
  CHECK(contains(r.out, "associated_prime {0,3} witness 2\n"));

  SUBCASE("the whole semiring is rejected as input") {
    RunResult whole = run("decompose " + fixtures().bxb + " --set 0,1,2,3");
    CHECK(whole.exit_code == 2);
  }
  SUBCASE("an undecomposable ideal is a mathematical finding, exit 1") {
    RunResult cx = run("decompose " + fixtures().counterexample + " --set 0");
    CHECK(cx.exit_code == 1);
    CHECK(contains(cx.out, "finding irreducible-not-primary"));
    CHECK(contains(cx.out, "result fail findings 1"));
  }
}

TEST_CASE("primes lists prime k-ideals and associated primes") {
  RunResult r = run("primes " + fixtures().bxb);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "prime {0,2}\nprime {0,3}\ncount 2\n"));

  SUBCASE("--set switches to associated primes of that ideal") {
    RunResult assoc = run("primes " + fixtures().bxb + " --set 0");
    CHECK(assoc.exit_code == 0);
    CHECK(contains(assoc.out, "associated_prime {0,2} witness 3\n"));
    CHECK(contains(assoc.out, "associated_prime {0,3} witness 2\n"));
    CHECK(contains(assoc.out, "count 2\n"));
  }
}

TEST_CASE("verify passes on well-behaved semirings") {
  RunResult r = run("verify " + fixtures().boolean);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "result pass findings 0"));
  // Unproven proof steps are surfaced as notes without failing the run.
  CHECK(contains(r.out, "note trace-step-not-held subject jac-q-neq-jac-r"));
}

TEST_CASE("verify reports violations as findings with exit 1") {
  RunResult r = run("verify " + fixtures().counterexample);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "finding irreducible-not-primary"));
  CHECK(contains(r.out, "finding uniqueness-failed"));
  CHECK(contains(r.out, "result fail"));
}

TEST_CASE("enumerate streams the census") {
  RunResult r = run("enumerate --order 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "2_0\t1101\t2\n2_1\t0110\t2\ntotal 2\n"));

  SUBCASE("--iso keeps one table per class") {
    RunResult iso = run("enumerate --order 3 --iso");
    CHECK(iso.exit_code == 0);
    CHECK(contains(iso.out, "total 6\n"));
  }
  SUBCASE("--out writes census.tsv plus loadable .srs files") {
    const std::string dir = work_dir() + "/census2";
    RunResult out = run("enumerate --order 2 --out " + dir);
    CHECK(out.exit_code == 0);
    const std::string tsv = read_file(dir + "/census.tsv");
    CHECK(contains(tsv, "name\tflags\tk_ideals\n"));
    CHECK(contains(tsv, "2_0\t1101\t2\n"));
    RunResult reload = run("check " + dir + "/2_0.srs");
    CHECK(reload.exit_code == 0);
    CHECK(contains(reload.out, "semiring 2_0 order 2"));
  }
  SUBCASE("orders outside 2..16 are rejected") {
    CHECK(run("enumerate --order 1").exit_code == 2);
    CHECK(run("enumerate --order 17").exit_code == 2);
  }
}

TEST_CASE("verify-all sweeps a census deterministically") {
  RunResult first = run("verify-all --order 3");
  CHECK(first.exit_code == 0);
  CHECK(contains(first.out, "census order 3 count 6 findings 0\n"));

  SUBCASE("byte-identical on a second run") {
    RunResult second = run("verify-all --order 3");
    CHECK(second.out == first.out);
  }
  SUBCASE("worker count does not change the output") {
    RunResult env_jobs = run("verify-all --order 3", "KDECOMP_JOBS=3 ");
    CHECK(env_jobs.out == first.out);
  }
  SUBCASE("counterexamples at order 4 surface as findings, exit 1") {
    RunResult four = run("verify-all --order 4 --jobs 4");
    CHECK(four.exit_code == 1);
    CHECK(contains(four.out, "census order 4 count 36 findings 8\n"));
    CHECK(contains(four.out, "finding irreducible-not-primary"));
  }
}

TEST_CASE("natpoly demos reproduce the golden transcripts") {
  SUBCASE("principal-ideal certificate") {
    RunResult r = run("natpoly --demo golan");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/natpoly_golan.txt"));
  }
  SUBCASE("non-yoked pair") {
    RunResult r = run("natpoly --demo yoked");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/natpoly_yoked.txt"));
  }
  SUBCASE("sum witness") {
    RunResult r = run("natpoly --demo sums");
    CHECK(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/natpoly_sums.txt"));
  }
  SUBCASE("unknown demo name") {
    CHECK(run("natpoly --demo nosuch").exit_code == 2);
  }
}

TEST_CASE("natpoly bounded subtractivity check") {
  RunResult r = run("natpoly --check-lemma210 3 100");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "a 3\nbound 100\npairs_checked 10201\n"
                        "subtractive true\n"));
  CHECK(contains(r.out, "result pass findings 0"));

  SUBCASE("the flag requires both arguments") {
    CHECK(run("natpoly --check-lemma210 3").exit_code == 2);
  }
  SUBCASE("bound below a is rejected") {
    CHECK(run("natpoly --check-lemma210 5 4").exit_code == 2);
  }
}

int main(int argc, char** argv) {
  doctest::Context context(argc, argv);
  return context.run();
}
