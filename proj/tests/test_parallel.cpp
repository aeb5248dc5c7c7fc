#include <doctest.h>

#include "tsc/fuzz.hpp"
#include "tsc/parallel.hpp"
#include "tsc/random.hpp"
#include "tsc/syntax.hpp"

using namespace tsc;

namespace {

std::vector<Formula> formulas(std::size_t count) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = gen::instance_rng(21, "batch", i);
    out.push_back(gen::formula(rng, {}));
  }
  return out;
}

}  // namespace

TEST_CASE("batch kernels give the serial answer") {
  const auto fs = formulas(600);
  std::vector<Sequent> seqs;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) seqs.push_back({fs[i], fs[i + 1]});

  const auto ds = derives_batch(seqs, Execution::Serial);
  CHECK(derives_batch(seqs, Execution::Parallel) == ds);
  for (std::size_t i = 0; i < seqs.size(); ++i) REQUIRE(static_cast<bool>(ds[i]) == derives(seqs[i]));

  const auto vs = val_batch(fs, Execution::Serial);
  CHECK(val_batch(fs, Execution::Parallel) == vs);
  CHECK(normalize_batch(fs, Execution::Parallel) == normalize_batch(fs, Execution::Serial));
  CHECK(parallel_threads() >= 1);
}

TEST_CASE("empty batches") {
  CHECK(derives_batch({}, Execution::Parallel).empty());
  CHECK(val_batch({}, Execution::Serial).empty());
}

TEST_CASE("family reports do not depend on the execution path") {
  fuzz::Options serial;
  serial.seed = 77;
  serial.count = 60;
  serial.exec = Execution::Serial;
  fuzz::Options parallel = serial;
  parallel.exec = Execution::Parallel;
  const auto a = fuzz::run_all(serial);
  const auto b = fuzz::run_all(parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].passed == b[i].passed);
    CHECK(a[i].vacuous == b[i].vacuous);
  }

  serial.semantics = parallel.semantics = fuzz::corrupted_semantics();
  const auto& fam = fuzz::family("axiom-4-coadditivity");
  const auto c = fuzz::run_family(fam, serial);
  const auto d = fuzz::run_family(fam, parallel);
  CHECK(c.failed == d.failed);
  CHECK(c.first_failure == d.first_failure);
  CHECK(c.counterexample == d.counterexample);
}

TEST_CASE("a different seed gives different instances") {
  auto a = gen::instance_rng(1, "x", 0);
  auto b = gen::instance_rng(2, "x", 0);
  auto c = gen::instance_rng(1, "y", 0);
  const auto first = a();
  CHECK(first != b());
  CHECK(first != c());
  CHECK_THROWS_AS(fuzz::family("no-such-family"), std::out_of_range);
}
