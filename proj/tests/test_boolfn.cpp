#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mindist/boolfn.hpp"
#include "mindist/combinatorics.hpp"

using namespace mindist;

namespace {

LinearCode<Gfp> g1_f2() {
  return make_code(Gfp(2), {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
}

LinearCode<Gfp> hamming74() {
  return make_code(Gfp(2), {{1, 0, 0, 0, 1, 1, 0},
                            {0, 1, 0, 0, 1, 0, 1},
                            {0, 0, 1, 0, 0, 1, 1},
                            {0, 0, 0, 1, 1, 1, 1}});
}

LinearCode<Gfp> random_f2_code(std::mt19937& rng, std::size_t k, std::size_t n) {
  Gfp f2(2);
  while (true) {
    std::vector<std::vector<Gfp::elem>> rows(k, std::vector<Gfp::elem>(n));
    for (auto& r : rows)
      for (auto& x : r) x = rng() & 1;
    try {
      return make_code(f2, rows);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("truth tables of linear forms and monomials") {
  auto f = BoolFn::linear(3, 0b101);  // y1 + y3
  for (std::uint64_t p = 0; p < 8; ++p)
    CHECK(f.eval(p) == (((p & 1) ^ (p >> 2 & 1)) != 0));

  auto m = BoolFn::monomial(3, 0b011);  // y1 y2
  for (std::uint64_t p = 0; p < 8; ++p) CHECK(m.eval(p) == ((p & 0b011) == 0b011));

  auto one = BoolFn::monomial(3, 0);
  CHECK(one.count_ones() == 8);

  // tables above one word
  auto big = BoolFn::linear(8, 0b10000001);
  std::uint64_t ones = 0;
  for (std::uint64_t p = 0; p < 256; ++p) ones += big.eval(p);
  CHECK(ones == big.count_ones());
  CHECK(ones == 128);
}

TEST_CASE("relation forms vanish exactly on the code") {
  auto c = g1_f2();
  auto rel = relation_forms(c);
  REQUIRE(rel.size() == 1);
  // y1+y2+y3+y4
  for (std::uint64_t p = 0; p < 16; ++p)
    CHECK(rel[0].eval(p) == (std::popcount(p) % 2 == 1));

  auto rep3 = make_code(Gfp(2), {{1, 1, 1}});
  auto relr = relation_forms(rep3);
  CHECK(relr.size() == 2);
  std::size_t codewords = 0;
  for (std::uint64_t p = 0; p < 8; ++p) {
    bool in_code = !relr[0].eval(p) && !relr[1].eval(p);
    codewords += in_code;
    CHECK(in_code == (p == 0 || p == 7));
  }
  CHECK(codewords == 2);

  auto id3 = make_code(Gfp(2), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(relation_forms(id3), Error);

  auto f3code = make_code(Gfp(3), {{1, 1}});
  try {
    relation_forms(f3code);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_field);
  }
}

TEST_CASE("ideal dimension via zero sets") {
  CHECK(ideal_dim({BoolFn::linear(2, 0b01)}, 2) == 2);
  std::vector<BoolFn> all;
  for (std::size_t i = 0; i < 5; ++i) all.push_back(BoolFn::linear(5, 1ull << i));
  CHECK(ideal_dim(all, 5) == 31);
  CHECK(ideal_dim({}, 4) == 0);
}

TEST_CASE("zero-set route equals the GF(2) rank route") {
  std::mt19937 rng(61);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<BoolFn> gens;
      std::size_t cnt = 1 + rng() % 3;
      for (std::size_t i = 0; i < cnt; ++i) {
        BoolFn f(n);
        for (std::uint64_t p = 0; p < (1ull << n); ++p) f.set(p, rng() & 1);
        gens.push_back(std::move(f));
      }
      CHECK(ideal_dim(gens, n) == ideal_dim_rank(gens, n));
    }
  }
}

TEST_CASE("the irrelevant-ideal proposition brackets d exactly") {
  auto ham = hamming74();
  CHECK(prop_check(ham, 1));
  CHECK(prop_check(ham, 2));
  CHECK(prop_check(ham, 3));
  CHECK(!prop_check(ham, 4));

  auto rep3 = make_code(Gfp(2), {{1, 1, 1}});
  CHECK(prop_check(rep3, 3));

  std::mt19937 rng(62);
  for (int trial = 0; trial < 8; ++trial) {
    auto c = random_f2_code(rng, 1 + rng() % 3, 4 + rng() % 3);
    CHECK(prop_check(c, 1));  // d >= 1 always
    std::size_t d = min_distance_brute(c).d;
    for (std::size_t a = 1; a <= c.n(); ++a) CHECK(prop_check(c, a) == (a <= d));
  }
}

TEST_CASE("graded dimensions of the boolean filtration") {
  auto rep2 = make_code(Gfp(2), {{1, 1}});
  CHECK(gr_dims(rep2).dims == std::vector<std::uint64_t>{1, 0, 1});

  CHECK(gr_dims(hamming74()).dims == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});

  auto parity = make_code(Gfp(2), {{1, 0, 1}, {0, 1, 1}});
  CHECK(gr_dims(parity).dims == std::vector<std::uint64_t>{0, 3, 0, 1});
}

TEST_CASE("gr dims equal the reversed weight distribution") {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t k = 1 + rng() % 4;
    std::size_t n = k + 1 + rng() % 4;
    auto c = random_f2_code(rng, k, n);
    auto dims = gr_dims(c).dims;
    auto wd = min_distance_brute(c).weight_distribution;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(dims[i] == wd[n - i]);
      total += dims[i];
    }
    CHECK(total == (std::uint64_t(1) << k));
  }
}

TEST_CASE("jump indices and the two readings") {
  auto ham = hamming74();
  auto j = gr_jump_indices(ham);
  CHECK(j.top_jump == 4);  // n - d = 7 - 3
  CHECK(j.literal_alpha_positive == 3);

  auto rep2 = make_code(Gfp(2), {{1, 1}});
  auto j2 = gr_jump_indices(rep2);
  CHECK(j2.top_jump == 0);  // n - d = 0
  CHECK(!j2.literal_alpha_positive.has_value());

  auto parity = make_code(Gfp(2), {{1, 0, 1}, {0, 1, 1}});
  CHECK(gr_jump_indices(parity).top_jump == 1);
}

TEST_CASE("top jump equals n - d on random codes") {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t k = 1 + rng() % 3;
    std::size_t n = k + 1 + rng() % 5;
    auto c = random_f2_code(rng, k, n);
    CHECK(gr_jump_indices(c).top_jump == n - min_distance_brute(c).d);
  }
}

TEST_CASE("filtration products stay in the filtration") {
  CHECK(filtration_product_check(4, 1, 1));
  CHECK(filtration_product_check(4, 2, 3));  // a+b >= n, trivially the whole ring
  CHECK(filtration_product_check(4, 0, 2));
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; b <= n; ++b) CHECK(filtration_product_check(n, a, b));
}

TEST_CASE("budgets guard the truth tables") {
  CHECK_THROWS_AS(BoolFn(20), Error);
  CHECK_THROWS_AS(filtration_product_check(14, 1, 1), Error);
}
