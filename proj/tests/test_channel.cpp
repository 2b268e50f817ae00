#include <doctest.h>

#include <set>

#include "bia/channel.hpp"
#include "bia/rng.hpp"

using namespace bia;

namespace {

ConstructionBundle five_user() {
  return construct_bundle(derive_params(5, 2, BuildMode::Tight));
}

}  // namespace

TEST_CASE("draw_channel invariants and determinism") {
  const auto params = derive_params(5, 2, BuildMode::Tight);
  const auto a = draw_channel(params, 1, Representation::ExactRational);
  const auto b = draw_channel(params, 1, Representation::ExactRational);
  const auto c = draw_channel(params, 2, Representation::ExactRational);
  CHECK(a.exact_values == b.exact_values);
  CHECK(a.exact_values != c.exact_values);
  for (int p = 0; p < 5; ++p) {
    for (int q = 0; q < 5; ++q) {
      std::set<long long> modes;
      for (int m = 0; m < 2; ++m) {
        const long long v = a.exact_at(p, q, m);
        CHECK(v >= 1);
        CHECK(v <= (1LL << 16));
        modes.insert(v);
      }
      CHECK(modes.size() == 2);  // per-link mode values pairwise distinct
    }
  }
}

TEST_CASE("floating draw is bounded away from zero") {
  const auto params = derive_params(3, 2, BuildMode::Tight);
  const auto ch = draw_channel(params, 9, Representation::Floating);
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      for (int m = 0; m < 2; ++m) {
        CHECK(ch.value_at(p, q, m) >= 0.5);
        CHECK(ch.value_at(p, q, m) <= 2.0);
      }
      CHECK(ch.value_at(p, q, 0) != ch.value_at(p, q, 1));
    }
  }
  CHECK_THROWS_AS(ch.exact_at(0, 0, 0), Error);
}

TEST_CASE("diagonal channel follows the switching schedule") {
  const auto bundle = five_user();
  const auto ch = draw_channel(bundle.params, 3, Representation::ExactRational);
  // Receiver 1 (index 0): mode 0 on slots {1,6,7,8,9}, mode 1 elsewhere.
  const auto diag = diagonal_channel_exact(ch, bundle.switching, 0, 2);
  const Rat h0(make_int(ch.exact_at(0, 2, 0)));
  const Rat h1(make_int(ch.exact_at(0, 2, 1)));
  const std::set<int> mode0 = {0, 5, 6, 7, 8};  // 0-based slots
  for (int j = 0; j < 14; ++j) {
    CHECK(diag[j] == (mode0.count(j) ? h0 : h1));
  }
  CHECK(diag[12] == h1);  // slot 13
}

TEST_CASE("single-mode order gives a constant diagonal") {
  const auto bundle = construct_bundle(derive_params(2, 1, BuildMode::Tight));
  const auto ch = draw_channel(bundle.params, 4, Representation::ExactRational);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      const auto diag = diagonal_channel_exact(ch, bundle.switching, p, q);
      CHECK(diag[0] == diag[1]);
    }
  }
}

TEST_CASE("received basis support equals the precoder column support") {
  const auto bundle = five_user();
  const auto ch = draw_channel(bundle.params, 5, Representation::ExactRational);
  const auto rb = received_basis_exact(ch, bundle.switching, bundle.precoders);
  REQUIRE(rb.img.size() == 5);
  for (int p = 0; p < 5; ++p) {
    for (int q = 0; q < 5; ++q) {
      for (int d = 0; d < 4; ++d) {
        for (int j = 0; j < 14; ++j) {
          CHECK((rb.img[p][q][d][j] != 0) == (bundle.precoders.tx[q](j, d) == 1));
        }
      }
    }
  }
  SUBCASE("entry value is coefficient times column bit") {
    for (int j = 0; j < 14; ++j) {
      const int mode = bundle.switching.sw(j, 0);
      CHECK(rb.img[0][1][0][j] ==
            Rat(make_int(ch.exact_at(0, 1, mode))) * Rat(bundle.precoders.tx[1](j, 0)));
    }
  }
}

TEST_CASE("transmit is linear and deterministic") {
  const auto bundle = five_user();
  const auto ch = draw_channel(bundle.params, 6, Representation::ExactRational);
  std::vector<std::vector<Rat>> xa(5, std::vector<Rat>(4, Rat(0)));
  std::vector<std::vector<Rat>> xb = xa;
  Rng rng(11);
  for (auto& row : xa)
    for (auto& v : row) v = make_rat(static_cast<long long>(rng.below(2000)) - 1000, 7);
  for (auto& row : xb)
    for (auto& v : row) v = make_rat(static_cast<long long>(rng.below(2000)) - 1000, 3);

  const auto ya = transmit_exact(bundle.precoders, xa, ch, bundle.switching);
  const auto yb = transmit_exact(bundle.precoders, xb, ch, bundle.switching);
  std::vector<std::vector<Rat>> xsum(5, std::vector<Rat>(4));
  for (int q = 0; q < 5; ++q)
    for (int d = 0; d < 4; ++d) xsum[q][d] = 2 * xa[q][d] + 3 * xb[q][d];
  const auto ysum = transmit_exact(bundle.precoders, xsum, ch, bundle.switching);
  for (int p = 0; p < 5; ++p) {
    for (int j = 0; j < 14; ++j) {
      CHECK(ysum[p][j] == 2 * ya[p][j] + 3 * yb[p][j]);
    }
  }

  SUBCASE("all-zero symbols produce all-zero observations") {
    std::vector<std::vector<Rat>> zero(5, std::vector<Rat>(4, Rat(0)));
    for (const auto& y : transmit_exact(bundle.precoders, zero, ch, bundle.switching)) {
      for (const auto& v : y) CHECK(v == 0);
    }
  }
}

TEST_CASE("single-user noiseless transmission is a scaled indicator") {
  const auto bundle = construct_bundle(derive_params(1, 1, BuildMode::Tight));
  const auto ch = draw_channel(bundle.params, 8, Representation::ExactRational);
  const auto y = transmit_exact(bundle.precoders, {{make_rat(3, 2)}}, ch, bundle.switching);
  CHECK(y[0][0] == Rat(make_int(ch.exact_at(0, 0, 0))) * make_rat(3, 2));
}

TEST_CASE("float transmit adds reproducible noise") {
  const auto bundle = five_user();
  const auto ch = draw_channel(bundle.params, 6, Representation::Floating);
  std::vector<std::vector<double>> x(5, std::vector<double>(4, 1.0));
  const auto y1 = transmit_float(bundle.precoders, x, ch, bundle.switching, 1.0, 42);
  const auto y2 = transmit_float(bundle.precoders, x, ch, bundle.switching, 1.0, 42);
  const auto y3 = transmit_float(bundle.precoders, x, ch, bundle.switching, 1.0, 43);
  CHECK(y1 == y2);
  CHECK(y1 != y3);
  const auto clean = transmit_float(bundle.precoders, x, ch, bundle.switching, 0.0, 42);
  CHECK(clean != y1);
}

TEST_CASE("switching consistency: distinct diagonal values bounded by mode count") {
  for (int K : {2, 3, 5}) {
    const auto bundle = construct_bundle(derive_params(K, std::nullopt, BuildMode::Tight));
    const auto ch = draw_channel(bundle.params, 10, Representation::ExactRational);
    for (int p = 0; p < K; ++p) {
      for (int q = 0; q < K; ++q) {
        const auto diag = diagonal_channel_exact(ch, bundle.switching, p, q);
        std::set<std::string> distinct;
        for (const auto& v : diag) distinct.insert(rat_string(v));
        CHECK(static_cast<int>(distinct.size()) <= bundle.params.order);
      }
    }
  }
}
