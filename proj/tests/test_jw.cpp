#include <doctest.h>

#include <array>
#include <thread>
#include <vector>

#include "tlbd/jw.hpp"
#include "tlbd/rep.hpp"
#include "tlbd/theta.hpp"
#include "tlbd/verify.hpp"

using namespace tlbd;

namespace {
const RatFunc kHalf{Rational(1, 2)};
}

TEST_CASE("small projectors match their displayed expansions") {
  for (int eps : {1, -1}) {
    CHECK(jw(ProjectorKind::Bplus, 1, eps) ==
          (identity_morphism(1, eps) + gen_s0(1, eps)) * kHalf);
    CHECK(jw(ProjectorKind::Bminus, 1, eps) ==
          (identity_morphism(1, eps) - gen_s0(1, eps)) * kHalf);
    const RatFunc c = RatFunc(eps) / qint(2);
    CHECK(jw(ProjectorKind::A, 2, eps) == identity_morphism(2, eps) + gen_u(1, 2, eps) * c);
    CHECK(jw(ProjectorKind::D, 2, eps) ==
          identity_morphism(2, eps) + gen_u(1, 2, eps) * c + gen_u0(2, eps) * c);
    // the six-term dominant projector
    TLMorphism u1 = gen_u(1, 2, eps), s0 = gen_s0(2, eps);
    TLMorphism want = (identity_morphism(2, eps) + s0) * kHalf +
                      (u1 + mul(s0, u1) + mul(u1, s0) + gen_u0(2, eps)) *
                          (RatFunc(eps) / (RatFunc(2) * qint(2)));
    CHECK(jw(ProjectorKind::Bplus, 2, eps) == want);
  }
}

TEST_CASE("characterizations") {
  CHECK(verify_characterization(ProjectorKind::Bplus, 3, 1).all_pass());
  CHECK(verify_characterization(ProjectorKind::D, 4, -1).all_pass());
  CHECK(verify_characterization(ProjectorKind::Bminus, 3, -1).all_pass());
  CHECK(verify_characterization(ProjectorKind::A, 3, 1).all_pass());
}

TEST_CASE("tampering is detected") {
  const TLMorphism p = jw(ProjectorKind::Bplus, 2, 1) + gen_u(1, 2, 1);
  Report r = characterization_report(p, ProjectorKind::Bplus, 2, 1);
  CHECK_FALSE(r.all_pass());
  bool idem_failed = false;
  for (const auto& c : r.checks)
    if (c.name.find("idempotent") != std::string::npos && !c.pass) idem_failed = true;
  CHECK(idem_failed);
}

TEST_CASE("structural identities") {
  for (int eps : {1, -1})
    for (int n = 1; n <= 3; ++n) {
      Report r = structural_identities(n, eps);
      for (const auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
      }
    }
  // spot checks from the worked examples
  TLMorphism b3 = jw(ProjectorKind::Bplus, 3, 1);
  CHECK(mul(b3, tensor_right_identity(jw(ProjectorKind::Bplus, 2, 1), 1)) == b3);
  CHECK(mul(jw(ProjectorKind::Bplus, 2, 1), jw(ProjectorKind::Bminus, 2, 1)).is_zero());
  TLMorphism d3 = jw(ProjectorKind::D, 3, 1);
  CHECK((d3 + mul(gen_s0(3, 1), d3)) * kHalf == b3);
}

TEST_CASE("sigma swap and type D membership") {
  for (int eps : {1, -1})
    for (int n = 1; n <= 4; ++n) {
      CHECK(sigma(jw(ProjectorKind::Bplus, n, eps)) == jw(ProjectorKind::Bminus, n, eps));
      CHECK(is_type_d(jw(ProjectorKind::D, n, eps)));
      CHECK(jw(ProjectorKind::D, n, eps) == jw_d_via_sum(n, eps));
    }
}

TEST_CASE("head component of b+-") {
  for (int eps : {1, -1})
    for (int n = 1; n <= 4; ++n) {
      Diagram id = identity_diagram(n);
      Diagram dotted = id;
      for (size_t a = 0; a < dotted.arcs.size(); ++a)
        if (dotted.arcs[a].first == 1) dotted.dots[a] = 1;
      const auto& bp = jw(ProjectorKind::Bplus, n, eps);
      const auto& bm = jw(ProjectorKind::Bminus, n, eps);
      CHECK(bp.terms.at(id) == kHalf);
      CHECK(bp.terms.at(dotted) == kHalf);
      CHECK(bm.terms.at(id) == kHalf);
      CHECK(bm.terms.at(dotted) == -kHalf);
    }
}

TEST_CASE("trace identity III_n") {
  for (int eps : {1, -1})
    for (int n = 2; n <= 3; ++n) {
      const RatFunc c = RatFunc(-eps) * q_pow_sum(n) / q_pow_sum(n - 1);
      TLMorphism un = gen_u(n, n + 1, eps);
      for (auto kind : {ProjectorKind::Bplus, ProjectorKind::Bminus}) {
        TLMorphism pn = tensor_right_identity(jw(kind, n, eps), 1);
        TLMorphism pn1 = tensor_right_identity(jw(kind, n - 1, eps), 2);
        CHECK(mul(mul(un, pn), un) == mul(un, pn1) * c);
        CHECK(mul(mul(un, pn), un) == mul(pn1, un) * c);
      }
    }
}

TEST_CASE("projector images") {
  // rank-1 dominant projector at n = 2 fixes (x+y)(x)(x+qy)
  ProjectorImage img = projector_image(ProjectorKind::Bplus, 2, 1);
  for (const auto& c : img.report.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  REQUIRE(img.fixed.size() == 1);
  CHECK(img.fixed[0].first == 2);
  Vec want = kron(special_vector(SpecialKind::v, 0, 1), special_vector(SpecialKind::v, 1, 1));
  CHECK(img.fixed[0].second == want);
  CHECK(img.op.trace() == RatFunc(1));

  ProjectorImage d2 = projector_image(ProjectorKind::D, 2, 1);
  CHECK(d2.report.all_pass());
  CHECK(d2.op.trace() == RatFunc(2));

  ProjectorImage bm1 = projector_image(ProjectorKind::Bminus, 1, 1);
  CHECK(bm1.report.all_pass());
  CHECK(bm1.fixed[0].second == special_vector(SpecialKind::w, 0, 1));

  for (int eps : {1, -1})
    for (int n = 1; n <= 3; ++n)
      for (auto kind : {ProjectorKind::Bplus, ProjectorKind::Bminus, ProjectorKind::D})
        CHECK(projector_image(kind, n, eps).report.all_pass());
}

TEST_CASE("memo caches fill idempotently under concurrent use") {
  std::vector<std::thread> workers;
  std::array<TLMorphism, 8> got;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([t, &got] {
      got[static_cast<size_t>(t)] = jw(ProjectorKind::D, 4, t % 2 ? 1 : -1);
      (void)theta_recursive(3, 3, 2, t % 2 ? 1 : -1);
    });
  for (auto& w : workers) w.join();
  for (int t = 2; t < 8; ++t) CHECK(got[static_cast<size_t>(t)] == got[static_cast<size_t>(t - 2)]);
  CHECK(theta_recursive(3, 3, 2, 1) == theta_matrix(3, 3, 2, 1));
}

TEST_CASE("psi of the type A projector has trace n+1") {
  for (int eps : {1, -1})
    for (int n = 1; n <= 4; ++n) {
      LinOp a = psi(jw(ProjectorKind::A, n, eps));
      CHECK(a * a == a);
      CHECK(a.trace() == RatFunc(n + 1));
    }
}
