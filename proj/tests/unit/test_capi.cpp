// Exercises the shared library strictly through the C header.
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "abring/abring.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(abring_version()) == "1.0.0");
  CHECK(std::string(abring_status_string(ABRING_OK)) == "ok");
  CHECK(std::string(abring_status_string(ABRING_ERROR_NO_STATES)).find("bound") != std::string::npos);
}

TEST_CASE("closed-form energy through the C interface") {
  abring_params p;
  abring_params_default(&p);
  p.delta = 1e-4;
  abring_bound_state s;
  REQUIRE(abring_energy(&p, 0, 0, &s) == ABRING_OK);
  CHECK(s.exists == 1);
  CHECK(s.energy == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(abring_flux_quantum(&p) == doctest::Approx(2.0 * M_PI));

  p.delta = 0.1;
  p.b_field = 4.0;
  p.xi = 1.0 / (2.0 * M_PI);
  REQUIRE(abring_energy(&p, 0, 0, &s) == ABRING_OK);
  CHECK(s.exists == 0);
  CHECK(std::string(abring_last_error()).size() > 0);
}

TEST_CASE("errors map to status codes") {
  abring_params p;
  abring_params_default(&p);
  abring_bound_state s;
  CHECK(abring_energy(nullptr, 0, 0, &s) == ABRING_ERROR_INVALID_ARGUMENT);
  CHECK(abring_energy(&p, -1, 0, &s) == ABRING_ERROR_DOMAIN);
  CHECK(std::string(abring_last_error()).size() > 0);
  p.delta = -1.0;
  CHECK(abring_energy(&p, 0, 0, &s) == ABRING_ERROR_DOMAIN);

  abring_config* cfg = nullptr;
  CHECK(abring_config_parse("[physical]\ndelta = oops\n", &cfg) == ABRING_ERROR_CONFIG);
  CHECK(cfg == nullptr);
  CHECK(std::string(abring_last_error()).find("delta") != std::string::npos);
  CHECK(abring_config_load("/nonexistent.ini", &cfg) == ABRING_ERROR_CONFIG);
  CHECK(abring_check(11, nullptr, nullptr, nullptr, nullptr) == ABRING_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("entropy report through the C interface") {
  abring_params p;
  abring_params_default(&p);
  p.delta = 0.1;
  p.v1 = 20.0;
  p.b_field = 1.0;
  p.xi = 1.0 / (2.0 * M_PI);
  abring_grid g;
  abring_grid_default(&g);
  g.convergence_check = 0;
  abring_entropy_report r;
  REQUIRE(abring_entropy(&p, 0, 0, &g, &r) == ABRING_OK);
  CHECK(r.s_r == doctest::Approx(1.413764).epsilon(1e-6));
  CHECK(r.s_k == doctest::Approx(0.764070).epsilon(1e-6));
  CHECK(r.pass == 1);
  CHECK(r.bbm_bound == doctest::Approx(1.0 + std::log(M_PI)));

  p.b_field = 4.0;
  p.v1 = 1.0;
  CHECK(abring_entropy(&p, 0, 0, &g, &r) == ABRING_ERROR_NO_STATES);
}

TEST_CASE("effective potential samples") {
  abring_params p;
  abring_params_default(&p);
  const std::vector<double> r = {0.5, 1.0, 2.0};
  std::vector<double> v(3);
  REQUIRE(abring_effective_potential(&p, 0, 0, r.data(), v.data(), r.size()) == ABRING_OK);
  for (double x : v) CHECK(std::isfinite(x));
  const double zero = 0.0;
  CHECK(abring_effective_potential(&p, 0, 0, &zero, v.data(), 1) == ABRING_ERROR_DOMAIN);
}

TEST_CASE("sweep runs through opaque handles") {
  abring_config* cfg = nullptr;
  REQUIRE(abring_config_parse("[physical]\ndelta = 0.1\nv1 = 20\n[grid]\nr_points = 512\nk_points = 512\n"
                              "convergence_check = false\n[sweep]\nb_field = 0.5, 1, 100\n",
                              &cfg) == ABRING_OK);
  abring_run* run = nullptr;
  REQUIRE(abring_run_energy(cfg, 1, &run) == ABRING_OK);
  CHECK(abring_run_rows(run) == 3);
  CHECK(abring_run_bound_states(run) == 2);
  CHECK(abring_run_status(run) == ABRING_OK);
  abring_run_free(run);

  REQUIRE(abring_config_set_format(cfg, ABRING_FORMAT_JSON) == ABRING_OK);
  REQUIRE(abring_run_entropy(cfg, 2, &run) == ABRING_OK);
  CHECK(std::string(abring_run_output(run)).find("\"command\": \"entropy\"") != std::string::npos);
  CHECK(abring_run_status(run) == ABRING_OK);
  abring_run_free(run);
  abring_config_free(cfg);

  REQUIRE(abring_config_parse("[physical]\nv1 = 1\nb_field = 4\n", &cfg) == ABRING_OK);
  REQUIRE(abring_run_entropy(cfg, 1, &run) == ABRING_OK);
  CHECK(abring_run_status(run) == ABRING_ERROR_NO_STATES);
  abring_run_free(run);
  abring_config_free(cfg);
}

TEST_CASE("single acceptance criterion via callback") {
  struct Seen {
    int id = 0;
    int passed = -1;
  } seen;
  int all = 0;
  REQUIRE(abring_check(3, nullptr,
                       [](int id, int passed, const char*, void* user) {
                         auto* s = static_cast<Seen*>(user);
                         s->id = id;
                         s->passed = passed;
                       },
                       &seen, &all) == ABRING_OK);
  CHECK(seen.id == 3);
  CHECK(seen.passed == 1);
  CHECK(all == 1);
}
