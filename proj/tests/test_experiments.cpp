#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "modspace/error.hpp"
#include "modspace/experiments.hpp"
#include "modspace/runner.hpp"
#include "modspace/wiener_levy.hpp"

using namespace modspace;

TEST(RunConfig, DefaultsAndRoundTrip) {
  const RunConfig d;
  EXPECT_EQ(d.n, 4096u);
  EXPECT_EQ(d.L, 40.0);
  EXPECT_EQ(d.seed, 0u);
  std::mt19937_64 gen(7);
  for (int t = 0; t < 50; ++t) {
    RunConfig c;
    c.experiment = "moyal";
    c.n = std::size_t{8} << (gen() % 10);
    c.L = uniform_from_bits(gen(), 1.0, 100.0);
    c.seed = gen();
    c.jobs = 1 + static_cast<int>(gen() % 4);
    c.params["eps"] = uniform_from_bits(gen(), 0.0, 1.0);
    c.params["checkpoints"] = Json::array({1e2, uniform_from_bits(gen(), 1e3, 1e9)});
    c.params["space"] = "modulation";
    // through the deterministic printer and back
    const RunConfig back = RunConfig::from_json(Json::parse(dump_json(c.to_json())));
    EXPECT_EQ(back.experiment, c.experiment);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.L, c.L);
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.jobs, c.jobs);
    EXPECT_EQ(back.param_double("eps", -1), c.param_double("eps", -2));
    EXPECT_EQ(back.param_list("checkpoints", {}), c.param_list("checkpoints", {1.0}));
    EXPECT_EQ(dump_json(back.to_json()), dump_json(c.to_json()));
  }
}

TEST(RunConfig, RejectsMalformed) {
  EXPECT_THROW(RunConfig::from_json(Json::array()), InputError);
  EXPECT_THROW(RunConfig::from_json(Json{{"bogus", 1}}), InputError);
  EXPECT_THROW(RunConfig::from_json(Json{{"n", 100}}), InputError);
  EXPECT_THROW(RunConfig::from_json(Json{{"n", "4096"}}), InputError);
  EXPECT_THROW(RunConfig::from_json(Json{{"jobs", 0}}), InputError);
  RunConfig c;
  c.params["m"] = "twelve";
  EXPECT_THROW(c.param_int("m", 1), InputError);
  c.params["m"] = 12.5;
  EXPECT_THROW(c.param_int("m", 1), InputError);
  EXPECT_EQ(parse_number_list("1e2, 1e4,1e8"), (std::vector<double>{1e2, 1e4, 1e8}));
  EXPECT_THROW(parse_number_list("1e2,x"), InputError);
  EXPECT_THROW(parse_number_list(""), InputError);
}

TEST(Report, CsvQuotesSeparators) {
  SweepReport r("t", "x");
  r.set_columns({"a", "b,c", "d"});
  r.add_row(Json::array({"M^{1,1}_0", 0.5, nullptr}));
  EXPECT_EQ(r.to_csv(), "a,\"b,c\",d\n\"M^{1,1}_0\",0.5,\n");
}

TEST(Report, DocumentHasSchemaAndAssertions) {
  RunConfig c;
  c.experiment = "counterexample-l2";
  c.params["checkpoints"] = Json::array({1e2, 1e4});
  const ExperimentOutput out = find_experiment(c.experiment).run(c);
  const Json doc = report_document(c, out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["experiment"], "counterexample-l2");
  EXPECT_EQ(doc["config"]["params"]["checkpoints"][1], 1e4);
  ASSERT_FALSE(doc["assertions"].empty());
  for (const auto& a : doc["assertions"]) {
    EXPECT_TRUE(a.contains("name") && a.contains("tolerance") && a.contains("measured") &&
                a.contains("pass"));
  }
  // Same input, same bytes.
  EXPECT_EQ(dump_json(doc), dump_json(report_document(c, find_experiment(c.experiment).run(c))));
}

TEST(Registry, NamesAndAnchors) {
  std::set<std::string> names;
  for (const auto& e : experiment_registry()) {
    EXPECT_FALSE(e.anchor.empty()) << e.name;
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
  }
  for (const char* n : {"stft", "moyal", "norm", "bupu-check", "rudin-shapiro", "plateau",
                        "translation-bound", "compose", "reciprocal", "approx-unit",
                        "embedding-sweep", "algebra-sweep", "counterexample-flat",
                        "counterexample-l2"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
  EXPECT_THROW(find_experiment("nope"), InputError);
}

TEST(ApproximateUnit, GaussianSweepAndPlateauAbsorption) {
  const Grid g(1024, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(std::exp(-x * x / 8)); });
  std::vector<double> lambdas;
  for (int i = 0; i <= 6; ++i) lambdas.push_back(std::ldexp(1.0, -i));
  const SweepReport r = approximate_unit_sweep(f, NormSpec::modulation(1, 1, 0.5), lambdas);
  EXPECT_TRUE(r.all_pass());
  // f with support inside {psi_lambda = 1} is left alone.
  const auto bump = SampledSignal::from_function(g, [](double x) { return cplx(std::abs(x) < 2 ? 1 - x * x / 4 : 0.0); });
  const auto psi = dilated_plateau(g, 0.25);
  for (std::size_t j = 0; j < g.n(); ++j) EXPECT_EQ(bump[j] * psi[j], bump[j]);
  EXPECT_THROW(approximate_unit_sweep(SampledSignal::zeros(g), NormSpec::modulation(1, 1, 0), lambdas),
               InputError);
}

TEST(AlgebraSweep, RandomPairsStableUnderRefinement) {
  // corpus max over random smooth pairs, (p, q, s) = (2, 1, 0)
  const NormSpec spec = NormSpec::modulation(2, 1, 0);
  double c[2] = {0.0, 0.0};
  for (int level = 0; level < 2; ++level) {
    const Grid g(level == 0 ? 1024 : 2048, 20.0);
    const Bupu b = build_bupu(g);
    for (int k = 0; k < 50; ++k) {
      c[level] = std::max(c[level], algebra_ratio(random_smooth_signal(g, 100 + 2 * k),
                                                  random_smooth_signal(g, 101 + 2 * k), spec, b));
    }
  }
  EXPECT_GT(c[0], 0.0);
  EXPECT_NEAR(c[1] / c[0], 1.0, 0.1);
}

TEST(AlgebraSweep, RejectsNonAlgebraSpec) {
  EXPECT_THROW(algebra_sweep(Grid(256, 20.0), 0, {NormSpec::modulation(2, 2, 0)}), InputError);
  EXPECT_THROW(algebra_sweep(Grid(256, 20.0), 0, {NormSpec::fourier_beurling(0)}), InputError);
}
