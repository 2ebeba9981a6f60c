#include <doctest.h>

#include <cmath>

#include "tsallisq/quantum.hpp"
#include "tsallisq/sampling.hpp"
#include "tsallisq/serialization.hpp"

using namespace tsq;

TEST_CASE("significant-digit formatting") {
    CHECK(format_sig(0.5, 12) == "0.5");
    CHECK(format_sig(1.0 / 3.0, 6) == "0.333333");
    CHECK(format_sig(-0.0, 12) == "0");
    CHECK(format_sig(1e6, 12) == "1000000");
    CHECK(format_sig(0.74761383344635765, 12) == "0.747613833446");
    CHECK(round_sig(M_PI, 12) == doctest::Approx(M_PI).epsilon(1e-11));
    CHECK(round_sig(0.5, 12) == 0.5);
}

TEST_CASE("state json roundtrip") {
    const BipartiteState w = werner_popescu(0.7);
    const json j = state_to_json(w);
    CHECK(j.at("dA") == 2);
    CHECK(j.at("dB") == 2);
    const BipartiteState back = state_from_json(j);
    CHECK((back.matrix() - w.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(back.dim_a() == 2);
}

TEST_CASE("state json rejects malformed input") {
    const json missing = {{"dA", 2}, {"dB", 2}};
    CHECK_THROWS_AS(state_from_json(missing), validation_error);
    json j = state_to_json(werner_popescu(0.3));
    j["re"][0][1] = 0.9;  // breaks Hermiticity
    CHECK_THROWS_AS(state_from_json(j), validation_error);
    json ragged = state_to_json(werner_popescu(0.3));
    ragged["im"][2] = json::array({0.0});
    CHECK_THROWS_AS(state_from_json(ragged), validation_error);
}

TEST_CASE("ensemble json roundtrip preserves physics") {
    Sampler smp(2718);
    const SeparableEnsemble e = smp.shared_basis_ensemble(2, 2, 4);
    const json j = ensemble_to_json(e);
    const SeparableEnsemble back = ensemble_from_json(j);
    CHECK(back.terms() == e.terms());
    for (double q : {0.5, 1.0, 2.0, 10.0})
        CHECK(ensemble_conditional(back, q) ==
              doctest::Approx(ensemble_conditional(e, q)).epsilon(1e-9));
    const BipartiteState sa = assemble_separable(e), sb = assemble_separable(back);
    CHECK((sa.matrix() - sb.matrix()).cwiseAbs().maxCoeff() < 1e-9);
    // identity bases are omitted from the file
    const SeparableEnsemble plain({1.0}, {ProbDist({0.5, 0.5})}, {ProbDist({0.5, 0.5})});
    const json pj = ensemble_to_json(plain);
    CHECK_FALSE(pj.contains("basis_a"));
    CHECK(ensemble_from_json(pj).terms() == 1);
}

TEST_CASE("dist and joint parsing") {
    CHECK(dist_from_json(json::parse("[0.5, 0.5]")).size() == 2);
    CHECK_THROWS_AS(dist_from_json(json::parse("[]")), validation_error);
    CHECK_THROWS_AS(dist_from_json(json::parse("[0.5, 0.6]")), validation_error);
    const JointDist j = joint_from_json(json::parse("[[0.4, 0.1], [0.2, 0.3]]"));
    CHECK(j.rows() == 2);
    CHECK(j.at(1, 0) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK_THROWS_AS(joint_from_json(json::parse("[0.4, 0.6]")), validation_error);
    CHECK_THROWS_AS(joint_from_json(json::parse("[[0.4, 0.1], [0.2]]")), validation_error);
}

TEST_CASE("report serializers carry the documented fields") {
    const json cj = to_json(criterion_table());
    for (const char* k : {"bell_bound", "von_neumann_zero", "q_infinity_limit", "ppt_threshold"})
        CHECK(cj.contains(k));

    const json tj = to_json(threshold(2.0));
    CHECK(tj.at("q") == 2.0);
    CHECK(tj.at("x_star").get<double>() == doctest::Approx(0.577350269190).epsilon(1e-11));

    const ConditionalEntropyReport r =
        conditional_quantum(werner_popescu(0.9), 1.0, Subsystem::A);
    const json rj = to_json(r);
    CHECK(rj.at("conditioned_on") == "A");
    CHECK(rj.at("value").get<double>() < 0.0);

    const json pv = to_json(ppt_test(werner_popescu(0.9)));
    CHECK(pv.at("positive") == false);

    const std::vector<double> small_grid{1.0, 2.0};
    const PositivitySummary s = separable_positivity_experiment(5, small_grid, 10, true);
    const json sj = to_json(s);
    CHECK(sj.at("n_samples") == 5);
    CHECK(sj.contains("control_value"));
    const PositivitySummary s2 = separable_positivity_experiment(5, small_grid, 10, false);
    CHECK_FALSE(to_json(s2).contains("control_value"));
}
