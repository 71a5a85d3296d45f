#include <doctest.h>

#include <set>

#include "fairsim/catalog.hpp"
#include "fairsim/errors.hpp"

using namespace fairsim;

TEST_CASE("every catalog entry validates and matches the shared baseline") {
    for (const CatalogEntry& e : catalog()) {
        CHECK_NOTHROW(validate(e.config));
        CHECK(e.config.name == e.name);
        CHECK(e.config.reward == 0.05);
        CHECK(e.config.penalty == -0.05);
        CHECK(e.config.periods == 50);
        if (e.name.rfind("study3", 0) != 0) {
            CHECK(e.config.n == 1000);
            CHECK(e.config.applicants_per_period == 100);
            CHECK(e.config.replications == 100);
        }
    }
}

TEST_CASE("catalog names are unique") {
    std::set<std::string> names;
    for (const CatalogEntry& e : catalog()) names.insert(e.name);
    CHECK(names.size() == catalog().size());
}

TEST_CASE("study-1 single-firm entries map tN to thresholds 0.5..0.8") {
    const double taus[] = {0.5, 0.6, 0.7, 0.8};
    for (double s : {0.7, 0.9}) {
        for (int t = 1; t <= 4; ++t) {
            const std::string name = "study1-single-s" + std::string(s == 0.7 ? "0.7" : "0.9") +
                                     "-t" + std::to_string(t);
            const ScenarioConfig c = builtin(name);
            REQUIRE(c.firms.size() == 1);
            CHECK(c.firms[0].threshold.non_prot == taus[t - 1]);
            CHECK(c.firms[0].threshold.prot == taus[t - 1]);
            CHECK(c.firms[0].sophistication.non_prot == s);
            CHECK(c.f == 0.5);
        }
    }
    CHECK(builtin("study1-single-s0.7-t3").firms[0].threshold.non_prot == 0.7);
}

TEST_CASE("study-1 multi entries add the documented second firm to an s=0.7 focal firm") {
    for (int t = 1; t <= 4; ++t) {
        const ScenarioConfig a = builtin("study1-multi-a-t" + std::to_string(t));
        REQUIRE(a.firms.size() == 2);
        CHECK(a.firms[0].sophistication.non_prot == 0.7);
        CHECK(a.firms[1].threshold.non_prot == 0.7);
        CHECK(a.firms[1].sophistication.non_prot == 0.7);

        const ScenarioConfig b = builtin("study1-multi-b-t" + std::to_string(t));
        CHECK(b.firms[1].threshold.non_prot == 0.6);
        CHECK(b.firms[1].sophistication.non_prot == 0.9);
    }
}

TEST_CASE("aliases resolve to their canonical entries") {
    CHECK(builtin("study1-multi-a").name == "study1-multi-a-t3");
    CHECK(builtin("study1-multi-b").name == "study1-multi-b-t3");
    CHECK(builtin("appendixA-multi-a").name == "appendixA-multi-a-t3");
}

TEST_CASE("study-2 implicit entries carry per-group sophistication by scenario") {
    const PerGroup expected[] = {PerGroup{0.9, 0.7}, PerGroup{0.9, 0.9}, PerGroup{0.8, 0.8},
                                 PerGroup{0.7, 0.7}};
    for (double tau : {0.3, 0.8}) {
        for (int sc = 1; sc <= 4; ++sc) {
            const std::string name = "study2-implicit-t" + std::string(tau == 0.3 ? "0.3" : "0.8") +
                                     "-sc" + std::to_string(sc);
            const ScenarioConfig c = builtin(name);
            REQUIRE(c.firms.size() == 2);
            for (const FirmConfig& firm : c.firms) {
                CHECK(firm.threshold.non_prot == tau);
                CHECK(firm.threshold.prot == tau);
                CHECK(firm.sophistication.non_prot == expected[sc - 1].non_prot);
                CHECK(firm.sophistication.prot == expected[sc - 1].prot);
            }
        }
    }
}

TEST_CASE("study-2 explicit entries set the documented per-group thresholds") {
    const ScenarioConfig sc1 = builtin("study2-explicit-sc1");
    CHECK(sc1.firms[0].threshold.equal_across_groups());
    CHECK(sc1.firms[1].threshold.equal_across_groups());
    CHECK(sc1.firms[0].threshold.non_prot == 0.8);

    const ScenarioConfig sc2 = builtin("study2-explicit-sc2");
    CHECK(sc2.firms[0].threshold.prot == 0.9);
    CHECK(sc2.firms[0].threshold.non_prot == 0.8);
    CHECK(sc2.firms[1].threshold.equal_across_groups());

    const ScenarioConfig sc3 = builtin("study2-explicit-sc3");
    CHECK(sc3.firms[0].threshold.prot == 0.9);
    CHECK(sc3.firms[1].threshold.prot == 0.9);
    CHECK(sc3.firms[1].threshold.non_prot == 0.8);

    const ScenarioConfig sc4 = builtin("study2-explicit-sc4");
    CHECK(sc4.firms[0].threshold.prot == 0.9);
    CHECK(sc4.firms[0].threshold.non_prot == 0.8);
    CHECK(sc4.firms[1].threshold.non_prot == 0.9);
    CHECK(sc4.firms[1].threshold.prot == 0.8);
}

TEST_CASE("study-3 entries are at full scale with the calibrated market") {
    for (int sc = 1; sc <= 4; ++sc) {
        const ScenarioConfig c = builtin("study3-sc" + std::to_string(sc));
        CHECK(c.n == 100000);
        CHECK(c.applicants_per_period == 10000);
        CHECK(c.replications == 20);
        REQUIRE(c.firms.size() == 20);
        for (int i = 0; i < 20; ++i) {
            CHECK(c.firms[static_cast<std::size_t>(i)].threshold.non_prot == (i < 10 ? 0.6 : 0.8));
            CHECK(c.firms[static_cast<std::size_t>(i)].sophistication.non_prot == 0.8);
            const double expected_cost = (sc == 4 && i < 10) ? 0.1 : 0.0;
            CHECK(c.firms[static_cast<std::size_t>(i)].cost == expected_cost);
        }
        CHECK(c.targeting.non_prot.kind == TargetingPolicy::Kind::AllFirms);
    }
    CHECK(builtin("study3-sc1").targeting.prot.kind == TargetingPolicy::Kind::AllFirms);
    CHECK(builtin("study3-sc2").targeting.prot.kind == TargetingPolicy::Kind::RandomSubset);
    CHECK(builtin("study3-sc2").targeting.prot.k == 3);
    CHECK(builtin("study3-sc3").targeting.prot.kind == TargetingPolicy::Kind::LowThresholdRandomSubset);
    CHECK(builtin("study3-sc4").targeting.prot.kind == TargetingPolicy::Kind::LowThresholdRandomSubset);
}

TEST_CASE("appendix-A entries mirror study 1 at the census fraction") {
    CHECK(builtin("appendixA-single-s0.7-t1").f == 0.136);
    CHECK(builtin("appendixA-multi-b-t4").f == 0.136);
    CHECK(builtin("appendixA-single-s0.9-t2").firms[0].threshold.non_prot == 0.6);
}

TEST_CASE("appendix-C sweep entries carry nine values over the full range") {
    const CatalogEntry& tau = catalog_entry("appendixC-tau-sweep");
    REQUIRE(tau.sweep.has_value());
    CHECK(tau.sweep->axis == SweepAxis::Threshold);
    REQUIRE(tau.sweep->values.size() == 9);
    CHECK(tau.sweep->values.front() == doctest::Approx(0.1));
    CHECK(tau.sweep->values.back() == doctest::Approx(0.9));
    CHECK(tau.config.firms[0].sophistication.non_prot == 0.7);

    const CatalogEntry& s = catalog_entry("appendixC-s-sweep");
    REQUIRE(s.sweep.has_value());
    CHECK(s.sweep->axis == SweepAxis::Sophistication);
    CHECK(s.config.firms[0].threshold.non_prot == 0.7);
}

TEST_CASE("the study-1 family carries the calibrated population regime") {
    for (const char* name : {"study1-single-s0.7-t1", "study1-multi-b-t2",
                             "appendixA-single-s0.9-t4", "appendixC-tau-sweep"}) {
        const ScenarioConfig c = builtin(name);
        CHECK(c.quality.base_mean == 0.95);
        CHECK(c.quality.std_dev == 0.10);
        CHECK(c.quality.protected_shift == 0.15);
    }
    for (const char* name : {"study2-implicit-t0.3-sc1", "study2-explicit-sc4", "study3-sc1"}) {
        const ScenarioConfig c = builtin(name);
        CHECK(c.quality.base_mean == 0.65);
        CHECK(c.quality.std_dev == 0.15);
        CHECK(c.quality.protected_shift == 0.10);
    }
}

TEST_CASE("unknown names raise a catalog error listing valid names") {
    try {
        builtin("nonexistent");
        FAIL("expected CatalogError");
    } catch (const CatalogError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("nonexistent") != std::string::npos);
        CHECK(msg.find("study1-single-s0.7-t1") != std::string::npos);
        CHECK(msg.find("study3-sc4") != std::string::npos);
    }
}
