#include "helpers.hpp"

#include "toricsol/toricsol.h"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <string>

using nlohmann::json;

namespace {

std::string data_path(const std::string& name) { return std::string(TORICSOL_DATA_DIR) + "/" + name + ".json"; }

json golden(const std::string& name) {
    return json::parse(testing::read_file(std::string(TORICSOL_GOLDEN_DIR) + "/" + name + ".json"));
}

struct Loaded {
    toricsol_polytope* p = nullptr;
    explicit Loaded(const std::string& name) { REQUIRE(toricsol_polytope_from_file(data_path(name).c_str(), &p) == TORICSOL_OK); }
    ~Loaded() { toricsol_polytope_free(p); }
};

using Command = toricsol_status (*)(const toricsol_polytope*, const toricsol_options*, char**);

std::pair<toricsol_status, std::string> call(Command cmd, const toricsol_polytope* p, const toricsol_options& o) {
    char* report = nullptr;
    const auto st = cmd(p, &o, &report);
    REQUIRE(report != nullptr);
    std::string out(report);
    toricsol_string_free(report);
    return {st, out};
}

// Numbers within 1e-9 absolute or 1e-7 relative; everything else exact.
void compare(const json& got, const json& want, const std::string& path) {
    INFO("at " << path);
    if (want.is_number() && got.is_number()) {
        const double g = got.get<double>(), w = want.get<double>();
        CHECK(std::abs(g - w) <= std::max(1e-9, 1e-7 * std::abs(w)));
        return;
    }
    REQUIRE(got.type() == want.type());
    if (want.is_object()) {
        CHECK(got.size() == want.size());
        for (auto it = want.begin(); it != want.end(); ++it) {
            REQUIRE(got.contains(it.key()));
            compare(got.at(it.key()), it.value(), path + "." + it.key());
        }
    } else if (want.is_array()) {
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) compare(got[i], want[i], path + "[" + std::to_string(i) + "]");
    } else {
        CHECK(got == want);
    }
}

}  // namespace

TEST_CASE("C API loading and errors") {
    CHECK(std::string(toricsol_version()).size() > 0);

    toricsol_polytope* p = nullptr;
    CHECK(toricsol_polytope_from_json(R"({"dim": 2, "facets": [{"normal": [1, 0], "offset": 1}]})", &p) ==
          TORICSOL_INPUT);
    CHECK(p == nullptr);
    CHECK(std::string(toricsol_last_error()).find("UnboundedRegion") != std::string::npos);

    CHECK(toricsol_polytope_from_json("not json", &p) == TORICSOL_INPUT);
    CHECK(std::string(toricsol_last_error()).find("MalformedDocument") != std::string::npos);
    CHECK(toricsol_polytope_from_file(data_path("does_not_exist").c_str(), &p) == TORICSOL_INPUT);
    CHECK(toricsol_polytope_from_json(nullptr, &p) == TORICSOL_INPUT);

    REQUIRE(toricsol_polytope_from_json(testing::read_file(data_path("blowup")).c_str(), &p) == TORICSOL_OK);
    CHECK(toricsol_polytope_dim(p) == 2);
    CHECK(toricsol_polytope_facet_count(p) == 4);
    CHECK(std::string(toricsol_last_error()).empty());
    toricsol_polytope_free(p);
    toricsol_polytope_free(nullptr);
}

TEST_CASE("option validation") {
    Loaded cp2("cp2");
    auto o = toricsol_default_options();
    o.grid = 1;
    CHECK(call(toricsol_verify, cp2.p, o).first == TORICSOL_INPUT);
    o = toricsol_default_options();
    o.margin = 0.5;
    CHECK(call(toricsol_verify, cp2.p, o).first == TORICSOL_INPUT);
    o = toricsol_default_options();
    o.tol = 0.0;
    CHECK(call(toricsol_soliton, cp2.p, o).first == TORICSOL_INPUT);
    o = toricsol_default_options();
    o.order = 0;
    CHECK(call(toricsol_soliton, cp2.p, o).first == TORICSOL_INPUT);
}

TEST_CASE("command statuses") {
    Loaded cp2("cp2"), blowup("blowup"), not_delzant("not_delzant"), not_fano("not_fano");
    auto o = toricsol_default_options();

    CHECK(call(toricsol_roots, cp2.p, o).first == TORICSOL_OK);
    CHECK(call(toricsol_soliton, blowup.p, o).first == TORICSOL_OK);
    CHECK(call(toricsol_verify, cp2.p, o).first == TORICSOL_OK);

    auto [st, text] = call(toricsol_roots, not_delzant.p, o);
    CHECK(st == TORICSOL_INPUT);
    CHECK(json::parse(text).at("status") == 2);
    CHECK(call(toricsol_roots, not_fano.p, o).first == TORICSOL_INPUT);

    o.potential = TORICSOL_POTENTIAL_CALABI;
    CHECK(call(toricsol_verify, blowup.p, o).first == TORICSOL_OK);
    CHECK(call(toricsol_verify, cp2.p, o).first == TORICSOL_INPUT);

    o.potential = TORICSOL_POTENTIAL_GUILLEMIN;
    const auto [vst, vtext] = call(toricsol_verify, blowup.p, o);
    CHECK(vst == TORICSOL_VERIFICATION);
    CHECK(json::parse(vtext).at("failed_check") == "soliton_pde");

    o.max_iterations = 1;
    CHECK(call(toricsol_soliton, blowup.p, o).first == TORICSOL_SOLVER);

    auto params = toricsol_default_calabi_params();
    char* report = nullptr;
    CHECK(toricsol_calabi(&params, &o, &report) == TORICSOL_OK);
    toricsol_string_free(report);
    params.bracket_lo = -0.2;
    CHECK(toricsol_calabi(&params, &o, &report) == TORICSOL_SOLVER);
    toricsol_string_free(report);
    params = toricsol_default_calabi_params();
    params.c_alpha2 = 1.0 / 3.0;
    CHECK(toricsol_calabi(&params, &o, &report) == TORICSOL_INPUT);
    toricsol_string_free(report);
}

TEST_CASE("text format") {
    Loaded cp2("cp2");
    auto o = toricsol_default_options();
    o.format = TORICSOL_FORMAT_TEXT;
    const auto [st, text] = call(toricsol_roots, cp2.p, o);
    CHECK(st == TORICSOL_OK);
    CHECK(text.find("command: roots") != std::string::npos);
    CHECK_THROWS(json::parse(text));
}

TEST_CASE("reports match the golden files") {
    auto o = toricsol_default_options();
    for (const char* name : {"cp2", "blowup"}) {
        Loaded p(name);
        const std::string n(name);
        compare(json::parse(call(toricsol_roots, p.p, o).second), golden(n + "_roots"), n + "_roots");
        compare(json::parse(call(toricsol_soliton, p.p, o).second), golden(n + "_soliton"), n + "_soliton");
        auto d = o;
        if (n == "blowup") d.potential = TORICSOL_POTENTIAL_CALABI;
        compare(json::parse(call(toricsol_decompose, p.p, d).second), golden(n + "_decompose"), n + "_decompose");
    }
    auto params = toricsol_default_calabi_params();
    char* report = nullptr;
    REQUIRE(toricsol_calabi(&params, &o, &report) == TORICSOL_OK);
    compare(json::parse(report), golden("calabi"), "calabi");
    toricsol_string_free(report);
}

TEST_CASE("the input document is echoed and reloads to the same polytope") {
    Loaded p("blowup_translated");
    const json r = json::parse(call(toricsol_roots, p.p, toricsol_default_options()).second);
    toricsol_polytope* again = nullptr;
    REQUIRE(toricsol_polytope_from_json(r.at("input").dump().c_str(), &again) == TORICSOL_OK);
    const json r2 = json::parse(call(toricsol_roots, again, toricsol_default_options()).second);
    CHECK(r2.at("input") == r.at("input"));
    CHECK(r2.at("normalized") == r.at("normalized"));
    toricsol_polytope_free(again);
}
