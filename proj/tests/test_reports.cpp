#include <doctest.h>

#include "qdr/report.hpp"

using namespace qdr;

TEST_CASE("csv quoting follows the usual rules") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("zero-scan reports carry the fixed column schema") {
    Report r;
    r.columns = {"lambda", "mu", "E", "is_zero"};
    nlohmann::ordered_json row;
    row["lambda"] = "0,0";
    row["mu"] = "0,0";
    row["E"] = "0";
    row["is_zero"] = true;
    r.rows.push_back(row);
    auto csv = emit_csv(r);
    CHECK(csv.rfind("lambda,mu,E,is_zero\n", 0) == 0);
    CHECK(csv.find("0,0") != std::string::npos);
}

TEST_CASE("emission is deterministic") {
    Report r;
    r.meta["command"] = "spectrum";
    r.meta["seed"] = 7;
    r.columns = {"tau", "lambda", "E"};
    nlohmann::ordered_json row;
    row["tau"] = "+";
    row["lambda"] = "2,-1";
    row["E"] = "(q^2+1)/q";
    r.rows.push_back(row);
    r.verdicts["coding_equivalence"] = true;
    for (auto fmt : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text})
        CHECK(emit(r, fmt) == emit(r, fmt));
    auto js = emit(r, OutputFormat::Json);
    // insertion order is preserved: meta before rows before verdicts
    CHECK(js.find("\"meta\"") < js.find("\"rows\""));
    CHECK(js.find("\"rows\"") < js.find("\"verdicts\""));
    auto parsed = nlohmann::ordered_json::parse(js);
    CHECK(parsed["ok"].get<bool>());
    CHECK(parsed["meta"]["seed"] == 7);
}

TEST_CASE("text mode renders the verdict block") {
    Report r;
    r.meta["command"] = "braid-check";
    r.verdicts["hecke"] = true;
    r.ok = true;
    auto t = emit(r, OutputFormat::Text);
    CHECK(t.find("hecke: true") != std::string::npos);
    CHECK(t.find("ok: true") != std::string::npos);
}
