#include "doctest.h"

#include <filesystem>
#include <string>

#include "degcorr/ensemble.hpp"
#include "degcorr/error.hpp"
#include "degcorr/grid_io.hpp"
#include "degcorr/theory.hpp"
#include "degcorr/transient.hpp"

using namespace degcorr;

namespace {

void check_round_trip(const GridDocument& doc) {
    for (GridFormat f : {GridFormat::json, GridFormat::csv}) {
        const std::string text = render_grid(doc, f);
        const GridDocument back = parse_grid(text, f);
        CHECK(back.kind == doc.kind);
        CHECK(back.m == doc.m);
        CHECK(back.mode() == doc.mode());
        CHECK(back.max_k() == doc.max_k());
        CHECK(back.tail_mass == doc.tail_mass);
        CHECK(back.edge_count == doc.edge_count);
        CHECK(back.replicas == doc.replicas);
        CHECK(back.t == doc.t);
        CHECK(back.entries == doc.entries);  // bit-exact
        CHECK(render_grid(back, f) == text);
    }
}

std::string parse_message(std::string_view text, GridFormat f) {
    try {
        parse_grid(text, f);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse_error);
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

}  // namespace

TEST_CASE("shortest round-trip decimals") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("grids round trip bit-exactly") {
    for (int m = 1; m <= 4; ++m)
        for (Mode mode : {Mode::directed, Mode::undirected}) {
            check_round_trip(to_document(stationary(mode, m, 40)));
            check_round_trip(to_document(transient_run(mode, m, m + 2, 25, {})));
        }
    EnsembleParams p;
    p.growth = {2, 4, 300, 3, 0};
    p.replicas = 3;
    check_round_trip(to_document(summarize(run_replicas(p)).merged));
}

TEST_CASE("csv layout") {
    DegreeMatrix d(Mode::directed, 3);
    d(1, 2) = 0.5;
    d(2, 3) = 0.5;
    GridDocument doc{"stationary", 1, 0.0, d, {}, {}, {}};
    const std::string csv = render_grid(doc, GridFormat::csv);
    CHECK(csv ==
          "# kind=stationary mode=directed m=1 max_k=3 tail_mass=0\n"
          "k1\\k2,1,2,3\n"
          "1,0,0.5,0\n"
          "2,0,0,0.5\n"
          "3,0,0,0\n");
    const std::string json = render_grid(doc, GridFormat::json);
    CHECK(json.find("\"mode\": \"directed\"") != std::string::npos);
    CHECK(json.find("\"max_k\": 3") != std::string::npos);
    CHECK(json.find("\"tail_mass\": 0") != std::string::npos);
    CHECK(json.find("[1, 2, 0.5]") != std::string::npos);
}

TEST_CASE("malformed files report line and column") {
    const std::string bad_cell =
        "# kind=stationary mode=directed m=1 max_k=3 tail_mass=0\n"
        "k1\\k2,1,2,3\n"
        "1,0,0.5,0\n"
        "2,0,zero,0.5\n";
    CHECK(parse_message(bad_cell, GridFormat::csv).find("line 4, column 5") != std::string::npos);

    const std::string short_row =
        "# kind=stationary mode=directed m=1 max_k=3 tail_mass=0\n"
        "k1\\k2,1,2,3\n"
        "1,0,0.5\n";
    CHECK(parse_message(short_row, GridFormat::csv).find("line 3") != std::string::npos);

    CHECK(parse_message("k1\\k2,1\n", GridFormat::csv).find("line 1") != std::string::npos);
    CHECK(parse_message("# mode=sideways max_k=3\n", GridFormat::csv).find("unknown mode") != std::string::npos);

    const std::string below =
        "# kind=x mode=undirected m=1 max_k=2 tail_mass=0\n"
        "k1\\k2,1,2\n"
        "1,0,0.5\n"
        "2,0.5,0\n";
    CHECK(parse_message(below, GridFormat::csv).find("below the diagonal") != std::string::npos);

    const std::string json = "{\n  \"kind\": \"x\",\n  \"mode\": \"directed\",\n  \"m\": 1,\n  oops\n}";
    CHECK(parse_message(json, GridFormat::json).find("line 5") != std::string::npos);
    CHECK(parse_message("{\"kind\": \"x\"}", GridFormat::json).find("mode") != std::string::npos);
}

TEST_CASE("files pick their format from the extension") {
    const auto dir = std::filesystem::temp_directory_path() / "degcorr_grid_io_test";
    std::filesystem::create_directories(dir);
    const GridDocument doc = to_document(stationary(Mode::undirected, 2, 30));
    write_grid(dir / "g.json", doc, GridFormat::json);
    write_grid(dir / "g.csv", doc, GridFormat::csv);
    CHECK(read_grid(dir / "g.json").entries == doc.entries);
    CHECK(read_grid(dir / "g.csv").entries == doc.entries);
    CHECK_THROWS_AS(read_grid(dir / "g.txt"), Error);
    try {
        read_grid(dir / "missing.json");
        FAIL("expected io-error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io_error);
    }
    std::filesystem::remove_all(dir);
}
