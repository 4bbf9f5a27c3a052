#include "normvol/constructions.hpp"
#include "normvol/error.hpp"
#include "normvol/io.hpp"
#include "normvol/random_family.hpp"
#include "normvol/suites.hpp"

#include "shapes.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace normvol;
using json = nlohmann::json;

TEST(BodyJson, PolytopeRoundTrip) {
    const auto j = json::parse(R"({"kind":"polytope","vertices":[[1,1],[-1,1],[-1,-1],[1,-1]]})");
    const Body b = io::body_from_json(j);
    EXPECT_DOUBLE_EQ(volume(b), 4.0);
    const Body again = io::body_from_json(io::body_to_json(b));
    EXPECT_DOUBLE_EQ(volume(again), 4.0);
}

TEST(BodyJson, EllipsoidAndStar) {
    const Body e = io::body_from_json(json::parse(R"({"kind":"ellipsoid","Q":[[1,0],[0,4]]})"));
    EXPECT_NEAR(std::get<ConvexBody>(e).support(vec2(0, 1)), 0.5, 1e-15);

    auto iso = dual_isoperimetrix(VolumeDefinition(VolumeId::busemann), test::square(), default_grid(2));
    const Body s = io::body_from_json(io::body_to_json(iso.body));
    const auto& star = std::get<StarBody>(s);
    ASSERT_TRUE(star.exact().has_value());
    EXPECT_NEAR(star.exact()->volume(), 2.0, 1e-12);
    for (std::size_t i = 0; i < star.grid().size(); ++i) EXPECT_EQ(star.rho_at(i), iso.star().rho_at(i));
}

TEST(BodyJson, RejectsMalformedInput) {
    const char* bad[] = {
        R"({"vertices":[[1,1]]})",
        R"({"kind":"polytope","vertices":[]})",
        R"({"kind":"polytope","vertices":[[1,"a"]]})",
        R"({"kind":"polytope","vertices":[[1,1],[-1,1,0]]})",
        R"({"kind":"ellipsoid","Q":[[1,0],[0]]})",
        R"({"kind":"star","grid":{"dim":2,"resolution":8},"rho":[1,1,1]})",
        R"({"kind":"star","grid":{"dim":2,"resolution":4},"rho":[1,1,-1,1]})",
        R"({"kind":"cylinder"})",
    };
    for (const char* text : bad) EXPECT_THROW(io::body_from_json(json::parse(text)), InputError) << text;
    // Asymmetric polytope and origin on the boundary.
    EXPECT_THROW(io::body_from_json(json::parse(R"({"kind":"polytope","vertices":[[2,0],[-1,1],[-1,-1]]})")), InputError);
    EXPECT_THROW(io::read_body("/nonexistent/body.json"), InputError);
}

TEST(ConstructionJson, Provenance) {
    const auto r = projection_body(test::square(), default_grid(2));
    const json j = io::construction_to_json(r);
    EXPECT_EQ(j["space"], "dual");
    EXPECT_EQ(j["convexity"], "verified");
    EXPECT_EQ(j["provenance"]["construction"], "projection-body");
    EXPECT_EQ(j["provenance"]["input_hash"].get<std::string>().size(), 16u);
}

TEST(ReportCsv, SchemaAndDeterminism) {
    SuiteConfig c;
    c.check = "petty";
    c.trials = 5;
    const auto a = io::report_to_csv(run_suite(c));
    const auto b = io::report_to_csv(run_suite(c));
    EXPECT_EQ(a, b);
    std::istringstream in(a);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "check,trial,seed,lhs,rhs,margin,pass");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(line.rfind("petty,", 0), 0u);
        EXPECT_NE(line.find(",true"), std::string::npos);
    }
    EXPECT_EQ(rows, 5);
}

TEST(ReportJson, FailureCarriesWitness) {
    auto r = single_trial("x", 1e-3, 2.0, 1.0, -1.0, test::square());
    const json j = io::report_to_json(r);
    EXPECT_EQ(j["passed"], false);
    EXPECT_TRUE(j.contains("witness"));
}

TEST(Svg, DeterministicAndFinite) {
    RandomFamily f;
    std::vector<io::PlotLayer> layers{{"B", "#000", generate_convex(f, 0)}, {"disc", "#f00", test::ball(2)}};
    const auto a = io::plot_svg(layers);
    EXPECT_EQ(a, io::plot_svg(layers));
    EXPECT_EQ(a.find("nan"), std::string::npos);
    EXPECT_EQ(a.find("NaN"), std::string::npos);
    EXPECT_NE(a.find("<svg"), std::string::npos);
    EXPECT_NE(a.find("disc"), std::string::npos);
}

TEST(Svg, RejectsThreeDimensions) {
    std::vector<io::PlotLayer> layers{{"B", "#000", test::cube()}};
    EXPECT_THROW(io::plot_svg(layers), InputError);
}
