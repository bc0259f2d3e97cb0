#include "golden_case.hpp"
#include "test_support.hpp"

#include "cli/command.hpp"
#include "kpalg/isomorphism.hpp"

#include <gtest/gtest.h>

using namespace kpalg;
using namespace kpalg::test;
using kpalg::cli::Json;
using kpalg::cli::run_command;

namespace {

const std::filesystem::path kGoldenDir = KPALG_GOLDEN_DIR;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        saved_ = std::filesystem::current_path();
        std::filesystem::current_path(kGoldenDir);
    }
    void TearDown() override { std::filesystem::current_path(saved_); }

private:
    std::filesystem::path saved_;
};

Metric golden_metric(const std::string& file)
{
    return cli::metric_from_json(Json::parse(read_file(kGoldenDir / file)));
}

Json payload(const std::vector<std::string>& args)
{
    const auto r = run_command(args);
    EXPECT_EQ(r.exit_code, 0) << r.payload.dump();
    return r.payload;
}

} // namespace

TEST_F(CliTest, GoldenFilesInProcess)
{
    const auto cases = load_all_golden(kGoldenDir);
    ASSERT_GE(cases.size(), 10U);
    for (const auto& c : cases) {
        const auto r = run_command(c.args);
        EXPECT_EQ(r.exit_code, c.exit_code) << c.name;
        EXPECT_EQ(cli::render(r) + "\n", c.expected) << c.name;
    }
}

TEST_F(CliTest, GoldenFilesThroughExecutable)
{
    for (const auto& c : load_all_golden(kGoldenDir)) {
        const ProcessResult r = run_process(KPALG_CLI_PATH, c.args, kGoldenDir);
        EXPECT_EQ(r.exit_code, c.exit_code) << c.name;
        EXPECT_EQ(r.out, c.expected) << c.name;
    }
}

TEST_F(CliTest, DecidePayloadsMatchLibrary)
{
    const Metric bg = golden_metric("metric_diag_x_quadratic.json"), bg2 = golden_metric("metric_diag_neg8x.json");
    EXPECT_EQ(payload({"decide", "--class", "diag-x", "--metric", "@metric_diag_x_quadratic.json", "--metric2",
                       "@metric_diag_neg8x.json"}),
              cli::to_json(decide_diag_x(bg, bg2)));

    const Metric cg = golden_metric("metric_diag_y.json"), cg2 = golden_metric("metric_diag_y_shifted.json");
    EXPECT_EQ(payload({"decide", "--class", "diag-y", "--metric", "@metric_diag_y.json", "--metric2",
                       "@metric_diag_y_shifted.json"}),
              cli::to_json(check_diag_y_sufficient(cg, cg2)));

    const Metric ag = golden_metric("metric_diag_x_x2.json"), ag2 = golden_metric("metric_sheared_x8.json");
    EXPECT_EQ(payload({"decide", "--class", "xdep", "--metric", "@metric_diag_x_x2.json", "--metric2",
                       "@metric_sheared_x8.json", "--alpha", "1"}),
              cli::to_json(check_xdep_sufficient(ag, ag2, q(1))));

    const auto r = run_command({"decide", "--class", "constant", "--metric", R"({"entries":[[1,0],[0,1]]})",
                                "--metric2", R"({"entries":[[2,0],[0,1]]})"});
    EXPECT_EQ(r.payload, cli::to_json(decide_constant(Metric::identity(), Metric::diagonal(P("2"), P("1")))));
}

TEST_F(CliTest, ComputationPayloadsMatchLibrary)
{
    const Metric g = golden_metric("metric_diag_x_x2.json");
    Json kp = payload({"check-kp", "--metric", "@metric_diag_x_x2.json"});
    EXPECT_EQ(kp["eta"], format_expr(kp_check(g).eta));

    Json br = payload({"bracket", "--f", "x^2/y", "--g", "x + y^3", "--lambda", "1", "--mu", "2*i"});
    EXPECT_EQ(br["bracket"], format_expr(bracket(P("x^2/y"), P("x + y^3"), PoissonStructure(q(1), gq(0, 2)))));

    const std::string shear = R"({"type":"scale_shear","alpha":"-3","p":"x^2 - 1/2"})";
    const Automorphism phi = cli::automorphism_from_json(Json::parse(shear));
    Json ap = payload({"apply", "--auto", shear, "--expr", "y/(x + 1)"});
    EXPECT_EQ(ap["result"], format_expr(apply_auto(phi, P("y/(x + 1)"))));

    const std::string other = R"({"type":"scale_shear","alpha":"i","p":"x^3"})";
    Json co = payload({"compose", "--auto", shear, "--auto2", other});
    EXPECT_EQ(co["automorphism"], cli::to_json(compose(phi, cli::automorphism_from_json(Json::parse(other)))));

    Json tr = payload({"transform", "--metric", "@metric_diag_x_x2.json", "--auto", shear});
    EXPECT_EQ(tr["metric"], cli::to_json(transform_metric(g, phi)));

    const Metric g2 = transform_metric(g, phi);
    const auto v = run_command({"verify", "--metric", "@metric_diag_x_x2.json", "--metric2",
                                cli::to_json(g2).dump(), "--auto", shear});
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_EQ(v.payload["isomorphic"], verify_iso(g, g2, phi));
    EXPECT_EQ(v.payload["eta_transported"], eta_obstruction(g, g2, phi));
}

TEST_F(CliTest, JsonRoundTrips)
{
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const Metric g = rng.polynomial_metric(3, false);
        EXPECT_EQ(cli::metric_from_json(Json::parse(cli::to_json(g).dump())), g);
        const Automorphism phi = rng.scale_shear(3, true);
        EXPECT_EQ(cli::automorphism_from_json(Json::parse(cli::to_json(phi).dump())), phi);
    }
    const Automorphism m = Mobius{gq(1, 1), q(2), q(0), q(3), P("1/(x - 1)")};
    EXPECT_EQ(cli::automorphism_from_json(cli::to_json(m)), m);
}

TEST_F(CliTest, ErrorExitCodes)
{
    EXPECT_EQ(run_command({}).exit_code, 2);
    EXPECT_EQ(run_command({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run_command({"check-kp", "--metric", "@missing.json"}).exit_code, 2);
    EXPECT_EQ(run_command({"check-kp", "--metric", "{not json"}).exit_code, 2);
    EXPECT_EQ(run_command({"check-kp", "--metric", R"({"entries":[[1,0]]})"}).exit_code, 2);
    EXPECT_EQ(run_command({"apply", "--auto", R"({"type":"scale_shear","alpha":"0","p":"0"})", "--expr", "x"}).exit_code,
              3);
    EXPECT_EQ(run_command({"apply", "--auto", R"({"type":"rotation"})", "--expr", "x"}).exit_code, 2);
    EXPECT_EQ(run_command({"bracket", "--f", "x", "--g", "y", "--lambda", "0", "--mu", "0"}).exit_code, 3);
    EXPECT_EQ(run_command({"decide", "--class", "bogus", "--metric", "@metric_diag_x_x2.json", "--metric2",
                           "@metric_diag_x_x2.json"})
                  .exit_code,
              2);
    const auto zero = run_command({"apply", "--auto", R"({"type":"scale_shear","alpha":"1","p":"0"})", "--expr", "1/0"});
    EXPECT_EQ(zero.exit_code, 3);
    EXPECT_EQ(zero.payload["error"], "division_by_zero");
}
