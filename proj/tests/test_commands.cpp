#include "omega/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace omega;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("omega_test_" + name);
}

std::size_t count_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line))
        ++lines;
    return lines;
}

} // namespace

TEST(Status, Labels) {
    EXPECT_EQ(alpha_status(5), "edgeless");
    EXPECT_EQ(alpha_status(10), "bipartite");
    EXPECT_EQ(alpha_status(16), "theorem");
    EXPECT_EQ(alpha_status(12), "theorem (cited, n = 4p^k)");
    EXPECT_EQ(alpha_status(36), "theorem (cited, n = 4p^k)");
    EXPECT_EQ(alpha_status(24), "known via SDP hierarchy (cited)");
    EXPECT_EQ(alpha_status(40), "conjectured");
    EXPECT_TRUE(is_four_times_odd_prime_power(4 * 25));
    EXPECT_FALSE(is_four_times_odd_prime_power(4 * 15));
    EXPECT_FALSE(is_four_times_odd_prime_power(4));
}

TEST(CmdBound, Examples) {
    const auto sixteen = cmd_bound(16);
    EXPECT_EQ(sixteen.results["a_n"], "2304");
    EXPECT_EQ(sixteen.results["status"], "theorem");
    EXPECT_EQ(sixteen.results["chromatic_lower_bound"], "29");
    EXPECT_TRUE(sixteen.ok());

    const auto twenty_four = cmd_bound(24);
    EXPECT_EQ(twenty_four.results["a_n"], "178208");
    EXPECT_EQ(twenty_four.results["status"], "known via SDP hierarchy (cited)");
    EXPECT_FALSE(twenty_four.results.contains("chromatic_lower_bound"));

    const auto three = cmd_bound(3);
    EXPECT_EQ(three.results["alpha"], "8");
    EXPECT_EQ(three.results["status"], "edgeless");

    const auto forty = cmd_bound(40);
    EXPECT_EQ(forty.results["status"], "conjectured");
    EXPECT_TRUE(forty.results["alpha"].is_null());

    EXPECT_THROW(cmd_bound(0), error);
}

TEST(CmdConstruct, WritesVerifiedSetFile) {
    const auto path = temp_file("construct8.txt");
    ConstructOptions options;
    options.n = 8;
    options.out = path.string();
    const auto report = cmd_construct(options);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.results["size"], "32");
    EXPECT_EQ(report.results["verification"]["mode"], "exact");
    EXPECT_EQ(count_lines(path), 32u);
    EXPECT_EQ(read_set_file(path.string()), build_extremal_set(8));
    std::filesystem::remove(path);
}

TEST(CmdConstruct, SampledModeNeedsSeed) {
    ConstructOptions options;
    options.n = 8;
    options.mode = verify_mode::sampled;
    EXPECT_THROW(cmd_construct(options), error);
    options.seed = 12;
    options.trials = 1000;
    const auto report = cmd_construct(options);
    EXPECT_EQ(report.results["verification"]["seed"], "12");
    EXPECT_TRUE(report.ok());
}

TEST(CmdConstruct, ImplicitSetAtSixtyFour) {
    ConstructOptions options;
    options.n = 64;
    options.seed = 3;
    options.trials = 10000;
    const auto report = cmd_construct(options);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.results["size"], to_decimal(a_n(64)));
    options.out = temp_file("never.txt").string();
    EXPECT_THROW(cmd_construct(options), error);
}

TEST(CmdCertify, Examples) {
    const auto path = temp_file("certify16.txt");
    write_set_file(path.string(), build_extremal_set(16));
    const auto with_set = cmd_certify(4, path.string());
    EXPECT_TRUE(with_set.ok());
    const auto& certificate = with_set.results["certificate"];
    EXPECT_EQ(certificate["total_bound"], "2304");
    EXPECT_EQ(certificate["witness"]["equality"], true);
    std::filesystem::remove(path);

    const auto five = cmd_certify(5);
    EXPECT_EQ(five.results["certificate"]["total_bound"], to_decimal(a_n(32)));
    EXPECT_TRUE(five.ok());

    const auto two = cmd_certify(2);
    EXPECT_EQ(two.results["certificate"]["trivial"], true);

    try {
        cmd_certify(3, "/nonexistent/set.txt");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::io);
    }
}

TEST(CmdCertify, CoefficientsSerializeAsFractions) {
    const auto report = cmd_certify(3);
    const auto& c = report.results["certificate"]["coefficients"];
    EXPECT_EQ(c[0], "3/4");
    EXPECT_EQ(c[1], "-1/4");
    EXPECT_EQ(c[2], "0/1");
}

TEST(CmdAlpha, Examples) {
    EXPECT_EQ(cmd_alpha(4).results["alpha"], "4");
    const auto eight = cmd_alpha(8);
    EXPECT_EQ(eight.results["alpha"], "32");
    EXPECT_EQ(eight.results["parity_class_alpha"], "16");
    EXPECT_TRUE(eight.ok());
    EXPECT_EQ(cmd_alpha(5).results["alpha"], "32");
    EXPECT_THROW(cmd_alpha(10), error);
}

TEST(CmdSpectralCheck, Examples) {
    EXPECT_TRUE(cmd_spectral_check(3).ok());
    const auto seven = cmd_spectral_check(7);
    EXPECT_TRUE(seven.ok());
    EXPECT_EQ(seven.results["x_spectral_form_k3"], true);
    EXPECT_THROW(cmd_spectral_check(10), error);
}

TEST(CmdTable, RowsAndFormats) {
    const auto report = cmd_table(4);
    const auto& rows = report.results["rows"];
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["a_n"], "4");
    EXPECT_EQ(rows[1]["a_n"], "32");
    EXPECT_EQ(rows[2]["a_n"], "2304");
    EXPECT_TRUE(report.ok());

    const auto explicit_rows = cmd_table(4, {16, 24});
    EXPECT_EQ(explicit_rows.results["rows"][1]["a_n"], "178208");

    const std::string csv = render(explicit_rows, output_format::csv, false);
    EXPECT_EQ(csv, "n,k,a_n,status,certified_bound,chromatic_lower_bound,ratio_bound\n"
                   "16,4,2304,theorem,2304,29,4096/1\n"
                   "24,,178208,known via SDP hierarchy (cited),,,2097152/3\n");
    EXPECT_THROW(cmd_table(7), error);
    EXPECT_THROW(cmd_table(4, {10}), error);
}

TEST(Render, ByteStableWithoutTiming) {
    for (auto format : {output_format::text, output_format::json, output_format::csv}) {
        const auto a = render(cmd_table(4), format, false);
        const auto b = render(cmd_table(4), format, false);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.find("elapsed"), std::string::npos);
    }
    const auto json = ordered_json::parse(render(cmd_bound(16), output_format::json));
    std::vector<std::string> keys;
    for (const auto& [key, value] : json.items())
        keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "parameters", "results", "validity", "ok", "timing"}));
}

TEST(Render, ErrorObject) {
    const auto j = error_object(error(error_kind::precondition, "bad n"));
    EXPECT_EQ(j["error"]["kind"], "precondition");
    EXPECT_EQ(j["error"]["message"], "bad n");
}
