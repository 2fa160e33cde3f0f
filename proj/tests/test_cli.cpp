#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "relaysec/cli.hpp"
#include "relaysec/config.hpp"
#include "relaysec/errors.hpp"
#include "relaysec/example_channels.hpp"

using namespace relaysec;

namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::vector<const char*> argv{"relaysec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

const char* kDeafRelayConfig = R"(# deaf relay instance
[channel]
h_sr = 0
h_sd = 1
h_rd = 1
h_se2 = 0.5
h_re = 1

[powers]
p_r = 1
p_d = 1
p_2 = 1

[eavesdropper]
channel1 = false
channel2 = true

[optimizer]
grid = 5
restarts = 5
seed = 3
)";

}  // namespace

TEST_CASE("config parsing diagnostics") {
  CHECK_THROWS_AS(parse_config_text("[channel]\nbogus_key = 1\n", "t"),
                  parse_error);
  CHECK_THROWS_AS(parse_config_text("[nonsense]\n", "t"), parse_error);
  CHECK_THROWS_AS(parse_config_text("h_sd = 1\n", "t"), parse_error);
  CHECK_THROWS_AS(
      parse_config_text("[channel]\nh_sd = 1\nh_sd = 2\n", "t"), parse_error);
  try {
    parse_config_text("[channel]\nh_sd = not-a-number\n", "cfg.txt");
    channel_from_config(
        parse_config_text("[channel]\nh_sd = not-a-number\n", "cfg.txt"));
    CHECK(false);
  } catch (const parse_error& e) {
    const std::string what = e.what();
    CHECK(what.find("cfg.txt:2") != std::string::npos);
    CHECK(what.find("h_sd") != std::string::npos);
  }

  const ConfigDoc doc = parse_config_text(kDeafRelayConfig, "deaf");
  const GaussianOrthogonalChannel ch = channel_from_config(doc);
  CHECK(ch.h_se2 == 0.5);
  CHECK(ch.eave_channel2);
  CHECK_FALSE(ch.eave_channel1);
  CHECK(ch.eavesdropper_case() == EavesdropperCase::case2);
  const SearchConfig cfg = search_config_from_config(doc, SearchConfig{});
  CHECK(cfg.grid_points == 5);
  CHECK(cfg.seed == 3);
}

TEST_CASE("channel from geometry config") {
  const char* text = R"(
[geometry]
source = 0 0
destination = 1 0
eavesdropper = 1.5 0
relay = 0.5 0
alpha = 2

[powers]
p_d = 1
)";
  const GaussianOrthogonalChannel ch =
      channel_from_config(parse_config_text(text, "geom"));
  CHECK(ch.h_sr == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ch.h_se2 == doctest::Approx(1.0 / 1.5).epsilon(1e-12));
}

TEST_CASE("evaluate command on the deaf-relay instance") {
  const auto config = write_temp("relaysec_eval.cfg", kDeafRelayConfig);
  std::string out;
  const int code = cli({"evaluate", "--config", config.string()}, &out);
  CHECK(code == exit_ok);
  // Case pinned by the eavesdropper section.
  CHECK(out.find("[case2]") != std::string::npos);
  CHECK(out.find("[case1]") == std::string::npos);
  // nf_inner >= the closed-form full-power value 0.207519.
  const auto pos = out.find("nf_inner = ");
  REQUIRE(pos != std::string::npos);
  const double nf = std::stod(out.substr(pos + 11));
  CHECK(nf >= 0.207519 - 1e-6);
  const auto gpos = out.find("genie_outer = ");
  REQUIRE(gpos != std::string::npos);
  const double outer = std::stod(out.substr(gpos + 14));
  CHECK(outer >= nf - 1e-9);
  fs::remove(config);
}

TEST_CASE("evaluate report round-trips through the parser") {
  const auto config = write_temp("relaysec_rt.cfg", kDeafRelayConfig);
  const auto report_path =
      fs::temp_directory_path() / "relaysec_rt_report.cfg";
  std::string first;
  CHECK(cli({"evaluate", "--config", config.string(), "--out",
             report_path.string()},
            &first) == exit_ok);
  std::string second;
  CHECK(cli({"evaluate", "--config", report_path.string()}, &second) ==
        exit_ok);
  CHECK(first == second);
  fs::remove(config);
  fs::remove(report_path);
}

TEST_CASE("evaluate with no active eavesdropper omits secrecy bounds") {
  const char* text = R"(
[channel]
h_sd = 1

[eavesdropper]
channel1 = false
channel2 = false

[optimizer]
grid = 3
restarts = 2
)";
  const auto config = write_temp("relaysec_noeave.cfg", text);
  std::string out;
  CHECK(cli({"evaluate", "--config", config.string()}, &out) == exit_ok);
  CHECK(out.find("no active eavesdropper") != std::string::npos);
  CHECK(out.find("pdf_inner") == std::string::npos);
  fs::remove(config);
}

TEST_CASE("cli exit codes") {
  std::string out, err;
  // Missing config file.
  CHECK(cli({"evaluate", "--config", "/nonexistent/cfg"}, &out, &err) ==
        exit_io_error);
  // Unparseable config.
  const auto bad = write_temp("relaysec_bad.cfg", "[channel]\nwat = 1\n");
  CHECK(cli({"evaluate", "--config", bad.string()}, &out, &err) ==
        exit_parse_error);
  fs::remove(bad);
  // Unknown flag.
  CHECK(cli({"evaluate", "--bogus"}, &out, &err) == exit_parse_error);
  // Precondition violation: negative power.
  const auto neg = write_temp("relaysec_neg.cfg",
                              "[channel]\nh_sd = 1\n[powers]\np_d = -1\n");
  CHECK(cli({"evaluate", "--config", neg.string()}, &out, &err) ==
        exit_argument_error);
  fs::remove(neg);
  // Unwritable output path.
  const auto ok = write_temp("relaysec_ok.cfg", kDeafRelayConfig);
  CHECK(cli({"evaluate", "--config", ok.string(), "--out",
             "/nonexistent-dir/report.txt"},
            &out, &err) == exit_io_error);
  fs::remove(ok);
}

TEST_CASE("verify-examples") {
  std::string out;
  CHECK(cli({"verify-examples"}, &out) == exit_ok);
  CHECK(out.find("3/3 examples verified") != std::string::npos);
  CHECK(out.find("example 1") != std::string::npos);
  CHECK(out.find("example 3") != std::string::npos);
  // Repeated invocation is identical.
  std::string again;
  CHECK(cli({"verify-examples"}, &again) == exit_ok);
  CHECK(out == again);
}

TEST_CASE("tampered example channel is reported by name") {
  ExampleChannel ex = example_channel(2);
  // Flip one deterministic kernel entry: route input cell 0 elsewhere.
  std::vector<double> table = ex.channel.dest_kernel.table();
  const std::size_t cells = 16;
  std::swap(table[0 * cells + 0], table[0 * cells + 5]);
  ConditionalPmf tampered(ex.channel.dest_kernel.inputs(),
                          ex.channel.dest_kernel.outputs(), table);
  OrthogonalDmc bad(ex.channel.x_r, ex.channel.x_d, ex.channel.x_2,
                    ex.channel.y_1, ex.channel.y, ex.channel.y_21,
                    ex.channel.y_22, ex.channel.relay_kernel, tampered,
                    ex.channel.eavesdropper_case);
  const ExampleCheck check =
      check_example(ExampleChannel{ex.name, bad, ex.scheme, 2.0});
  CHECK_FALSE(check.pass);
  CHECK(check.message.find("example 2") != std::string::npos);
  CHECK(check.message.find("FAILED") != std::string::npos);
}

TEST_CASE("mimome command") {
  const char* text = R"(
[mimome]
h = 1
h_e = 0.5
s = 1
)";
  const auto config = write_temp("relaysec_mimome.cfg", text);
  std::string out;
  CHECK(cli({"mimome", "--config", config.string()}, &out) == exit_ok);
  CHECK(out.find("secrecy_rate = 0.339036") != std::string::npos);
  fs::remove(config);

  const auto bad = write_temp("relaysec_mimome_bad.cfg",
                              "[mimome]\nh = 1\nh_e = 0.5\ns = -1\n");
  std::string err;
  CHECK(cli({"mimome", "--config", bad.string()}, &out, &err) ==
        exit_argument_error);
  fs::remove(bad);
}

TEST_CASE("sweep command writes the CSV") {
  const char* text = R"(
[geometry]
source = 0 0
destination = 1 0
eavesdropper = 1.5 0
relay_from = 0.2 0
relay_to = 0.8 0
samples = 3

[optimizer]
grid = 3
restarts = 2
)";
  const auto config = write_temp("relaysec_sweep.cfg", text);
  const auto csv = fs::temp_directory_path() / "relaysec_sweep_cli.csv";
  std::string out;
  CHECK(cli({"sweep", "--config", config.string(), "--out", csv.string(),
             "--case", "case2"},
            &out) == exit_ok);
  std::ifstream in(csv, std::ios::binary);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "relay_x,relay_y,case,pdf_inner,nf_inner,genie_outer,"
        "wiretap_baseline");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  fs::remove(config);
  fs::remove(csv);
}

TEST_CASE("installed binary behaves like the library entry point") {
  const char* bin = std::getenv("RELAYSEC_CLI");
  if (bin == nullptr) return;  // only wired up under ctest
  const std::string cmd = std::string(bin) + " verify-examples > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string(bin) + " evaluate --config /nope 2>/dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == exit_io_error);
}
