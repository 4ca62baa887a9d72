// Drives the installed command line binary end to end. Each case launches the
// real executable, captures stdout/stderr through temp files and checks both
// the text and the exit code.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path();
    fs::path out_path = dir / ("bf_cli_out_" + std::to_string(++counter) + ".txt");
    fs::path err_path = dir / ("bf_cli_err_" + std::to_string(counter) + ".txt");

    std::string cmd = std::string("\"") + CLI_PATH + "\" " + args + " > \"" +
                      out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    int raw = std::system(cmd.c_str());

    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return result;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string current;
    while (std::getline(in, current))
        if (current == line) return true;
    return false;
}

}  // namespace

TEST_CASE("version flag and missing subcommand") {
    RunResult version = run_cli("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out.find("1.0.0") != std::string::npos);

    RunResult bare = run_cli("");
    CHECK(bare.exit_code != 0);
}

TEST_CASE("transfer subcommand plain output") {
    RunResult r = run_cli(
        "transfer --curr-p 50000 --tbd-p 10000 --curr-q 20000 --tbd-q -30000 "
        "--cap-pq 20000 --cap-qp 20000 --band 0.3 0.5 0.7");
    REQUIRE(r.exit_code == 0);
    CHECK(has_line(r.out, "collectDeployDiff = 1.7"));
    CHECK(has_line(r.out, "cappedStretch = 0.2"));
    CHECK(has_line(r.out, "TBD+Current_P = 60000"));
    CHECK(has_line(r.out, "TBD+Current_Q = -10000"));
    CHECK(has_line(r.out, "maxRecieve_Q = 10000"));
    CHECK(has_line(r.out, "TransferAmount_PQ = 10000"));
    CHECK(has_line(r.out, "TransferAmount_QP = -10000"));
    CHECK(has_line(r.out, "TransferAmount_PQ_Delta = 10000"));
    CHECK(has_line(r.out, "TransferAmount_QP_Delta = -10000"));
    CHECK(has_line(r.out, "nettedTransfer_PQ = 20000"));
    CHECK(has_line(r.out, "multiRound = no"));
    CHECK(has_line(r.out, "bandsInfeasible = yes"));
}

TEST_CASE("transfer subcommand csv output") {
    RunResult r = run_cli(
        "transfer --curr-p 50000 --tbd-p 10000 --curr-q 20000 --tbd-q -30000 "
        "--cap-pq 20000 --cap-qp 20000 --band 0.3 0.5 0.7 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(has_line(r.out,
                   "TransferAmount_PQ_Delta,TransferAmount_QP_Delta,TransferAmount_PQ,"
                   "TransferAmount_QP,BridgeStretch,collectDeployDiff,outsideBand_P,"
                   "outsideBand_Q,maxSend_P,maxSend_Q,maxRecieve_P,maxRecieve_Q"));
    // Two lines only: header plus one data row starting with the four transfers.
    CHECK(r.out.find("\n10000,-10000,10000,-10000,") != std::string::npos);
}

TEST_CASE("transfer subcommand bands file and rounding") {
    fs::path bands = fs::temp_directory_path() / "bf_cli_bands.json";
    spit(bands,
         "[{\"id\": \"a\", \"min\": 0.2, \"ideal\": 0.3, \"max\": 0.4},\n"
         " {\"id\": \"b\", \"min\": 0.3, \"ideal\": 0.4, \"max\": 0.5}]\n");

    RunResult r = run_cli(
        "transfer --curr-p 600 --tbd-p 0 --curr-q 300 --tbd-q -250 "
        "--cap-pq 100 --cap-qp 100 --trim-min 0.3 --trim-max 0.7 "
        "--bands-file \"" + bands.string() + "\" --round");
    REQUIRE(r.exit_code == 0);
    CHECK(has_line(r.out, "TransferAmount_PQ = 100"));
    CHECK(has_line(r.out, "TransferAmount_QP = -28"));
    CHECK(has_line(r.out, "TransferAmount_PQ_Delta = 100"));
    CHECK(has_line(r.out, "TransferAmount_QP_Delta = -28"));
    CHECK(has_line(r.out, "nettedTransfer_PQ = 100"));
    fs::remove(bands);

    // A bands file whose root is not an array is rejected.
    fs::path broken = fs::temp_directory_path() / "bf_cli_bands_broken.json";
    spit(broken, "{}\n");
    RunResult bad = run_cli(
        "transfer --curr-p 600 --tbd-p 0 --curr-q 300 --tbd-q -250 "
        "--cap-pq 100 --cap-qp 100 --bands-file \"" + broken.string() + "\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("ParseError") != std::string::npos);
    fs::remove(broken);
}

TEST_CASE("transfer subcommand error paths") {
    RunResult overdraw = run_cli(
        "transfer --curr-p 500 --tbd-p -400 --curr-q 500 --tbd-q -700 "
        "--cap-pq 100 --cap-qp 100 --band 0.3 0.5 0.7");
    CHECK(overdraw.exit_code == 1);
    CHECK(overdraw.err.find("WithdrawalExceedsInvestment") != std::string::npos);

    RunResult missing_band = run_cli(
        "transfer --curr-p 500 --tbd-p 0 --curr-q 500 --tbd-q 0 "
        "--cap-pq 100 --cap-qp 100");
    CHECK(missing_band.exit_code == 1);
    CHECK(missing_band.err.find("InvalidArgument") != std::string::npos);
}

TEST_CASE("simulate subcommand writes deterministic tables") {
    fs::path base = fs::temp_directory_path() / "bf_cli_sim";
    fs::path dir_a = base / "a";
    fs::path dir_b = base / "b";
    fs::path dir_round = base / "round";
    fs::remove_all(base);

    std::string common = "simulate --seed 1 --scenarios 2 --out \"";
    RunResult a = run_cli(common + dir_a.string() + "\"");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out.find("configuration:") != std::string::npos);
    CHECK(has_line(a.out, "  rng_seed = 1"));
    CHECK(has_line(a.out, "  n_scenarios = 2"));
    CHECK(has_line(a.out, "  max_bridge_stretch = 0.2"));
    CHECK(a.out.find("rows: 17 (15 designed + 2 sampled), flagged: 0") !=
          std::string::npos);
    CHECK(fs::exists(dir_a / "inputs.csv"));
    CHECK(fs::exists(dir_a / "transfers.csv"));
    CHECK(fs::exists(dir_a / "intermediates.csv"));

    RunResult b = run_cli(common + dir_b.string() + "\"");
    REQUIRE(b.exit_code == 0);
    CHECK(slurp(dir_a / "transfers.csv") == slurp(dir_b / "transfers.csv"));
    CHECK(slurp(dir_a / "inputs.csv") == slurp(dir_b / "inputs.csv"));
    CHECK(slurp(dir_a / "intermediates.csv") == slurp(dir_b / "intermediates.csv"));

    RunResult rounded = run_cli(common + dir_round.string() + "\" --round");
    REQUIRE(rounded.exit_code == 0);
    std::string plain_csv = slurp(dir_a / "transfers.csv");
    std::string rounded_csv = slurp(dir_round / "transfers.csv");
    CHECK(plain_csv != rounded_csv);
    CHECK(plain_csv.find('.') != std::string::npos);
    // Whole-dollar mode leaves no fractional cells anywhere in the table.
    CHECK(rounded_csv.find('.') == std::string::npos);

    fs::remove_all(base);
}

TEST_CASE("simulate subcommand config errors") {
    fs::path bad_key = fs::temp_directory_path() / "bf_cli_bad_key.json";
    spit(bad_key, "{\"rng_sead\": 1}\n");
    RunResult unknown = run_cli("simulate --config \"" + bad_key.string() + "\"");
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("ParseError") != std::string::npos);
    CHECK(unknown.err.find("rng_sead") != std::string::npos);
    fs::remove(bad_key);

    RunResult missing = run_cli("simulate --config /nonexistent/params.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("IoError") != std::string::npos);
}

TEST_CASE("route subcommand plain and csv output") {
    std::string file = std::string(TEST_CONFIG_DIR) + "/route3.json";

    RunResult plain = run_cli("route --file \"" + file + "\" --round");
    REQUIRE(plain.exit_code == 0);
    CHECK(has_line(plain.out, "transfers: 2"));
    CHECK(has_line(plain.out, "  P -> Q  60"));
    CHECK(has_line(plain.out, "  P -> R  40"));
    CHECK(has_line(plain.out, "residuals:"));
    CHECK(has_line(plain.out, "  P  0"));
    CHECK(has_line(plain.out, "  Q  0"));
    CHECK(has_line(plain.out, "  R  -20"));

    RunResult csv = run_cli("route --file \"" + file + "\" --format csv --round");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out == "from,to,amount\nP,Q,60\nP,R,40\n");
}

TEST_CASE("route subcommand error paths") {
    RunResult missing = run_cli("route --file /nonexistent/route.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("IoError") != std::string::npos);

    fs::path invalid = fs::temp_directory_path() / "bf_cli_route_invalid.json";
    spit(invalid, "{\n");
    RunResult parse = run_cli("route --file \"" + invalid.string() + "\"");
    CHECK(parse.exit_code == 1);
    CHECK(parse.err.find("ParseError") != std::string::npos);
    fs::remove(invalid);
}
