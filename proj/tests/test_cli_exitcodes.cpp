// Exercises the installed CLI binary end to end: exit codes, output
// formats, determinism. Invoked by ctest with the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

int g_failures = 0;

#define EXPECT(cond, label)                                            \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::cerr << "[FAIL] " << label << " at line " << __LINE__ \
                      << "\n";                                         \
            ++g_failures;                                              \
        }                                                              \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& command) {
    const std::string full = command + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return {};
    RunResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli_exitcodes <path-to-gfc-binary>\n";
        return 2;
    }
    const std::string gfc = argv[1];
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "gfc_cli_test";
    std::filesystem::create_directories(dir);

    const auto good = dir / "good.json";
    write_file(good, R"({"curves": [{"k": 4, "n": 2}, {"k": 3, "n": 3, "lambdas": ["2"]}]})");
    const auto bad_lambda = dir / "bad_lambda.json";
    write_file(bad_lambda, R"({"curves": [{"k": 3, "n": 3, "lambdas": ["1"]}]})");
    const auto malformed = dir / "malformed.json";
    write_file(malformed, "{");

    // analyze: success, deterministic bytes, json and csv.
    const RunResult a1 = run_command(gfc + " analyze " + good.string());
    EXPECT(a1.exit_code == 0, "analyze exits 0 on a valid file");
    EXPECT(a1.output.find("\"genus\": \"3\"") != std::string::npos, "quartic genus in report");
    const RunResult a2 = run_command(gfc + " analyze " + good.string());
    EXPECT(a1.output == a2.output, "analyze output is byte-identical across runs");
    const RunResult csv = run_command(gfc + " analyze --format csv " + good.string());
    EXPECT(csv.exit_code == 0, "analyze csv exits 0");
    EXPECT(csv.output.rfind("k,n,lambdas", 0) == 0, "csv header row");

    // invalid curve file: exit 2, reason named.
    const RunResult bad = run_command(gfc + " analyze " + bad_lambda.string());
    EXPECT(bad.exit_code == 2, "analyze exits 2 on an invalid curve");
    EXPECT(bad.output.find("forbidden-lambda-value") != std::string::npos,
           "invalid-curve reason is named");

    // usage problems: exit 1.
    EXPECT(run_command(gfc + " analyze").exit_code == 1, "missing file is a usage error");
    EXPECT(run_command(gfc + " analyze " + malformed.string()).exit_code == 1,
           "malformed JSON is a usage error");
    EXPECT(run_command(gfc).exit_code == 1, "missing subcommand is a usage error");
    EXPECT(run_command(gfc + " spotcheck --k 4 --n 2 --samples 0").exit_code == 1,
           "samples = 0 is a usage error");

    // verify: all green on the good corpus; fault hook trips the
    // plucker-closure check with exit 4.
    const RunResult verify = run_command(gfc + " verify " + good.string());
    EXPECT(verify.exit_code == 0, "verify exits 0 on the corpus");
    EXPECT(verify.output.find("[ok]   plucker-closure") != std::string::npos,
           "plucker check reported");
    const RunResult corrupted =
        run_command(gfc + " verify --corrupt-plucker-totals " + good.string());
    EXPECT(corrupted.exit_code == 4, "corrupted totals exit 4");
    EXPECT(corrupted.output.find("[FAIL] plucker-closure") != std::string::npos,
           "plucker named as the failing check");

    // spotcheck: clean pass, reproducible count line.
    const RunResult spot =
        run_command(gfc + " spotcheck --k 3 --n 3 --lambdas 2 --samples 5 --seed 7");
    EXPECT(spot.exit_code == 0, "spotcheck exits 0");
    EXPECT(spot.output.find("5/5") != std::string::npos, "spotcheck counts checked points");

    const RunResult spot_invalid =
        run_command(gfc + " spotcheck --k 3 --n 3 --lambdas 0 --samples 5");
    EXPECT(spot_invalid.exit_code == 2, "spotcheck exits 2 on an invalid curve");

    std::filesystem::remove_all(dir);
    if (g_failures) {
        std::cerr << g_failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
