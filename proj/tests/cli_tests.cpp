// End-to-end tests of the pslab binary: byte-exact output for the text
// formats, exit codes, and worker-count determinism.  Takes the binary path
// as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& cwd = "") {
    std::string cmd;
    if (!cwd.empty()) cmd += "cd '" + cwd + "' && ";
    cmd += "'" + g_binary + "' " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        ++g_failures;
        return r;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect_output(const std::string& args, const std::string& expected) {
    RunResult r = run(args);
    if (r.exit_code != 0) {
        std::cerr << "FAIL: `" << args << "` exited " << r.exit_code << "\n";
        ++g_failures;
    } else if (r.out != expected) {
        std::cerr << "FAIL: `" << args << "`\n--- expected ---\n"
                  << expected << "--- got ---\n"
                  << r.out << "---\n";
        ++g_failures;
    }
}

void expect_exit(const std::string& args, int code) {
    RunResult r = run(args);
    if (r.exit_code != code) {
        std::cerr << "FAIL: `" << args << "` exited " << r.exit_code << ", expected " << code << "\n";
        ++g_failures;
    }
}

void expect_contains(const std::string& args, const std::string& needle) {
    RunResult r = run(args);
    if (r.out.find(needle) == std::string::npos) {
        std::cerr << "FAIL: `" << args << "` output missing \"" << needle << "\":\n" << r.out << "\n";
        ++g_failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-pslab>\n";
        return 1;
    }
    g_binary = std::filesystem::absolute(argv[1]).string();

    expect_output("enumerate --n 3", "111\n112\n121\n122\n123\ncount: 5\n");
    expect_output("enumerate --n 3 --avoid 1/23", "111\n112\n121\n123\ncount: 4\n");
    expect_output("enumerate --n 5 --avoid 1/2/3,123", "count: 0\n");
    expect_output("enumerate --n 0", "\ncount: 1\n");
    expect_output("enumerate --n 3 --avoid 1/23 --blocks", "123\n12/3\n13/2\n1/2/3\ncount: 4\n");
    expect_output("enumerate --n 3 --format csv", "rgf\n111\n112\n121\n122\n123\n");

    expect_output("distribution --n 3 --avoid 1/2/3", "1 + r*s^2 + r^2*s + q*r*s*t\n");
    expect_output("distribution --n 3 --avoid 123 --stat ls", "2*q + q^2 + q^3\n");
    expect_output("distribution --n 0", "1\n");
    expect_output("distribution --n 3 --avoid 1/2/3 --format json",
                  "{\"vars\":[\"q\",\"r\",\"s\",\"t\"],\"terms\":[{\"e\":[0,0,0,0],\"c\":\"1\"},"
                  "{\"e\":[0,1,2,0],\"c\":\"1\"},{\"e\":[0,2,1,0],\"c\":\"1\"},"
                  "{\"e\":[1,1,1,1],\"c\":\"1\"}]}\n");
    expect_output("distribution --n 3 --avoid 1/2/3 --format csv",
                  "e_q,e_r,e_s,e_t,coeff\n0,0,0,0,1\n0,1,2,0,1\n0,2,1,0,1\n1,1,1,1,1\n");
    expect_output("distribution --n 4 --avoid 1/2/3 --no-prune --stat lb", "4 + 3*q + q^2\n");
    expect_output("distribution --n 3 --avoid 123 --stat ls --format csv", "e,coeff\n1,2\n2,1\n3,1\n");
    expect_contains("enumerate --n 4", "count: 15");

    expect_output("formula --id f.13_2 --n 4",
                  "1 + r*s^3 + r^2*s^2 + r^3*s + r^3*s^5 + r^4*s^4 + r^5*s^3 + r^6*s^6\n");
    expect_output("formula --id lb.123.facts --n 6", "degree=5 leading=2 constant=13 linear=20\n");
    expect_output("formula --id card.123 --n 4", "10\n");
    expect_contains("formula --id f.pair.1_2_3+12_3 --n 5", "# corrected:");
    expect_contains("formula --list", "f.pair.1_23+12_3");

    expect_output("bijection --id bij.phi_123 --word 1212", "1121\n");
    expect_output("bijection --list",
                  "bij.phi_123\nbij.psi_123\nbij.phi_layered\nbij.phi_dale\nbij.phi_1_23_to_12_3\n");
    expect_exit("bijection --word 1212", 2);  // missing --id
    expect_output("bijection --id bij.phi_layered --word 1122", "(2)\n");
    expect_output("bijection --id bij.phi_dale --word 1211", "1221\n");
    expect_contains("bijection --id bij.phi_123 --n 6", "domain: 32");
    expect_contains("bijection --id bij.phi_123 --n 6", "status: ok");
    expect_exit("bijection --id bij.phi_123 --n 6", 0);

    expect_exit("verify --max-n 5 --filter cardinalities", 0);
    expect_contains("verify --max-n 5 --filter cardinalities", "[PASS] cardinalities");
    expect_contains("verify --max-n 4 --filter closed.pairs", "discrepancy:");
    expect_contains("verify --max-n 4 --filter closed.pairs", "[CORRECTED] closed.pairs");

    // Identical output whatever the worker count.
    {
        RunResult one = run("--jobs 1 enumerate --n 8 --avoid 123");
        RunResult two = run("--jobs 2 enumerate --n 8 --avoid 123");
        RunResult four = run("--jobs 4 enumerate --n 8");
        RunResult serial = run("--jobs 1 enumerate --n 8");
        if (one.out != two.out || one.out.empty()) {
            std::cerr << "FAIL: enumerate output differs across --jobs\n";
            ++g_failures;
        }
        if (four.out != serial.out || serial.out.empty()) {
            std::cerr << "FAIL: full enumerate output differs across --jobs\n";
            ++g_failures;
        }
        RunResult d1 = run("--jobs 1 distribution --n 9 --avoid 14/2/3");
        RunResult d4 = run("--jobs 4 distribution --n 9 --avoid 14/2/3");
        if (d1.out != d4.out || d1.out.empty()) {
            std::cerr << "FAIL: distribution output differs across --jobs\n";
            ++g_failures;
        }
    }

    // Usage errors exit 2.
    expect_exit("enumerate", 2);
    expect_exit("enumerate --n 3 --avoid not-a-pattern", 2);
    expect_exit("enumerate --n 20", 2);  // above the default limit
    expect_exit("formula --id f.nope --n 3", 2);
    expect_exit("formula --id lb.14_2_3+singletons --n 5", 2);  // missing --t
    expect_exit("formula --id f.13_2", 2);                      // missing --n
    expect_exit("bijection --id bij.phi_123", 2);               // neither --word nor --n
    expect_exit("nonsense", 2);

    // Config file supplies default limits; flags override.
    {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "pslab_cli_test";
        fs::create_directories(dir);
        std::ofstream(dir / "pslab.toml") << "limit=6\n";
        RunResult blocked = run("enumerate --n 7", dir.string());
        if (blocked.exit_code != 2) {
            std::cerr << "FAIL: config limit not applied (exit " << blocked.exit_code << ")\n";
            ++g_failures;
        }
        RunResult overridden = run("--limit 8 enumerate --n 7", dir.string());
        if (overridden.exit_code != 0) {
            std::cerr << "FAIL: flag should override config limit\n";
            ++g_failures;
        }
        fs::remove_all(dir);
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << g_failures << " failure(s)\n";
    return 1;
}
