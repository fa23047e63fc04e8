#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded and captures stdout.
Run cli(const std::string& args) {
    const std::string cmd = std::string(HNNSA_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("gen") {
    CHECK(cli("gen --n 8 --seed 1 --out cli_gen_a.json").code == 0);
    CHECK(cli("gen --n 8 --seed 1 --out cli_gen_b.json").code == 0);
    CHECK(slurp("cli_gen_a.json") == slurp("cli_gen_b.json"));
    const auto solved = cli("solve --instance cli_gen_a.json --method greedy");
    CHECK(solved.code == 0);
    CHECK(solved.out.find("n=8\n") != std::string::npos);
    CHECK(cli("gen --n 2 --out cli_gen_c.json").code == 2);
    CHECK(cli("gen --out cli_gen_c.json").code == 2);
}

TEST_CASE("solve") {
    const auto exact = cli("solve --instance matrix4 --method exact");
    CHECK(exact.code == 0);
    CHECK(exact.out.find("length=71\n") != std::string::npos);

    const auto a = cli("solve --instance paper8 --method hybrid --seed 4 --iters 3000");
    const auto b = cli("solve --instance paper8 --method hybrid --seed 4 --iters 3000");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed=4\n") != std::string::npos);

    const auto hnn = cli("solve --instance paper8 --method hnn --max-sweeps 0");
    CHECK(hnn.code == 1);
    CHECK(hnn.out.find("valid=false\n") != std::string::npos);

    CHECK(cli("solve --instance paper8 --method tabu").code == 2);
    CHECK(cli("solve --instance no-such-file.json --method greedy").code == 2);

    for (const char* method : {"greedy", "2opt", "3opt", "sa"}) {
        const auto r = cli(std::string("solve --instance cityset1 --method ") + method);
        CHECK(r.code == 0);
        CHECK(r.out.find("valid=true\n") != std::string::npos);
    }

    CHECK(cli("solve --instance paper8 --method sa --iters 100 --trace-out cli_trace.csv").code == 0);
    CHECK(count(slurp("cli_trace.csv"), "\n") == 101);
}

TEST_CASE("sweep") {
    const auto a = cli("sweep --instance cityset1 --trials 1 --seed 3");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("cell,C,D,best,mean,worst,success_rate,mean_sweeps,trials\n", 0) == 0);
    CHECK(count(a.out, "\n") == 7);
    CHECK(cli("sweep --instance cityset1 --trials 1 --seed 3 --workers 3").out == a.out);
    CHECK(cli("sweep --instance cityset1 --trials 5 --c-grid 90 --d-grid 100 --out cli_sweep.csv").code == 0);
    CHECK(count(slurp("cli_sweep.csv"), "\n") == 2);
    CHECK(cli("sweep --instance cityset1 --c-grid x").code == 2);
    CHECK(cli("sweep --instance cityset1 --success-metric best").code == 2);
}

TEST_CASE("plot") {
    {
        std::ofstream("cli_tour.txt") << "1 0 3 2\n";
    }
    CHECK(cli("plot --instance matrix4 --tour cli_tour.txt --out cli_tour.svg").code == 0);
    const auto svg = slurp("cli_tour.svg");
    CHECK(count(svg, "<circle") == 4);
    CHECK(count(svg, "<line") == 4);
    CHECK(cli("plot --instance matrix4 --tour cli_tour.txt --out cli_tour2.svg").code == 0);
    CHECK(slurp("cli_tour2.svg") == svg);

    CHECK(cli("solve --instance paper8 --method hnn --seed 2 --grid-out cli_grid.txt").code <= 1);
    CHECK(cli("plot --instance paper8 --grid cli_grid.txt --out cli_grid.svg").code == 0);
    const auto grid_svg = slurp("cli_grid.svg");
    CHECK(count(grid_svg, "class=\"filled\"") + count(grid_svg, "class=\"empty\"") == 64);
    CHECK(count(grid_svg, "class=\"filled\"") == count(slurp("cli_grid.txt"), "1"));

    // A solve record works as a tour file.
    CHECK(cli("solve --instance paper8 --method exact > cli_record.txt").code == 0);
    CHECK(cli("plot --instance paper8 --tour cli_record.txt --out cli_record.svg").code == 0);

    CHECK(cli("plot --instance paper8 --tour cli_tour.txt --out cli_bad.svg").code == 2);
    CHECK(cli("plot --instance matrix4 --grid cli_grid.txt --out cli_bad.svg").code == 2);
}
