#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#ifndef CTM_BINARY
#error "CTM_BINARY must point at the ctm executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Result {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless requested.
Result run(const std::string& args, bool capture_stderr = false) {
    const std::string cmd = std::string(CTM_BINARY) + " " + args + (capture_stderr ? " 2>&1" : " 2>/dev/null");
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ctm_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("tm-run, sharding and merge") {
    TempDir dir;
    REQUIRE(run("tm-run --states 2 -q --out " + dir / "d2.tsv").status == 0);
    const std::string whole = slurp(dir / "d2.tsv");
    CHECK(whole.find("# enumerated=10000\n") != std::string::npos);
    CHECK(whole.find("# bound=6\n") != std::string::npos);

    std::string inputs;
    for (int i = 0; i < 4; ++i) {
        const std::string f = dir / ("s" + std::to_string(i) + ".tsv");
        REQUIRE(run("tm-run --states 2 -q --shard " + std::to_string(i) + "/4 --out " + f).status == 0);
        inputs += " " + f;
    }
    REQUIRE(run("merge" + inputs + " --out " + dir / "merged.tsv").status == 0);
    CHECK(slurp(dir / "merged.tsv") == whole);

    REQUIRE(run("tm-run --states 2 -q --use-symmetry --out " + dir / "sym.tsv").status == 0);
    CHECK(slurp(dir / "sym.tsv") == whole);

    // Overlapping shards and mismatched metadata are rejected.
    CHECK(run("merge " + dir / "d2.tsv" + " " + dir / "s0.tsv").status != 0);
    REQUIRE(run("tm-run --states 1 -q --out " + dir / "d1.tsv").status == 0);
    CHECK(run("merge " + dir / "d1.tsv" + " " + dir / "s0.tsv").status != 0);
}

TEST_CASE("tm-run error paths and sampled mode") {
    TempDir dir;
    const Result r = run("tm-run --states 5 -q", true);
    CHECK(r.status != 0);
    CHECK(r.out.find("S(5)") != std::string::npos);
    CHECK(run("tm-run --states 2 --shard 4/4 -q").status != 0);
    CHECK(run("tm-run --states 0 -q").status != 0);

    const std::string a = dir / "a.tsv";
    const std::string b = dir / "b.tsv";
    REQUIRE(run("tm-run --states 5 --sample 3000 --cutoff 500 --seed 7 -q --out " + a).status == 0);
    REQUIRE(run("tm-run --states 5 --sample 3000 --cutoff 500 --seed 7 --threads 3 -q --out " + b).status == 0);
    const std::string text = slurp(a);
    CHECK(text.find("# undecided=") != std::string::npos);
    CHECK(text.find("# bound=500\n") != std::string::npos);
    CHECK(text == slurp(b));
}

TEST_CASE("estimate, rank, entropy, compare, tag-run") {
    TempDir dir;
    const std::string d3 = dir / "d3.tsv";
    REQUIRE(run("tm-run --states 3 -q --use-symmetry --out " + d3).status == 0);

    const Result est = run("estimate " + d3 + " 000000 111111");
    REQUIRE(est.status == 0);
    std::istringstream lines(est.out);
    std::string header, l1, l2;
    std::getline(lines, header);
    std::getline(lines, l1);
    std::getline(lines, l2);
    CHECK(header == "string\tcount\tsl\tk\tprogram_length");
    CHECK(l1.substr(6) == l2.substr(6));

    const Result missing = run("estimate " + d3 + " 0101010101010101");
    CHECK(missing.status == 0);
    CHECK(missing.out.find("\tNA\tNA\n") != std::string::npos);

    const Result json = run("estimate " + d3 + " 000000 --format json");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"program_length\"") != std::string::npos);

    const Result ranked = run("rank " + d3 + " --length 6");
    REQUIRE(ranked.status == 0);
    CHECK(ranked.out.find("1.5\t000000\t16\t1\n1.5\t111111\t16\t1\n") != std::string::npos);

    const Result ent = run("entropy 01010101010101010101 0000");
    CHECK(ent.out == "string\tentropy\n01010101010101010101\t1\n0000\t0\n");

    const std::string ca = dir / "ca.tsv";
    REQUIRE(run("ca-run --k 6 --steps 100 --rules 0-512 --out " + ca).status == 0);
    CHECK(slurp(ca).rfind("# formalism=ca\n# rulespace=r32c2\n", 0) == 0);
    const Result cmp = run("compare " + d3 + " " + ca + " --k 6");
    REQUIRE(cmp.status == 0);
    CHECK(cmp.out.find("# rho=") != std::string::npos);
    CHECK(cmp.out.find("tuple\tcount_a\tcount_b\tfreq_a\tfreq_b\n000000\t") != std::string::npos);

    const std::string tag = dir / "tag.tsv";
    REQUIRE(run("tag-run --L 3 --cutoff 100 --initial 10 --out " + tag).status == 0);
    CHECK(slurp(tag).find("# formalism=tag\n") == 0);
    CHECK(slurp(tag).find("# enumerated=225\n") != std::string::npos);

    const Result evo = run("ca-evolve --rule 52428 --steps 2");
    CHECK(evo.out == "1\n0100\n0010000\n");
}

TEST_CASE("malformed input produces a single-line diagnostic") {
    TempDir dir;
    const std::string bad = dir / "bad.tsv";
    std::ofstream(bad) << "# formalism=tm\nnot a record\n";
    const Result r = run("rank " + bad, true);
    CHECK(r.status != 0);
    CHECK(r.out.find("ctm: error:") == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}
