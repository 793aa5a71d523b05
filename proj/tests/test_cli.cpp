#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string bin() {
    const char* p = std::getenv("SDR_BIN");
    REQUIRE_MESSAGE(p != nullptr, "SDR_BIN must point at the command-line binary");
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    const std::string err_path = "cli_stderr.txt";
    const std::string cmd = bin() + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(err_path);
    std::ostringstream ss;
    ss << ef.rdbuf();
    r.err = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

const char* reference_config =
    "[scenario]\n"
    "group = 0.5 0.01\n"
    "group = 0.3 0.02\n"
    "group = 0.2 0.03\n"
    "theta = 0.2\n"
    "sigma = 2\n"
    "t = 1\n";

}  // namespace

TEST_CASE("allocate prints the closed-form table with a rho_star column") {
    write_file("cli_ref.ini", reference_config);
    const RunResult r = run("allocate --config cli_ref.ini");
    CHECK(r.code == 0);
    CHECK(r.out.find("# command = allocate\n") != std::string::npos);
    CHECK(r.out.find("group,weight,rho,x,rho_star\n") != std::string::npos);
    CHECK(r.out.find("1,0.5,0.01,0.467167321211,0.0177167642654\n") !=
          std::string::npos);
    CHECK(r.out.find("# min_utility_at_favored = false\n") != std::string::npos);
}

TEST_CASE("single group allocation hands over the whole budget") {
    write_file("cli_one.ini",
               "[scenario]\ngroup = 1 0\ntheta = 0.2\nsigma = 2\nw = 5\n");
    const RunResult r = run("allocate --config cli_one.ini");
    CHECK(r.code == 0);
    CHECK(r.out.find("1,1,0,5,0\n") != std::string::npos);
    const std::size_t header = r.out.find("group,weight");
    REQUIRE(header != std::string::npos);
    const std::string body = r.out.substr(header);
    CHECK(std::count(body.begin(), body.end(), '\n') == 2);
}

TEST_CASE("every command is byte-identical across two runs") {
    write_file("cli_ref.ini", reference_config);
    write_file("cli_mc.ini",
               "[scenario]\nn = 5\nrates = gamma 4 2\ntheta = 0.2\nsigma = 2\nt = 1\n"
               "[experiment]\nreplications = 10\nseed = 42\n"
               "variable = theta\ngrid = 0:0.9:0.1\noutputs = consumption rho_lobby\n");
    write_file("cli_growth.ini",
               std::string(reference_config) +
                   "eta = 2\n[growth]\ngamma = 0.3\ndelta = 0.05\nS0 = 1\n"
                   "[experiment]\nresolution = 0.05\n");
    const std::string cmds[] = {
        "allocate --config cli_ref.ini",
        "sweep --config cli_mc.ini",
        "montecarlo --config cli_mc.ini",
        "figure F6 --seed 42",
        "oracle-check --config cli_growth.ini",
        "compare-rates --config cli_growth.ini",
    };
    for (const std::string& cmd : cmds) {
        CAPTURE(cmd);
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
        const RunResult j1 = run(cmd + " --format json");
        const RunResult j2 = run(cmd + " --format json");
        CHECK(j1.out == j2.out);
    }
}

TEST_CASE("out-of-range theta exits 2 and names the key") {
    write_file("cli_bad.ini", "[scenario]\ngroup = 1 0\ntheta = 1.5\nsigma = 2\n");
    const RunResult r = run("allocate --config cli_bad.ini");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("theta") != std::string::npos);
}

TEST_CASE("parse errors carry their line number") {
    write_file("cli_line.ini", "[scenario]\ngroup = 1 0\nthetaa = 0.2\n");
    const RunResult r = run("allocate --config cli_line.ini");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("thetaa") != std::string::npos);
}

TEST_CASE("oracle divergence and support limits map to exit codes") {
    write_file("cli_smooth.ini",
               "[scenario]\ngroup = 0.4 0.03\ngroup = 0.6 0.01\ntheta = 0\n"
               "sigma = 2\nt = 1\n[experiment]\nresolution = 0.02\n");
    CHECK(run("oracle-check --config cli_smooth.ini").code == 0);

    write_file("cli_kink.ini",
               "[scenario]\ngroup = 0.4 0.03\ngroup = 0.6 0.01\ntheta = 1\n"
               "sigma = 2\nt = 1\n[experiment]\nresolution = 0.02\n");
    const RunResult kink = run("oracle-check --config cli_kink.ini");
    CHECK(kink.code == 3);
    CHECK(kink.out.find("# flag_agrees = false\n") != std::string::npos);

    write_file("cli_five.ini",
               "[scenario]\ngroup = 1 0\ngroup = 1 0\ngroup = 1 0\ngroup = 1 0\n"
               "group = 1 0\ntheta = 0\nsigma = 2\n");
    CHECK(run("oracle-check --config cli_five.ini").code == 1);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    CHECK(run("bogus").code == 2);
    CHECK(run("figure F12").code == 2);
    CHECK(run("figure").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("sweep --config cli_ref.ini --format xml").code == 2);
    CHECK(run("allocate --config /does/not/exist.ini").code == 2);
    CHECK(run("allocate").code == 2);
}

TEST_CASE("seed flag overrides the config seed") {
    write_file("cli_seeded.ini",
               "[scenario]\nn = 4\nrates = gamma 4 2\ntheta = 0.2\nsigma = 2\n"
               "[experiment]\nreplications = 2\nseed = 42\n");
    const RunResult base = run("montecarlo --config cli_seeded.ini");
    const RunResult same = run("montecarlo --config cli_seeded.ini --seed 42");
    const RunResult other = run("montecarlo --config cli_seeded.ini --seed 43");
    CHECK(base.code == 0);
    CHECK(base.out == same.out);
    CHECK(base.out != other.out);
}

TEST_CASE("precision flag rounds the emitted table") {
    write_file("cli_ref.ini", reference_config);
    const RunResult r = run("allocate --config cli_ref.ini --precision 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("1,0.5,0.01,0.467,0.0177\n") != std::string::npos);
    const RunResult full = run("allocate --config cli_ref.ini --precision 17");
    CHECK(full.out.find("1,0.5,0.01,0.4671673212106") != std::string::npos);
}

TEST_CASE("out flag writes the file instead of stdout") {
    write_file("cli_ref.ini", reference_config);
    std::remove("cli_out.csv");
    const RunResult r = run("allocate --config cli_ref.ini --out cli_out.csv");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f("cli_out.csv");
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == run("allocate --config cli_ref.ini").out);
}

TEST_CASE("json format emits a parseable object") {
    write_file("cli_ref.ini", reference_config);
    const RunResult r = run("allocate --config cli_ref.ini --format json");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{", 0) == 0);
    CHECK(r.out.find("\"command\": \"allocate\"") != std::string::npos);
    CHECK(r.out.find("\"rows\"") != std::string::npos);
}

TEST_CASE("constant sweep over a single group stays flat") {
    write_file("cli_flat.ini",
               "[scenario]\ngroup = 1 0.02\ntheta = 0\nsigma = 2\nw = 2\n"
               "[experiment]\nvariable = theta\ngrid = 0:1:0.01\n"
               "outputs = consumption\n");
    const RunResult r = run("sweep --config cli_flat.ini");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        CHECK(line.substr(line.find(',')) == ",2");
        ++rows;
    }
    CHECK(rows == 101);
}
