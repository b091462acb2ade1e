// End-to-end checks of the command line front end: exit codes, exact output
// bytes, determinism, and round-trips against direct library calls.
// Run as: test_cli <path-to-mop-binary>

#include "mop/hahn.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/mop_cli_test_out.txt";
    const std::string cmd = g_binary + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++g_failures;
    }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
    if (got != want) {
        std::cerr << "[FAIL] " << what << "\n  got:  '" << got << "'\n  want: '" << want << "'\n";
        ++g_failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <mop-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    // eval: type I Hahn component value, exact rational output
    {
        auto r = run("eval --family hahn --kind type1 --a 1 --n1 1 --n2 0 "
                     "--params alpha1=0,alpha2=1/3,beta=0,N=3 --x 0");
        expect(r.exit_code == 0, "eval hahn type1 exit code");
        expect_eq(r.out, "1/4\n", "eval hahn type1 value");
    }

    // eval: Charlier type II at 0 is -b1
    {
        auto r = run("eval --family charlier --kind type2 --n1 1 --n2 0 --params b1=2,b2=3 --x 0");
        expect(r.exit_code == 0, "eval charlier exit code");
        expect_eq(r.out, "-2\n", "eval charlier value");
    }

    // repeatable --x
    {
        auto r = run("eval --family charlier --kind type2 --n1 1 --n2 0 --params b1=2,b2=3 --x 0 --x 5 --x 1/2");
        expect_eq(r.out, "-2\n3\n-3/2\n", "eval multiple points");
    }

    // usage errors exit 2
    expect(run("eval --family hahn --kind type1 --a 1 --n2 0 --params alpha1=0,alpha2=1/3,beta=0,N=3 --x 0").exit_code == 2,
           "eval missing --n1 exits 2");
    expect(run("verify nonsense").exit_code == 2, "unknown suite exits 2");
    expect(run("eval --family nosuch --kind type2 --n1 1 --n2 0 --params a=1 --x 0").exit_code == 2,
           "unknown family exits 2");
    expect(run("eval --family jacobi-pineiro --kind type1 --a 1 --n1 1 --n2 1 "
               "--params alpha1=1/2,alpha2=1/3,beta=1/4 --x 1/2").exit_code == 2,
           "exact mode for transcendental type I exits 2");

    // invalid index / pole exits 3
    expect(run("eval --family hahn --kind type2 --n1 5 --n2 5 --params alpha1=0,alpha2=1/3,beta=0,N=3 --x 0")
                   .exit_code == 3,
           "invalid index exits 3");
    expect(run("eval --family hahn --kind type2 --n1 1 --n2 1 --params alpha1=1/3,alpha2=-1/2,beta=-1/2,N=9 --x 20")
                   .exit_code == 0,
           "in-range evaluation still fine");

    // I/O failure exits 4
    expect(run("coeffs --family hahn --kind type2 --n1 1 --n2 0 --params alpha1=0,alpha2=1/2,beta=0,N=4 "
               "--out /nonexistent-dir/x.csv").exit_code == 4,
           "unwritable output exits 4");

    // coeffs CSV: header plus Pochhammer-basis rows
    {
        auto r = run("coeffs --family hahn --kind type2 --n1 1 --n2 0 --params alpha1=0,alpha2=1/2,beta=0,N=4 "
                     "--format csv");
        expect(r.exit_code == 0, "coeffs exit code");
        expect_eq(r.out, "index,coefficient\n0,-2\n1,-1\n", "coeffs csv rows");
    }

    // weights CSV for Kravchuk N=2
    {
        auto r = run("weights --family kravchuk --params p1=1/2,p2=1/4,N=2 --a 1 --format csv");
        expect(r.exit_code == 0, "weights exit code");
        expect_eq(r.out, "k,weight\n0,1/4\n1,1/2\n2,1/4\n", "weights csv rows");
    }

    // verify: small suite passes, writes schema-complete JSON, exit 0
    {
        auto r = run("verify orthogonality --family hahn --max-order 3 "
                     "--params alpha1=1/2,alpha2=1/3,beta=1/4,N=12 --out /tmp/mop_cli_report.json");
        expect(r.exit_code == 0, "verify pass exits 0");
        const auto json = slurp("/tmp/mop_cli_report.json");
        expect(json.find("\"suite\": \"orthogonality\"") != std::string::npos, "report names the suite");
        expect(json.find("\"precision_bits\"") != std::string::npos, "report records precision");
        expect(json.find("\"seed\"") != std::string::npos, "report records the seed");
    }

    // identities with explicit seed and small draw count
    {
        auto r = run("verify identities --seed 7 --draws 3");
        expect(r.exit_code == 0, "verify identities exits 0");
    }

    // byte determinism of table outputs
    {
        run("coeffs --family hahn --kind type1 --a 1 --n1 2 --n2 1 --params alpha1=1/2,alpha2=1/3,beta=1/4,N=12 "
            "--out /tmp/mop_cli_a.csv");
        run("coeffs --family hahn --kind type1 --a 1 --n1 2 --n2 1 --params alpha1=1/2,alpha2=1/3,beta=1/4,N=12 "
            "--out /tmp/mop_cli_b.csv");
        expect_eq(slurp("/tmp/mop_cli_a.csv"), slurp("/tmp/mop_cli_b.csv"), "identical invocations, identical bytes");
        expect(!slurp("/tmp/mop_cli_a.csv").empty(), "coeffs file nonempty");
    }

    // limits: three-row decreasing residual table
    {
        auto r = run("limits --route hahn-kravchuk --kind type1 --n1 2 --n2 1 --sequence 50,200,800 "
                     "--params p1=1/2,p2=1/4,N=8 --format csv");
        expect(r.exit_code == 0, "limits exit code");
        std::istringstream ss(r.out);
        std::string header, row1, row2, row3;
        std::getline(ss, header);
        std::getline(ss, row1);
        std::getline(ss, row2);
        std::getline(ss, row3);
        expect_eq(header, "limit_param,residual,precision_bits", "limits csv header");
        auto residual_of = [](const std::string& row) {
            const auto a = row.find(','), b = row.rfind(',');
            return std::stod(row.substr(a + 1, b - a - 1));
        };
        expect(residual_of(row1) > residual_of(row2) && residual_of(row2) > residual_of(row3),
               "limits residuals decrease");
    }

    // table over a range; float mode carries the precision column
    {
        auto r = run("table --family laguerre1 --kind type1 --a 1 --n1 1 --n2 1 --params alpha1=1/2,alpha2=1/3 "
                     "--from 0 --to 2 --mode float --precision-bits 128 --format csv");
        expect(r.exit_code == 0, "table exit code");
        expect(r.out.find("x,value,precision_bits") == 0, "table float header");
        expect(r.out.find(",128\n") != std::string::npos, "table precision annotation");
    }

    // JSON config supplies flags; explicit flags override
    {
        std::ofstream cfg("/tmp/mop_cli_cfg.json");
        cfg << R"({"family":"charlier","kind":"type2","n1":1,"n2":0,"params":"b1=2,b2=3"})";
        cfg.close();
        auto r = run("eval --config /tmp/mop_cli_cfg.json --x 0");
        expect_eq(r.out, "-2\n", "config file supplies flags");
        auto r2 = run("eval --config /tmp/mop_cli_cfg.json --params b1=5,b2=3 --x 0");
        expect_eq(r2.out, "-5\n", "explicit flag overrides config");
    }

    // CLI output round-trips against a direct library call
    {
        using namespace mop;
        const hahn::Params p{parse_rat("1/2"), parse_rat("1/3"), parse_rat("1/4"), 12};
        const auto pair = hahn::type1({2, 1}, p);
        for (const char* xs : {"0", "3", "7/2"}) {
            auto r = run("eval --family hahn --kind type1 --a 1 --n1 2 --n2 1 "
                         "--params alpha1=1/2,alpha2=1/3,beta=1/4,N=12 --x " + std::string(xs));
            expect_eq(r.out, poly_eval(pair.q1, parse_rat(xs)).str() + "\n",
                      std::string("round-trip at x=") + xs);
        }
    }

    // env var supplies the default precision
    {
        const std::string cmd = "MOP_PRECISION_BITS=96 " + g_binary +
                                " table --family laguerre1 --kind type2 --n1 1 --n2 0 --params alpha1=1/2,alpha2=1/3"
                                " --from 0 --to 1 --mode float --format csv > /tmp/mop_cli_env.txt 2>/dev/null";
        std::system(cmd.c_str());
        expect(slurp("/tmp/mop_cli_env.txt").find(",96\n") != std::string::npos, "MOP_PRECISION_BITS honored");
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failures\n";
    return 1;
}
