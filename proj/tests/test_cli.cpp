// Integration checks for the riemax CLI: spawns the real binary (path given
// as argv[1]) in a scratch directory and inspects files and exit codes.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "riemax/io/csv.hpp"
#include "riemax/io/spd_json.hpp"
#include "riemax/io/summary.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "  ok: " : "  FAILED: ") << what << '\n';
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: riemax_cli_check <path-to-riemax-binary>\n";
        return 2;
    }
    const std::string bin = std::string("RM_LOG=quiet ") + argv[1];
    const fs::path dir = fs::temp_directory_path() / ("riemax_cli_check_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto at = [&](const char* name) { return (dir / name).string(); };

    std::cout << "generate reproducibility\n";
    expect(run(bin + " generate --manifold euclidean --n 40 --dim 3 --seed 7 --out " + at("a.csv")) == 0,
           "generate euclidean exits 0");
    expect(run(bin + " generate --manifold euclidean --n 40 --dim 3 --seed 7 --out " + at("b.csv")) == 0,
           "generate euclidean again exits 0");
    expect(slurp(at("a.csv")) == slurp(at("b.csv")), "same seed gives byte-identical files");
    expect(run(bin + " generate --manifold euclidean --n 40 --dim 3 --seed 8 --out " + at("c.csv")) == 0,
           "generate with another seed");
    expect(slurp(at("a.csv")) != slurp(at("c.csv")), "different seed gives a different file");

    std::cout << "generate klein stays inside the ball\n";
    expect(run(bin + " generate --manifold klein --n 50 --dim 2 --seed 3 --out " + at("k.csv")) == 0,
           "generate klein exits 0");
    {
        auto rows = riemax::read_points_csv_file(at("k.csv"));
        bool inside = rows.size() == 50;
        for (const auto& r : rows) inside = inside && r.norm() < 1.0;
        expect(inside, "50 rows, all norms below 1");
    }

    std::cout << "generate spd validates\n";
    expect(run(bin + " generate --manifold spd --n 20 --dim 5 --seed 3 --out " + at("m.json")) == 0,
           "generate spd exits 0");
    {
        bool valid = true;
        try {
            const auto mats = riemax::read_spd_json_file(at("m.json"), 5);
            valid = mats.size() == 20;
        } catch (const std::exception&) {
            valid = false;
        }
        expect(valid, "20 matrices pass the SPD validator");
    }

    std::cout << "solve with the exact oracle\n";
    const std::string solve_cmd = bin + " solve --manifold euclidean --input " + at("a.csv") +
                                  " --iters 100 --oracle welzl --trace " + at("t.csv") + " --summary " +
                                  at("s.json");
    expect(run(solve_cmd) == 0, "solve exits 0");
    {
        std::ifstream in(at("t.csv"));
        std::string header;
        std::getline(in, header);
        expect(header == "k,radius,step,farthest_index,dist_to_oracle", "trace header matches");
        std::size_t rows = 0;
        std::string line;
        long last_k = -1;
        bool monotone = true, oracle_col = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ++rows;
            const long k = std::stol(line.substr(0, line.find(',')));
            monotone = monotone && k > last_k;
            last_k = k;
            oracle_col = oracle_col && line.back() != ',';
        }
        expect(rows == 101, "trace has 101 records (start + budget)");
        expect(monotone, "record k strictly increases from 0");
        expect(oracle_col, "oracle distance column is filled");
    }

    std::cout << "summary echo reproduces the run byte for byte\n";
    {
        nlohmann::json summary;
        std::ifstream in(at("s.json"));
        in >> summary;
        expect(summary.contains("final_radius") && summary.contains("oracle_radius") &&
                   summary.contains("coreset_size") && summary.contains("wall_clock_seconds"),
               "summary carries the run fields");
        const auto echo = riemax::config_echo_from_json(summary.at("config"));
        std::ostringstream cmd;
        cmd << bin << " solve --manifold " << echo.manifold << " --input " << echo.input << " --iters "
            << echo.iters << " --schedule " << echo.schedule << " --start " << echo.start << " --seed "
            << echo.seed << " --tie " << echo.tie << " --oracle " << echo.oracle << " --trace "
            << at("t2.csv");
        if (echo.thin_trace) cmd << " --thin-trace";
        if (echo.relative) cmd << " --relative";
        expect(run(cmd.str()) == 0, "re-solve exits 0");
        expect(slurp(at("t.csv")) == slurp(at("t2.csv")), "trace files are byte-identical");
    }

    std::cout << "input errors carry row numbers and exit 1\n";
    {
        std::ofstream bad(at("bad.csv"));
        bad << "1,2\n3,oops\n";
        bad.close();
        const int code = run(bin + " solve --manifold euclidean --input " + at("bad.csv") + " 2> " +
                             at("bad.err"));
        expect(code == 1, "malformed row exits 1");
        expect(slurp(at("bad.err")).find("row 2") != std::string::npos, "error names row 2");
    }
    {
        std::ofstream bad(at("badk.csv"));
        bad << "0.1,0.2\n1.5,0.0\n";
        bad.close();
        const int code = run(bin + " solve --manifold klein --input " + at("badk.csv") + " 2> " +
                             at("badk.err"));
        expect(code == 1, "a point outside the Klein ball exits 1");
        expect(slurp(at("badk.err")).find("row 2") != std::string::npos, "error names row 2");
    }

    std::cout << "configuration errors exit 1\n";
    expect(run(bin + " solve --manifold klein --input " + at("k.csv") + " --oracle welzl 2> /dev/null") ==
               1,
           "welzl oracle on a curved manifold is refused");
    expect(run(bin + " solve --manifold spd --input " + at("m.json") + " 2> /dev/null") == 1,
           "spd without --dim is refused");
    expect(run(bin + " solve --manifold euclidean --input " + at("a.csv") +
               " --schedule scaled:0.5 2> /dev/null") == 1,
           "scaled schedule without a cap source is refused");
    expect(run(bin + " solve --manifold euclidean --input " + at("a.csv") +
               " --delta 1.0 --alpha 1e-3 --beta 1e-3 --schedule scaled:0.5 2> /dev/null") == 1,
           "a cap above the bound is refused without --force-delta");

    std::cout << "arclength run through the envelope flags\n";
    expect(run(bin + " solve --manifold euclidean --input " + at("a.csv") +
               " --schedule scaled:1 --alpha 0.5 --beta 0.5 --iters 200 --trace " + at("rie.csv") +
               " 2> /dev/null") == 0,
           "scaled run with a derived cap exits 0");

    std::cout << "spd solve with a reference oracle\n";
    expect(run(bin + " solve --manifold spd --dim 5 --input " + at("m.json") +
               " --iters 200 --oracle reference:2000 --trace " + at("spd.csv") + " --summary " +
               at("spd.json")) == 0,
           "spd solve exits 0");

    std::cout << "klein convergence trace with relative oracle distances\n";
    expect(run(bin + " solve --manifold klein --input " + at("k.csv") +
               " --iters 200 --oracle reference:20000 --relative --trace " + at("kt.csv")) == 0,
           "klein 200-iteration solve exits 0");
    {
        std::ifstream in(at("kt.csv"));
        std::string line;
        std::getline(in, line); // header
        std::size_t rows = 0;
        double first_rel = -1.0, last_rel = -1.0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ++rows;
            const auto pos = line.rfind(',');
            const double rel = std::stod(line.substr(pos + 1));
            if (first_rel < 0) first_rel = rel;
            last_rel = rel;
        }
        expect(rows == 201, "klein trace has 201 records");
        expect(last_rel < first_rel, "relative center distance decreased over the run");
    }

    fs::remove_all(dir);
    if (failures > 0) {
        std::cout << failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
