// End-to-end driver for the command-line front door: scene builds, artifact
// re-analysis, structural diffs, family checks, and the exit-code contract
// (0 pass, 2 verification failure, 3 inconclusive-only, 4 input error).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <map>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hopf/hstore.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + HOPF_BIN + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    RunResult r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = out;
    return r;
}

std::string scene(const char* name) { return std::string(SCENES_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const std::string& scratch_root() {
    static const std::string root = [] {
        fs::remove_all("cli_scratch");
        fs::create_directories("cli_scratch");
        return std::string("cli_scratch");
    }();
    return root;
}

// Build a scene once per process and hand back its output directory.
std::string built(const char* scene_name, const char* dir_name) {
    static std::map<std::string, std::string> done;
    auto it = done.find(dir_name);
    if (it != done.end()) return it->second;
    std::string dir = scratch_root() + "/" + dir_name;
    RunResult r = run_cli("build " + scene(scene_name) + " -o " + dir);
    INFO(r.out);
    REQUIRE(r.code == 0);
    done.emplace(dir_name, dir);
    return dir;
}

}  // namespace

TEST_CASE("building the group zoo twice gives byte-identical artifacts") {
    std::string d1 = built("group_zoo.json", "zoo");
    std::string d2 = scratch_root() + "/zoo_again";
    RunResult r = run_cli("build " + scene("group_zoo.json") + " -o " + d2);
    INFO(r.out);
    REQUIRE(r.code == 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(d1)) {
        std::string name = e.path().filename().string();
        CHECK(slurp(d1 + "/" + name) == slurp(d2 + "/" + name));
        ++files;
    }
    CHECK(files == 16);
}

TEST_CASE("stored artifacts reload to the exact bytes they were saved from") {
    std::string d1 = built("group_zoo.json", "zoo");
    for (const auto& e : fs::directory_iterator(d1)) {
        std::string path = e.path().string();
        hopf::FinHopf H = hopf::load_hstore(path);
        CHECK(hopf::hstore_bytes(H) == slurp(path));
    }
}

TEST_CASE("the deformed smash-coproduct scene reports its exactness certificate") {
    std::string dir = scratch_root() + "/d48_log";
    RunResult r = run_cli("build " + scene("dim48.json") + " -o " + dir);
    INFO(r.out);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("exact sequence at h48: k -> 2 -> 48 -> 24 -> k") != std::string::npos);
    CHECK(r.out.find("certificate OK") != std::string::npos);
}

TEST_CASE("a broken cocycle table fails the build naming the violated identity") {
    RunResult r = run_cli("build " + scene("bad_omega.json") + " -o " + scratch_root() + "/bad");
    INFO(r.out);
    CHECK(r.code == 2);
    CHECK(r.out.find("2-cocycle identity") != std::string::npos);
}

TEST_CASE("scene parse errors carry a position and exit as input errors") {
    std::string path = scratch_root() + "/garbage.json";
    std::ofstream(path) << "{ \"nodes\": { broken\n";
    RunResult r = run_cli("build " + path + " -o " + scratch_root() + "/never");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("parse error") != std::string::npos);
    CHECK(r.out.find("line") != std::string::npos);
}

TEST_CASE("a missing scene file is an input error") {
    RunResult r = run_cli("build " + scratch_root() + "/no_such.json -o " + scratch_root() + "/x");
    CHECK(r.code == 4);
}

TEST_CASE("scene references to undefined nodes are input errors") {
    std::string path = scratch_root() + "/dangling.json";
    std::ofstream(path) << R"({"nodes": {"a": {"op": "dual", "of": "ghost"}}})";
    RunResult r = run_cli("build " + path + " -o " + scratch_root() + "/never2");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("ghost") != std::string::npos);
}

TEST_CASE("the element cap is honored during scene validation") {
    RunResult r = run_cli("build " + scene("group_zoo.json") + " -o " + scratch_root() + "/capped",
                          "HOPF_ELEMENT_CAP=3");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("cap") != std::string::npos);
}

TEST_CASE("group-like analysis of the order-two group algebra") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("analyze " + zoo + "/kz2.hstore --group-likes");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("group-like elements: 2") != std::string::npos);
}

TEST_CASE("composition series of the function algebra on the cyclic group of order six") {
    std::string d6 = built("kz6.json", "z6");
    RunResult r = run_cli("analyze " + d6 + "/kdz6_c12.hstore --composition-series");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("length 2") != std::string::npos);
    CHECK(r.out.find("k^(Z/2)") != std::string::npos);
    CHECK(r.out.find("k^(Z/3)") != std::string::npos);
}

TEST_CASE("obstruction report of the dim-48 deformation matches its pinned summary line") {
    std::string d48 = built("dim48.json", "d48");
    RunResult r = run_cli("analyze " + d48 + "/h48.hstore --obstructions");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("not quasitriangular: inconclusive; not coquasitriangular: inconclusive; "
                     "not abelian extension over searched candidates: established") !=
          std::string::npos);
    SECTION("the report is stable across runs") {
        RunResult again = run_cli("analyze " + d48 + "/h48.hstore --obstructions");
        CHECK(again.out == r.out);
        CHECK(again.code == r.code);
    }
}

TEST_CASE("exactness re-certification from stored provenance") {
    std::string d48 = built("dim48.json", "d48");
    RunResult r = run_cli("analyze " + d48 + "/h48.hstore --exactness");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("exact sequence: k -> 2 -> 48 -> 24 -> k") != std::string::npos);
    CHECK(r.out.find("kernel of projection = ideal on the augmentation part: yes") !=
          std::string::npos);

    std::string d6 = built("dim6_extension.json", "h6");
    RunResult r6 = run_cli("analyze " + d6 + "/h6.hstore --exactness");
    INFO(r6.out);
    CHECK(r6.code == 0);
    CHECK(r6.out.find("exact sequence: k -> 3 -> 6 -> 2 -> k") != std::string::npos);

    std::string d8 = built("eight_dim.json", "h8");
    RunResult r8 = run_cli("analyze " + d8 + "/h8.hstore --exactness");
    INFO(r8.out);
    CHECK(r8.code == 0);
    CHECK(r8.out.find("exact sequence: k -> 4 -> 8 -> 2 -> k") != std::string::npos);
}

TEST_CASE("artifacts without a recorded sequence refuse the exactness flag as input error") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("analyze " + zoo + "/kz2.hstore --exactness");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("no exact-sequence data") != std::string::npos);
}

TEST_CASE("analyze without any flag is an input error") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("analyze " + zoo + "/kz2.hstore");
    CHECK(r.code == 4);
}

TEST_CASE("a tampered artifact is rejected by its checksum") {
    std::string zoo = built("group_zoo.json", "zoo");
    std::string bytes = slurp(zoo + "/kz2.hstore");
    auto pos = bytes.find("1/1");
    REQUIRE(pos != std::string::npos);
    bytes[pos] = '2';
    std::string tampered = scratch_root() + "/tampered.hstore";
    std::ofstream(tampered, std::ios::binary) << bytes;
    RunResult r = run_cli("analyze " + tampered + " --group-likes");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("round-trip hash mismatch") != std::string::npos);
}

TEST_CASE("diff of an artifact against itself is identical") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("diff " + zoo + "/ks4.hstore " + zoo + "/ks4.hstore");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("identical structure constants") != std::string::npos);
}

TEST_CASE("deforming before or after the smash coproduct agrees at dim 48") {
    std::string d48 = built("dim48.json", "d48");
    std::string late = built("dim48_late.json", "d48_late");
    RunResult r = run_cli("diff " + d48 + "/h48.hstore " + late + "/h48_late.hstore");
    INFO(r.out);
    CHECK(r.code == 0);
    bool settled = r.out.find("identical structure constants") != std::string::npos ||
                   r.out.find("isomorphic") != std::string::npos;
    CHECK(settled);
}

TEST_CASE("deforming before or after the full dim-96 tower agrees") {
    std::string steps = built("dim96_steps.json", "d96_steps");
    std::string late = built("dim96_late.json", "d96_late");
    RunResult r = run_cli("diff " + steps + "/h96_steps.hstore " + late + "/h96_late.hstore");
    INFO(r.out);
    CHECK(r.code == 0);
    bool settled = r.out.find("identical structure constants") != std::string::npos ||
                   r.out.find("isomorphic") != std::string::npos;
    CHECK(settled);
}

TEST_CASE("the one-step crossed construction matches the two-step tower") {
    std::string one = built("dim96.json", "d96");
    std::string steps = built("dim96_steps.json", "d96_steps");
    RunResult r = run_cli("diff " + one + "/h96.hstore " + steps + "/h96_steps.hstore");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("identical structure constants") != std::string::npos);
}

TEST_CASE("diff separates function algebras on the two groups of order four") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("diff " + zoo + "/kdz4.hstore " + zoo + "/kdv4.hstore");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("distinct") != std::string::npos);
    CHECK(r.out.find("order") != std::string::npos);  // names the distinguishing invariant
}

TEST_CASE("diff of artifacts with different dimensions is an input error") {
    std::string zoo = built("group_zoo.json", "zoo");
    RunResult r = run_cli("diff " + zoo + "/kz2.hstore " + zoo + "/kz4.hstore");
    INFO(r.out);
    CHECK(r.code == 4);
    CHECK(r.out.find("dimension mismatch") != std::string::npos);
}

TEST_CASE("family checks pass at generator level for both families") {
    RunResult a = run_cli("check-examples --family 4.1 --n 13 --m 9");
    INFO(a.out);
    CHECK(a.code == 0);
    CHECK(a.out.find("all attempted generator-level checks established") != std::string::npos);

    RunResult b = run_cli("check-examples --family 4.2 --n 14 --m 9");
    INFO(b.out);
    CHECK(b.code == 0);
}

TEST_CASE("narrow symmetric-family parameters leave the deeper branch unavailable") {
    RunResult r = run_cli("check-examples --family 4.2 --n 12 --m 9");
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("unavailable") != std::string::npos);
}

TEST_CASE("family parameter violations are rejected") {
    RunResult r = run_cli("check-examples --family 4.1 --n 8 --m 9");
    CHECK(r.code == 4);
    RunResult s = run_cli("check-examples --family 9.9 --n 13 --m 9");
    CHECK(s.code == 4);
}
