#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ncprob/cli.hpp"
#include "ncprob/documents.hpp"
#include "ncprob/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream file(std::string(NCPROB_GOLDEN_DIR) + "/" + name);
    REQUIRE(file);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string golden_path(const std::string& name) { return std::string(NCPROB_GOLDEN_DIR) + "/" + name; }

}  // namespace

TEST_CASE("golden invocations") {
    CHECK(invoke({"m2bc", "--in", golden_path("semicircle.json")}).out == golden("m2bc_semicircle.json"));
    CHECK(invoke({"bpow", "--t", "1", "--in", golden_path("semicircle.json")}).out == golden("semicircle.json"));
    CHECK(invoke({"bernoulli", "--beta", "2", "--degree", "4"}).out == golden("bernoulli_beta2_degree4.json"));
    CHECK(invoke({"m2bc"}, golden("semicircle.json")).out == golden("m2bc_semicircle.json"));
}

TEST_CASE("round trips and inverse pairs") {
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const Functional phi = random_functional(rng, 1 + trial % 2, 4);
        const std::string text = documents::dump(documents::functional_to_json(phi));
        CHECK(documents::functional_from_json(documents::parse(text)) == phi);
        CHECK(documents::dump(documents::parse(text)) == text);
        const Run bc = invoke({"m2bc"}, text);
        REQUIRE(bc.code == 0);
        CHECK(invoke({"bc2m"}, bc.out).out == text);
        const Run fc = invoke({"m2fc"}, text);
        REQUIRE(fc.code == 0);
        CHECK(invoke({"fc2m"}, fc.out).out == text);
        CHECK(invoke({"m2fc"}, text).out == fc.out);
    }
    Rng frng(62);
    const FockData data = random_fock(frng, 2, 2);
    CHECK(documents::fock_from_json(documents::fock_to_json(data)) == data);
    const MeixnerParams p = random_meixner(frng, 2);
    CHECK(documents::params_from_json(documents::params_to_json(p)) == p);
}

TEST_CASE("validation errors exit 2 and name the key") {
    const Run bad_rational = invoke({"m2bc"}, R"({"d":1,"degree":2,"coeffs":{"1":"2/4"}})");
    CHECK(bad_rational.code == 2);
    CHECK(bad_rational.err.find("coeffs.1") != std::string::npos);
    CHECK(bad_rational.out.empty());
    const Run bad_word = invoke({"m2bc"}, R"({"d":1,"degree":2,"coeffs":{"1,2":"1"}})");
    CHECK(bad_word.code == 2);
    CHECK(bad_word.err.find("coeffs.1,2") != std::string::npos);
    const Run missing = invoke({"m2bc"}, R"({"d":1,"coeffs":{}})");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("degree") != std::string::npos);
    CHECK(invoke({"m2bc"}, R"({"d":1,"degree":2,"coeffs":{"":"2"}})").code == 2);
    CHECK(invoke({"m2bc"}, "not json").code == 2);
    CHECK(invoke({"fock-moments", "--in", golden_path("semicircle.json")}).code == 2);
    CHECK(invoke({"nonsense"}).code == 2);
    CHECK(invoke({"bpow", "--t", "x/y"}, golden("semicircle.json")).code == 2);
}

TEST_CASE("preconditions exit 3, failed checks exit 1") {
    CHECK(invoke({"bernoulli", "--beta", "0", "--degree", "4"}).code == 3);
    CHECK(invoke({"bt", "--t", "-1"}, golden("semicircle.json")).code == 3);
    const std::string fp = documents::dump(documents::functional_to_json(free_product({semicircle(4), semicircle(4)})));
    const Run indep = invoke({"indep-check", "--groups", "1|2"}, fp);
    CHECK(indep.code == 1);
    CHECK(indep.out.find("\"passed\": false") != std::string::npos);
    const std::string bp = documents::dump(documents::functional_to_json(boolean_product({semicircle(4), semicircle(4)})));
    CHECK(invoke({"indep-check", "--groups", "1|2"}, bp).code == 0);
}

TEST_CASE("subcommands") {
    const std::string sc = golden("semicircle.json");
    CHECK(invoke({"bt", "--t", "1"}, documents::dump(documents::functional_to_json(symmetric_bernoulli(6)))).out == sc);
    CHECK(invoke({"bp"}, documents::dump(documents::functional_to_json(symmetric_bernoulli(6)))).out == sc);
    CHECK(invoke({"uni-appell", "--n", "4"}, sc).code == 0);
    CHECK(invoke({"laha-lukacs", "--alpha", "1/3", "--b", "2", "--n", "4"}).code == 0);
    const std::string fock = documents::dump(documents::fock_to_json(FockData::semicircle(1, 3)));
    CHECK(invoke({"fock-moments", "--degree", "6"}, fock).out == sc);
    CHECK(invoke({"motzkin-moments", "--degree", "6"}, fock).out == sc);
    CHECK(invoke({"cfrac", "--degree", "6"}, fock).out == sc);
    CHECK(invoke({"mops-check", "--n", "3"}, fock).code == 0);
    CHECK(invoke({"fock-cumulants", "--degree", "6"}, fock).out == golden("m2bc_semicircle.json"));
    const Run appell = invoke({"appell", "--word", "1,1"}, sc);
    CHECK(documents::parse(appell.out)["coeffs"] == documents::Json{{"", "-1"}, {"1,1", "1"}});
    const Run gbf = invoke({"gbf-decompose", "--degree", "4"}, R"({"omega":0,"X":[[["0","1"],["1","0"]]]})");
    CHECK(gbf.code == 0);
    CHECK(documents::parse(gbf.out)["cumulants"]["coeffs"] == documents::Json{{"1,1", "1"}});
    const Run ebf = invoke({"ebf-moments", "--b", "2", "--c", "0", "--t", "3", "--degree", "4"});
    CHECK(documents::parse(ebf.out)["coeffs"]["1,1,1,1"] == "21");
    const std::string params = R"({"d":1,"T":[[["0"]]],"C":[["0"]]})";
    {
        std::ofstream f("pde_params.json");
        f << params;
    }
    CHECK(invoke({"pde-check", "--params", "pde_params.json"}, sc).code == 0);
    CHECK(invoke({"pde-check", "--params", "pde_params.json"},
                 documents::dump(documents::functional_to_json(symmetric_bernoulli(6)))).code == 1);
    CHECK(documents::parse(invoke({"bt", "--t", "2"}, params).out)["C"][0][0] == "2");
}

TEST_CASE("binary and multi-input commands") {
    {
        std::ofstream a("cli_a.json"), b("cli_b.json");
        a << documents::dump(documents::functional_to_json(semicircle(4)));
        b << documents::dump(documents::functional_to_json(symmetric_bernoulli(4)));
    }
    const Run bconv = invoke({"bconv", "--in", "cli_a.json", "--in", "cli_b.json"});
    CHECK(documents::functional_from_json(documents::parse(bconv.out)) == boolean_convolve(semicircle(4), symmetric_bernoulli(4)));
    const Run fprod = invoke({"fprod", "--in", "cli_a.json", "--in", "cli_b.json"});
    CHECK(documents::functional_from_json(documents::parse(fprod.out)) == free_product({semicircle(4), symmetric_bernoulli(4)}));
    const Run c = invoke({"cfree", "--in", "cli_a.json", "--in", "cli_a.json"});
    CHECK(documents::series_from_json(documents::parse(c.out)) == free_cumulants(semicircle(4)));
    const Run four = invoke({"cfree", "--in", "cli_a.json", "--in", "cli_b.json", "--in", "cli_a.json", "--in", "cli_b.json"});
    CHECK(four.code == 0);
    CHECK(documents::parse(four.out).contains("mu"));
    CHECK(invoke({"bconv", "--in", "cli_a.json"}).code == 2);
}
