#include "cmfactor/classgroup.hpp"
#include "cmfactor/cli.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace cmf;

namespace {

struct CliResult
{
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "cmfactor");
    std::vector<char *> argv;
    for (auto & a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    auto * old_out = std::cout.rdbuf(out.rdbuf());
    auto * old_err = std::cerr.rdbuf(err.rdbuf());
    int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("verify")
{
    TEST_CASE("small gz pairs")
    {
        VerificationReport r = gz_verify(-3, -4);
        CHECK(r.ok());
        // j(i) - j(rho)
        CHECK(r.product_integer == 1728);
        CHECK(r.oracle_match);
        VerificationReport s = gz_verify(-7, -8);
        CHECK(s.ok());
        CHECK(s.residual.to_double() < 1e-20);
    }

    TEST_CASE("gz is symmetric up to the sign (-1)^(h1 h2)")
    {
        for (auto [d1, d2] : std::vector<std::pair<long, long>>{{-3, -163}, {-15, -7}, {-23, -4}, {-20, -3}}) {
            auto a = gz_verify(d1, d2);
            auto b = gz_verify(d2, d1);
            long h = static_cast<long>(reduced_forms(d1).size() * reduced_forms(d2).size());
            CHECK(b.product_integer == (h % 2 ? -a.product_integer : a.product_integer));
            CHECK(a.rhs == b.rhs);
        }
    }

    TEST_CASE("precision escalation does not flip the outcome")
    {
        VerifyOptions o;
        o.prec = default_precision(-7, -43);
        auto a = gz_verify(-7, -43, o);
        o.prec += 64;
        auto b = gz_verify(-7, -43, o);
        CHECK(a.ok());
        CHECK(b.ok());
        CHECK(a.product_integer == b.product_integer);
    }

    TEST_CASE("thread count does not change the result")
    {
        VerifyOptions one, four;
        one.threads = 1;
        four.threads = 4;
        auto a = yz_verify(-15, -23, one);
        auto b = yz_verify(-15, -23, four);
        CHECK(a.product_integer == b.product_integer);
        CHECK(a.lhs_log == b.lhs_log);
        CHECK(cli::report_json(a) == cli::report_json(b));
    }

    TEST_CASE("yz small pair")
    {
        auto r = yz_verify(-7, -15);
        CHECK(r.ok());
        CHECK(abs(r.product_integer) == 45);
        CHECK(r.factorization == std::map<long, long>{{3, 2}, {5, 1}});
        CHECK_THROWS_AS(yz_verify(-7, -7), hypothesis_error);
        CHECK_THROWS_AS(yz_verify(-3, -7), hypothesis_error);
    }

    TEST_CASE("thread resolution")
    {
        CHECK(resolve_threads(3) == 3);
        CHECK(resolve_threads(0) >= 1);
    }

    TEST_CASE("cli gz json")
    {
        auto r = run_cli({"gz", "--d1", "-3", "--d2", "-163", "--json"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["product_integer"] == "-262537412640768000");
        CHECK(j["status"] == "ok");
        for (char const * key : {"d1", "d2", "lhs_log", "rhs_log", "residual", "factorization"})
            CHECK(j.contains(key));
        nlohmann::json expect = nlohmann::json::parse(
            R"([{"p":2,"e":18},{"p":3,"e":3},{"p":5,"e":3},{"p":23,"e":3},{"p":29,"e":3}])");
        CHECK(j["factorization"] == expect);
        auto again = run_cli({"gz", "--d1", "-3", "--d2", "-163", "--json"});
        CHECK(again.out == r.out);
    }

    TEST_CASE("cli exit codes")
    {
        auto bad = run_cli({"yz", "--d1", "-7", "--d2", "-7"});
        CHECK(bad.code == 3);
        CHECK(bad.err.find("coprime") != std::string::npos);
        CHECK(run_cli({"gz", "--d1", "-12", "--d2", "-7"}).code == 3);
        CHECK(run_cli({"borcherds-check", "--case", "weber", "--order", "8"}).code == 0);
        CHECK(run_cli({"borcherds-check", "--case", "eta1", "--order", "4"}).code == 0);
        CHECK(run_cli({"borcherds-check", "--case", "bogus"}).code == 3);
        auto w = run_cli({"whittaker", "--a", "0", "--ord", "3"});
        CHECK(w.code == 0);
        CHECK(w.out.find("value at s=0      1") != std::string::npos);
        auto rho = run_cli({"rho", "--d1", "-3", "--d2", "-163", "--m", "21"});
        CHECK(rho.code == 0);
        CHECK(rho.out.find("Diff =") != std::string::npos);
        CHECK(run_cli({"rho", "--d1", "-3", "--d2", "-163", "--m", "23"}).code == 3);
        auto cp = run_cli({"class-poly", "--d", "-15"});
        CHECK(cp.code == 0);
        CHECK(cp.out == "x^2 + 191025*x - 121287375\n");
    }
}
