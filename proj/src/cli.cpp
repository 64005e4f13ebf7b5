#include "cmfactor/cli.hpp"
#include "cmfactor/arithside.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/modular.hpp"
#include "cmfactor/quadarith.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cmf::cli {

namespace {

using nlohmann::json;

int digits_for(long prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * std::log10(2.0))); }

std::string poly_to_string(IntPoly const & p)
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0)
            continue;
        mpz_class c = p[k];
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        c = abs(c);
        if (c != 1 || k == 0)
            os << c;
        if (k > 0)
            os << (c != 1 ? "*" : "") << "x" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

void emit(std::string const & text, std::string const & out_path)
{
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot write " + out_path);
        f << text << "\n";
    }
}

std::string report_text(VerificationReport const & r)
{
    int digits = std::min(digits_for(r.precision), 40);
    std::ostringstream os;
    os << r.kind << " d1=" << r.d1 << " d2=" << r.d2 << " prec=" << r.precision << "\n";
    os << "  lhs_log         " << r.lhs_log.to_string(digits) << "\n";
    os << "  rhs             " << r.rhs.to_string() << "\n";
    os << "  rhs_log         " << r.rhs_log.to_string(digits) << "\n";
    os << "  residual        " << r.residual.to_string(6) << "\n";
    os << "  product_integer " << r.product_integer << "\n";
    os << "  |product|       ";
    bool first = true;
    for (auto const & [p, e] : r.factorization) {
        os << (first ? "" : " * ") << p << (e > 1 ? "^" + std::to_string(e) : "");
        first = false;
    }
    if (r.cofactor != 1)
        os << (first ? "" : " * ") << r.cofactor;
    if (first && r.cofactor == 1)
        os << "1";
    os << "\n";
    if (r.oracle_checked)
        os << "  resultant       " << (r.oracle_match ? "match" : "MISMATCH") << "\n";
    for (auto const & f : r.failures)
        os << "  failure: " << f << "\n";
    os << "  status          " << r.status();
    return os.str();
}

int finish(VerificationReport const & r, bool as_json, std::string const & out)
{
    emit(as_json ? report_json(r) : report_text(r), out);
    return r.ok() ? exit_ok : exit_verification_failed;
}

} // namespace

std::string report_json(VerificationReport const & r)
{
    int digits = digits_for(r.precision);
    json j;
    j["d1"] = r.d1;
    j["d2"] = r.d2;
    j["kind"] = r.kind;
    j["precision"] = r.precision;
    j["lhs_log"] = r.lhs_log.to_string(digits);
    j["rhs_log"] = r.rhs_log.to_string(digits);
    j["residual"] = r.residual.to_string(digits);
    j["product_integer"] = r.product_integer.get_str();
    json fac = json::array();
    for (auto const & [p, e] : r.factorization)
        fac.push_back({{"p", p}, {"e", e}});
    j["factorization"] = fac;
    json rhs = json::array();
    for (auto const & [p, e] : r.rhs.terms())
        rhs.push_back({{"p", p}, {"e", e.get_str()}});
    j["rhs"] = rhs;
    j["factor_match"] = r.factor_match;
    if (r.oracle_checked)
        j["resultant_match"] = r.oracle_match;
    j["failures"] = r.failures;
    j["status"] = r.status();
    return j.dump(2);
}

int run(int argc, char ** argv)
{
    CLI::App app{"CM value factorizations and Borcherds product checks"};
    app.require_subcommand(1);

    long d1 = 0, d2 = 0, prec = 0, m = 0, d = 0, order = 8, order2 = 0, ord = 0, s_eval = 0;
    int a = 0;
    unsigned threads = 0;
    bool as_json = false, no_oracle = false;
    std::string out, case_name;

    auto add_pair = [&](CLI::App * sub) {
        sub->add_option("--d1", d1, "first negative fundamental discriminant")->required();
        sub->add_option("--d2", d2, "second negative fundamental discriminant")->required();
    };
    auto add_verify = [&](CLI::App * sub) {
        add_pair(sub);
        sub->add_option("--prec", prec, "working precision in bits (0 = automatic)");
        sub->add_option("--threads", threads, "worker threads (default CMFACTOR_THREADS or all cores)");
        sub->add_flag("--json", as_json, "print a JSON report");
        sub->add_option("--out", out, "also write the report to this file");
    };

    auto * gz = app.add_subcommand("gz", "verify the factorization of the norm of j(tau1) - j(tau2)");
    add_verify(gz);
    gz->add_flag("--no-resultant", no_oracle, "skip the class polynomial resultant check");
    auto * yz = app.add_subcommand("yz", "verify the factorization of the norm of omega2(tau1) - omega2(tau2)");
    add_verify(yz);

    auto * bc = app.add_subcommand("borcherds-check", "compare a Borcherds product with its closed form");
    bc->add_option("--case", case_name, "j, weber, eta1, eta2 or f2")->required();
    bc->add_option("--order", order, "truncation order in q1 (and q2 unless --order2 is given)");
    bc->add_option("--order2", order2, "truncation order in q2");

    auto * rh = app.add_subcommand("rho", "factor t = (m + sqrt D)/2 and print Diff and rho");
    add_pair(rh);
    rh->add_option("--m", m, "m with m = D mod 2 and m^2 < D")->required();

    auto * cp = app.add_subcommand("class-poly", "print the Hilbert class polynomial");
    cp->add_option("--d", d, "negative fundamental discriminant")->required();
    cp->add_option("--prec", prec, "precision in bits (0 = automatic)");

    auto * wh = app.add_subcommand("whittaker", "local factors at 2 for phi_0 and phi_1");
    wh->add_option("--a", a, "0 or 1")->required()->check(CLI::IsMember({0, 1}));
    wh->add_option("--ord", ord, "ord_2(t), -1 for t not 2-integral")->required();
    wh->add_option("--s", s_eval, "also evaluate at this integer s");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        return app.exit(e);
    }

    try {
        VerifyOptions opt;
        opt.prec = prec;
        opt.threads = threads;
        opt.resultant_oracle = !no_oracle;
        if (gz->parsed())
            return finish(gz_verify(d1, d2, opt), as_json, out);
        if (yz->parsed())
            return finish(yz_verify(d1, d2, opt), as_json, out);

        if (bc->parsed()) {
            BorcherdsCase c = parse_borcherds_case(case_name);
            long n2 = order2 > 0 ? order2 : order;
            BorcherdsCheck r = borcherds_verify(c, order, n2);
            std::cout << "case " << to_string(c) << " through (" << order << ", " << n2 << ")\n";
            std::cout << "  product  " << r.product.to_string(6) << "\n";
            std::cout << "  expected " << r.expected.to_string(6) << "\n";
            if (r.difference) {
                auto const & df = *r.difference;
                if (df.note.empty())
                    std::cout << "  first difference at q1^" << df.i << " q2^" << df.j << ": " << df.left << " vs "
                              << df.right << "\n";
                else
                    std::cout << "  " << df.note << "\n";
            }
            std::cout << "  status   " << (r.ok ? "ok" : "failed") << "\n";
            return r.ok ? exit_ok : exit_verification_failed;
        }

        if (rh->parsed()) {
            check_pair(d1, d2);
            long D = d1 * d2;
            RealQuadElem t(m, D);
            if (!t.totally_positive_ratio())
                throw hypothesis_error("m^2 must be below D = " + std::to_string(D));
            std::cout << "t = (" << m << " + sqrt(" << D << "))/2, N(t) = " << t.norm() << "\n";
            IdealFactF fac = factor_principal_ideal(t);
            std::cout << "t O_F =";
            if (fac.empty())
                std::cout << " (1)";
            for (auto const & [P, e] : fac)
                std::cout << " " << P.label() << "^" << e << "[" << to_string(P.type) << "/"
                          << to_string(splitting_in_E_over_F(P, d1, d2)) << "]";
            std::cout << "\nDiff =";
            auto diff = diff_set(t, d1, d2);
            if (diff.empty())
                std::cout << " {}";
            for (auto const & P : diff)
                std::cout << " " << P.label();
            std::cout << "\nrho(t O_F) = " << rho(fac, d1, d2) << "\n";
            for (auto const & P : diff) {
                IdealFactF rest = fac;
                rest[P] -= 1;
                std::cout << "rho(t " << P.label() << "^-1) = " << rho(rest, d1, d2) << "\n";
            }
            std::cout << "contribution " << gz_term(t, d1, d2).to_string() << "\n";
            return exit_ok;
        }

        if (cp->parsed()) {
            std::cout << poly_to_string(class_polynomial(d, prec)) << "\n";
            return exit_ok;
        }

        if (wh->parsed()) {
            WhittakerValue w = whittaker2_Ma(a, ord);
            std::cout << "a = " << a << ", ord = " << ord << "\n";
            std::cout << "  value at s=0      " << w.value_at_0 << "\n";
            std::cout << "  derivative at s=0 " << (w.derivative_at_0.empty() ? "0" : w.derivative_at_0.to_string())
                      << "\n";
            std::cout << "  in X = 2^-s       ";
            if (w.s_form.empty())
                std::cout << "0";
            for (size_t k = 0; k < w.s_form.size(); ++k)
                std::cout << (k ? " + " : "") << "(" << w.s_form[k] << ")" << (k ? "*X^" + std::to_string(k) : "");
            std::cout << "\n";
            if (wh->count("--s"))
                std::cout << "  value at s=" << s_eval << "      " << whittaker2_Ma_at(a, ord, s_eval) << "\n";
            return exit_ok;
        }
    } catch (hypothesis_error const & e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (domain_error const & e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (precision_error const & e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return exit_precision;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace cmf::cli
