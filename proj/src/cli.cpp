#include "gsp4/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "gsp4/checks.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/numeric.hpp"

namespace gsp4 {

namespace {

using Action = std::function<std::vector<VerificationReport>()>;

struct KArgs {
    int k = 0, kp = 0;
};

void add_k(CLI::App* cmd, KArgs& a) {
    cmd->add_option("--k", a.k, "first highest-weight index k")->required();
    cmd->add_option("--kp", a.kp, "second highest-weight index k'")->required();
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification runs for the GSp(4) regulator computation", "gsp4verify"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    unsigned digits = 50;
    app.add_option("--format", format, "output format: json, text or csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--precision-digits", digits, "working precision of numerical checks")->check(CLI::Range(20u, 400u));

    Action action;
    KArgs ka;
    int p = -1, q = -1, c = 0;
    bool have_c = false;

    // branch
    auto* branch = app.add_subcommand("branch", "branching admissibility and character multiplicity");
    add_k(branch, ka);
    branch->add_option("--p", p, "Sym^p degree (omit p and q to enumerate)");
    branch->add_option("--q", q, "Sym^q degree");
    branch->callback([&] {
        if ((p < 0) != (q < 0)) throw InputError("branch: give both --p and --q, or neither");
        action = [&] {
            if (p < 0) return std::vector{check_branch_table(ka.k, ka.kp)};
            return std::vector{check_branch(ka.k, ka.kp, p, q)};
        };
    });

    auto add_c = [&](CLI::App* cmd) {
        cmd->add_option("--c", c, "central index c (default k+k')")->each([&](const std::string&) { have_c = true; });
    };
    auto c_or_default = [&] { return have_c ? c : ka.k + ka.kp; };

    auto* packet = app.add_subcommand("packet", "discrete series L-packet and minimal K-types");
    add_k(packet, ka);
    add_c(packet);
    packet->callback([&] { action = [&] { return std::vector{check_packet(ka.k, ka.kp, c_or_default())}; }; });

    auto* hodge = app.add_subcommand("hodge", "Hodge types of the middle-degree cohomology");
    add_k(hodge, ka);
    add_c(hodge);
    hodge->callback([&] { action = [&] { return std::vector{check_hodge(ka.k, ka.kp, c_or_default())}; }; });

    // rep build
    auto* rep = app.add_subcommand("rep", "highest-weight module construction");
    rep->require_subcommand(1);
    rep->fallthrough();
    auto* rep_build = rep->add_subcommand("build", "build the irreducible module and check it");
    add_k(rep_build, ka);
    add_c(rep_build);
    bool closure = false;
    rep_build->add_flag("--verify-closure", closure, "re-expand the images of all ten generators");
    rep_build->callback([&] {
        action = [&] { return std::vector{check_rep_build(ka.k, ka.kp, c_or_default(), closure)}; };
    });

    auto* lscan = app.add_subcommand("lambda-scan", "isotypic projections of X(1,-1)^i v");
    add_k(lscan, ka);
    lscan->add_option("--p", p, "default k-1");
    lscan->add_option("--q", q, "default k'-1");
    int i_min = 0, i_max = -1;
    lscan->add_option("--imin", i_min, "first power");
    lscan->add_option("--imax", i_max, "last power (default k+k')");
    lscan->callback([&] {
        action = [&] {
            std::optional<int> po, qo;
            if (p >= 0) po = p;
            if (q >= 0) qo = q;
            return std::vector{check_lambda_scan(ka.k, ka.kp, po, qo, i_min, i_max < 0 ? ka.k + ka.kp : i_max)};
        };
    });

    // pairing
    auto* pairing = app.add_subcommand("pairing", "pairing constants and the regulator assembly");
    pairing->require_subcommand(1);
    pairing->fallthrough();
    auto* pconst = pairing->add_subcommand("constants", "A, B, C constants");
    add_k(pconst, ka);
    pconst->callback([&] { action = [&] { return std::vector{check_pairing_constants(ka.k, ka.kp)}; }; });
    auto* pcoef = pairing->add_subcommand("coeffs", "projection coefficients in the wedge space");
    pcoef->callback([&] { action = [] { return std::vector{check_pairing_coeffs()}; }; });
    auto* pasm = pairing->add_subcommand("assemble", "the four-term regulator expression");
    add_k(pasm, ka);
    pasm->add_option("--p", p)->required();
    pasm->add_option("--q", q)->required();
    pasm->callback([&] { action = [&] { return std::vector{check_pairing_assemble(p, q, ka.k, ka.kp)}; }; });
    auto* psurv = pairing->add_subcommand("survival", "archimedean vanishing of the assembled terms");
    add_k(psurv, ka);
    psurv->callback([&] { action = [&] { return std::vector{check_pairing_survival(ka.k, ka.kp)}; }; });

    // local
    auto* local = app.add_subcommand("local", "unramified local computations");
    local->require_subcommand(1);
    local->fallthrough();
    auto* unr = local->add_subcommand("unramified-verify", "Bessel series against the spin L-factor");
    int order = 25, samples = 20;
    bool numeric = false;
    std::uint64_t seed = 1;
    unr->add_option("--order", order, "series order")->check(CLI::Range(1, 200));
    unr->add_flag("--numeric", numeric, "instantiate the Satake symbols at random rationals");
    unr->add_option("--seed", seed, "random seed for --numeric");
    unr->add_option("--samples", samples, "number of accepted instantiations")->check(CLI::Range(1, 10000));
    unr->callback([&] { action = [&] { return std::vector{check_unramified(order, numeric, seed, samples)}; }; });
    auto* bes = local->add_subcommand("bessel", "Bessel value c_m");
    int m = 0;
    bes->add_option("--m", m, "torus index")->required()->check(CLI::Range(0, 60));
    bes->callback([&] { action = [&] { return std::vector{check_bessel(m)}; }; });
    auto* ltate = local->add_subcommand("tate", "unramified Tate factor");
    int exponent = 11, depth = 30;
    ltate->add_option("--exponent", exponent, "p+q+2");
    ltate->add_option("--depth", depth, "valuation depth")->check(CLI::Range(0, 200));
    ltate->callback([&] { action = [&] { return std::vector{check_tate_unramified(exponent, depth)}; }; });

    // arch
    auto* arch = app.add_subcommand("arch", "archimedean computations");
    arch->require_subcommand(1);
    arch->fallthrough();
    auto* mel = arch->add_subcommand("mellin-verify", "Mellin transform of the Meijer G profile");
    add_k(mel, ka);
    mel->callback([&] { action = [&] { return std::vector{check_mellin(ka.k, ka.kp)}; }; });
    auto* tv = arch->add_subcommand("tate-verify", "archimedean Tate integrals");
    int tp = 6, tq = 3, tr = -8, ts = 3;
    tv->add_option("--p", tp);
    tv->add_option("--q", tq);
    tv->add_option("--r", tr);
    tv->add_option("--s", ts);
    tv->callback([&] { action = [&] { return std::vector{check_tate_arch(tp, tq, tr, ts)}; }; });

    auto* trace = app.add_subcommand("trace", "survival, Gamma classification and the net pi exponent");
    add_k(trace, ka);
    trace->callback([&] { action = [&] { return std::vector{check_trace(ka.k, ka.kp)}; }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Format fmt = parse_format(format);
        num::set_digits(digits);
        const auto reports = action();
        out << render(reports, fmt);
        for (const auto& r : reports)
            if (r.status == Status::Fail) return 1;
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "verification error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gsp4
