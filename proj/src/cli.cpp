#include "rhsinv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rhsinv/finitetype.hpp"
#include "rhsinv/json_io.hpp"
#include "rhsinv/rt_numeric.hpp"
#include "rhsinv/surgery.hpp"

namespace rhsinv::cli {

namespace {

using io::json;

std::string fmt_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

numtheory::SurgeryCoeff parse_slope(const std::string& s) {
    auto pos = s.find_first_of(",/");
    if (pos == std::string::npos)
        throw std::invalid_argument("surgery slope must be \"p,q\" or \"p/q\", got \"" + s + "\"");
    return numtheory::SurgeryCoeff(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
}

int selfcheck(std::ostream& out) {
    int failures = 0;
    auto line = [&](const std::string& name, bool ok) {
        out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {  // Dedekind reciprocity on random coprime pairs up to 10^6.
        std::mt19937 rng(12345);
        std::uniform_int_distribution<long long> dist(1, 1000000);
        int checked = 0;
        bool ok = true;
        while (checked < 200) {
            long long p = dist(rng), q = dist(rng);
            if (std::gcd(p, q) != 1) continue;
            ++checked;
            Rational lhs = numtheory::dedekind_sum(p, q) + numtheory::dedekind_sum(q, p);
            Rational rhs = Rational(Int(static_cast<long>(p)) * static_cast<long>(p) +
                                        Int(static_cast<long>(q)) * static_cast<long>(q) + 1,
                                    Int(12) * static_cast<long>(p) * static_cast<long>(q)) -
                           Rational(1, 4);
            if (lhs != rhs) ok = false;
        }
        line("dedekind reciprocity (200 random pairs <= 1e6)", ok);
    }

    {  // Lens space two-path equality, n <= 6.
        bool ok = true;
        jones::JonesGrid unknot = jones::unknot_grid(6);
        for (long long p = 2; p <= 12; ++p)
            for (long long q = 1; q < p; ++q) {
                if (std::gcd(p, q) != 1) continue;
                surgery::SurgeryPresentation sp;
                sp.cls = jones::SlopeClass::BL;
                sp.grid = unknot;
                sp.components.push_back({numtheory::SurgeryCoeff(p, q), 0});
                auto via_surgery = surgery::perturbative_invariants(sp, 6);
                auto closed = surgery::lens_space_invariants(p, q, 6);
                if (!(via_surgery.S == closed.S && via_surgery.ord_h1 == closed.ord_h1)) ok = false;
            }
        line("lens space two-path equality (p <= 12, n <= 6)", ok);
    }

    {  // Borromean alternating sum vs diagram sum.
        bool ok = true;
        for (long long q1 : {1, 2, -3})
            for (long long q2 : {1, -2}) {
                long long q3 = 3;
                jones::MilnorData md;
                md.N = 3;
                md.triples[{0, 1, 2}] = 1;
                surgery::SurgeryPresentation sp;
                sp.cls = jones::SlopeClass::ASL;
                sp.milnor = md;
                sp.grid = jones::asl_low_order_grid(md, 1);
                sp.components = {{numtheory::SurgeryCoeff(1, q1), 0},
                                 {numtheory::SurgeryCoeff(1, q2), 0},
                                 {numtheory::SurgeryCoeff(1, q3), 0}};
                Rational expected = Rational(-12) * Rational(static_cast<long>(q1 * q2 * q3));
                auto rep = finitetype::two_path_report(sp, 1);
                if (!(rep.match && rep.alternating_sum == expected)) ok = false;
            }
        line("borromean two-path alternating sum = diagram sum", ok);
    }

    {  // Finite-type vanishing on a 4-component split extension.
        jones::MilnorData md;
        md.N = 4;
        md.triples[{0, 1, 2}] = 1;
        surgery::SurgeryPresentation sp;
        sp.cls = jones::SlopeClass::ASL;
        sp.milnor = md;
        sp.grid = jones::asl_low_order_grid(md, 1);
        sp.components = {{numtheory::SurgeryCoeff(1, 2), 0},
                         {numtheory::SurgeryCoeff(1, 3), 0},
                         {numtheory::SurgeryCoeff(1, -1), 0},
                         {numtheory::SurgeryCoeff(1, 5), 0}};
        line("alternating sum vanishes on 4-component split extension",
             finitetype::alternating_sum_sublinks(sp, 1).is_zero());
    }

    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    series::on_truncation = [&err](int kept, int dropped) {
        err << "warning: mixed series orders, truncating " << dropped << " to " << kept << "\n";
    };

    CLI::App app{"Exact perturbative invariants of rational homology spheres from surgery presentations"};
    app.require_subcommand(1);

    // lens
    long long lens_p = 0, lens_q = 1;
    int lens_nmax = 2;
    auto* lens = app.add_subcommand("lens", "Closed-form invariants of the lens space L(p,q)");
    lens->add_option("-p", lens_p, "p (nonzero)")->required();
    lens->add_option("-q", lens_q, "q (coprime to p)")->required();
    lens->add_option("--n-max", lens_nmax, "highest invariant order");

    // surgery
    std::string surgery_file;
    int surgery_nmax = -1;
    auto* surg = app.add_subcommand("surgery", "Invariants from a surgery presentation file");
    surg->add_option("file", surgery_file, "presentation JSON")->required();
    surg->add_option("--n-max", surgery_nmax, "override the file's n_max");

    // hoste
    std::string hoste_file;
    auto* hoste = app.add_subcommand("hoste", "S_1 and lambda_CW via the explicit phi_1 surgery formula");
    hoste->add_option("file", hoste_file, "presentation JSON")->required();

    // alt-sum
    std::string altsum_file;
    int altsum_n = 1;
    auto* altsum = app.add_subcommand("alt-sum", "Alternating sum of S_n over sublink surgeries");
    altsum->add_option("file", altsum_file, "presentation JSON")->required();
    altsum->add_option("--n", altsum_n, "invariant order")->required();

    // diagram-sum
    std::string diag_file;
    int diag_n = 1;
    auto* diag = app.add_subcommand("diagram-sum", "Trivalent-diagram evaluation vs the alternating sum");
    diag->add_option("file", diag_file, "presentation JSON")->required();
    diag->add_option("--n", diag_n, "invariant order")->required();

    // shift-sum
    long long ss_p = 1, ss_q = 0;
    int ss_n = 1, ss_nprime = 1, ss_order = -1;
    std::string ss_grid;
    auto* ss = app.add_subcommand("shift-sum", "Alternating sums over shifted surgeries (p, q + sum mu_j) on a knot");
    ss->add_option("--p", ss_p)->required();
    ss->add_option("--q", ss_q)->required();
    ss->add_option("--n", ss_n, "number of +-1 shifts")->required();
    ss->add_option("--n-prime", ss_nprime, "invariant order")->required();
    ss->add_option("--grid", ss_grid, "knot grid fixture (default: unknot)");
    ss->add_option("--order", ss_order, "unknot grid order (default: n-prime)");

    // integerize
    std::string int_file;
    long long int_p = 0, int_q = 1;
    int int_n = 1;
    auto* integ = app.add_subcommand("integerize", "Integer-valued rescaling and denominator bound of S_n");
    integ->add_option("file", int_file, "presentation JSON");
    integ->add_option("--lens-p", int_p, "lens space p instead of a file");
    integ->add_option("--lens-q", int_q, "lens space q");
    integ->add_option("--n", int_n, "invariant order")->required();

    // rt-eval
    std::vector<std::string> rt_slopes;
    int rt_kmin = 1, rt_kmax = 48, rt_digits = 12;
    auto* rt = app.add_subcommand("rt-eval", "Finite-K surgery sums on a split unlink (CSV)");
    rt->add_option("--surgery", rt_slopes, "slope p,q (repeatable)")->required();
    rt->add_option("--k-min", rt_kmin, "lowest level k");
    rt->add_option("--k-max", rt_kmax, "highest level k");
    rt->add_option("--digits", rt_digits, "significant digits in the CSV");

    auto* self = app.add_subcommand("selfcheck", "Run the built-in consistency suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*lens) {
            auto inv = surgery::lens_space_invariants(lens_p, lens_q, lens_nmax);
            emit(out, io::invariants_to_json(inv));
        } else if (*surg) {
            io::PresentationFile pf = io::load_presentation(surgery_file);
            int n_max = surgery_nmax > 0 ? surgery_nmax : pf.n_max;
            auto inv = surgery::perturbative_invariants(pf.presentation, n_max);
            emit(out, io::surgery_output_json(inv, surgery::framing_correction(pf.presentation),
                                              surgery::delta_coefficients(pf.presentation, n_max)));
        } else if (*hoste) {
            io::PresentationFile pf = io::load_presentation(hoste_file);
            Rational s1 = surgery::hoste_s1(pf.presentation);
            json j;
            j["S1"] = io::rational_str(s1);
            j["lambda_cw"] = io::rational_str(s1 / Rational(6));
            j["delta_fr"] = io::rational_str(surgery::framing_correction(pf.presentation));
            emit(out, j);
        } else if (*altsum) {
            io::PresentationFile pf = io::load_presentation(altsum_file);
            json j;
            j["order"] = altsum_n;
            j["alternating_sum"] =
                io::rational_str(finitetype::alternating_sum_sublinks(pf.presentation, altsum_n));
            emit(out, j);
        } else if (*diag) {
            io::PresentationFile pf = io::load_presentation(diag_file);
            auto rep = finitetype::two_path_report(pf.presentation, diag_n);
            json j;
            j["order"] = rep.order;
            j["alternating_sum"] = io::rational_str(rep.alternating_sum);
            j["diagram_sum"] = io::rational_str(rep.diagram_value);
            json ds = json::array();
            for (std::size_t i = 0; i < rep.diagrams.size(); ++i) {
                json d;
                json vs = json::array();
                for (const auto& v : rep.diagrams[i].vertices) vs.push_back({v[0], v[1], v[2]});
                d["vertices"] = vs;
                d["weight"] = rep.weights[i];
                ds.push_back(d);
            }
            j["diagrams"] = ds;
            j["match"] = rep.match;
            emit(out, j);
        } else if (*ss) {
            jones::JonesGrid grid;
            if (!ss_grid.empty())
                grid = io::grid_from_json(io::load_json_file(ss_grid));
            else
                grid = jones::unknot_grid(std::max(ss_order, std::max(ss_nprime, 1)));
            json j;
            j["n"] = ss_n;
            j["n_prime"] = ss_nprime;
            j["delta_level"] = io::rational_str(
                finitetype::surgery_shift_alternating_sum_delta(grid, ss_p, ss_q, ss_n, ss_nprime));
            Rational s_level =
                finitetype::surgery_shift_alternating_sum(grid, ss_p, ss_q, ss_n, ss_nprime);
            j["s_level"] = io::rational_str(s_level);
            if (ss_n == 1 && ss_nprime == 1 && ss_p == 1) {
                // First-order identity: the computed sum equals 1 - 6 d_{1,0};
                // the variant with q in place of 1 is reported for comparison.
                Rational d10 = grid.at(jones::GridKey{{1}, 0});
                j["first_order_prediction"] = io::rational_str(Rational(1) - Rational(6) * d10);
                j["first_order_prediction_q_variant"] =
                    io::rational_str(Rational(static_cast<long>(ss_q)) - Rational(6) * d10);
            }
            emit(out, j);
        } else if (*integ) {
            surgery::RhsInvariants inv;
            if (!int_file.empty()) {
                io::PresentationFile pf = io::load_presentation(int_file);
                inv = surgery::perturbative_invariants(pf.presentation, std::max(pf.n_max, int_n));
            } else if (int_p != 0) {
                inv = surgery::lens_space_invariants(int_p, int_q, int_n);
            } else {
                throw std::invalid_argument("integerize: provide a presentation file or --lens-p/--lens-q");
            }
            auto res = surgery::integerize(inv, int_n);
            auto bound = surgery::denominator_bound_check(inv, int_n);
            json j;
            j["n"] = int_n;
            j["S"] = io::rational_str(inv.s(int_n));
            j["S_int"] = res.value.str();
            j["integral"] = res.integral;
            j["denominator"] = bound.denominator.get_str();
            j["denominator_bound_pass"] = bound.pass;
            json primes = json::array();
            for (const auto& f : bound.prime_factors) primes.push_back(f.get_str());
            j["denominator_primes"] = primes;
            emit(out, j);
        } else if (*rt) {
            std::vector<numtheory::SurgeryCoeff> slopes;
            for (const auto& s : rt_slopes) slopes.push_back(parse_slope(s));
            if (rt_kmin < 1 || rt_kmax < rt_kmin)
                throw std::invalid_argument("rt-eval: need 1 <= k-min <= k-max");
            out << "k,K,re_z,im_z,abs_z_minus_ztr\n";
            for (int k = rt_kmin; k <= rt_kmax; ++k) {
                rt::RTLevel level(k);
                rt::Complex z = rt::rt_unknot_surgery(slopes, level);
                rt::Complex ztr = rt::lens_sum_trivial_connection(slopes, level);
                out << k << "," << level.K << "," << fmt_double(z.real(), rt_digits) << ","
                    << fmt_double(z.imag(), rt_digits) << ","
                    << fmt_double(std::abs(z - ztr), rt_digits) << "\n";
            }
        } else if (*self) {
            return selfcheck(out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace rhsinv::cli
