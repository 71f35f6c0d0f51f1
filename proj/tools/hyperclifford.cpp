#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperclifford/hyperclifford.hpp"
#include "hyperclifford/io.hpp"

using namespace hyperclifford;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

constexpr const char* fiber_convention =
    "fiber convention: R66 slots 0-2 = q1..q3, 3-5 = o1..o3 (positive), 6-8 = s1..s3, 9-11 = u1..u3 (negative)";

double default_tol() {
    if (const char* env = std::getenv("HYPERCLIFFORD_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed HYPERCLIFFORD_TOL=" << env << "\n";
        }
    }
    return VerifyOptions{}.tol;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

template <std::size_t N>
std::string format_point(const std::array<double, N>& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < N; ++k) out += (k ? ", " : "") + format_double(p[k]);
    return out + ")";
}

void print_reports(const std::vector<CheckReport>& reports, bool as_json) {
    if (as_json) {
        std::cout << report_json(reports).dump(2) << "\n";
        return;
    }
    for (const auto& r : reports) {
        std::string tag = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "DEVN";
        std::cout << tag << "  " << std::left << std::setw(36) << r.check_id << std::right << " max_error "
                  << std::setw(12) << std::setprecision(3) << r.max_error << "  " << r.description << "  ["
                  << r.paper_ref << "]\n";
    }
    const auto s = summarize(reports);
    std::cout << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.deviation
              << " deviation-documented\n";
}

SphereAngles to_angles(const std::vector<double>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
HyperbolicAngles to_hyperbolic(const std::vector<double>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford algebras over hyperbolic and hyperbolic-complex numbers"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    // verify
    std::string suite = "all";
    double tol = default_tol();
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "all|" + [] {
        std::string s;
        for (const auto& n : suite_names()) s += (s.empty() ? "" : "|") + n;
        return s;
    }());
    verify->add_option("--tol", tol, "tolerance for floating checks")->check(CLI::PositiveNumber);
    add_format(verify);

    // tables
    std::string rep_name;
    auto* tables = app.add_subcommand("tables", "conjugation, reversion and graduation signs of the units");
    tables->add_option("algebra", rep_name, "r01|r10|r30|r05|c30bar|h05bar|hbar")->required();
    add_format(tables);

    // sphere
    double radius = 1.0;
    std::vector<double> angles(5, 0.0);
    std::vector<double> hyperbolic;
    auto* sphere = app.add_subcommand("sphere", "point of the five-sphere, optionally with hyperbolic angles");
    sphere->add_option("--r", radius, "radius")->check(CLI::NonNegativeNumber);
    sphere->add_option("--angles", angles, "phi25,phi02,phi01,phi35,phi34 in radians")
        ->delimiter(',')
        ->expected(5);
    sphere->add_option("--hyperbolic", hyperbolic, "xi25,xi02,xi01,xi35,xi34")->delimiter(',')->expected(5);
    add_format(sphere);

    // boost
    double xi = 0.0;
    int axis = 3;
    std::vector<double> vec;
    auto* boost = app.add_subcommand("boost", "apply exp(j xi sigma_axis / 2) to a Minkowski paravector");
    boost->add_option("--xi", xi, "rapidity")->required();
    boost->add_option("--axis", axis, "1, 2 or 3")->check(CLI::Range(1, 3));
    boost->add_option("--vector", vec, "x0,x1,x2,x3")->delimiter(',')->expected(4)->required();
    add_format(boost);

    // interfere
    InterferenceInput in;
    auto* interfere_cmd = app.add_subcommand("interfere", "interference of two probabilities");
    interfere_cmd->add_option("--p1", in.p1)->required()->check(CLI::Range(0.0, 1.0));
    interfere_cmd->add_option("--p2", in.p2)->required()->check(CLI::Range(0.0, 1.0));
    interfere_cmd->add_option("--lambda", in.lambda)->required();
    add_format(interfere_cmd);

    // pauli
    int k = 0;
    std::vector<int> ab;
    auto* pauli = app.add_subcommand("pauli", "4x4 Pauli matrices");
    auto* k_opt = pauli->add_option("--k", k, "index 1..15")->check(CLI::Range(1, 15));
    auto* ab_opt = pauli->add_option("--ab", ab, "a,b in 0..5")->delimiter(',')->expected(2);
    k_opt->excludes(ab_opt);
    add_format(pauli);

    // decompose
    std::string matrix_text;
    auto* decompose_cmd = app.add_subcommand("decompose", "blade coefficients of a matrix");
    decompose_cmd->add_option("--rep", rep_name, "representation")->required();
    decompose_cmd->add_option("matrix", matrix_text, "JSON rows of numbers or [x,y,v,w]")->required();
    add_format(decompose_cmd);

    // mass
    std::string momentum_text;
    auto* mass = app.add_subcommand("mass", "mass operator p pbar of a hyperbolic-complex momentum");
    mass->add_option("momentum", momentum_text, R"(JSON {"q":[4],"o":[4],"s":[4],"u":[4]})")->required();
    add_format(mass);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    const bool as_json = format == "json";

    try {
        if (*verify) {
            VerifyOptions opt;
            opt.tol = tol;
            const auto reports = run_suite(suite, opt);
            if (!reports) {
                std::cerr << "unknown suite: " << suite << "\n";
                return exit_usage;
            }
            print_reports(*reports, as_json);
            return summarize(*reports).fail == 0 ? exit_ok : exit_fail;
        }

        if (*tables) {
            const auto name = parse_rep(rep_name);
            if (!name) {
                std::cerr << "unknown rep: " << rep_name << "\n";
                return exit_usage;
            }
            const auto rows = involution_table<Rational>(*name);
            if (as_json) {
                std::cout << json(rows).dump(2) << "\n";
            } else {
                std::cout << std::left << std::setw(10) << "unit" << "bar dagger hat\n";
                for (const auto& r : rows) {
                    std::cout << std::setw(10) << r.unit << sign_symbol(r.bar) << "   " << sign_symbol(r.dagger)
                              << "      " << sign_symbol(r.hat) << (r.derived ? "    derived" : "") << "\n";
                }
            }
            return exit_ok;
        }

        if (*sphere) {
            const SphereAngles a = to_angles(angles);
            if (hyperbolic.empty()) {
                const auto closed = sphere_point(radius, a);
                const auto path = sphere_point_via_rotors(radius, a);
                double dev = 0;
                for (std::size_t c = 0; c < 6; ++c) dev = std::max(dev, std::abs(closed[c] - path[c]));
                if (as_json) {
                    std::cout << json{{"closed_form", closed}, {"rotor_path", path}, {"max_deviation", dev}}.dump(2)
                              << "\n";
                } else {
                    std::cout << "closed form: " << format_point(closed) << "\nrotor path:  " << format_point(path)
                              << "\nmax deviation: " << dev << "\n";
                }
            } else {
                const HyperbolicAngles h = to_hyperbolic(hyperbolic);
                const auto closed = quasi_sphere_point_r66(radius, a, h);
                const auto path = quasi_sphere_point_r66_via_rotors(radius, a, h);
                double dev = 0;
                for (std::size_t c = 0; c < 12; ++c) dev = std::max(dev, std::abs(closed[c] - path[c]));
                const auto x = Paravector<double>::real(space<double>(SpaceKind::R66), {closed.begin(), closed.end()});
                const double membership = std::max(max_abs_diff(qform(x), HScalar<double>(radius * radius)),
                                                   qform_non_scalar_residual(x));
                if (as_json) {
                    std::cout << json{{"closed_form", closed},
                                      {"rotor_path", path},
                                      {"max_deviation", dev},
                                      {"membership_residual", membership}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "closed form: " << format_point(closed) << "\nrotor path:  " << format_point(path)
                              << "\nmax deviation: " << dev << "\nmembership residual: " << membership << "\n";
                }
            }
            return exit_ok;
        }

        if (*boost) {
            std::array<double, 3> rapidity{0, 0, 0};
            rapidity[static_cast<std::size_t>(axis - 1)] = xi;
            const auto g = Rotor::from_params(RotorParams::m4({0, 0, 0}, rapidity));
            const auto x = Paravector<double>::real(space<double>(SpaceKind::M4), vec);
            const auto y = act(g, x);
            if (as_json) {
                std::cout << to_json(y).dump(2) << "\n";
            } else {
                std::array<double, 4> c{};
                const auto rc = y.real_coords();
                std::copy(rc.begin(), rc.end(), c.begin());
                std::cout << format_point(c) << "\n";
            }
            return exit_ok;
        }

        if (*interfere_cmd) {
            const double p = interfere(in);
            if (in.p1 * in.p2 == 0.0) {
                if (as_json) {
                    std::cout << json{{"P", p}, {"regime", nullptr}}.dump(2) << "\n";
                } else {
                    std::cout << "P = " << format_double(p) << "\nphase undefined (P1 P2 = 0)\n";
                }
                return exit_ok;
            }
            const auto lin = linearize(in);
            if (as_json) {
                std::cout << json{{"P", p},
                                  {"regime", std::string(to_string(lin.regime))},
                                  {"theta", lin.theta},
                                  {"sign", lin.sign},
                                  {"amplitude", lin.amplitude},
                                  {"reconstructed", lin.reconstructed}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "P = " << format_double(p) << "\nregime: " << to_string(lin.regime)
                          << "\ntheta = " << format_double(lin.theta);
                if (lin.regime == Regime::hyperbolic) std::cout << "\nsign = " << (lin.sign > 0 ? "+" : "-");
                std::cout << "\namplitude = " << to_string(lin.amplitude) << "\n";
            }
            return exit_ok;
        }

        if (*pauli) {
            if (k == 0 && ab.empty()) {
                std::cerr << "pauli needs --k or --ab\n";
                return exit_usage;
            }
            const auto m = ab.empty() ? pauli4<Rational>(k) : sigma_ab<Rational>(ab[0], ab[1]);
            if (as_json) {
                std::cout << json(to_float(m)).dump() << "\n";
            } else {
                std::cout << m;
            }
            return exit_ok;
        }

        if (*decompose_cmd) {
            const auto name = parse_rep(rep_name);
            if (!name) {
                std::cerr << "unknown rep: " << rep_name << "\n";
                return exit_usage;
            }
            const auto m = json::parse(matrix_text).get<HMatrix<double>>();
            const auto u = decompose(m, rep<double>(*name));
            if (as_json) {
                json coeffs = json::object();
                for (Blade b = 0; b < u.rep().blade_count(); ++b)
                    if (!u[b].is_zero()) coeffs[std::to_string(b)] = u[b];
                std::cout << json{{"rep", rep_name}, {"blades", coeffs}}.dump(2) << "\n";
            } else {
                std::cout << to_string(u) << "\n";
            }
            return exit_ok;
        }

        if (*mass) {
            const auto p = json::parse(momentum_text).get<MomentumHM4<double>>();
            const auto q = mass_qform(p);
            const bool hermitian = hermiticity_check(p, tol);
            if (as_json) {
                std::cout << json{{"mass_qform", q},
                                  {"hermitian", hermitian},
                                  {"operator", mass_operator(p)},
                                  {"fiber_convention", fiber_convention}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "p pbar scalar part: " << to_string(q) << "\nhermitian: " << (hermitian ? "yes" : "no")
                          << "\noperator:\n"
                          << mass_operator(p) << fiber_convention << "\n";
            }
            return exit_ok;
        }
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
