// A short walk through the library: hyperbolic numbers, a Lorentz boost, a point of the
// five-sphere and its hyperbolic deformation, and the two interference regimes.

#include <iostream>
#include <numbers>

#include "hyperclifford/hyperclifford.hpp"

using namespace hyperclifford;

int main() {
    const HScalar<Rational> z(Rational(1), Rational(2), Rational(3), Rational(1, 2));
    std::cout << "z = " << z << ", conj z = " << conjugate(z) << ", z conj z = " << qform_scalar(z) << "\n";

    const auto boost = Rotor::from_params(RotorParams::m4({0, 0, 0}, {0, 0, 1.0}));
    const auto rest = Paravector<double>::real(space<double>(SpaceKind::M4), {1, 0, 0, 0});
    const auto moving = act(boost, rest);
    std::cout << "boosted rest frame:";
    for (double c : moving.real_coords()) std::cout << " " << c;
    std::cout << "  (qform " << qform(moving) << ")\n";

    const SphereAngles a{std::numbers::pi / 3, 0.4, 1.1, 2.0, -0.7};
    std::cout << "S5 point:";
    for (double c : sphere_point_via_rotors(1.0, a)) std::cout << " " << c;
    std::cout << "\n";

    const HyperbolicAngles h{0.5, -0.2, 0.3, 0.0, 0.1};
    const auto q = quasi_sphere_point_r66(1.0, a, h);
    const auto x = Paravector<double>::real(space<double>(SpaceKind::R66), {q.begin(), q.end()});
    std::cout << "R66 quasi-sphere point has x xbar = " << qform(x) << "\n";

    for (double lambda : {0.5, -2.0}) {
        const auto lin = linearize({0.3, 0.2, lambda});
        std::cout << "lambda " << lambda << ": " << to_string(lin.regime) << " phase " << lin.theta << ", P "
                  << lin.reconstructed << "\n";
    }
}
