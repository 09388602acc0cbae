// Small library tour: build the Pascal/anti-diagonal nets, print their
// points and t-values, then recover the conjugation witness for B = P*J.
#include <iostream>

#include "t0net/t0net.hpp"

int main() {
    using namespace t0net;
    const int m = 3;

    const auto [faure2d, faure3d] = faure_nets(m);
    std::cout << "points of the net generated by (I, P, J) at m = " << m << ":\n"
              << format_point_set(generate_points(faure3d));
    std::cout << "t-value (rank criterion): " << t_value_rank(faure3d).t << "\n";
    std::cout << "t-value (cell counting):  " << t_value_geometric(faure3d) << "\n\n";

    const BitMatrix b = multiply(pascal(m), antidiag(m));
    std::cout << "B = P*J:\n" << format_matrix(b);
    const DecomposeResult d = decompose_t0_triple(b);
    std::cout << "conjugation witness L (B = L*P*J*L^-1):\n" << format_matrix(*d.conjugator);
    std::cout << "orbit size at m = " << m << ": " << conjugacy_orbit(m).size() << "\n";
    return 0;
}
