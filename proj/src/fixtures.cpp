#include "gring/fixtures.hpp"

namespace gring {

P7Fixtures load_p7_fixtures(const std::string& fixtures_dir) {
    const std::string d = fixtures_dir + "/p7/";
    GroupParams P(7, 3);
    P7Fixtures fx{
        load_lambda_fixture(7, fixtures_dir),
        {},
        {P, read_matrix_file(d + "Lprime_x.mat"), read_matrix_file(d + "Lprime_y.mat")},
        read_matrix_file(d + "h.mat"),
        read_matrix_file(d + "f.mat"),
        read_matrix_file(d + "rho_y.mat"),
        read_matrix_file(d + "sigma_y.mat"),
        read_matrix_file(d + "pibar.mat"),
        {},
        {}};
    for (int k = 1; k <= 6; ++k) {
        fx.theta.emplace(k, Representation{P,
                                           read_matrix_file(d + "theta_" + std::to_string(k) + "_x.mat"),
                                           read_matrix_file(d + "theta_" + std::to_string(k) + "_y.mat")});
    }
    for (int i : {1, 3, 4, 5, 6}) {
        fx.C.emplace(i, read_matrix_file(d + "C_" + std::to_string(i) + ".mat"));
        fx.D.emplace(i, read_matrix_file(d + "D_" + std::to_string(i) + ".mat"));
    }
    return fx;
}

} // namespace gring
