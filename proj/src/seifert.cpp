#include "fpb/seifert.hpp"

#include <sstream>

namespace fpb {

SeifertMatrix seifert_matrix(const FlatBasketCode& code) {
    const int n = code.bands();
    SeifertMatrix v = SeifertMatrix::Zero(n, n);
    for (int i = 1; i <= n; ++i) {
        const auto fi = code.feet(i);
        for (int j = i + 1; j <= n; ++j) {
            const auto fj = code.feet(j);
            if (fi.first < fj.first && fj.first < fi.second && fi.second < fj.second)
                v(j - 1, i - 1) = -1;
            else if (fj.first < fi.first && fi.first < fj.second && fj.second < fi.second)
                v(j - 1, i - 1) = 1;
        }
    }
    return v;
}

IntMatrix symmetrized(const SeifertMatrix& v) { return v + v.transpose(); }

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            const int x = m(r, c);
            os << (x >= 0 ? " " : "") << x;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace fpb
