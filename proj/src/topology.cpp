#include "cecoh/topology.hpp"

namespace cecoh {

long euler_characteristic(const BettiVector& b) {
    long chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * b[k];
    return chi;
}

BettiVector blowup_betti(const BettiVector& ambient, const BettiVector& sub, int codim) {
    if (ambient.empty() || sub.empty())
        throw ValidationError("empty Betti vector");
    if (codim < 2 || codim % 2 != 0)
        throw ValidationError("codimension must be even and at least 2");
    int dimX = static_cast<int>(ambient.size()) - 1;
    int dimY = static_cast<int>(sub.size()) - 1;
    if (dimX - dimY != codim)
        throw ValidationError("codimension does not match the two dimensions: " +
                              std::to_string(dimX) + " - " + std::to_string(dimY) +
                              " != " + std::to_string(codim));
    int k = codim / 2;
    BettiVector out = ambient;
    for (int m = 0; m <= dimX; ++m)
        for (int i = 1; i <= k - 1; ++i) {
            int j = m - 2 * i;
            if (j >= 0 && j <= dimY)
                out[static_cast<std::size_t>(m)] += sub[static_cast<std::size_t>(j)];
        }
    return out;
}

BettiVector mapping_torus_betti(const BettiVector& b, const AutomorphismAction& action) {
    if (action.on_degree.size() != b.size())
        throw DimensionMismatch("one action matrix per degree required");
    for (std::size_t k = 0; k < b.size(); ++k) {
        const QMatrix& m = action.on_degree[k];
        if (m.rows() != b[k] || m.cols() != b[k])
            throw DimensionMismatch("action matrix in degree " + std::to_string(k) +
                                    " must be square of size b_k");
    }
    BettiVector out(b.size() + 1, 0);
    std::vector<long> rank_shift(b.size(), 0);
    std::vector<long> ker(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) {
        QMatrix shifted = action.on_degree[k] - QMatrix::identity(static_cast<int>(b[k]));
        rank_shift[k] = shifted.rank();
        ker[k] = b[k] - rank_shift[k];
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        long v = (k < b.size()) ? ker[k] : 0;
        long c = (k >= 1 && k - 1 < b.size()) ? b[k - 1] - rank_shift[k - 1] : 0;
        out[k] = v + c;
    }
    return out;
}

BettiVector kunneth_betti(const BettiVector& a, const BettiVector& b) {
    if (a.empty() || b.empty())
        throw ValidationError("empty Betti vector");
    BettiVector out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace cecoh
