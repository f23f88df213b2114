#include "hecsolve/poisson.hpp"

#include <limits>
#include <stdexcept>

namespace hec {

CsrMatrix gen_poisson7(int nx, int ny, int nz) {
    if (nx < 1 || ny < 1 || nz < 1)
        throw std::invalid_argument("gen_poisson7: grid dimensions must be >= 1");
    const long long n = static_cast<long long>(nx) * ny * nz;
    const long long nnz = 7 * n - 2 * (static_cast<long long>(nx) * ny +
                                       static_cast<long long>(ny) * nz +
                                       static_cast<long long>(nx) * nz);
    if (n > std::numeric_limits<int>::max() || nnz > std::numeric_limits<int>::max())
        throw std::overflow_error("gen_poisson7: index range overflow");

    CsrMatrix m;
    m.n_rows = m.n_cols = static_cast<int>(n);
    m.row_offsets.reserve(n + 1);
    m.row_offsets.push_back(0);
    m.col_indices.reserve(nnz);
    m.values.reserve(nnz);

    const int plane = nx * ny;
    int id = 0;
    for (int z = 0; z < nz; ++z) {
        for (int y = 0; y < ny; ++y) {
            for (int x = 0; x < nx; ++x, ++id) {
                if (z > 0) { m.col_indices.push_back(id - plane); m.values.push_back(-1.0); }
                if (y > 0) { m.col_indices.push_back(id - nx); m.values.push_back(-1.0); }
                if (x > 0) { m.col_indices.push_back(id - 1); m.values.push_back(-1.0); }
                m.col_indices.push_back(id);
                m.values.push_back(6.0);
                if (x < nx - 1) { m.col_indices.push_back(id + 1); m.values.push_back(-1.0); }
                if (y < ny - 1) { m.col_indices.push_back(id + nx); m.values.push_back(-1.0); }
                if (z < nz - 1) { m.col_indices.push_back(id + plane); m.values.push_back(-1.0); }
                m.row_offsets.push_back(static_cast<int>(m.col_indices.size()));
            }
        }
    }
    return m;
}

} // namespace hec
