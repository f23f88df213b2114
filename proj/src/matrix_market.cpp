#include "hecsolve/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hec {

namespace {

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error("read_matrix_market: " + what + " in " + path);
}

} // namespace

CsrMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_matrix_market: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) fail(path, "missing header");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (lowered(banner) != "%%matrixmarket" || lowered(object) != "matrix" ||
        lowered(format) != "coordinate" || lowered(field) != "real")
        fail(path, "malformed header '" + line + "'");
    symmetry = lowered(symmetry);
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") fail(path, "unsupported symmetry '" + symmetry + "'");

    // Comments and blank lines may precede the size line.
    do {
        if (!std::getline(in, line)) fail(path, "missing size line");
    } while (line.empty() || line[0] == '%');

    long long rows = 0, cols = 0, entries = 0;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> entries) || rows < 0 || cols < 0 || entries < 0)
        fail(path, "malformed size line '" + line + "'");
    if (symmetric && rows != cols) fail(path, "symmetric header on a non-square size line");

    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(symmetric ? 2 * entries : entries));
    for (long long t = 0; t < entries; ++t) {
        long long i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) fail(path, "unexpected end of entries");
        if (i < 1 || i > rows || j < 1 || j > cols)
            fail(path, "entry index out of bounds at line " + std::to_string(t + 1));
        trips.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), v});
        if (symmetric && i != j)
            trips.push_back({static_cast<int>(j - 1), static_cast<int>(i - 1), v});
    }
    // csr_from_triples rejects duplicates, covering invalid symmetric files
    // that store both halves.
    return csr_from_triples(static_cast<int>(rows), static_cast<int>(cols), std::move(trips));
}

void write_matrix_market(const CsrMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix_market: cannot open " + path);
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.n_rows << ' ' << a.n_cols << ' ' << a.nnz() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < a.n_rows; ++i)
        for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k)
            out << i + 1 << ' ' << a.col_indices[k] + 1 << ' ' << a.values[k] << '\n';
    if (!out) throw std::runtime_error("write_matrix_market: write failed for " + path);
}

} // namespace hec
