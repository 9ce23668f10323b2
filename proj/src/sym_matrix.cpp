#include "loglap/sym_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace loglap {

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::fabs(v));
    return m;
}

bool SymMatrix::is_symmetric() const {
    for (int i = 0; i < n_; i++)
        for (int j = i + 1; j < n_; j++)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    if (other.n_ != n_)
        throw std::invalid_argument("SymMatrix: order mismatch");
    for (size_t k = 0; k < data_.size(); k++)
        data_[k] += other.data_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
    if (other.n_ != n_)
        throw std::invalid_argument("SymMatrix: order mismatch");
    for (size_t k = 0; k < data_.size(); k++)
        data_[k] -= other.data_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double c) {
    for (double& v : data_)
        v *= c;
    return *this;
}

std::vector<double> SymMatrix::multiply(const std::vector<double>& x) const {
    if ((int)x.size() != n_)
        throw std::invalid_argument("SymMatrix::multiply: length mismatch");
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; i++) {
        double acc = 0.0;
        const double* row = data_.data() + size_t(i) * n_;
        for (int j = 0; j < n_; j++)
            acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

double max_entry_diff(const SymMatrix& a, const SymMatrix& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("max_entry_diff: order mismatch");
    double m = 0.0;
    for (int i = 0; i < a.order(); i++)
        for (int j = 0; j < a.order(); j++)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

void write_matrix_csv(const SymMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_matrix_csv: cannot open " + path);
    char buf[40];
    for (int i = 0; i < m.order(); i++) {
        for (int j = 0; j < m.order(); j++) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            out << buf << (j + 1 < m.order() ? "," : "");
        }
        out << "\n";
    }
}

SymMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_matrix_csv: cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric && rows.empty())
            continue; // tolerate a header row
        if (!numeric)
            throw std::runtime_error("read_matrix_csv: malformed row");
        rows.push_back(std::move(row));
    }
    const int n = (int)rows.size();
    SymMatrix m(n);
    for (int i = 0; i < n; i++) {
        if ((int)rows[i].size() != n)
            throw std::runtime_error("read_matrix_csv: not a square grid");
        for (int j = 0; j < n; j++)
            m.data()[size_t(i) * n + j] = rows[i][j];
    }
    return m;
}

} // namespace loglap
