#ifndef LOGLAP_SYM_MATRIX_HPP
#define LOGLAP_SYM_MATRIX_HPP

#include <string>
#include <vector>

namespace loglap {

// Dense symmetric real matrix, full row-major storage. set() writes both
// triangles so the invariant entries(i,j) == entries(j,i) holds exactly.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), data_(size_t(n) * n, 0.0) {}

    int order() const { return n_; }
    double operator()(int i, int j) const { return data_[size_t(i) * n_ + j]; }
    void set(int i, int j, double v) {
        data_[size_t(i) * n_ + j] = v;
        data_[size_t(j) * n_ + i] = v;
    }
    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    double max_abs() const;
    bool is_symmetric() const;

    SymMatrix& operator+=(const SymMatrix& other);
    SymMatrix& operator-=(const SymMatrix& other);
    SymMatrix& operator*=(double c);
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }

    std::vector<double> multiply(const std::vector<double>& x) const;

  private:
    int n_ = 0;
    std::vector<double> data_;
};

// Largest |a_ij - b_ij|.
double max_entry_diff(const SymMatrix& a, const SymMatrix& b);

// Row-major CSV grid, 17 significant digits per entry.
void write_matrix_csv(const SymMatrix& m, const std::string& path);
SymMatrix read_matrix_csv(const std::string& path);

} // namespace loglap

#endif
