#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kac {

// Dimension vector in Z^n; nonnegative in most uses, signed entries are
// allowed for lattice computations.
using DimVector = std::vector<long long>;

long long height(const DimVector& a);
bool is_zero(const DimVector& a);
bool leq(const DimVector& a, const DimVector& b); // componentwise
DimVector vec_add(const DimVector& a, const DimVector& b);
DimVector vec_sub(const DimVector& a, const DimVector& b);
DimVector vec_scaled(const DimVector& a, long long k);
// componentwise quotient when d divides every entry
std::optional<DimVector> vec_divided(const DimVector& a, long long d);
// gcd of the entries (0 for the zero vector)
long long vec_gcd(const DimVector& a);
// by height, then lexicographically
bool graded_lex_less(const DimVector& a, const DimVector& b);
std::string dimvec_str(const DimVector& a); // "0,1,0,2"
DimVector unit_vector(size_t n, size_t i);

struct EdgeSpec {
    int from = 0; // 1-indexed in documents
    int to = 0;
    long long multiplicity = 0;
};

// Loop-free multigraph with the derived symmetric Cartan matrix
// c_ii = 2, c_ij = -b_ij.
class Quiver {
public:
    Quiver(int vertex_count, const std::vector<EdgeSpec>& edges);

    static Quiver from_json_text(const std::string& text);
    static Quiver load_file(const std::string& path);

    int vertex_count() const { return n_; }
    long long edge_multiplicity(int i, int j) const { return b_[i][j]; } // 0-indexed
    long long cartan(int i, int j) const { return i == j ? 2 : -b_[i][j]; }
    long long total_edges() const;

    // a^T C b
    long long bilinear(const DimVector& a, const DimVector& b) const;
    // T(alpha) = sum alpha_i^2 - sum_{i<j} b_ij alpha_i alpha_j = bilinear(a,a)/2
    long long tits(const DimVector& a) const;

private:
    int n_;
    std::vector<std::vector<long long>> b_;
};

// All alpha with 0 <= alpha <= bound componentwise, in graded-lex order
// (increasing height, then lex). Restartable.
class DimVectorStream {
public:
    explicit DimVectorStream(DimVector bound);
    std::optional<DimVector> next();
    void reset();

private:
    bool first_of_height(long long h);

    DimVector bound_;
    DimVector cur_;
    long long ht_ = 0;
    long long ht_max_ = 0;
    bool fresh_ = true;
    bool done_ = false;
};

std::vector<DimVector> dim_vectors_up_to(const DimVector& bound);

} // namespace kac
