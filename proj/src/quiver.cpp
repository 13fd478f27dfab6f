#include "kac/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kac/errors.hpp"
#include "json.hpp"

namespace kac {

long long height(const DimVector& a) {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

bool is_zero(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

bool leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::BoundMismatch, "dimension vectors of different rank");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

DimVector vec_add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::BoundMismatch, "dimension vectors of different rank");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector vec_sub(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::BoundMismatch, "dimension vectors of different rank");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector vec_scaled(const DimVector& a, long long k) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

std::optional<DimVector> vec_divided(const DimVector& a, long long d) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] % d != 0) return std::nullopt;
        r[i] = a[i] / d;
    }
    return r;
}

long long vec_gcd(const DimVector& a) {
    long long g = 0;
    for (long long x : a) g = std::gcd(g, x);
    return g;
}

bool graded_lex_less(const DimVector& a, const DimVector& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string dimvec_str(const DimVector& a) {
    std::ostringstream out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out << ',';
        out << a[i];
    }
    return out.str();
}

DimVector unit_vector(size_t n, size_t i) {
    DimVector e(n, 0);
    e[i] = 1;
    return e;
}

Quiver::Quiver(int vertex_count, const std::vector<EdgeSpec>& edges) : n_(vertex_count) {
    if (n_ <= 0) fail(ErrorKind::BadDocument, "vertex count must be positive");
    b_.assign(n_, std::vector<long long>(n_, 0));
    for (const EdgeSpec& e : edges) {
        if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_)
            fail(ErrorKind::BadIndex, "edge endpoint out of range: (" + std::to_string(e.from) +
                                          "," + std::to_string(e.to) + ")");
        if (e.from == e.to)
            fail(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.from));
        if (e.multiplicity < 0)
            fail(ErrorKind::NegativeMultiplicity,
                 "negative edge multiplicity " + std::to_string(e.multiplicity));
        b_[e.from - 1][e.to - 1] += e.multiplicity;
        b_[e.to - 1][e.from - 1] += e.multiplicity;
    }
}

Quiver Quiver::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorKind::BadDocument, std::string("not valid JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer())
        fail(ErrorKind::BadDocument, "document needs an integer \"vertices\" field");
    int n = doc["vertices"].get<int>();
    if (!doc.contains("edges") || !doc["edges"].is_array())
        fail(ErrorKind::BadDocument, "document needs an \"edges\" array (may be empty)");
    std::vector<EdgeSpec> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            fail(ErrorKind::BadDocument, "each edge must be [from, to, multiplicity]");
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<long long>()});
    }
    return Quiver(n, edges);
}

Quiver Quiver::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::BadDocument, "cannot open quiver file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

long long Quiver::total_edges() const {
    long long t = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) t += b_[i][j];
    return t;
}

long long Quiver::bilinear(const DimVector& a, const DimVector& b) const {
    if ((int)a.size() != n_ || (int)b.size() != n_)
        fail(ErrorKind::BoundMismatch, "dimension vector rank does not match quiver");
    long long s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += a[i] * cartan(i, j) * b[j];
    return s;
}

long long Quiver::tits(const DimVector& a) const {
    long long s = bilinear(a, a);
    // (alpha, alpha) is always even; T = (alpha, alpha)/2
    return s / 2;
}

DimVectorStream::DimVectorStream(DimVector bound) : bound_(std::move(bound)) {
    for (long long b : bound_)
        if (b < 0) fail(ErrorKind::BoundMismatch, "negative entry in bound");
    ht_max_ = height(bound_);
    reset();
}

void DimVectorStream::reset() {
    cur_.assign(bound_.size(), 0);
    ht_ = 0;
    fresh_ = true;
    done_ = bound_.empty();
}

// Smallest vector of height h under the bound in lex order: push the mass as
// far right as the bound allows.
bool DimVectorStream::first_of_height(long long h) {
    cur_.assign(bound_.size(), 0);
    long long rest = h;
    for (size_t k = bound_.size(); k-- > 0 && rest > 0;) {
        long long take = std::min(rest, bound_[k]);
        cur_[k] = take;
        rest -= take;
    }
    return rest == 0;
}

std::optional<DimVector> DimVectorStream::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return cur_; // the zero vector
    }
    // Successor within the current height: find the rightmost position that
    // can give one unit to a strictly later position-set, i.e. some i with a
    // positive suffix after it; bump cur_[i] if allowed, else carry further
    // left. Equivalent formulation: find rightmost i < last with
    // suffix_sum(i+1) > 0 and cur_[i] < bound_[i]; increment cur_[i], collect
    // s = suffix_sum(i+1) - 1, redistribute s rightmost-first.
    size_t n = bound_.size();
    long long suffix = 0;
    for (size_t i = n; i-- > 0;) {
        if (i + 1 < n) suffix += cur_[i + 1];
        if (i + 1 < n && suffix > 0 && cur_[i] < bound_[i]) {
            ++cur_[i];
            long long rest = suffix - 1;
            for (size_t k = i + 1; k < n; ++k) cur_[k] = 0;
            for (size_t k = n; k-- > i + 1 && rest > 0;) {
                long long take = std::min(rest, bound_[k]);
                cur_[k] = take;
                rest -= take;
            }
            return cur_;
        }
    }
    // Height exhausted; move to the next height that is realizable.
    while (++ht_ <= ht_max_)
        if (first_of_height(ht_)) return cur_;
    done_ = true;
    return std::nullopt;
}

std::vector<DimVector> dim_vectors_up_to(const DimVector& bound) {
    DimVectorStream s(bound);
    std::vector<DimVector> out;
    while (auto v = s.next()) out.push_back(*v);
    return out;
}

} // namespace kac
