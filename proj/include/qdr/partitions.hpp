#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdr/rat.hpp"

namespace qdr {

/// Generalized partition: a weakly decreasing integer vector, i.e. a Young
/// frame that may have negative columns.
class GenPartition {
public:
    GenPartition() = default;
    explicit GenPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw std::invalid_argument("GenPartition: parts must be weakly decreasing");
    }

    static GenPartition zero(int n) { return GenPartition(std::vector<int>(n, 0)); }
    static GenPartition ones(int n) { return GenPartition(std::vector<int>(n, 1)); }

    /// Parses the CLI literal syntax "2,-1".
    static GenPartition parse(const std::string& s, int n = -1) {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            parts.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        if (n > 0) {
            if (static_cast<int>(parts.size()) > n)
                throw std::invalid_argument("GenPartition: more parts than N");
            parts.resize(n, 0);
        }
        return GenPartition(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(i); }

    long weight() const { // |lambda|, the signed box count
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    long box_count() const { // number of cells, negative columns counted once each
        long s = 0;
        for (int p : parts_) s += std::abs(p);
        return s;
    }
    bool is_zero() const {
        for (int p : parts_) if (p != 0) return false;
        return true;
    }
    bool nonnegative() const { return parts_.empty() || parts_.back() >= 0; }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const GenPartition& a, const GenPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const GenPartition& a, const GenPartition& b) { return !(a == b); }
    friend bool operator<(const GenPartition& a, const GenPartition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Signed cell of a generalized Young frame.
struct Cell {
    int row = 0;      // 1-based
    int col = 0;      // may be <= 0 for negative columns
    int sign = 1;     // +1 for col >= 1, -1 otherwise
    int content = 0;  // col - row
};

/// Enumerates the signed cells: (i,j) with 1 <= j <= lambda_i or lambda_i < j <= 0.
inline std::vector<Cell> boxes(const GenPartition& lam) {
    std::vector<Cell> cells;
    for (int i = 1; i <= lam.rows(); ++i) {
        int li = lam.part(i - 1);
        if (li >= 1) {
            for (int j = 1; j <= li; ++j) cells.push_back({i, j, 1, j - i});
        } else if (li < 0) {
            for (int j = li + 1; j <= 0; ++j) cells.push_back({i, j, -1, j - i});
        }
    }
    return cells;
}

struct PartitionStats {
    long weight = 0;     // |lambda|
    long content = 0;    // c(lambda) = sum sgn(x) c(x)
    long n_lambda = 0;   // n(lambda) = sum (i-1) lambda_i
    long n_conj = 0;     // n(lambda') (only for nonnegative lambda)
    bool has_conjugate = false;
    std::vector<int> conjugate;
};

inline PartitionStats stats(const GenPartition& lam) {
    PartitionStats st;
    st.weight = lam.weight();
    for (const Cell& c : boxes(lam)) st.content += c.sign * c.content;
    for (int i = 0; i < lam.rows(); ++i) st.n_lambda += static_cast<long>(i) * lam.part(i);
    if (lam.nonnegative()) {
        st.has_conjugate = true;
        int height = lam.rows() ? lam.part(0) : 0;
        st.conjugate.assign(height, 0);
        for (int i = 0; i < lam.rows(); ++i)
            for (int j = 0; j < lam.part(i); ++j) st.conjugate[j]++;
        for (size_t j = 0; j < st.conjugate.size(); ++j)
            st.n_conj += static_cast<long>(j) * st.conjugate[j];
    }
    return st;
}

inline std::vector<int> conjugate_or_throw(const GenPartition& lam) {
    if (!lam.nonnegative())
        throw std::domain_error("conjugate: defined only for nonnegative parts");
    return stats(lam).conjugate;
}

/// lambda + (k^N), the uniform shift.
inline GenPartition shift(const GenPartition& lam, int k) {
    std::vector<int> p = lam.parts();
    for (int& x : p) x += k;
    return GenPartition(p);
}

// ---------------------------------------------------------------------------
// Group data.

enum class GroupFamily { GL, SL, OOdd, OEven, SOOdd, SOEven, Sp };

inline const char* family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::GL: return "GL";
        case GroupFamily::SL: return "SL";
        case GroupFamily::OOdd: return "O(odd)";
        case GroupFamily::OEven: return "O(even)";
        case GroupFamily::SOOdd: return "SO(odd)";
        case GroupFamily::SOEven: return "SO(even)";
        case GroupFamily::Sp: return "Sp";
    }
    return "?";
}

struct GroupSpec {
    GroupFamily family = GroupFamily::GL;
    int N = 2;

    GroupSpec() = default;
    GroupSpec(GroupFamily f, int n) : family(f), N(n) {
        if (is_a_series() ? N < 2 : N < 3)
            throw std::invalid_argument("GroupSpec: N too small for the family");
        if ((family == GroupFamily::OOdd || family == GroupFamily::SOOdd) && N % 2 == 0)
            throw std::invalid_argument("GroupSpec: odd family requires odd N");
        if ((family == GroupFamily::OEven || family == GroupFamily::SOEven) && N % 2 == 1)
            throw std::invalid_argument("GroupSpec: even family requires even N");
        if (family == GroupFamily::Sp && N % 2 == 1)
            throw std::invalid_argument("GroupSpec: symplectic family requires even N");
    }

    bool is_a_series() const { return family == GroupFamily::GL || family == GroupFamily::SL; }
    int epsilon() const { return family == GroupFamily::Sp ? -1 : 1; }

    /// Membership in P(A): the dominance lattice cut out by the family.
    bool admits(const GenPartition& lam) const {
        if (lam.rows() != N) return false;
        switch (family) {
            case GroupFamily::GL:
                return true; // all of P_+
            case GroupFamily::SL:
                return lam.nonnegative() && lam.part(N - 1) == 0;
            case GroupFamily::OOdd:
            case GroupFamily::OEven: {
                if (!lam.nonnegative()) return false;
                int c1 = 0, c2 = 0;
                for (int i = 0; i < N; ++i) {
                    if (lam.part(i) >= 1) ++c1;
                    if (lam.part(i) >= 2) ++c2;
                }
                return c1 + c2 <= N;
            }
            case GroupFamily::SOOdd:
            case GroupFamily::SOEven: {
                if (!lam.nonnegative()) return false;
                int c1 = 0;
                for (int i = 0; i < N; ++i)
                    if (lam.part(i) >= 1) ++c1;
                return 2 * c1 <= N;
            }
            case GroupFamily::Sp: {
                if (!lam.nonnegative()) return false;
                int c1 = 0;
                for (int i = 0; i < N; ++i)
                    if (lam.part(i) >= 1) ++c1;
                return 2 * c1 <= N;
            }
        }
        return false;
    }
};

/// Enumeration window: bounds on the box count and on part magnitude.
struct Window {
    long max_boxes = -1; // -1 means unbounded by boxes
    int max_part = 0;    // |part_i| <= max_part (required, keeps the window finite)
};

/// Streams the members of P(A) inside a window, each exactly once, in
/// lexicographic order.  Restartable: call again for a fresh pass.
inline void enumerate_partitions(const GroupSpec& g, const Window& w,
                                 const std::function<void(const GenPartition&)>& sink) {
    if (w.max_part < 0) throw std::invalid_argument("enumerate_partitions: max_part must be >= 0");
    const int lo = g.family == GroupFamily::GL ? -w.max_part : 0;
    std::vector<int> parts(g.N, 0);
    std::function<void(int, int, long)> rec = [&](int idx, int hi, long boxes_so_far) {
        if (idx == g.N) {
            GenPartition lam(parts);
            if (g.admits(lam)) sink(lam);
            return;
        }
        for (int v = hi; v >= lo; --v) {
            long b = boxes_so_far + std::abs(v);
            if (w.max_boxes >= 0 && b > w.max_boxes) {
                if (v > 0) continue; // smaller positive parts may still fit
                break;               // more negative parts only grow the count
            }
            parts[idx] = v;
            rec(idx + 1, v, b);
        }
    };
    rec(0, w.max_part, 0);
    return;
}

inline std::vector<GenPartition> list_partitions(const GroupSpec& g, const Window& w) {
    std::vector<GenPartition> out;
    enumerate_partitions(g, w, [&](const GenPartition& p) { out.push_back(p); });
    return out;
}

} // namespace qdr
