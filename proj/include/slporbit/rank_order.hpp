#pragma once

#include <slporbit/slp.hpp>

#include <string>
#include <vector>

namespace slporbit {

// Strictly upper-triangular matrix of interval arc counts, indexed 1..2n.
class RankMatrix {
  public:
    explicit RankMatrix(int size) : size_(size), entries_(size * size, 0) {}

    int size() const { return size_; }
    int at(int i, int j) const { return entries_[(i - 1) * size_ + (j - 1)]; }  // 1-based
    void set(int i, int j, int v) { entries_[(i - 1) * size_ + (j - 1)] = v; }

    friend bool operator==(const RankMatrix& a, const RankMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RankMatrix& a, const RankMatrix& b) { return !(a == b); }

    // Entrywise comparison.
    bool leq(const RankMatrix& other) const;

  private:
    int size_;
    std::vector<int> entries_;
};

// Signed point -> index in 1..2n: negatives to 1..n, positives to n+1..2n,
// order preserving.
int to_matrix_index(Point p, int n);
Point from_matrix_index(int idx, int n);

RankMatrix rank_matrix(const LinkPattern& lp);
inline RankMatrix rank_matrix(const SymmetricLinkPattern& l) { return rank_matrix(l.pattern()); }

// (SR)_{s,t} = min{ R_{s,t}, R_{2n+1-t,2n+1-s} }.
RankMatrix symmetrize(const RankMatrix& r);

bool leq(const LinkPattern& a, const LinkPattern& b);
inline bool leq(const SymmetricLinkPattern& a, const SymmetricLinkPattern& b) {
    return leq(a.pattern(), b.pattern());
}

// { L' in SLP_2n : L' <= L }.
std::vector<SymmetricLinkPattern> closure_set(const SymmetricLinkPattern& l);

// Maximal elements of closure_set(L) \ {L}.
std::vector<SymmetricLinkPattern> covers(const SymmetricLinkPattern& l);

struct HasseDiagram {
    int n;
    int k;  // -1 when the whole poset is taken
    std::vector<SymmetricLinkPattern> nodes;
    std::vector<std::pair<int, int>> edges;  // (lower, upper) as node indices
};

// Cover relation of the closure order on SLP_2n or SLP_2n(k).
HasseDiagram hasse(int n, int k = -1);
std::string hasse_json(const HasseDiagram& h);

}  // namespace slporbit
