#include <slporbit/rank_order.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace slporbit {

bool RankMatrix::leq(const RankMatrix& other) const {
    if (size_ != other.size_) throw std::invalid_argument("rank matrix size mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] > other.entries_[k]) return false;
    return true;
}

int to_matrix_index(Point p, int n) {
    if (p == 0 || p < -n || p > n) throw std::invalid_argument("point out of range");
    return p < 0 ? p + n + 1 : p + n;
}

Point from_matrix_index(int idx, int n) {
    if (idx < 1 || idx > 2 * n) throw std::invalid_argument("matrix index out of range");
    return idx <= n ? idx - n - 1 : idx - n;
}

RankMatrix rank_matrix(const LinkPattern& lp) {
    int n = lp.half_size();
    RankMatrix r(2 * n);
    for (int i = 1; i <= 2 * n; ++i) {
        for (int j = i + 1; j <= 2 * n; ++j) {
            Point s = from_matrix_index(i, n), t = from_matrix_index(j, n);
            int count = 0;
            for (const Arc& a : lp.arcs())
                if (s <= a.left && a.right <= t) ++count;
            r.set(i, j, count);
        }
    }
    return r;
}

RankMatrix symmetrize(const RankMatrix& r) {
    int size = r.size();
    RankMatrix out(size);
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j)
            out.set(i, j, std::min(r.at(i, j), r.at(size + 1 - j, size + 1 - i)));
    return out;
}

bool leq(const LinkPattern& a, const LinkPattern& b) {
    if (a.half_size() != b.half_size())
        throw std::invalid_argument("comparing patterns of different size");
    return rank_matrix(a).leq(rank_matrix(b));
}

std::vector<SymmetricLinkPattern> closure_set(const SymmetricLinkPattern& l) {
    RankMatrix r = rank_matrix(l);
    std::vector<SymmetricLinkPattern> out;
    for (const SymmetricLinkPattern& cand : enumerate_slp(l.half_size()))
        if (rank_matrix(cand).leq(r)) out.push_back(cand);
    return out;
}

std::vector<SymmetricLinkPattern> covers(const SymmetricLinkPattern& l) {
    std::vector<SymmetricLinkPattern> below = closure_set(l);
    std::vector<SymmetricLinkPattern> strictly;
    for (const auto& x : below)
        if (!(x == l)) strictly.push_back(x);
    std::vector<SymmetricLinkPattern> out;
    for (const auto& x : strictly) {
        bool maximal = true;
        for (const auto& y : strictly)
            if (!(x == y) && leq(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

HasseDiagram hasse(int n, int k) {
    HasseDiagram h;
    h.n = n;
    h.k = k;
    h.nodes = enumerate_slp(n, k);
    std::vector<RankMatrix> rms;
    rms.reserve(h.nodes.size());
    for (const auto& l : h.nodes) rms.push_back(rank_matrix(l));
    auto lt = [&](int a, int b) { return rms[a].leq(rms[b]) && !(rms[a] == rms[b]); };
    for (int upper = 0; upper < static_cast<int>(h.nodes.size()); ++upper) {
        for (int lower = 0; lower < static_cast<int>(h.nodes.size()); ++lower) {
            if (!lt(lower, upper)) continue;
            bool is_cover = true;
            for (int mid = 0; mid < static_cast<int>(h.nodes.size()); ++mid)
                if (lt(lower, mid) && lt(mid, upper)) {
                    is_cover = false;
                    break;
                }
            if (is_cover) h.edges.emplace_back(lower, upper);
        }
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::string hasse_json(const HasseDiagram& h) {
    nlohmann::json j;
    j["n"] = h.n;
    if (h.k >= 0)
        j["k"] = h.k;
    else
        j["k"] = nullptr;
    j["nodes"] = nlohmann::json::array();
    for (const auto& l : h.nodes) j["nodes"].push_back(format_slp(l));
    j["edges"] = nlohmann::json::array();
    for (const auto& [lower, upper] : h.edges) j["edges"].push_back({lower, upper});
    return j.dump(2);
}

}  // namespace slporbit
