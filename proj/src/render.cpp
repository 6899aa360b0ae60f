#include <slporbit/render.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace slporbit {

namespace {

std::vector<Point> all_points(int n) {
    std::vector<Point> pts;
    for (int p = -n; p <= n; ++p)
        if (p != 0) pts.push_back(p);
    return pts;
}

}  // namespace

std::string render_pattern_ascii(const SymmetricLinkPattern& l) {
    const int n = l.half_size();
    std::vector<Point> pts = all_points(n);

    // column of each point in the text grid
    std::vector<std::string> labels;
    std::vector<int> col;
    int width = 0;
    for (Point p : pts) {
        std::string s = std::to_string(p);
        col.push_back(width + static_cast<int>(s.size()) - 1);  // last char of the label
        labels.push_back(s);
        width += static_cast<int>(s.size()) + 1;
    }
    auto col_of = [&](Point p) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p) return col[i];
        throw std::logic_error("point not found");
    };

    // arcs containing more arcs are drawn taller
    std::vector<int> height;
    int hmax = 0;
    for (const Arc& a : l.arcs()) {
        int h = 1;
        for (const Arc& b : l.arcs())
            if (a.left < b.left && b.right < a.right) ++h;
        height.push_back(h);
        hmax = std::max(hmax, h);
    }

    std::vector<std::string> grid(hmax, std::string(width, ' '));
    auto put = [&](int row, int c, char ch) {
        if (row >= 0 && row < hmax && c >= 0 && c < width) grid[row][c] = ch;
    };
    for (std::size_t i = 0; i < l.arcs().size(); ++i) {
        const Arc& a = l.arcs()[i];
        int lc = col_of(a.left), rc = col_of(a.right);
        int top = hmax - height[i];  // row index from the top
        put(top, lc, '.');
        put(top, rc, '.');
        for (int c = lc + 1; c < rc; ++c) put(top, c, '-');
        for (int row = top + 1; row < hmax; ++row) {
            put(row, lc, '|');
            put(row, rc, '|');
        }
    }

    std::ostringstream os;
    for (const std::string& row : grid) os << row << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) os << labels[i] << " ";
    os << "\n";
    return os.str();
}

std::string render_pattern_svg(const SymmetricLinkPattern& l, int unit) {
    const int n = l.half_size();
    std::vector<Point> pts = all_points(n);
    auto x_of_point = [&](Point p) {
        int idx = p < 0 ? p + n : p + n - 1;  // 0 .. 2n-1
        return unit + idx * unit;
    };
    const int baseline = 30 + unit * 2;
    const int w = unit * (2 * n + 1);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
       << (baseline + 24) << "\" viewBox=\"0 0 " << w << " " << (baseline + 24) << "\">\n";
    for (const Arc& a : l.arcs()) {
        int x1 = x_of_point(a.left), x2 = x_of_point(a.right);
        int apex = (x1 + x2) / 2;
        int lift = (x2 - x1) / 2 + unit / 2;
        os << "  <path d=\"M " << x1 << " " << baseline << " Q " << apex << " "
           << (baseline - lift) << " " << x2 << " " << baseline
           << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (Point p : pts) {
        int x = x_of_point(p);
        os << "  <circle cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"3\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << (baseline + 16)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << p << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_sdt_ascii(const TwoColumnSDT& t) {
    // cell grid: row index from the top, two columns
    struct Cell {
        int label = 0;
        bool second_of_vertical = false;
        bool right_of_horizontal = false;
    };
    std::vector<std::array<Cell, 2>> cells;
    int c1 = 0, c2 = 0;
    auto ensure_rows = [&](int r) {
        while (static_cast<int>(cells.size()) < r) cells.push_back({});
    };
    for (int label = 1; label <= t.n(); ++label) {
        switch (t.placement(label)) {
            case Placement::Col1Vertical:
                ensure_rows(c1 + 2);
                cells[c1][0] = {label, false, false};
                cells[c1 + 1][0] = {label, true, false};
                c1 += 2;
                break;
            case Placement::Col2Vertical:
                ensure_rows(c2 + 2);
                cells[c2][1] = {label, false, false};
                cells[c2 + 1][1] = {label, true, false};
                c2 += 2;
                break;
            case Placement::Horizontal:
                ensure_rows(c1 + 1);
                cells[c1][0] = {label, false, false};
                cells[c1][1] = {label, false, true};
                ++c1;
                ++c2;
                break;
        }
    }

    const int cw = 4;  // interior width of a cell
    std::ostringstream os;
    auto hline = [&](int row) {
        // border above `row`
        os << "+";
        for (int cidx = 0; cidx < 2; ++cidx) {
            bool above_exists = row > 0 && cells[row - 1][cidx].label != 0;
            bool below_exists = row < static_cast<int>(cells.size()) && cells[row][cidx].label != 0;
            if (!above_exists && !below_exists) {
                os << std::string(cw, ' ') << (cidx == 0 ? " " : "");
                continue;
            }
            bool same_domino = above_exists && below_exists &&
                               cells[row - 1][cidx].label == cells[row][cidx].label;
            os << std::string(cw, same_domino ? ' ' : '-') << (cidx == 0 ? "+" : "");
        }
        os << "+\n";
    };
    for (int row = 0; row < static_cast<int>(cells.size()); ++row) {
        hline(row);
        os << "|";
        for (int cidx = 0; cidx < 2; ++cidx) {
            const Cell& cell = cells[row][cidx];
            std::string text;
            if (cell.label != 0 && !cell.second_of_vertical && !cell.right_of_horizontal)
                text = std::to_string(cell.label);
            os << " " << text << std::string(cw - 1 - text.size(), ' ');
            bool merged_right = cidx == 0 && cells[row][0].label != 0 &&
                                cells[row][1].label == cells[row][0].label;
            os << (merged_right ? " " : "|");
        }
        os << "\n";
    }
    hline(static_cast<int>(cells.size()));
    return os.str();
}

}  // namespace slporbit
