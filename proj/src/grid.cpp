#include "legcord/grid.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace legcord {

GridDiagram::GridDiagram(std::vector<int> x, std::vector<int> o) : size(int(x.size())), xs(std::move(x)), os(std::move(o)) {}

namespace {

struct RowIndex {
    std::vector<int> xcol, ocol;  // 1-based column of the X / O in each row, indexed by row
};

RowIndex row_index(const GridDiagram& g) {
    RowIndex ri;
    ri.xcol.assign(g.size + 1, 0);
    ri.ocol.assign(g.size + 1, 0);
    for (int c = 1; c <= g.size; ++c) {
        ri.xcol[g.xs[c - 1]] = c;
        ri.ocol[g.os[c - 1]] = c;
    }
    return ri;
}

void check_grid(const GridDiagram& g) {
    int n = g.size;
    if (n < 1 || int(g.xs.size()) != n || int(g.os.size()) != n) throw std::invalid_argument("grid size mismatch");
    std::vector<bool> sx(n + 1, false), so(n + 1, false);
    for (int c = 0; c < n; ++c) {
        int x = g.xs[c], o = g.os[c];
        if (x < 1 || x > n || o < 1 || o > n || sx[x] || so[o])
            throw std::invalid_argument("grid markers are not permutations");
        sx[x] = so[o] = true;
        if (x == o) throw std::invalid_argument("X and O share a cell in column " + std::to_string(c + 1));
    }
}

}  // namespace

std::vector<std::vector<Marker>> grid_validate(const GridDiagram& g) {
    check_grid(g);
    RowIndex ri = row_index(g);
    std::vector<bool> seen(g.size + 1, false);  // by column of X
    std::vector<std::vector<Marker>> comps;
    for (int c0 = 1; c0 <= g.size; ++c0) {
        if (seen[c0]) continue;
        std::vector<Marker> cyc;
        int c = c0;
        while (!seen[c]) {
            seen[c] = true;
            cyc.push_back({c, g.xs[c - 1], true});
            int r = g.os[c - 1];
            cyc.push_back({c, r, false});
            c = ri.xcol[r];
        }
        comps.push_back(std::move(cyc));
    }
    return comps;
}

GridInvariants grid_classical_invariants(const GridDiagram& g) {
    auto comps = grid_validate(g);
    RowIndex ri = row_index(g);
    int n = g.size;
    std::vector<int> colcomp(n + 1), rowcomp(n + 1);
    for (size_t k = 0; k < comps.size(); ++k)
        for (auto& m : comps[k]) {
            colcomp[m.col] = int(k);
            rowcomp[m.row] = int(k);
        }
    GridInvariants inv;
    inv.components = int(comps.size());
    inv.component_tb.assign(comps.size(), 0);
    inv.component_r.assign(comps.size(), 0);
    std::vector<int> rot2(comps.size(), 0);

    for (int c = 1; c <= n; ++c) {
        int lo = std::min(g.xs[c - 1], g.os[c - 1]), hi = std::max(g.xs[c - 1], g.os[c - 1]);
        int vo = g.os[c - 1] > g.xs[c - 1] ? 1 : -1;
        for (int r = lo + 1; r < hi; ++r) {
            int cl = std::min(ri.xcol[r], ri.ocol[r]), ch = std::max(ri.xcol[r], ri.ocol[r]);
            if (!(cl < c && c < ch)) continue;
            int uh = ri.xcol[r] > ri.ocol[r] ? 1 : -1;
            int s = -vo * uh;
            inv.writhe += s;
            if (colcomp[c] == rowcomp[r]) inv.component_tb[colcomp[c]] += s;
        }
    }
    int se = 0;
    for (int c = 1; c <= n; ++c)
        for (int t = 0; t < 2; ++t) {
            bool is_x = t == 0;
            int r = is_x ? g.xs[c - 1] : g.os[c - 1];
            int ro = is_x ? g.os[c - 1] : g.xs[c - 1];
            int co = is_x ? ri.ocol[r] : ri.xcol[r];
            int k = colcomp[c];
            if (co > c && ro < r) rot2[k] += is_x ? 1 : -1;  // northwest: left cusp
            if (co < c && ro > r) {                            // southeast: right cusp
                ++se;
                --inv.component_tb[k];
                rot2[k] += is_x ? -1 : 1;
            }
        }
    inv.tb = inv.writhe - se;
    int total = 0;
    for (size_t k = 0; k < comps.size(); ++k) {
        inv.component_r[k] = rot2[k] / 2;
        total += rot2[k];
    }
    inv.r = total / 2;
    return inv;
}

FrontWord grid_to_front(const GridDiagram& g) {
    grid_validate(g);
    int n = g.size;
    RowIndex ri = row_index(g);
    const int64_t K = n + 1;
    // Plane coordinates x = c*K - r, z = c*K + r. Segment ids: column c -> c - 1, row r -> n + r - 1.
    auto X = [&](int64_t c, int64_t r) { return c * K - r; };
    auto zat = [&](int s, int64_t x) -> int64_t {
        if (s < n) return 2 * (s + 1) * K - x;
        return x + 2 * (s - n + 1);
    };
    struct Ev {
        int64_t x;
        bool crossing;
        int c, r;
    };
    std::vector<Ev> evs;
    for (int c = 1; c <= n; ++c) {
        evs.push_back({X(c, g.xs[c - 1]), false, c, g.xs[c - 1]});
        evs.push_back({X(c, g.os[c - 1]), false, c, g.os[c - 1]});
        int lo = std::min(g.xs[c - 1], g.os[c - 1]), hi = std::max(g.xs[c - 1], g.os[c - 1]);
        for (int r = lo + 1; r < hi; ++r) {
            int cl = std::min(ri.xcol[r], ri.ocol[r]), ch = std::max(ri.xcol[r], ri.ocol[r]);
            if (cl < c && c < ch) evs.push_back({X(c, r), true, c, r});
        }
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.x < b.x; });

    std::vector<int> strands;
    FrontWord f;
    auto index_of = [&](int s) { return int(std::find(strands.begin(), strands.end(), s) - strands.begin()); };
    for (auto& e : evs) {
        int v = e.c - 1, h = n + e.r - 1;
        if (e.crossing) {
            int i = index_of(v), j = index_of(h);
            if (std::abs(i - j) != 1) throw std::logic_error("grid crossing strands not adjacent");
            f.events.push_back({'X', std::min(i, j) + 1});
            std::swap(strands[i], strands[j]);
            continue;
        }
        int ro = g.xs[e.c - 1] == e.r ? g.os[e.c - 1] : g.xs[e.c - 1];
        int co = ri.xcol[e.r] == e.c ? ri.ocol[e.r] : ri.xcol[e.r];
        int64_t xv = X(e.c, ro), xh = X(co, e.r);
        if (xv > e.x && xh > e.x) {
            int64_t zc = e.c * K + e.r;
            int p = 0;
            for (int s : strands)
                if (zat(s, e.x) > zc) ++p;
            strands.insert(strands.begin() + p, {h, v});
            f.events.push_back({'L', p + 1});
        } else if (xv < e.x && xh < e.x) {
            int i = index_of(v), j = index_of(h);
            if (std::abs(i - j) != 1) throw std::logic_error("grid cusp strands not adjacent");
            int k = std::min(i, j);
            f.events.push_back({'R', k + 1});
            strands.erase(strands.begin() + k, strands.begin() + k + 2);
        } else {
            int i = index_of(v);
            if (i < int(strands.size())) strands[i] = h;
            else strands[index_of(h)] = v;
        }
    }
    f.validate();
    return f;
}

std::string GridMove::to_string() const {
    static const char* corners[] = {"NW", "NE", "SW", "SE"};
    switch (kind) {
        case MoveKind::commute_cols: return "commute-cols " + std::to_string(a);
        case MoveKind::commute_rows: return "commute-rows " + std::to_string(a);
        case MoveKind::translate_cols: return "translate-cols " + std::to_string(a);
        case MoveKind::translate_rows: return "translate-rows " + std::to_string(a);
        case MoveKind::stabilize:
            return "stabilize " + std::to_string(a) + " " + std::to_string(b) + " " + corners[int(corner)];
        case MoveKind::destabilize: return "destabilize " + std::to_string(a) + " " + std::to_string(b);
    }
    return "?";
}

namespace {

bool interleaved(int a1, int a2, int b1, int b2) {
    int l1 = std::min(a1, a2), h1 = std::max(a1, a2), l2 = std::min(b1, b2), h2 = std::max(b1, b2);
    return (l1 < l2 && l2 < h1 && h1 < h2) || (l2 < l1 && l1 < h2 && h2 < h1);
}

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

struct Destab {
    bool ok = false;
    int a_row = 0, c_col = 0;
    bool a_is_x = false;
};

// B at (col, row); A is B's column partner, C is B's row partner.
Destab destab_at(const GridDiagram& g, const RowIndex& ri, int col, int row) {
    Destab d;
    int n = g.size;
    if (n < 2) return d;
    bool b_is_x = g.xs[col - 1] == row;
    if (!b_is_x && g.os[col - 1] != row) return d;
    int a_row = b_is_x ? g.os[col - 1] : g.xs[col - 1];
    int c_col = b_is_x ? ri.ocol[row] : ri.xcol[row];
    if (n == 2) return d;
    if (wrap(a_row + 1, n) != row && wrap(a_row - 1, n) != row) return d;
    if (wrap(c_col + 1, n) != col && wrap(c_col - 1, n) != col) return d;
    // the fourth cell of the block must be empty
    if (g.xs[c_col - 1] == a_row || g.os[c_col - 1] == a_row) return d;
    d.ok = true;
    d.a_row = a_row;
    d.c_col = c_col;
    d.a_is_x = !b_is_x;
    return d;
}

}  // namespace

bool move_applicable(const GridDiagram& g, const GridMove& m) {
    int n = g.size;
    switch (m.kind) {
        case MoveKind::commute_cols: {
            if (m.a < 0 || m.a >= n || n < 2) return false;
            int c1 = m.a, c2 = (m.a + 1) % n;
            return !interleaved(g.xs[c1], g.os[c1], g.xs[c2], g.os[c2]);
        }
        case MoveKind::commute_rows: {
            if (m.a < 0 || m.a >= n || n < 2) return false;
            RowIndex ri = row_index(g);
            int r1 = m.a + 1, r2 = (m.a + 1) % n + 1;
            return !interleaved(ri.xcol[r1], ri.ocol[r1], ri.xcol[r2], ri.ocol[r2]);
        }
        case MoveKind::translate_cols:
        case MoveKind::translate_rows: return true;
        case MoveKind::stabilize:
            if (m.a < 1 || m.a > n || m.b < 1 || m.b > n) return false;
            return g.xs[m.a - 1] == m.b || g.os[m.a - 1] == m.b;
        case MoveKind::destabilize:
            if (m.a < 1 || m.a > n || m.b < 1 || m.b > n) return false;
            return destab_at(g, row_index(g), m.a, m.b).ok;
    }
    return false;
}

GridDiagram apply_move(const GridDiagram& g, const GridMove& m) {
    if (!move_applicable(g, m)) throw std::invalid_argument("grid move not applicable: " + m.to_string());
    int n = g.size;
    GridDiagram out = g;
    switch (m.kind) {
        case MoveKind::commute_cols: {
            int c1 = m.a, c2 = (m.a + 1) % n;
            std::swap(out.xs[c1], out.xs[c2]);
            std::swap(out.os[c1], out.os[c2]);
            break;
        }
        case MoveKind::commute_rows: {
            int r1 = m.a + 1, r2 = (m.a + 1) % n + 1;
            for (int c = 0; c < n; ++c) {
                for (int* v : {&out.xs[c], &out.os[c]}) {
                    if (*v == r1) *v = r2;
                    else if (*v == r2) *v = r1;
                }
            }
            break;
        }
        case MoveKind::translate_cols: {
            int s = ((m.a % n) + n) % n;
            for (int j = 0; j < n; ++j) {
                out.xs[j] = g.xs[(j + s) % n];
                out.os[j] = g.os[(j + s) % n];
            }
            break;
        }
        case MoveKind::translate_rows: {
            for (int c = 0; c < n; ++c) {
                out.xs[c] = wrap(g.xs[c] - m.a, n);
                out.os[c] = wrap(g.os[c] - m.a, n);
            }
            break;
        }
        case MoveKind::stabilize: {
            int col = m.a, row = m.b;
            bool t_is_x = g.xs[col - 1] == row;
            bool right = m.corner == Corner::NE || m.corner == Corner::SE;
            bool above = m.corner == Corner::NE || m.corner == Corner::NW;
            int newcol = right ? col + 1 : col, origcol = right ? col : col + 1;
            int newrow = above ? row + 1 : row, origrow = above ? row : row + 1;
            std::vector<int> xs, os;
            auto shift_row = [&](int r) { return r > row || (r == row && !above) ? r + 1 : r; };
            for (int c = 1; c <= n; ++c) {
                if (!right && c == col) {
                    xs.push_back(0);
                    os.push_back(0);
                }
                xs.push_back(shift_row(g.xs[c - 1]));
                os.push_back(shift_row(g.os[c - 1]));
                if (right && c == col) {
                    xs.push_back(0);
                    os.push_back(0);
                }
            }
            // remove M from its column, add T at (origcol, newrow), T at (newcol, origrow), T' at (newcol, newrow)
            auto& tcol = t_is_x ? xs : os;
            auto& ocol = t_is_x ? os : xs;
            tcol[origcol - 1] = newrow;
            tcol[newcol - 1] = origrow;
            ocol[newcol - 1] = newrow;
            out = GridDiagram(xs, os);
            break;
        }
        case MoveKind::destabilize: {
            RowIndex ri = row_index(g);
            Destab d = destab_at(g, ri, m.a, m.b);
            int col = m.a, row = m.b;
            std::vector<int> xs, os;
            auto shift_row = [&](int r) { return r > row ? r - 1 : r; };
            for (int c = 1; c <= n; ++c) {
                if (c == col) continue;
                int x = g.xs[c - 1], o = g.os[c - 1];
                if (c == d.c_col) {
                    if (d.a_is_x) x = d.a_row;
                    else o = d.a_row;
                }
                xs.push_back(shift_row(x));
                os.push_back(shift_row(o));
            }
            out = GridDiagram(xs, os);
            break;
        }
    }
    check_grid(out);
    return out;
}

std::vector<GridMove> destabilizations(const GridDiagram& g) {
    RowIndex ri = row_index(g);
    std::vector<GridMove> out;
    for (int c = 1; c <= g.size; ++c)
        for (int r : {g.xs[c - 1], g.os[c - 1]})
            if (destab_at(g, ri, c, r).ok) out.push_back({MoveKind::destabilize, c, r, Corner::NW});
    return out;
}

GridDiagram canonical_translate(const GridDiagram& g, int* col_shift, int* row_shift) {
    int n = g.size;
    GridDiagram best;
    int bs = 0, bt = 0;
    std::vector<int> xs(n), os(n);
    for (int s = 0; s < n; ++s) {
        int t = g.xs[s] - 1;
        for (int j = 0; j < n; ++j) {
            xs[j] = wrap(g.xs[(j + s) % n] - t, n);
            os[j] = wrap(g.os[(j + s) % n] - t, n);
        }
        if (s == 0 || std::tie(os, xs) < std::tie(best.os, best.xs)) {
            best = GridDiagram(xs, os);
            bs = s;
            bt = t;
        }
    }
    if (col_shift) *col_shift = bs;
    if (row_shift) *row_shift = bt;
    return best;
}

namespace {

// Finds one proper block of consecutive columns and rows; returns false if g is not split.
bool find_block(const GridDiagram& g, std::vector<int>* cols, std::vector<int>* rows) {
    int n = g.size;
    for (int len = 1; len < n; ++len)
        for (int s = 0; s < n; ++s) {
            std::vector<bool> in(n + 1, false);
            int count = 0;
            for (int j = 0; j < len; ++j) {
                int c = (s + j) % n;
                for (int r : {g.xs[c], g.os[c]})
                    if (!in[r]) {
                        in[r] = true;
                        ++count;
                    }
            }
            if (count != len) continue;
            int start = -1;
            for (int r = 1; r <= n; ++r)
                if (in[r] && !in[wrap(r - 1, n)]) {
                    if (start >= 0) {
                        start = -2;
                        break;
                    }
                    start = r;
                }
            if (start < 0) continue;
            cols->clear();
            rows->clear();
            for (int j = 0; j < len; ++j) cols->push_back((s + j) % n);
            for (int j = 0; j < len; ++j) rows->push_back(wrap(start + j, n));
            return true;
        }
    return false;
}

GridDiagram extract(const GridDiagram& g, const std::vector<int>& cols, const std::vector<int>& rows) {
    std::vector<int> rank(g.size + 1, 0);
    for (size_t k = 0; k < rows.size(); ++k) rank[rows[k]] = int(k) + 1;
    std::vector<int> xs, os;
    for (int c : cols) {
        xs.push_back(rank[g.xs[c]]);
        os.push_back(rank[g.os[c]]);
    }
    return GridDiagram(xs, os);
}

}  // namespace

std::vector<GridDiagram> split_blocks(const GridDiagram& g) {
    std::vector<int> cols, rows;
    if (!find_block(g, &cols, &rows)) return {g};
    int n = g.size;
    std::vector<bool> cin(n, false), rin(n + 1, false);
    for (int c : cols) cin[c] = true;
    for (int r : rows) rin[r] = true;
    std::vector<int> ccols, crows;
    int c0 = (cols.back() + 1) % n;
    for (int j = 0; j < n - int(cols.size()); ++j) ccols.push_back((c0 + j) % n);
    int r0 = wrap(rows.back() + 1, n);
    for (int j = 0; j < n - int(rows.size()); ++j) crows.push_back(wrap(r0 + j, n));
    std::vector<GridDiagram> out = split_blocks(extract(g, cols, rows));
    std::vector<GridDiagram> rest = split_blocks(extract(g, ccols, crows));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::string outcome_name(SimplifyOutcome o) {
    switch (o) {
        case SimplifyOutcome::split_unlink_of_unknots: return "split-unlink-of-unknots";
        case SimplifyOutcome::reduced: return "reduced";
        case SimplifyOutcome::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

std::string grid_to_json(const GridDiagram& g) {
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "]";
    };
    return "{\"size\": " + std::to_string(g.size) + ", \"x\": " + list(g.xs) + ", \"o\": " + list(g.os) + "}";
}

GridDiagram grid_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GridDiagram g(j.at("x").get<std::vector<int>>(), j.at("o").get<std::vector<int>>());
    if (j.contains("size") && j.at("size").get<int>() != g.size) throw std::invalid_argument("grid size field mismatch");
    grid_validate(g);
    return g;
}

GridDiagram load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return grid_from_json(ss.str());
}

}  // namespace legcord
