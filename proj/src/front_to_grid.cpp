#include <algorithm>
#include <stdexcept>

#include "legcord/front.hpp"
#include "legcord/grid.hpp"

namespace legcord {

// One column per event. Each live strand runs along its own row; a crossing drops the descending strand
// through a vertical segment to a fresh row just below the other strand.
GridDiagram front_to_grid(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    std::vector<int> order;  // row ids, top to bottom
    std::vector<int> live;   // row id per position
    int next_row = 0;
    int m = int(f.size());
    std::vector<int> xrow(m), orow(m);  // row ids of the markers per column

    auto place = [&](int k, int upper, int lower, bool x_on_upper) {
        xrow[k] = x_on_upper ? upper : lower;
        orow[k] = x_on_upper ? lower : upper;
    };
    auto index_in_order = [&](int id) { return int(std::find(order.begin(), order.end(), id) - order.begin()); };

    for (int k = 0; k < m; ++k) {
        const Event& e = f.events[k];
        int i = e.pos;
        if (e.kind == 'L') {
            int u = next_row++, l = next_row++;
            int at = i >= 2 ? index_in_order(live[i - 2]) + 1 : 0;
            order.insert(order.begin() + at, {u, l});
            live.insert(live.begin() + (i - 1), {u, l});
            place(k, u, l, t.dir[k + 1][i - 1] < 0);
        } else if (e.kind == 'R') {
            int u = live[i - 1], l = live[i];
            place(k, u, l, t.dir[k][i - 1] > 0);
            live.erase(live.begin() + (i - 1), live.begin() + (i + 1));
        } else {
            int a = live[i - 1], b = live[i];
            int nr = next_row++;
            order.insert(order.begin() + index_in_order(b) + 1, nr);
            place(k, a, nr, t.dir[k][i - 1] > 0);
            live[i - 1] = b;
            live[i] = nr;
        }
    }
    int n = int(order.size());
    if (n != m) throw std::logic_error("front_to_grid row and column counts differ");
    std::vector<int> rownum(n);
    for (int j = 0; j < n; ++j) rownum[order[j]] = n - j;
    std::vector<int> xs(m), os(m);
    for (int k = 0; k < m; ++k) {
        xs[k] = rownum[xrow[k]];
        os[k] = rownum[orow[k]];
    }
    GridDiagram g(xs, os);
    grid_validate(g);
    return g;
}

}  // namespace legcord
