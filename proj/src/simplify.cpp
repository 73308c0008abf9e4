#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "legcord/grid.hpp"

namespace legcord {

namespace {

std::string key_of(const GridDiagram& g) {
    std::string k;
    k.reserve(2 * g.size);
    for (int c = 0; c < g.size; ++c) {
        k.push_back(char(g.xs[c]));
        k.push_back(char(g.os[c]));
    }
    return k;
}

bool is_target(const GridDiagram& g) { return !destabilizations(g).empty() || split_blocks(g).size() > 1; }

// Appends the translations taking g to its canonical representative and returns that representative.
GridDiagram to_canonical(const GridDiagram& g, std::vector<GridMove>& moves) {
    int cs = 0, rs = 0;
    GridDiagram c = canonical_translate(g, &cs, &rs);
    if (cs) moves.push_back({MoveKind::translate_cols, cs, 0, Corner::NW});
    if (rs) moves.push_back({MoveKind::translate_rows, rs, 0, Corner::NW});
    return c;
}

enum class Search { found, exhausted, budget };

// Breadth-first search over commutations, up to translation, for a diagram admitting a destabilization or a split.
Search commutation_search(const GridDiagram& start, int64_t& budget, int64_t& visited, std::vector<GridMove>& path) {
    struct Node {
        GridDiagram g;
        int parent;
        GridMove move;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, int> seen;
    std::vector<GridMove> lead;
    GridDiagram c0 = to_canonical(start, lead);
    nodes.push_back({c0, -1, {}});
    seen.emplace(key_of(c0), 0);
    std::deque<int> queue{0};
    int n = start.size;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int kind = 0; kind < 2; ++kind)
            for (int a = 0; a < n; ++a) {
                GridMove m{kind == 0 ? MoveKind::commute_cols : MoveKind::commute_rows, a, 0, Corner::NW};
                if (!move_applicable(nodes[cur].g, m)) continue;
                GridDiagram next = canonical_translate(apply_move(nodes[cur].g, m));
                auto [it, fresh] = seen.emplace(key_of(next), int(nodes.size()));
                if (!fresh) continue;
                ++visited;
                if (--budget < 0) return Search::budget;
                nodes.push_back({next, cur, m});
                if (is_target(next)) {
                    std::vector<int> chain;
                    for (int v = int(nodes.size()) - 1; v > 0; v = nodes[v].parent) chain.push_back(v);
                    path = lead;
                    GridDiagram g = c0;
                    for (auto i = chain.rbegin(); i != chain.rend(); ++i) {
                        path.push_back(nodes[*i].move);
                        g = to_canonical(apply_move(g, nodes[*i].move), path);
                    }
                    return Search::found;
                }
                queue.push_back(int(nodes.size()) - 1);
            }
    }
    return Search::exhausted;
}

}  // namespace

SimplificationReport grid_simplify(const GridDiagram& g, int64_t budget) {
    grid_validate(g);
    SimplificationReport rep;
    std::vector<GridDiagram> work{g};
    int64_t left = budget;
    bool stuck = false;
    for (size_t i = 0; i < work.size(); ++i) {
        while (work[i].size > 2) {
            std::vector<GridDiagram> blocks = split_blocks(work[i]);
            if (blocks.size() > 1) {
                rep.steps.push_back({int(i), {}, true});
                work[i] = blocks[0];
                work.insert(work.end(), blocks.begin() + 1, blocks.end());
                continue;
            }
            std::vector<GridMove> ds = destabilizations(work[i]);
            if (!ds.empty()) {
                rep.steps.push_back({int(i), ds[0], false});
                work[i] = apply_move(work[i], ds[0]);
                continue;
            }
            std::vector<GridMove> path;
            Search s = commutation_search(work[i], left, rep.states_visited, path);
            if (s == Search::budget) {
                rep.outcome = SimplifyOutcome::budget_exhausted;
                rep.finals = work;
                return rep;
            }
            if (s == Search::exhausted) {
                stuck = true;
                break;
            }
            for (auto& m : path) {
                rep.steps.push_back({int(i), m, false});
                work[i] = apply_move(work[i], m);
            }
        }
    }
    rep.finals = work;
    rep.outcome = stuck ? SimplifyOutcome::reduced : SimplifyOutcome::split_unlink_of_unknots;
    return rep;
}

std::vector<GridDiagram> replay_simplification(const GridDiagram& g, const SimplificationReport& r) {
    std::vector<GridDiagram> work{g};
    for (auto& s : r.steps) {
        if (s.block < 0 || s.block >= int(work.size())) throw std::invalid_argument("replay step refers to a missing block");
        if (s.split) {
            std::vector<GridDiagram> blocks = split_blocks(work[s.block]);
            if (blocks.size() < 2) throw std::invalid_argument("replay split on an unsplit diagram");
            work[s.block] = blocks[0];
            work.insert(work.end(), blocks.begin() + 1, blocks.end());
        } else {
            work[s.block] = apply_move(work[s.block], s.move);
        }
    }
    return work;
}

}  // namespace legcord
