#include "crnms/stoich.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace crnms {

StoichReport stoich_report(const Network& net) {
    StoichReport rep;
    const std::size_t s = net.n_species(), r = net.n_reactions();

    rep.gamma.assign(s, RatVec(r, Rat(0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < s; ++i) rep.gamma[i][j] = net.change(j, i);
    rep.dim_stoich = rank(rep.gamma);

    // Distinct complexes, in order of first appearance.
    std::map<std::vector<long>, std::size_t> index;
    auto complex_id = [&](const std::vector<long>& c) {
        auto it = index.find(c);
        if (it != index.end()) return it->second;
        std::size_t id = rep.complexes.size();
        index.emplace(c, id);
        rep.complexes.push_back(c);
        return id;
    };
    for (const auto& rx : net.reactions) {
        rep.reactant_complex.push_back(complex_id(rx.reactant));
        rep.product_complex.push_back(complex_id(rx.product));
    }
    const std::size_t p = rep.complexes.size();

    // Undirected connectivity -> linkage classes.
    std::vector<std::vector<std::size_t>> adj(p), und(p);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t a = rep.reactant_complex[j], b = rep.product_complex[j];
        adj[a].push_back(b);
        und[a].push_back(b);
        und[b].push_back(a);
    }
    std::vector<long> comp(p, -1);
    for (std::size_t start = 0; start < p; ++start) {
        if (comp[start] != -1) continue;
        long id = static_cast<long>(rep.linkage_classes.size());
        rep.linkage_classes.emplace_back();
        std::vector<std::size_t> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            rep.linkage_classes[static_cast<std::size_t>(id)].push_back(u);
            for (auto v : und[u])
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
    }
    for (auto& lc : rep.linkage_classes) std::sort(lc.begin(), lc.end());
    const std::size_t l = rep.linkage_classes.size();

    rep.deficiency = static_cast<long>(p) - static_cast<long>(l) - rep.dim_stoich;
    if (rep.deficiency < 0) throw std::logic_error("negative deficiency");

    // Strong components (Tarjan) and terminal ones.
    std::vector<long> low(p, 0), num(p, -1), scc_of(p, -1);
    std::vector<std::size_t> stk;
    std::vector<bool> on_stack(p, false);
    long counter = 0, n_scc = 0;
    std::function<void(std::size_t)> strongconnect = [&](std::size_t v) {
        num[v] = low[v] = counter++;
        stk.push_back(v);
        on_stack[v] = true;
        for (auto w : adj[v]) {
            if (num[w] == -1) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], num[w]);
            }
        }
        if (low[v] == num[v]) {
            while (true) {
                std::size_t w = stk.back();
                stk.pop_back();
                on_stack[w] = false;
                scc_of[w] = n_scc;
                if (w == v) break;
            }
            ++n_scc;
        }
    };
    for (std::size_t v = 0; v < p; ++v)
        if (num[v] == -1) strongconnect(v);

    std::vector<bool> terminal(static_cast<std::size_t>(n_scc), true);
    for (std::size_t u = 0; u < p; ++u)
        for (auto v : adj[u])
            if (scc_of[u] != scc_of[v]) terminal[static_cast<std::size_t>(scc_of[u])] = false;
    rep.n_terminal_strong = static_cast<std::size_t>(
        std::count(terminal.begin(), terminal.end(), true));

    // Weak reversibility: every connected component is strongly connected,
    // i.e. the strong components coincide with the linkage classes.
    rep.weakly_reversible = (static_cast<std::size_t>(n_scc) == l);

    // Terminal strong components per linkage class.
    std::vector<std::size_t> terminals_in(l, 0);
    {
        std::vector<bool> counted(static_cast<std::size_t>(n_scc), false);
        for (std::size_t v = 0; v < p; ++v) {
            auto sc = static_cast<std::size_t>(scc_of[v]);
            if (terminal[sc] && !counted[sc]) {
                counted[sc] = true;
                ++terminals_in[static_cast<std::size_t>(comp[v])];
            }
        }
    }
    rep.single_terminal_per_linkage =
        std::all_of(terminals_in.begin(), terminals_in.end(),
                    [](std::size_t n) { return n == 1; });

    // Per-linkage-class deficiency: p_i - 1 - rank of that class's reactions.
    long defsum = 0;
    for (std::size_t i = 0; i < l; ++i) {
        RatMat cols;
        for (std::size_t j = 0; j < r; ++j) {
            if (comp[rep.reactant_complex[j]] != static_cast<long>(i)) continue;
            RatVec col(s);
            for (std::size_t k = 0; k < s; ++k) col[k] = net.change(j, k);
            cols.push_back(std::move(col));
        }
        long di = static_cast<long>(rep.linkage_classes[i].size()) - 1 - rank(cols);
        rep.linkage_deficiencies.push_back(di);
        defsum += di;
    }
    rep.deficiency_splits = (defsum == rep.deficiency);

    return rep;
}

PositiveKernel consistency(const Network& net) {
    const std::size_t s = net.n_species(), r = net.n_reactions();
    RatMat gamma(s, RatVec(r, Rat(0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < s; ++i) gamma[i][j] = net.change(j, i);
    return positive_kernel(gamma, r);
}

}  // namespace crnms
