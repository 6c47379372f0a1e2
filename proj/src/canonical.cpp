#include "linkpoly/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace linkpoly {

namespace {

struct WorkCapExceeded {};

struct CanonicalSearch {
  int n = 0;
  std::vector<int> loop_plus, loop_minus;   // per compact vertex
  std::vector<int> adj_plus, adj_minus;     // n*n symmetric count matrices
  std::vector<int> color;                   // refined color ranks
  long budget = 0;

  int ap(int a, int b) const { return adj_plus[static_cast<std::size_t>(a * n + b)]; }
  int am(int a, int b) const { return adj_minus[static_cast<std::size_t>(a * n + b)]; }

  void refine() {
    color.assign(static_cast<std::size_t>(n), 0);
    // initial color: loop profile
    {
      std::vector<std::pair<std::pair<int, int>, int>> keyed;
      keyed.reserve(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        keyed.push_back({{loop_plus[static_cast<std::size_t>(v)],
                          loop_minus[static_cast<std::size_t>(v)]},
                         v});
      std::sort(keyed.begin(), keyed.end());
      int rank = -1;
      std::pair<int, int> prev{-1, -1};
      bool first = true;
      for (auto& [key, v] : keyed) {
        if (first || key != prev) ++rank;
        color[static_cast<std::size_t>(v)] = rank;
        prev = key;
        first = false;
      }
    }
    int classes = 0;
    for (;;) {
      using Sig = std::vector<int>;
      std::map<Sig, std::vector<int>> groups;
      for (int v = 0; v < n; ++v) {
        Sig sig{color[static_cast<std::size_t>(v)]};
        std::vector<std::array<int, 3>> nbrs;
        for (int u = 0; u < n; ++u) {
          if (u == v) continue;
          const int p = ap(v, u), m = am(v, u);
          if (p + m > 0)
            nbrs.push_back({color[static_cast<std::size_t>(u)], p, m});
        }
        std::sort(nbrs.begin(), nbrs.end());
        for (auto& t : nbrs) {
          sig.push_back(t[0]);
          sig.push_back(t[1]);
          sig.push_back(t[2]);
        }
        groups[std::move(sig)].push_back(v);
      }
      int rank = 0;
      for (auto& [sig, members] : groups) {
        for (int v : members) color[static_cast<std::size_t>(v)] = rank;
        ++rank;
      }
      if (rank == classes) break;
      classes = rank;
      if (classes == n) break;
    }
  }

  std::vector<int> best;
  bool have_best = false;
  std::vector<int> perm;
  std::vector<int> cur;
  std::vector<char> used;

  void append_row(int v) {
    cur.push_back(color[static_cast<std::size_t>(v)]);
    cur.push_back(loop_plus[static_cast<std::size_t>(v)]);
    cur.push_back(loop_minus[static_cast<std::size_t>(v)]);
    for (int j = 0; j < static_cast<int>(perm.size()); ++j) {
      cur.push_back(ap(v, perm[static_cast<std::size_t>(j)]));
      cur.push_back(am(v, perm[static_cast<std::size_t>(j)]));
    }
  }

  // `below` marks branches already known to be lexicographically below the
  // best encoding seen when they diverged; pruning is skipped there and the
  // leaf does a full compare, so replacing `best` mid-search stays sound.
  void dfs(bool below, std::size_t checked) {
    if (--budget < 0) throw WorkCapExceeded{};
    if (static_cast<int>(perm.size()) == n) {
      if (!have_best || std::lexicographical_compare(cur.begin(), cur.end(),
                                                     best.begin(), best.end())) {
        best = cur;
        have_best = true;
      }
      return;
    }
    int cand_color = -1;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)])
        if (cand_color < 0 || color[static_cast<std::size_t>(v)] < cand_color)
          cand_color = color[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] ||
          color[static_cast<std::size_t>(v)] != cand_color)
        continue;
      const std::size_t mark = cur.size();
      append_row(v);
      bool next_below = below;
      std::size_t next_checked = checked;
      if (!next_below && have_best) {
        bool prune = false;
        while (next_checked < cur.size() && next_checked < best.size()) {
          const int a = cur[next_checked], b = best[next_checked];
          if (a != b) {
            if (a > b) prune = true;
            else next_below = true;
            break;
          }
          ++next_checked;
        }
        if (prune) {
          cur.resize(mark);
          continue;
        }
      }
      used[static_cast<std::size_t>(v)] = 1;
      perm.push_back(v);
      dfs(next_below, next_below ? 0 : next_checked);
      perm.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
      cur.resize(mark);
    }
  }
};

std::string labeled_fallback_key(const Multigraph& g) {
  std::vector<std::array<int, 3>> rows;
  rows.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges())
    rows.push_back({std::min(e.u, e.v), std::max(e.u, e.v),
                    e.sign == Sign::plus ? 1 : 0});
  std::sort(rows.begin(), rows.end());
  std::string key = "X|" + std::to_string(g.vertex_count());
  for (auto& r : rows) {
    key += '|';
    key += std::to_string(r[0]);
    key += ',';
    key += std::to_string(r[1]);
    key += ',';
    key += std::to_string(r[2]);
  }
  return key;
}

}  // namespace

std::string canonical_signed_key(const Multigraph& g, long work_cap) {
  if (g.attr_kind() != AttrKind::sign)
    throw InputError("canonical key requires a signed graph");

  // isolated vertices only contribute their count
  std::vector<int> compact(static_cast<std::size_t>(g.vertex_count()), -1);
  int n = 0;
  for (const Edge& e : g.edges()) {
    if (compact[static_cast<std::size_t>(e.u)] < 0)
      compact[static_cast<std::size_t>(e.u)] = n++;
    if (compact[static_cast<std::size_t>(e.v)] < 0)
      compact[static_cast<std::size_t>(e.v)] = n++;
  }
  const int isolated = g.vertex_count() - n;

  CanonicalSearch s;
  s.n = n;
  s.loop_plus.assign(static_cast<std::size_t>(n), 0);
  s.loop_minus.assign(static_cast<std::size_t>(n), 0);
  s.adj_plus.assign(static_cast<std::size_t>(n * n), 0);
  s.adj_minus.assign(static_cast<std::size_t>(n * n), 0);
  for (const Edge& e : g.edges()) {
    const int a = compact[static_cast<std::size_t>(e.u)];
    const int b = compact[static_cast<std::size_t>(e.v)];
    auto& target = (e.sign == Sign::plus)
                       ? (a == b ? s.loop_plus : s.adj_plus)
                       : (a == b ? s.loop_minus : s.adj_minus);
    if (a == b) {
      ++target[static_cast<std::size_t>(a)];
    } else {
      ++target[static_cast<std::size_t>(a * n + b)];
      ++target[static_cast<std::size_t>(b * n + a)];
    }
  }

  s.refine();
  s.budget = work_cap;
  s.used.assign(static_cast<std::size_t>(n), 0);
  s.perm.reserve(static_cast<std::size_t>(n));
  try {
    s.dfs(false, 0);
  } catch (const WorkCapExceeded&) {
    return labeled_fallback_key(g);
  }

  std::string key = "C|" + std::to_string(n) + "|" + std::to_string(isolated);
  for (int x : s.best) {
    key += ',';
    key += std::to_string(x);
  }
  return key;
}

}  // namespace linkpoly
