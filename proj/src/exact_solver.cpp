#include "sepcol/exact_solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "sepcol/error.hpp"

namespace sepcol {

namespace {

using ForbidFn = std::function<bool(const Vertex&, const Colour&, const Vertex&, const Colour&)>;

// Index-based constraint network. forbid[a * width + b] says value a at the
// arc's source conflicts with value b at its target.
struct Network {
  struct Arc {
    std::size_t to;
    std::vector<char> forbid;
  };
  std::vector<Vertex> vars;
  std::vector<std::vector<Colour>> values;
  std::vector<std::vector<Arc>> arcs;

  [[nodiscard]] bool conflict(const Arc& arc, std::size_t a, std::size_t b) const {
    return arc.forbid[a * values[arc.to].size() + b] != 0;
  }
};

Network compile(const PlaneGraph& g, const ListAssignment& lists, const ForbidFn& forbids) {
  require_cover(g, lists);
  Network net;
  net.vars = g.vertices();
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < net.vars.size(); ++i) {
    index[net.vars[i]] = i;
    const auto& list = lists.at(net.vars[i]);
    net.values.emplace_back(list.begin(), list.end());
  }
  net.arcs.resize(net.vars.size());
  for (std::size_t i = 0; i < net.vars.size(); ++i) {
    for (const auto& w : g.neighbours(net.vars[i])) {
      std::size_t j = index.at(w);
      Network::Arc arc{j, std::vector<char>(net.values[i].size() * net.values[j].size(), 0)};
      for (std::size_t a = 0; a < net.values[i].size(); ++a)
        for (std::size_t b = 0; b < net.values[j].size(); ++b)
          arc.forbid[a * net.values[j].size() + b] = forbids(net.vars[i], net.values[i][a], w, net.values[j][b]);
      net.arcs[i].push_back(std::move(arc));
    }
  }
  return net;
}

struct BudgetStop {};

class Search {
 public:
  Search(const Network& net, std::uint64_t budget)
      : net_(net), budget_(budget), chosen_(net.vars.size(), 0), member_(net.vars.size(), 0) {}

  bool run() {
    std::vector<std::size_t> all(net_.vars.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Domains domains(net_.vars.size());
    for (std::size_t i = 0; i < domains.size(); ++i)
      for (std::size_t a = 0; a < net_.values[i].size(); ++a) domains[i].push_back(a);
    return solve(all, domains);
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

  [[nodiscard]] Colouring witness() const {
    Colouring out;
    for (std::size_t i = 0; i < net_.vars.size(); ++i) out[net_.vars[i]] = net_.values[i][chosen_[i]];
    return out;
  }

 private:
  using Domains = std::vector<std::vector<std::size_t>>;

  const Network& net_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<char> member_;

  std::vector<std::vector<std::size_t>> split(const std::vector<std::size_t>& vars) {
    for (auto v : vars) member_[v] = 1;
    std::vector<std::vector<std::size_t>> parts;
    for (auto v : vars) {
      if (member_[v] != 1) continue;
      std::vector<std::size_t> part{v};
      member_[v] = 2;
      for (std::size_t k = 0; k < part.size(); ++k) {
        for (const auto& arc : net_.arcs[part[k]]) {
          if (member_[arc.to] == 1) {
            member_[arc.to] = 2;
            part.push_back(arc.to);
          }
        }
      }
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
    for (auto v : vars) member_[v] = 0;
    return parts;
  }

  std::size_t pick(const std::vector<std::size_t>& vars, const Domains& domains) {
    for (auto v : vars) member_[v] = 1;
    std::size_t best = vars.front();
    std::size_t best_dom = 0, best_deg = 0;
    bool have = false;
    for (auto v : vars) {
      std::size_t dom = domains[v].size();
      std::size_t deg = 0;
      for (const auto& arc : net_.arcs[v]) deg += member_[arc.to];
      deg = std::max<std::size_t>(deg, 1);
      if (dom <= 1) {
        best = v;
        have = true;
        break;
      }
      // dom/deg < best_dom/best_deg, ties by smaller domain then index.
      if (!have || dom * best_deg < best_dom * deg || (dom * best_deg == best_dom * deg && dom < best_dom)) {
        best = v;
        best_dom = dom;
        best_deg = deg;
        have = true;
      }
    }
    for (auto v : vars) member_[v] = 0;
    return best;
  }

  bool solve(const std::vector<std::size_t>& vars, const Domains& domains) {
    if (vars.empty()) return true;
    auto parts = split(vars);
    if (parts.size() > 1) {
      for (const auto& part : parts)
        if (!solve(part, domains)) return false;
      return true;
    }
    const std::size_t v = pick(vars, domains);
    std::vector<std::size_t> rest;
    rest.reserve(vars.size() - 1);
    for (auto x : vars)
      if (x != v) rest.push_back(x);
    for (auto x : rest) member_[x] = 1;
    std::vector<char> in_rest(member_.begin(), member_.end());
    for (auto x : rest) member_[x] = 0;

    for (std::size_t a : domains[v]) {
      ++nodes_;
      if (budget_ != 0 && nodes_ > budget_) throw BudgetStop{};
      Domains next = domains;
      bool wiped = false;
      for (const auto& arc : net_.arcs[v]) {
        if (!in_rest[arc.to]) continue;
        auto& dom = next[arc.to];
        std::erase_if(dom, [&](std::size_t b) { return net_.conflict(arc, a, b); });
        if (dom.empty()) {
          wiped = true;
          break;
        }
      }
      if (wiped) continue;
      chosen_[v] = a;
      if (solve(rest, next)) return true;
    }
    return false;
  }
};

SearchOutcome run_search(const Network& net, SolveOptions opts) {
  Search search(net, opts.node_budget);
  SearchOutcome out;
  try {
    if (search.run()) {
      out.status = SearchStatus::Colourable;
      out.witness = search.witness();
    } else {
      out.status = SearchStatus::NotColourable;
    }
  } catch (const BudgetStop&) {
    out.status = SearchStatus::BudgetExceeded;
  }
  out.nodes = search.nodes();
  return out;
}

std::vector<Colouring> enumerate(const Network& net, std::size_t limit) {
  std::vector<Colouring> out;
  std::vector<std::size_t> chosen(net.vars.size(), 0);
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == net.vars.size()) {
      if (out.size() == limit)
        throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limit) + " colourings");
      Colouring c;
      for (std::size_t k = 0; k < net.vars.size(); ++k) c[net.vars[k]] = net.values[k][chosen[k]];
      out.push_back(std::move(c));
      return;
    }
    for (std::size_t a = 0; a < net.values[i].size(); ++a) {
      bool ok = true;
      for (const auto& arc : net.arcs[i]) {
        if (arc.to < i && net.conflict(arc, a, chosen[arc.to])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[i] = a;
      step(i + 1);
    }
  };
  step(0);
  return out;
}

ForbidFn list_semantics() {
  return [](const Vertex&, const Colour& cu, const Vertex&, const Colour& cv) { return cu == cv; };
}

ForbidFn corr_semantics(const CorrespondenceAssignment& a) {
  return [&a](const Vertex& u, const Colour& cu, const Vertex& v, const Colour& cv) {
    return a.forbids(u, cu, v, cv);
  };
}

void require_matchings_on_edges(const PlaneGraph& g, const CorrespondenceAssignment& a) {
  for (const auto& [e, pairs] : a.matchings())
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorKind::MatchingOnNonEdge, "matching on non-edge " + e.u.str() + "|" + e.v.str());
}

CheckReport check_with(const PlaneGraph& g, const ListAssignment& lists, const Colouring& colouring,
                       const ForbidFn& forbids) {
  CheckReport report;
  for (const auto& v : g.vertices()) {
    auto it = colouring.find(v);
    if (it == colouring.end()) throw Error(ErrorKind::PartialColouring, v.str() + " is uncoloured");
    if (!lists.covers(v) || !lists.at(v).contains(it->second)) report.off_list.push_back(v);
  }
  for (const auto& e : g.edges()) {
    if (forbids(e.u, colouring.at(e.u), e.v, colouring.at(e.v))) report.violated_edges.push_back(e);
  }
  report.proper = report.off_list.empty() && report.violated_edges.empty();
  return report;
}

}  // namespace

const char* to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Colourable: return "colourable";
    case SearchStatus::NotColourable: return "not-colourable";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

CheckReport check(const PlaneGraph& g, const ListAssignment& lists, const Colouring& colouring) {
  return check_with(g, lists, colouring, list_semantics());
}

CheckReport check(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& colouring) {
  return check_with(g, a.base(), colouring, corr_semantics(a));
}

SearchOutcome solve_list(const PlaneGraph& g, const ListAssignment& lists, SolveOptions opts) {
  return run_search(compile(g, lists, list_semantics()), opts);
}

SearchOutcome solve_corr(const PlaneGraph& g, const CorrespondenceAssignment& a, SolveOptions opts) {
  require_matchings_on_edges(g, a);
  return run_search(compile(g, a.base(), corr_semantics(a)), opts);
}

std::vector<Colouring> enumerate_corr(const PlaneGraph& g, const CorrespondenceAssignment& a, std::size_t limit) {
  require_matchings_on_edges(g, a);
  return enumerate(compile(g, a.base(), corr_semantics(a)), limit);
}

std::vector<Colouring> enumerate_list(const PlaneGraph& g, const ListAssignment& lists, std::size_t limit) {
  return enumerate(compile(g, lists, list_semantics()), limit);
}

}  // namespace sepcol
