#include <algorithm>
#include <cmath>

#include "construction_support.hpp"
#include "mainswitch/constructions.hpp"
#include "mainswitch/search.hpp"
#include "mainswitch/spectral.hpp"

namespace mainswitch {

bool is_k2(const MultipartiteParams& p) { return p.blocks() == std::vector<Block>{{2, 1}}; }

bool is_k4_minus_edge(const MultipartiteParams& p) {
  return p.blocks() == std::vector<Block>{{1, 2}, {2, 1}};
}

namespace {

std::size_t switched_in(const Switching& x, const std::vector<Vertex>& vs) {
  return static_cast<std::size_t>(std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return x.contains(v); }));
}

Switching with(const Switching& x, const std::vector<Vertex>& extra) {
  std::vector<Vertex> vs = x.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  return Switching(vs);
}

// One step of a candidate family: nothing, an explicit vertex set, or
// `extra` more vertices of a block.
struct Step {
  std::vector<Vertex> explicit_vertices;
  std::size_t block = 0;
  std::size_t extra = 0;
};

std::vector<Vertex> resolve(const MultipartiteParams& p, const Switching& base, const Step& s) {
  if (s.extra == 0) return s.explicit_vertices;
  return next_switched_in_block(p, base, s.block, s.extra);
}

// [none, (0,+1), (0,+2), (1,+2), ..., (s-2,+2)]
std::vector<Step> plus_two_family(const MultipartiteParams& p) {
  std::vector<Step> f{{}, {{}, 0, 1}, {{}, 0, 2}};
  for (std::size_t i = 1; i + 1 < p.num_blocks(); ++i) f.push_back({{}, i, 2});
  return f;
}

// Skips members whose block cannot take the extra vertices.
std::optional<Switching> first_all_main(const MultipartiteParams& p, const Switching& base,
                                        const std::vector<Step>& family, const std::vector<double>& roots) {
  for (const Step& step : family) {
    Switching x;
    try {
      x = with(base, resolve(p, base, step));
    } catch (const ConstructionError&) {
      continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    bool ok = true;
    for (double lambda : roots) {
      if (!(std::abs(normalized_sum(secular_eigvec(p, x, lambda))) > kWitnessSum)) ok = false;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

Switching switched_leaders(const MultipartiteParams& p) {
  const std::size_t last = p.num_blocks() - 1;
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < last; ++i) {
    if (p.count(i) >= 2) vs.push_back(p.offset(i) + 1);
  }
  vs.push_back(p.offset(last) + 1);
  return Switching(vs);
}

void attach_witnesses(const MultipartiteParams& p, ConstructionResult& r) {
  const Switching& x = r.switching;
  for (double lambda : multipartite_secular_roots(p)) r.witnesses.push_back({lambda, secular_eigvec(p, x, lambda)});
  if (p.total_parts() == 1) return;

  bool zero_done = p.zero_multiplicity() == 0;
  for (std::size_t i = 0; i < p.num_blocks() && !zero_done; ++i) {
    for (std::size_t j = 0; j < p.count(i); ++j) {
      const auto part = p.part(i, j);
      const std::size_t t = switched_in(x, part);
      if (t == 0 || t == part.size()) continue;
      std::vector<Vertex> cls;
      std::copy_if(part.begin(), part.end(), std::back_inserter(cls), [&](Vertex v) { return x.contains(v); });
      std::copy_if(part.begin(), part.end(), std::back_inserter(cls), [&](Vertex v) { return !x.contains(v); });
      r.witnesses.push_back({0.0, duplicate_switch_eigvecs(r.graph, cls, t, DuplicateKind::open).front()});
      zero_done = true;
      break;
    }
  }

  for (std::size_t i = 0; i < p.num_blocks(); ++i) {
    if (p.count(i) < 2) continue;
    std::vector<std::size_t> counts;
    for (std::size_t j = 0; j < p.count(i); ++j) counts.push_back(switched_in(x, p.part(i, j)));
    const auto hi = std::max_element(counts.begin(), counts.end());
    const auto lo = std::min_element(counts.begin(), counts.end());
    if (*hi == *lo) continue;
    const double ti = -static_cast<double>(p.part_size(i));
    r.witnesses.push_back({ti, block_difference_eigvec(p, x, i, static_cast<std::size_t>(hi - counts.begin()),
                                                       static_cast<std::size_t>(lo - counts.begin()))});
  }
}

ConstructionResult delegate(const MultipartiteParams& p, ConstructionResult r) {
  const SearchOutcome found = search_switchings(r.graph);
  if (!found.certificate) throw NoAllMainSwitching(p.to_string() + " has no all-main switching");
  r.switching = Switching(found.certificate->switching);
  r.delegated = true;
  r.route = "search";
  return r;
}

}  // namespace

std::vector<Vertex> next_switched_in_block(const MultipartiteParams& p, const Switching& current,
                                           std::size_t i, std::size_t extra) {
  const auto vs = p.block_vertices(i);
  const Vertex f = p.offset(i);
  const bool spread = p.part_size(i) == 3 && p.block_order(i) >= 6;
  std::vector<Vertex> in_block;
  for (Vertex v : vs) {
    if (current.contains(v)) in_block.push_back(v);
  }
  std::vector<Vertex> added;
  for (std::size_t k = 0; k < extra; ++k) {
    auto taken = [&](Vertex v) {
      return std::find(in_block.begin(), in_block.end(), v) != in_block.end();
    };
    std::optional<Vertex> pick;
    if (spread && in_block.size() == 2) {
      const std::array<Vertex, 3> triple{f + 1, f + 2, f + 4};
      if (std::all_of(in_block.begin(), in_block.end(),
                      [&](Vertex v) { return std::find(triple.begin(), triple.end(), v) != triple.end(); })) {
        for (Vertex v : triple) {
          if (!taken(v)) pick = v;
        }
      }
    }
    if (!pick) {
      for (Vertex v : vs) {
        if (!taken(v)) {
          pick = v;
          break;
        }
      }
    }
    if (!pick) {
      throw ConstructionError("block " + std::to_string(i + 1) + " has no unswitched vertex left");
    }
    in_block.push_back(*pick);
    added.push_back(*pick);
  }
  return added;
}

std::vector<double> secular_eigvec(const MultipartiteParams& p, const Switching& x, double lambda) {
  const auto z = secular_coordinates(p, lambda);
  std::vector<double> v(p.order());
  for (Vertex u = 1; u <= p.order(); ++u) v[u - 1] = (x.contains(u) ? -1.0 : 1.0) * z[p.block_of(u)];
  return v;
}

std::vector<double> block_difference_eigvec(const MultipartiteParams& p, const Switching& x, std::size_t i,
                                            std::size_t a, std::size_t b) {
  if (i >= p.num_blocks() || a >= p.count(i) || b >= p.count(i) || a == b) {
    throw std::invalid_argument("block_difference_eigvec needs two distinct parts of one block");
  }
  std::vector<double> v(p.order(), 0.0);
  for (Vertex u : p.part(i, a)) v[u - 1] = x.contains(u) ? -1.0 : 1.0;
  for (Vertex u : p.part(i, b)) v[u - 1] = x.contains(u) ? 1.0 : -1.0;
  return v;
}

std::vector<double> multipartite_ti_eigvec(const MultipartiteParams& p, std::size_t i, std::size_t p_switched,
                                           std::size_t q_switched) {
  if (i >= p.num_blocks() || p.count(i) < 2) throw std::invalid_argument("block needs at least two parts");
  if (p_switched < 1 || p_switched > p.part_size(i) || q_switched >= p_switched) {
    throw std::invalid_argument("need 1 <= p <= t_i and q < p");
  }
  const auto u1 = p.part(i, 0);
  const auto u2 = p.part(i, 1);
  std::vector<Vertex> vs(u1.begin(), u1.begin() + static_cast<std::ptrdiff_t>(p_switched));
  vs.insert(vs.end(), u2.begin(), u2.begin() + static_cast<std::ptrdiff_t>(q_switched));
  return block_difference_eigvec(p, Switching(vs), i, 0, 1);
}

ConstructionResult multipartite_all_main_switching(const MultipartiteParams& p) {
  if (is_k2(p) || is_k4_minus_edge(p)) {
    throw NoAllMainSwitching(p.to_string() + " has no all-main switching");
  }
  const std::size_t s = p.num_blocks();
  const std::size_t last = s - 1;
  const std::size_t n = p.order();
  const std::size_t t1 = p.part_size(0);
  const std::size_t ts = p.part_size(last);
  const std::size_t l_last = p.count(last);
  const std::size_t m1 = p.block_order(0);
  const bool singles_before_last =
      std::all_of(p.blocks().begin(), p.blocks().end() - 1, [](const Block& b) { return b.count == 1; });

  ConstructionResult r;
  r.graph = make_multipartite(p);

  const auto roots = multipartite_secular_roots(p);
  auto scan = [&](const Switching& base, const std::vector<Step>& family, const std::string& route) {
    const auto x = first_all_main(p, base, family, roots);
    if (!x) throw ConstructionError("no candidate keeps every secular eigenvector of " + p.to_string() + " main");
    r.switching = *x;
    r.route = route;
  };
  auto explicit_family = [](std::vector<std::vector<Vertex>> sets) {
    std::vector<Step> f;
    for (auto& v : sets) f.push_back({std::move(v), 0, 0});
    return f;
  };

  if (n == 1 || p.total_parts() == 1) {
    r.route = "trivial";
  } else if (ts >= 2) {
    if (s == 1) {
      r.switching = Switching({1});
      r.route = "single-block";
    } else {
      scan(switched_leaders(p), plus_two_family(p), "leaders");
    }
  } else if (s == 1) {
    r.switching = Switching({1});
    r.route = "complete";
  } else if (singles_before_last) {
    const Vertex fl = p.offset(last);
    if (t1 == 2) {
      if (l_last <= 3) {
        r = delegate(p, std::move(r));
      } else {
        scan(Switching({1, m1 + 1}), explicit_family({{}, {m1 + 2}, {m1 + 2, m1 + 3}}), "pair-prefix");
      }
    } else if (t1 == 3) {
      if (l_last <= 2) {
        r = delegate(p, std::move(r));
      } else {
        std::vector<Step> f{{}};
        for (std::size_t i = 0; i < s; ++i) f.push_back({{}, i, 1});
        scan(Switching({1, fl + 1}), f, "triple-single");
      }
    } else {
      scan(Switching({1, fl + 1}), plus_two_family(p), "wide-single");
    }
  } else if (t1 == 2) {
    const std::size_t m2 = p.block_order(1);
    if (m2 <= 3 && m1 == 4) {
      r = delegate(p, std::move(r));
    } else if (m2 <= 3) {
      scan(Switching({1, m1 + 1}), explicit_family({{}, {2, 3}, {2, 3, 4, 5}}), "pair-block");
    } else {
      scan(Switching({1, m1 + 1}), explicit_family({{}, {m1 + 2}, {m1 + 2, m1 + 3}}), "pair-prefix");
    }
  } else {
    scan(switched_leaders(p), plus_two_family(p), "leaders");
  }

  attach_witnesses(p, r);
  finalize(r);
  return r;
}

std::vector<double> one_per_part_vector(const MultipartiteParams& p, double lambda) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < p.num_blocks(); ++i) vs.push_back(p.offset(i) + 1);
  return secular_eigvec(p, Switching(vs), lambda);
}

ConstructionResult proposition_one_per_part(const MultipartiteParams& p) {
  const bool singles =
      std::all_of(p.blocks().begin(), p.blocks().end(), [](const Block& b) { return b.count == 1; });
  if (!singles || p.num_blocks() < 2 || p.part_size(p.num_blocks() - 1) < 2) {
    throw std::invalid_argument("one-per-part switching needs l_i = 1, t_s >= 2 and s >= 2 (got " +
                                p.to_string() + ")");
  }
  ConstructionResult r;
  r.graph = make_multipartite(p);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < p.num_blocks(); ++i) vs.push_back(p.offset(i) + 1);
  r.switching = Switching(vs);
  r.route = "one-per-part";
  for (double lambda : multipartite_secular_roots(p)) r.witnesses.push_back({lambda, one_per_part_vector(p, lambda)});
  std::vector<double> e12(p.order(), 0.0);
  e12[0] = e12[1] = 1.0;
  r.witnesses.push_back({0.0, e12});
  finalize(r);
  return r;
}

}  // namespace mainswitch
