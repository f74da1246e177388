#include "cybar/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cybar/error.hpp"
#include "cybar/model.hpp"

namespace cybar {

namespace {

std::string vertex_list_name(const std::vector<int>& vs, bool compact) {
  std::string out;
  for (std::size_t p = 0; p < vs.size(); ++p) {
    if (p && !compact) out += '.';
    out += std::to_string(vs[p]);
  }
  return out;
}

// Builds the set whose nondegenerate simplices are the given sorted vertex
// lists, which must be closed under taking faces.
SimplicialSet from_vertex_lists(const std::set<std::vector<int>>& simplices, int truncation, bool compact) {
  SimplicialSet out(truncation);
  std::map<std::vector<int>, int> ids;
  int top = 0;
  for (const auto& s : simplices) top = std::max(top, static_cast<int>(s.size()) - 1);
  for (int n = 0; n <= std::min(top, truncation); ++n) {
    for (const auto& s : simplices) {
      if (static_cast<int>(s.size()) != n + 1) continue;
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) {
        auto f = s;
        f.erase(f.begin() + i);
        faces.push_back(Simplex{n - 1, ids.at(f), {}});
      }
      ids[s] = out.add(n, vertex_list_name(s, compact), std::move(faces));
    }
  }
  return out;
}

void encode(const Simplex& s, Tuple& out) {
  out.push_back(s.base_degree);
  out.push_back(s.id);
  out.insert(out.end(), s.degeneracies.begin(), s.degeneracies.end());
}

Simplex decode(int degree, const Tuple& t, std::size_t& pos) {
  Simplex s;
  s.base_degree = t[pos];
  s.id = t[pos + 1];
  pos += 2;
  const auto len = static_cast<std::size_t>(degree - s.base_degree);
  s.degeneracies.assign(t.begin() + static_cast<std::ptrdiff_t>(pos), t.begin() + static_cast<std::ptrdiff_t>(pos + len));
  pos += len;
  return s;
}

std::string fresh_name(const SimplicialSet& s, int degree, std::string name) {
  while (s.find(degree, name)) name += '\'';
  return name;
}

}  // namespace

SimplicialSet std_simplex(int n, int truncation) {
  if (n < 0) throw Error("negative simplex dimension");
  if (n > truncation) throw TruncationError("Delta^" + std::to_string(n) + " needs truncation >= " + std::to_string(n));
  std::set<std::vector<int>> simplices;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    simplices.insert(vs);
  }
  auto out = from_vertex_lists(simplices, truncation, n < 10);
  out.set_basepoint(0);
  return out;
}

SimplicialSet point(int truncation) { return std_simplex(0, truncation); }

SimplicialSet simplicial_circle(int truncation) { return minimal_sphere(1, truncation); }

SimplicialSet minimal_sphere(int n, int truncation) {
  if (n < 1) throw Error("minimal sphere needs dimension >= 1");
  SimplicialSet out(truncation);
  out.add(0, "*");
  out.set_basepoint(0);
  if (n <= truncation) {
    std::vector<Simplex> faces(static_cast<std::size_t>(n + 1), degenerate_vertex(0, n - 1));
    out.add(n, n == 1 ? "e" : "sigma", std::move(faces));
  }
  return out;
}

SimplicialSet from_complex(const std::vector<std::vector<int>>& facets, int truncation) {
  std::set<std::vector<int>> simplices;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    const auto k = facet.size();
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<int> vs;
      for (std::size_t p = 0; p < k; ++p)
        if (mask & (1ul << p)) vs.push_back(facet[p]);
      simplices.insert(vs);
    }
  }
  auto out = from_vertex_lists(simplices, truncation, false);
  if (out.size(0) > 0) out.set_basepoint(0);
  return out;
}

SimplicialSet cone(const SimplicialSet& x, int truncation) {
  SimplicialSet out(truncation);
  // ids of x in degree n keep their index; cone simplices x*c follow.
  std::vector<std::vector<int>> joined(static_cast<std::size_t>(truncation + 1));
  const int apex = static_cast<int>(x.size(0));
  for (int n = 0; n <= truncation; ++n) {
    for (std::size_t id = 0; id < x.size(n); ++id) {
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(x.stored_face(n, static_cast<int>(id), i));
      out.add(n, x.name(n, static_cast<int>(id)), std::move(faces));
    }
    if (n == 0) {
      out.add(0, fresh_name(out, 0, "c"));
      continue;
    }
    joined[static_cast<std::size_t>(n)].resize(x.size(n - 1));
    for (std::size_t id = 0; id < x.size(n - 1); ++id) {
      const Simplex base{n - 1, static_cast<int>(id), {}};
      std::vector<Simplex> faces;
      if (n == 1) {
        faces.push_back(Simplex{0, apex, {}});
        faces.push_back(Simplex{0, static_cast<int>(id), {}});
      } else {
        for (int i = 0; i <= n - 1; ++i) {
          const auto f = x.face(base, i);
          faces.push_back(Simplex{f.base_degree + 1, joined[static_cast<std::size_t>(f.base_degree + 1)][static_cast<std::size_t>(f.id)],
                                  f.degeneracies});
        }
        faces.push_back(base);
      }
      joined[static_cast<std::size_t>(n)][id] =
          out.add(n, fresh_name(out, n, x.name(n - 1, static_cast<int>(id)) + "*c"), std::move(faces));
    }
  }
  out.set_basepoint(apex);
  return out;
}

Product product(SetPtr x, SetPtr y) {
  const int top = std::min(x->truncation(), y->truncation());
  TupleModel m;
  m.truncation = top;
  m.elements = [x, y](int n) {
    std::vector<Tuple> out;
    const auto xs = x->simplices(n);
    const auto ys = y->simplices(n);
    out.reserve(xs.size() * ys.size());
    for (const auto& a : xs)
      for (const auto& b : ys) {
        Tuple t;
        encode(a, t);
        encode(b, t);
        out.push_back(std::move(t));
      }
    return out;
  };
  m.face = [x, y](int n, int i, const Tuple& t) {
    std::size_t pos = 0;
    auto a = decode(n, t, pos);
    auto b = decode(n, t, pos);
    Tuple out;
    encode(x->face(a, i), out);
    encode(y->face(b, i), out);
    return out;
  };
  m.degeneracy = [](int n, int j, const Tuple& t) {
    std::size_t pos = 0;
    auto a = decode(n, t, pos);
    auto b = decode(n, t, pos);
    Tuple out;
    encode(degenerate(a, j), out);
    encode(degenerate(b, j), out);
    return out;
  };
  m.label = [x, y](int n, const Tuple& t) {
    std::size_t pos = 0;
    auto a = decode(n, t, pos);
    auto b = decode(n, t, pos);
    return "(" + x->label(a) + ";" + y->label(b) + ")";
  };
  if (x->basepoint() && y->basepoint()) {
    Tuple base;
    encode(x->base_simplex(0), base);
    encode(y->base_simplex(0), base);
    m.basepoint = base;
  }
  Materialized mat(std::move(m));
  SimplicialMap first(mat.set(), x);
  SimplicialMap second(mat.set(), y);
  for (int n = 0; n <= top; ++n)
    for (std::size_t id = 0; id < mat.set()->size(n); ++id) {
      std::size_t pos = 0;
      const auto& t = mat.tuple(n, static_cast<int>(id));
      first.set(n, static_cast<int>(id), decode(n, t, pos));
      second.set(n, static_cast<int>(id), decode(n, t, pos));
    }
  return Product{mat.set(), std::move(first), std::move(second)};
}

Quotient quotient(SetPtr x, const std::function<bool(int, int)>& in_a) {
  const int top = x->truncation();
  for (int n = 1; n <= top; ++n)
    for (std::size_t id = 0; id < x->size(n); ++id) {
      if (!in_a(n, static_cast<int>(id))) continue;
      for (int i = 0; i <= n; ++i) {
        const auto& f = x->stored_face(n, static_cast<int>(id), i);
        if (!in_a(f.base_degree, f.id))
          throw InvariantError("quotient subset is not closed under faces at " + x->name(n, static_cast<int>(id)));
      }
    }
  SimplicialSet out(top);
  out.add(0, "*");
  out.set_basepoint(0);
  std::vector<std::vector<int>> remap(static_cast<std::size_t>(top + 1));
  auto image = [&](const Simplex& s) {
    if (in_a(s.base_degree, s.id)) return degenerate_vertex(0, s.degree());
    return Simplex{s.base_degree, remap[static_cast<std::size_t>(s.base_degree)][static_cast<std::size_t>(s.id)],
                   s.degeneracies};
  };
  for (int n = 0; n <= top; ++n) {
    remap[static_cast<std::size_t>(n)].assign(x->size(n), -1);
    for (std::size_t id = 0; id < x->size(n); ++id) {
      if (in_a(n, static_cast<int>(id))) continue;
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(image(x->stored_face(n, static_cast<int>(id), i)));
      remap[static_cast<std::size_t>(n)][id] =
          out.add(n, fresh_name(out, n, x->name(n, static_cast<int>(id))), std::move(faces));
    }
  }
  auto shared = share(std::move(out));
  SimplicialMap proj(x, shared);
  for (int n = 0; n <= top; ++n)
    for (std::size_t id = 0; id < x->size(n); ++id) proj.set(n, static_cast<int>(id), image(Simplex{n, static_cast<int>(id), {}}));
  return Quotient{shared, std::move(proj)};
}

bool degreewise_injective(const SimplicialMap& f) {
  std::set<Simplex> seen;
  const auto& a = f.source();
  for (int n = 0; n <= a.truncation(); ++n)
    for (std::size_t id = 0; id < a.size(n); ++id) {
      const auto& img = f.image(n, static_cast<int>(id));
      if (img.degenerate() || !seen.insert(img).second) return false;
    }
  return true;
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source_ptr() != g.source_ptr()) throw Error("pushout legs must share their source");
  if (!degreewise_injective(f)) throw InvariantError("pushout leg f is not degreewise injective");
  const auto& a = f.source();
  const auto& b = f.target();
  const auto& c = g.target();
  const int top = std::min({a.truncation(), b.truncation(), c.truncation()});
  SimplicialSet out(top);
  // preimage under f of nondegenerate simplices of B
  std::map<Simplex, int> f_preimage;
  for (int n = 0; n <= top; ++n)
    for (std::size_t id = 0; id < a.size(n); ++id) f_preimage.emplace(f.image(n, static_cast<int>(id)), static_cast<int>(id));

  std::vector<std::vector<int>> c_ids(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<Simplex>> b_images(static_cast<std::size_t>(top + 1));
  auto c_image = [&](const Simplex& s) {
    return Simplex{s.base_degree, c_ids[static_cast<std::size_t>(s.base_degree)][static_cast<std::size_t>(s.id)], s.degeneracies};
  };
  auto b_image = [&](const Simplex& s) {
    Simplex r = b_images[static_cast<std::size_t>(s.base_degree)][static_cast<std::size_t>(s.id)];
    for (auto it = s.degeneracies.rbegin(); it != s.degeneracies.rend(); ++it) r = degenerate(std::move(r), *it);
    return r;
  };
  for (int n = 0; n <= top; ++n) {
    for (std::size_t id = 0; id < c.size(n); ++id) {
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(c_image(c.stored_face(n, static_cast<int>(id), i)));
      c_ids[static_cast<std::size_t>(n)].push_back(out.add(n, c.name(n, static_cast<int>(id)), std::move(faces)));
    }
    b_images[static_cast<std::size_t>(n)].resize(b.size(n));
    for (std::size_t id = 0; id < b.size(n); ++id) {
      const Simplex s{n, static_cast<int>(id), {}};
      if (auto it = f_preimage.find(s); it != f_preimage.end()) {
        b_images[static_cast<std::size_t>(n)][id] = c_image(g.image(n, it->second));
        continue;
      }
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(b_image(b.stored_face(n, static_cast<int>(id), i)));
      const int new_id = out.add(n, fresh_name(out, n, b.name(n, static_cast<int>(id))), std::move(faces));
      b_images[static_cast<std::size_t>(n)][id] = Simplex{n, new_id, {}};
    }
  }
  if (c.basepoint()) out.set_basepoint(c_ids[0][static_cast<std::size_t>(*c.basepoint())]);
  auto shared = share(std::move(out));
  SimplicialMap from_b(f.target_ptr(), shared);
  SimplicialMap from_c(g.target_ptr(), shared);
  for (int n = 0; n <= top; ++n) {
    for (std::size_t id = 0; id < b.size(n); ++id) from_b.set(n, static_cast<int>(id), b_images[static_cast<std::size_t>(n)][id]);
    for (std::size_t id = 0; id < c.size(n); ++id) from_c.set(n, static_cast<int>(id), c_image(Simplex{n, static_cast<int>(id), {}}));
  }
  return Pushout{shared, std::move(from_b), std::move(from_c)};
}

SimplicialMap induced_pushout_map(const Pushout& from, const Pushout& to, const SimplicialMap& on_b,
                                  const SimplicialMap& on_c) {
  SimplicialMap out(from.set, to.set);
  const auto& p = *from.set;
  std::vector<std::vector<bool>> done(static_cast<std::size_t>(p.truncation() + 1));
  for (int n = 0; n <= p.truncation(); ++n) done[static_cast<std::size_t>(n)].assign(p.size(n), false);
  auto assign = [&](const SimplicialMap& corner, const SimplicialMap& to_corner, const SimplicialMap& leg) {
    const auto& src = corner.source();
    for (int n = 0; n <= std::min(src.truncation(), p.truncation()); ++n)
      for (std::size_t id = 0; id < src.size(n); ++id) {
        const auto& z = corner.image(n, static_cast<int>(id));
        if (z.degenerate() || done[static_cast<std::size_t>(n)][static_cast<std::size_t>(z.id)]) continue;
        out.set(n, z.id, to_corner(leg.image(n, static_cast<int>(id))));
        done[static_cast<std::size_t>(n)][static_cast<std::size_t>(z.id)] = true;
      }
  };
  assign(from.from_c, to.from_c, on_c);
  assign(from.from_b, to.from_b, on_b);
  return out;
}

SimplicialMap inclusion_by_name(SetPtr a, SetPtr x) {
  SimplicialMap f(a, x);
  for (int n = 0; n <= a->truncation(); ++n)
    for (std::size_t id = 0; id < a->size(n); ++id) {
      auto target = x->find(n, a->name(n, static_cast<int>(id)));
      if (!target) throw Error("no simplex named " + a->name(n, static_cast<int>(id)) + " in the target");
      f.set(n, static_cast<int>(id), Simplex{n, *target, {}});
    }
  return f;
}

SimplicialMap constant_map(SetPtr source, SetPtr target, int vertex) {
  SimplicialMap f(source, target);
  for (int n = 0; n <= source->truncation(); ++n)
    for (std::size_t id = 0; id < source->size(n); ++id) f.set(n, static_cast<int>(id), degenerate_vertex(vertex, n));
  return f;
}

SimplicialSet wedge(SetPtr x, SetPtr y) {
  if (!x->basepoint() || !y->basepoint()) throw Error("wedge needs pointed simplicial sets");
  auto pt = share(point(std::min(x->truncation(), y->truncation())));
  auto out = pushout(constant_map(pt, x, *x->basepoint()), constant_map(pt, y, *y->basepoint()));
  return out.set->with_truncation(out.set->truncation());
}

SimplicialSet smash(SetPtr x, SetPtr y) {
  if (!x->basepoint() || !y->basepoint()) throw Error("smash needs pointed simplicial sets");
  auto p = product(x, y);
  const auto& first = p.first;
  const auto& second = p.second;
  auto q = quotient(p.set, [&](int n, int id) {
    const auto& a = first.image(n, id);
    const auto& b = second.image(n, id);
    return x->is_base(Simplex{a.base_degree, a.id, {}}) || y->is_base(Simplex{b.base_degree, b.id, {}});
  });
  return q.set->with_truncation(q.set->truncation());
}

SimplicialSet disjoint_union(SetPtr x, SetPtr y) {
  auto empty = share(SimplicialSet(std::min(x->truncation(), y->truncation())));
  auto out = pushout(SimplicialMap(empty, x), SimplicialMap(empty, y));
  return out.set->with_truncation(out.set->truncation());
}

}  // namespace cybar
