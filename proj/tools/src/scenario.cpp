#include <charconv>
#include <sstream>

#include "cybar/cli/scenario.hpp"
#include "cybar/error.hpp"

namespace cybar::cli {

std::string to_string(JobKind k) {
  switch (k) {
    case JobKind::build: return "build";
    case JobKind::verify: return "verify";
    case JobKind::homology: return "homology";
    case JobKind::counterexample: return "counterexample";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

/// Whitespace- and comma-separated tokens.
std::vector<std::string> tokens(std::string_view s) {
  std::string t(s);
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

template <class Int>
Int to_number(const std::string& s, std::size_t line) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "expected a number, got '" + s + "'");
  return value;
}

class Parser {
 public:
  explicit Parser(Scenario& s) : s_(s) {}

  void statement(const std::string& text, std::size_t line) {
    line_ = line;
    const auto words = tokens(text);
    const auto& head = words.front();
    if (head == "trunc") {
      expect(words.size() == 2, "expected 'trunc <n>'");
      s_.truncation = to_number<int>(words[1], line_);
      if (s_.truncation < 1) fail("truncation must be positive");
    } else if (head == "seed") {
      expect(words.size() == 2, "expected 'seed <n>'");
      s_.seed = to_number<std::uint64_t>(words[1], line_);
    } else if (head == "cap") {
      expect(words.size() == 2, "expected 'cap <n>'");
      s_.cap = to_number<std::size_t>(words[1], line_);
    } else if (head == "monoid") {
      monoid(rest(text, head));
    } else if (head == "set") {
      set(rest(text, head));
    } else if (head == "action") {
      action(rest(text, head));
    } else if (head == "situation") {
      situation(rest(text, head));
    } else if (head == "augment") {
      augmentation(rest(text, head));
    } else if (head == "space") {
      space(rest(text, head));
    } else if (head == "corrupt") {
      corrupt(rest(text, head));
    } else if (head == "build" || head == "verify" || head == "homology" || head == "counterexample") {
      job(text, words);
    } else {
      fail("unknown statement '" + head + "'");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }
  void expect(bool ok, const std::string& what) const {
    if (!ok) fail(what);
  }

  static std::string rest(const std::string& text, const std::string& head) { return trim(std::string_view(text).substr(head.size())); }

  /// `name = body` or `name: body`.
  std::pair<std::string, std::string> named(const std::string& text, char sep) const {
    const auto p = text.find(sep);
    if (p == std::string::npos) fail(std::string("expected '") + sep + "'");
    const auto name = trim(std::string_view(text).substr(0, p));
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) fail("bad name '" + name + "'");
    return {name, trim(std::string_view(text).substr(p + 1))};
  }

  const MonoidPtr& find_monoid(const std::string& name) const {
    auto it = s_.monoids.find(name);
    if (it == s_.monoids.end()) fail("undefined monoid '" + name + "'");
    return it->second;
  }
  const ActionPtr& find_action(const std::string& name) const {
    auto it = s_.actions.find(name);
    if (it == s_.actions.end()) fail("undefined action '" + name + "'");
    return it->second;
  }
  const SituationPtr& find_situation(const std::string& name) const {
    auto it = s_.situations.find(name);
    if (it == s_.situations.end()) fail("undefined situation '" + name + "'");
    return it->second;
  }
  const GAugmentedSituation& find_augmentation(const std::string& name) const {
    auto it = s_.augmentations.find(name);
    if (it == s_.augmentations.end()) fail("undefined augmentation '" + name + "'");
    return it->second;
  }

  template <class T>
  T checked(Checked<T> c) const {
    if (!c.ok()) fail(c.violation().to_string());
    return std::move(c).value();
  }

  template <class F>
  auto guarded(F&& f) const {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  static int index_of(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == name) return static_cast<int>(k);
    return -1;
  }

  int element(const std::vector<std::string>& names, const std::string& name, const std::string& what) const {
    const int k = index_of(names, name);
    if (k < 0) fail("unknown " + what + " '" + name + "'");
    return k;
  }

  void define_monoid(const std::string& name, MonoidPtr m) {
    if (s_.monoids.count(name)) fail("monoid '" + name + "' defined twice");
    s_.monoids.emplace(name, std::move(m));
  }

  void monoid(const std::string& text) {
    if (text.find('=') != std::string::npos && (text.find(':') == std::string::npos || text.find('=') < text.find(':'))) {
      const auto [name, body] = named(text, '=');
      const auto w = tokens(body);
      expect(!w.empty(), "expected a monoid description");
      MonoidPtr m;
      if (w[0] == "cyclic" && w.size() == 2) {
        m = guarded([&] { return builtin::cyclic(to_number<int>(w[1], line_)); });
      } else if (w[0] == "symmetric" && w.size() == 2 && w[1] == "3") {
        m = builtin::symmetric3();
      } else if (w[0] == "trivial" && w.size() == 1) {
        m = builtin::trivial();
      } else if (w[0] == "zero" && w.size() == 1) {
        m = builtin::zero_monoid();
      } else if (w[0] == "submonoid") {
        const auto colon = body.find(':');
        expect(colon != std::string::npos, "expected 'submonoid <M>: <elements>'");
        const auto parent = trim(std::string_view(body).substr(9, colon - 9));
        const auto& pm = find_monoid(parent);
        const auto elems = tokens(std::string_view(body).substr(colon + 1));
        for (const auto& e : elems) element(pm->names(), e, "element of " + parent);
        m = guarded([&] { return builtin::submonoid(pm, elems); });
      } else {
        fail("unknown monoid description '" + body + "'");
      }
      define_monoid(name, m);
      return;
    }
    const auto [name, body] = named(text, ':');
    std::vector<std::string> roster;
    std::string unit;
    std::vector<std::string> products;
    for (const auto& clause : split(body, ';')) {
      const auto w = tokens(clause);
      if (w.empty()) continue;
      if (w[0] == "elems") {
        roster.assign(w.begin() + 1, w.end());
      } else if (w[0] == "unit" && w.size() == 2) {
        unit = w[1];
      } else if (w[0] == "mul") {
        products.insert(products.end(), w.begin() + 1, w.end());
      } else {
        fail("unknown monoid clause '" + clause + "'");
      }
    }
    expect(!roster.empty(), "monoid '" + name + "' has no elements");
    const int u = element(roster, unit, "unit");
    const auto n = roster.size();
    Table table(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a) {
      table[a][static_cast<std::size_t>(u)] = static_cast<int>(a);
      table[static_cast<std::size_t>(u)][a] = static_cast<int>(a);
    }
    for (const auto& p : products) {
      const auto star = p.find('*');
      const auto eq = p.find('=');
      expect(star != std::string::npos && eq != std::string::npos && star < eq, "expected 'a*b=c', got '" + p + "'");
      const int a = element(roster, p.substr(0, star), "element");
      const int b = element(roster, p.substr(star + 1, eq - star - 1), "element");
      const int c = element(roster, p.substr(eq + 1), "element");
      auto& slot = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (slot >= 0 && slot != c) fail("conflicting product " + p);
      slot = c;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] < 0) fail("missing product " + roster[a] + "*" + roster[b]);
    define_monoid(name, share(checked(monoid_from_table(name, roster, u, table))));
  }

  void set(const std::string& text) {
    const auto [name, body] = named(text, ':');
    const auto elems = tokens(body);
    expect(!elems.empty(), "set '" + name + "' is empty");
    if (s_.sets.count(name)) fail("set '" + name + "' defined twice");
    s_.sets.emplace(name, elems);
  }

  std::vector<std::string> carrier(const std::string& name) const {
    if (auto it = s_.sets.find(name); it != s_.sets.end()) return it->second;
    if (auto it = s_.monoids.find(name); it != s_.monoids.end()) return it->second->names();
    fail("undefined set or monoid '" + name + "'");
  }

  void define_action(const std::string& name, ActionPtr a) {
    if (s_.actions.count(name)) fail("action '" + name + "' defined twice");
    s_.actions.emplace(name, std::move(a));
  }

  void action(const std::string& text) {
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    if (eq != std::string::npos && (colon == std::string::npos || eq < colon)) {
      const auto [name, body] = named(text, '=');
      const auto w = tokens(body);
      if (w.size() == 2 && w[0] == "translation") {
        define_action(name, share(builtin::translation(find_monoid(w[1]))));
      } else if (w.size() == 2 && w[0] == "pointed-translation") {
        define_action(name, share(builtin::pointed_translation(find_monoid(w[1]))));
      } else if (w.size() == 4 && w[0] == "trivial" && w[2] == "on") {
        define_action(name, share(builtin::trivial_action(find_monoid(w[1]), carrier(w[3]))));
      } else {
        fail("unknown action description '" + body + "'");
      }
      return;
    }
    expect(colon != std::string::npos, "expected 'action <G> on <X>: ...'");
    const auto head = tokens(std::string_view(text).substr(0, colon));
    expect((head.size() == 3 || head.size() == 5) && head[1] == "on" && (head.size() == 3 || head[3] == "as"),
           "expected 'action <G> on <X> [as <name>]:'");
    const auto& g = find_monoid(head[0]);
    const auto x = carrier(head[2]);
    const auto name = head.size() == 5 ? head[4] : head[2];
    const auto ng = g->size();
    const auto nx = x.size();
    Table left(ng, std::vector<int>(nx, -1)), right(nx, std::vector<int>(ng, -1));
    bool has_left = false, has_right = false;
    for (const auto& clause : split(std::string_view(text).substr(colon + 1), ';')) {
      const auto w = tokens(clause);
      if (w.empty()) continue;
      const bool is_left = w[0] == "left";
      if (!is_left && w[0] != "right") fail("unknown action clause '" + clause + "'");
      (is_left ? has_left : has_right) = true;
      for (std::size_t k = 1; k < w.size(); ++k) {
        const auto& e = w[k];
        const auto eqp = e.rfind('=');
        const auto dot = is_left ? e.find('.') : e.rfind('.', eqp);
        expect(eqp != std::string::npos && dot != std::string::npos && dot < eqp, "expected 'g.x=y', got '" + e + "'");
        const auto a = e.substr(0, dot), b = e.substr(dot + 1, eqp - dot - 1);
        const int y = element(x, e.substr(eqp + 1), "carrier element");
        if (is_left)
          left[static_cast<std::size_t>(element(g->names(), a, "monoid element"))][static_cast<std::size_t>(element(x, b, "carrier element"))] = y;
        else
          right[static_cast<std::size_t>(element(x, a, "carrier element"))][static_cast<std::size_t>(element(g->names(), b, "monoid element"))] = y;
      }
    }
    for (std::size_t p = 0; p < nx; ++p) {
      left[static_cast<std::size_t>(g->unit())][p] = static_cast<int>(p);
      right[p][static_cast<std::size_t>(g->unit())] = static_cast<int>(p);
      for (std::size_t h = 0; h < ng; ++h) {
        if (!has_left) left[h][p] = static_cast<int>(p);
        if (!has_right) right[p][h] = static_cast<int>(p);
        if (left[h][p] < 0) fail("missing left entry " + g->name(static_cast<int>(h)) + "." + x[p]);
        if (right[p][h] < 0) fail("missing right entry " + x[p] + "." + g->name(static_cast<int>(h)));
      }
    }
    define_action(name, share(checked(check_action(g, x, left, right))));
  }

  void define_situation(const std::string& name, SituationPtr s) {
    if (s_.situations.count(name)) fail("situation '" + name + "' defined twice");
    s_.situations.emplace(name, std::move(s));
  }

  void situation(const std::string& text) {
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    if (eq != std::string::npos && (colon == std::string::npos || eq < colon)) {
      const auto [name, body] = named(text, '=');
      const auto w = tokens(body);
      if (w.size() == 2 && w[0] == "self") {
        define_situation(name, share(builtin::self_situation(find_monoid(w[1]))));
      } else if (w.size() == 4 && w[0] == "submonoid" && w[2] == "in") {
        const auto& a = find_monoid(w[1]);
        const auto& m = find_monoid(w[3]);
        for (const auto& e : a->names()) element(m->names(), e, "element of " + w[3]);
        define_situation(name, share(guarded([&] { return builtin::submonoid_situation(a, m); })));
      } else if (w.size() == 4 && w[0] == "pointed" && w[2] == "base") {
        const auto x = carrier(w[1]);
        define_situation(name, share(builtin::pointed_situation(x, element(x, w[3], "basepoint"))));
      } else {
        fail("unknown situation description '" + body + "'");
      }
      return;
    }
    const auto [name, body] = named(text, ':');
    MonoidPtr h;
    ActionPtr act;
    std::vector<std::string> iota;
    for (const auto& clause : split(body, ';')) {
      const auto w = tokens(clause);
      if (w.empty()) continue;
      if (w[0] == "monoid" && w.size() == 2) h = find_monoid(w[1]);
      else if (w[0] == "action" && w.size() == 2) act = find_action(w[1]);
      else if (w[0] == "iota") iota.assign(w.begin() + 1, w.end());
      else fail("unknown situation clause '" + clause + "'");
    }
    expect(h && act, "situation needs 'monoid' and 'action' clauses");
    expect(act->monoid.get() == h.get(), "the action of situation '" + name + "' is not an action of its monoid");
    std::vector<int> map(h->size(), -1);
    for (const auto& e : iota) {
      const auto p = e.find('=');
      expect(p != std::string::npos, "expected 'h=m', got '" + e + "'");
      map[static_cast<std::size_t>(element(h->names(), e.substr(0, p), "monoid element"))] =
          element(act->carrier, e.substr(p + 1), "carrier element");
    }
    for (std::size_t k = 0; k < map.size(); ++k)
      if (map[k] < 0) fail("iota misses " + h->name(static_cast<int>(k)));
    define_situation(name, share(checked(make_situation(act, map))));
  }

  void augmentation(const std::string& text) {
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    std::string name;
    GAugmentedSituation aug;
    if (eq != std::string::npos && (colon == std::string::npos || eq < colon)) {
      const auto [n, body] = named(text, '=');
      const auto w = tokens(body);
      expect(w.size() == 2 && w[0] == "translation", "expected 'augment <name> = translation <G>'");
      name = n;
      aug = guarded([&] { return builtin::translation_instance(find_monoid(w[1])); });
    } else {
      const auto [n, body] = named(text, ':');
      name = n;
      SituationPtr sit;
      MonoidPtr g;
      ActionPtr on_monoid, on_carrier;
      for (const auto& clause : split(body, ';')) {
        const auto w = tokens(clause);
        if (w.empty()) continue;
        expect(w.size() == 2, "expected '<clause> <name>'");
        if (w[0] == "situation") sit = find_situation(w[1]);
        else if (w[0] == "group") g = find_monoid(w[1]);
        else if (w[0] == "on-monoid") on_monoid = find_action(w[1]);
        else if (w[0] == "on-carrier") on_carrier = find_action(w[1]);
        else fail("unknown augmentation clause '" + clause + "'");
      }
      expect(sit && g && on_monoid && on_carrier, "augmentation needs situation, group, on-monoid and on-carrier");
      aug = checked(augment(sit, g, on_monoid, on_carrier));
    }
    if (s_.augmentations.count(name)) fail("augmentation '" + name + "' defined twice");
    s_.situations.try_emplace(name, aug.situation);
    s_.augmentations.emplace(name, std::move(aug));
  }

 public:
  /// A space name, or an inline recipe such as `nerve(Z2)` or `circle`.
  SpaceRecipe recipe(const std::string& ref) const {
    if (auto it = s_.spaces.find(ref); it != s_.spaces.end()) return SpaceRecipe{"ref", {ref}, line_};
    SpaceRecipe r{ref, {}, line_};
    if (const auto open = ref.find('('); open != std::string::npos) {
      expect(ref.back() == ')', "bad space expression '" + ref + "'");
      r.kind = ref.substr(0, open);
      r.args = tokens(std::string_view(ref).substr(open + 1, ref.size() - open - 2));
    }
    check(r);
    return r;
  }

 private:
  void check(const SpaceRecipe& r) const {
    const auto& k = r.kind;
    auto arity = [&](std::size_t n) {
      if (r.args.size() != n) fail("space '" + k + "' takes " + std::to_string(n) + " argument(s)");
    };
    auto space_arg = [&](const std::string& a) {
      if (!s_.spaces.count(a)) fail("undefined space '" + a + "'");
    };
    if (k == "point" || k == "circle") {
      arity(0);
    } else if (k == "sphere" || k == "simplex") {
      arity(1);
      to_number<int>(r.args[0], line_);
    } else if (k == "nerve") {
      arity(1);
      find_monoid(r.args[0]);
    } else if (k == "cyclic-bar") {
      arity(1);
      find_action(r.args[0]);
    } else if (k == "wedge" || k == "smash" || k == "product" || k == "union") {
      arity(2);
      space_arg(r.args[0]);
      space_arg(r.args[1]);
    } else if (k == "suspension") {
      arity(1);
      space_arg(r.args[0]);
    } else if (k == "skeleton") {
      arity(2);
      space_arg(r.args[0]);
      to_number<int>(r.args[1], line_);
    } else if (k == "file") {
      arity(1);
    } else if (k == "ref") {
      space_arg(r.args[0]);
    } else {
      fail("undefined space '" + k + "'");
    }
  }

  void space(const std::string& text) {
    const auto [name, body] = named(text, '=');
    const auto w = tokens(body);
    expect(!w.empty(), "expected a space description");
    SpaceRecipe r{w[0], std::vector<std::string>(w.begin() + 1, w.end()), line_};
    check(r);
    if (s_.spaces.count(name)) fail("space '" + name + "' defined twice");
    s_.spaces.emplace(name, std::move(r));
  }

  void corrupt(const std::string& text) {
    // corrupt X: deg <n> d <i> <id> = <word>|<id>
    const auto [name, body] = named(text, ':');
    if (!s_.spaces.count(name)) fail("undefined space '" + name + "'");
    std::istringstream in(body);
    std::string deg, d, eq, image;
    Corruption c;
    c.line = line_;
    std::string n, i;
    in >> deg >> n >> d >> i >> c.simplex >> eq >> image;
    expect(deg == "deg" && d == "d" && eq == "=" && image.find('|') != std::string::npos,
           "expected 'corrupt <space>: deg <n> d <i> <id> = <word>|<id>'");
    c.degree = to_number<int>(n, line_);
    c.face = to_number<int>(i, line_);
    c.image = image;
    s_.corruptions[name].push_back(std::move(c));
  }

  void job(const std::string& text, const std::vector<std::string>& w) {
    Job j;
    j.text = text;
    j.line = line_;
    j.args.assign(w.begin() + 1, w.end());
    auto need = [&](bool ok, const std::string& usage) {
      if (!ok) fail("usage: " + usage);
    };
    auto key = [&](std::size_t from) {
      for (std::size_t k = from; k < j.args.size(); ++k) {
        const auto p = j.args[k].find('=');
        need(p != std::string::npos, w[0] + " ... key=value");
        const auto v = j.args[k].substr(p + 1);
        const auto key_name = j.args[k].substr(0, p);
        if (key_name == "M" || key_name == "A") find_monoid(v);
        else to_number<long>(v, line_);
      }
    };
    if (w[0] == "build") {
      j.kind = JobKind::build;
      need(j.args.size() == 1, "build <space>");
      recipe(j.args[0]);
    } else if (w[0] == "homology") {
      j.kind = JobKind::homology;
      need((j.args.size() == 3 || (j.args.size() == 4 && j.args[3] == "reduced")) && j.args[1] == "upto",
           "homology <space> upto <n> [reduced]");
      recipe(j.args[0]);
      to_number<int>(j.args[2], line_);
    } else if (w[0] == "counterexample") {
      j.kind = JobKind::counterexample;
      need(j.args.size() == 4 && j.args[0] == "partial-monoid", "counterexample partial-monoid M=<m> A=<a> p=<n>");
      key(1);
    } else {
      j.kind = JobKind::verify;
      need(j.args.size() >= 2, "verify <check> <target> ...");
      const auto& what = j.args[0];
      const auto& target = j.args[1];
      if (what == "identities" || what == "loopgroup") {
        recipe(target);
        key(2);
      } else if (what == "suspension") {
        recipe(target);
        key(2);
      } else if (what == "comparison" || what == "intermediate") {
        find_augmentation(target);
        key(2);
      } else if (what == "nerve-wedge" || what == "pi0") {
        find_monoid(target);
        key(2);
      } else if (what == "shear") {
        find_action(target);
        need(j.args.size() == 3 && (j.args[2] == "left" || j.args[2] == "right"), "verify shear <action> left|right");
      } else {
        fail("unknown check '" + what + "'");
      }
    }
    s_.jobs.push_back(std::move(j));
  }

  Scenario& s_;
  std::size_t line_ = 0;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  Parser p(s);
  std::size_t line = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line;
    auto l = raw;
    if (const auto hash = l.find('#'); hash != std::string::npos) l = trim(std::string_view(l).substr(0, hash));
    if (l.empty()) continue;
    p.statement(l, line);
  }
  return s;
}

}  // namespace cybar::cli
