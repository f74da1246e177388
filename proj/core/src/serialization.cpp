#include "cybar/serialization.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include "cybar/error.hpp"

namespace cybar {

namespace {

void check_name(const std::string& name) {
  if (name.empty() || name.find_first_of(" \t,|=:\n") != std::string::npos)
    throw Error("simplex name '" + name + "' cannot be serialized");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

int to_int(const std::string& s, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return value;
}

}  // namespace

std::string write_sset(const SimplicialSet& x) {
  std::ostringstream out;
  out << "sset N=" << x.truncation() << '\n';
  if (x.basepoint()) out << "base " << x.name(0, *x.basepoint()) << '\n';
  for (int n = 0; n <= x.truncation(); ++n) {
    out << "deg " << n << ":";
    for (std::size_t id = 0; id < x.size(n); ++id) {
      check_name(x.name(n, static_cast<int>(id)));
      out << (id ? "," : " ") << x.name(n, static_cast<int>(id));
    }
    out << '\n';
    for (std::size_t id = 0; n > 0 && id < x.size(n); ++id)
      for (int i = 0; i <= n; ++i) {
        const auto& f = x.stored_face(n, static_cast<int>(id), i);
        out << "d " << i << ' ' << x.name(n, static_cast<int>(id)) << " = ";
        for (std::size_t k = 0; k < f.degeneracies.size(); ++k) out << (k ? "," : "") << f.degeneracies[k];
        out << '|' << x.name(f.base_degree, f.id) << '\n';
      }
  }
  return out.str();
}

SimplicialSet read_sset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  std::optional<SimplicialSet> x;
  std::optional<std::string> base;
  std::optional<std::size_t> base_line;
  int degree = -1;
  std::vector<std::string> pending;
  std::unordered_map<std::string, std::vector<std::optional<Simplex>>> faces;

  auto flush = [&](std::size_t at) {
    for (const auto& name : pending) {
      std::vector<Simplex> fs;
      for (std::size_t i = 0; i < faces[name].size(); ++i) {
        if (!faces[name][i]) throw ParseError(at, "missing face d" + std::to_string(i) + " of '" + name + "'");
        fs.push_back(*faces[name][i]);
      }
      try {
        x->add(degree, name, std::move(fs));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(at, e.what());
      }
    }
    pending.clear();
    faces.clear();
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto l = trim(raw);
    if (l.empty() || l[0] == '#') continue;
    if (!x) {
      if (!l.starts_with("sset N=")) throw ParseError(line, "expected header 'sset N=<truncation>'");
      x.emplace(to_int(l.substr(7), line));
      continue;
    }
    if (l.starts_with("base ")) {
      base = trim(l.substr(5));
      base_line = line;
    } else if (l.starts_with("deg ")) {
      flush(line);
      const auto colon = l.find(':');
      if (colon == std::string::npos) throw ParseError(line, "expected 'deg <n>: <ids>'");
      const int n = to_int(trim(l.substr(4, colon - 4)), line);
      if (n != degree + 1) throw ParseError(line, "degrees must be listed in order");
      if (n > x->truncation()) throw ParseError(line, "degree above the truncation");
      degree = n;
      const auto ids = trim(l.substr(colon + 1));
      if (!ids.empty())
        for (const auto& name : split(ids, ',')) {
          check_name(name);
          if (faces.count(name)) throw ParseError(line, "duplicate simplex '" + name + "'");
          pending.push_back(name);
          faces[name].assign(degree == 0 ? 0 : static_cast<std::size_t>(degree + 1), std::nullopt);
        }
    } else if (l.starts_with("d ")) {
      std::istringstream parts(l.substr(2));
      std::string index, name, eq, rest;
      parts >> index >> name >> eq;
      std::getline(parts, rest);
      rest = trim(rest);
      if (eq != "=" || rest.find('|') == std::string::npos) throw ParseError(line, "expected 'd <i> <id> = <word>|<id>'");
      const int i = to_int(index, line);
      auto it = faces.find(name);
      if (it == faces.end()) throw ParseError(line, "face of unknown simplex '" + name + "' in degree " + std::to_string(degree));
      if (i < 0 || i >= static_cast<int>(it->second.size())) throw ParseError(line, "face index out of range");
      const auto bar = rest.find('|');
      Word word;
      for (const auto& w : split(rest.substr(0, bar), ',')) word.push_back(to_int(w, line));
      const auto target = trim(rest.substr(bar + 1));
      const int base_degree = degree - 1 - static_cast<int>(word.size());
      if (base_degree < 0) throw ParseError(line, "degeneracy word too long");
      if (!is_canonical_word(word)) throw ParseError(line, "degeneracy word must be strictly decreasing");
      const auto id = x->find(base_degree, target);
      if (!id) throw ParseError(line, "unknown simplex '" + target + "' in degree " + std::to_string(base_degree));
      it->second[static_cast<std::size_t>(i)] = Simplex{base_degree, *id, word};
    } else {
      throw ParseError(line, "unrecognized line '" + l + "'");
    }
  }
  if (!x) throw ParseError(line, "empty input");
  flush(line);
  if (base) {
    const auto id = x->find(0, *base);
    if (!id) throw ParseError(*base_line, "unknown basepoint '" + *base + "'");
    x->set_basepoint(*id);
  }
  return std::move(*x);
}

}  // namespace cybar
