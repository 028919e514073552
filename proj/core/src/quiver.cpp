#include "fpd/quiver.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "fpd/error.hpp"

namespace fpd {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ == 0) throw ValidationError("a quiver needs at least one vertex");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.id.empty()) throw ValidationError("arrow id must not be empty");
    if (a.source < 1 || a.source > vertex_count_ || a.target < 1 ||
        a.target > vertex_count_)
      throw ValidationError("arrow " + a.id + ": endpoint out of range 1.." +
                            std::to_string(vertex_count_));
    if (!ids.insert(a.id).second)
      throw ValidationError("duplicate arrow id " + a.id);
  }
}

std::size_t Quiver::arrow_count(Vertex s, Vertex t) const {
  std::size_t n = 0;
  for (const auto& a : arrows_)
    if (a.source == s && a.target == t) ++n;
  return n;
}

BoundAlgebraSpec::BoundAlgebraSpec(Quiver quiver, RelationKind relations)
    : quiver_(std::move(quiver)), relations_(relations) {
  loop_counts_.assign(quiver_.vertex_count(), 0);
  for (const auto& a : quiver_.arrows())
    if (a.is_loop()) ++loop_counts_[a.source - 1];
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<std::size_t> parse_count(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id)
    if (c == ' ' || c == '\t' || c == ':' || c == '#') return false;
  return true;
}

struct PendingArrow {
  Arrow arrow;
  std::size_t line;
};

}  // namespace

BoundAlgebraSpec parse_quiver(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> relations_line;
  std::vector<PendingArrow> pending;
  std::map<Vertex, std::size_t> sugar_loops;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, "expected '<keyword> ...: ...'");
    const std::string_view head = trim(line.substr(0, colon));
    const std::string_view rest = trim(line.substr(colon + 1));

    if (head == "vertices") {
      if (vertices) throw ParseError(line_no, "duplicate 'vertices' line");
      const auto k = parse_count(rest);
      if (!k || *k == 0)
        throw ParseError(line_no, "vertex count must be a positive integer");
      vertices = *k;
    } else if (head == "relations") {
      if (relations_line) throw ParseError(line_no, "duplicate 'relations' line");
      if (rest != "rad2")
        throw ParseError(line_no, "unsupported relation kind '" + std::string(rest) +
                                      "' (only rad2 is supported)");
      relations_line = line_no;
    } else if (head.starts_with("arrow ") || head.starts_with("arrow\t")) {
      const std::string_view id = trim(head.substr(5));
      if (!valid_id(id)) throw ParseError(line_no, "invalid arrow id");
      const auto arrow_pos = rest.find("->");
      if (arrow_pos == std::string_view::npos)
        throw ParseError(line_no, "expected '<source> -> <target>'");
      const auto s = parse_count(rest.substr(0, arrow_pos));
      const auto t = parse_count(rest.substr(arrow_pos + 2));
      if (!s || !t) throw ParseError(line_no, "arrow endpoints must be integers");
      pending.push_back({Arrow{std::string(id), *s, *t}, line_no});
    } else if (head.starts_with("loops ") || head.starts_with("loops\t")) {
      const auto v = parse_count(head.substr(5));
      const auto count = parse_count(rest);
      if (!v || !count) throw ParseError(line_no, "expected 'loops <vertex>: <count>'");
      for (std::size_t j = 0; j < *count; ++j) {
        const std::size_t label = ++sugar_loops[*v];
        pending.push_back({Arrow{"loop_" + std::to_string(*v) + "_" + std::to_string(label),
                                 *v, *v},
                           line_no});
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(head) + "'");
    }
  }

  if (!vertices) throw ParseError(line_no, "missing 'vertices' line");
  if (!relations_line) throw ParseError(line_no, "missing 'relations' line");

  std::set<std::string> ids;
  std::vector<Arrow> arrows;
  arrows.reserve(pending.size());
  for (auto& p : pending) {
    const auto& a = p.arrow;
    if (a.source < 1 || a.source > *vertices || a.target < 1 || a.target > *vertices)
      throw ParseError(p.line, "arrow " + a.id + ": endpoint out of range 1.." +
                                   std::to_string(*vertices));
    if (!ids.insert(a.id).second) throw ParseError(p.line, "duplicate arrow id " + a.id);
    arrows.push_back(std::move(p.arrow));
  }
  return BoundAlgebraSpec(Quiver(*vertices, std::move(arrows)));
}

std::string render_quiver(const BoundAlgebraSpec& spec) {
  std::ostringstream out;
  out << "vertices: " << spec.vertex_count() << '\n';
  for (const auto& a : spec.quiver().arrows())
    out << "arrow " << a.id << ": " << a.source << " -> " << a.target << '\n';
  out << "relations: rad2\n";
  return out.str();
}

std::vector<std::size_t> non_loop_arrows(const BoundAlgebraSpec& spec) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (!spec.arrow(k).is_loop()) out.push_back(k);
  return out;
}

StrippedAlgebra strip_loops(const BoundAlgebraSpec& spec) {
  std::vector<Arrow> kept;
  for (const auto& a : spec.quiver().arrows())
    if (!a.is_loop()) kept.push_back(a);
  return {BoundAlgebraSpec(Quiver(spec.vertex_count(), std::move(kept))),
          spec.loop_counts()};
}

BoundAlgebraSpec opposite(const BoundAlgebraSpec& spec) {
  std::vector<Arrow> reversed = spec.quiver().arrows();
  for (auto& a : reversed) std::swap(a.source, a.target);
  return BoundAlgebraSpec(Quiver(spec.vertex_count(), std::move(reversed)),
                          spec.relation_kind());
}

}  // namespace fpd
