#include "hng/families.hpp"

#include <cctype>
#include <string>

#include "hng/error.hpp"

namespace hng {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::parameter_out_of_range, what);
}

void require_order(long long n) {
  if (n > kMaxOrder) throw Error(Errc::order_cap_exceeded, "family order " + std::to_string(n));
}

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  require_order(n);
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  require_order(n);
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  require_order(n);
  return complement(Graph(n));
}

Graph complete_bipartite(int k, int l) {
  require(k >= 1 && l >= 1, "complete bipartite needs k, l >= 1");
  require_order(static_cast<long long>(k) + l);
  Graph g(k + l);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = k; v < k + l; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  require_order(n);
  return Graph(n);
}

Graph claw() { return complete_bipartite(1, 3); }

Graph double_star(int m, int l) {
  require(m >= 1 && l >= 1, "double star needs center degrees >= 1");
  require_order(static_cast<long long>(m) + l);
  Graph g(m + l);
  g.add_edge(0, 1);
  Vertex next = 2;
  for (int i = 0; i < m - 1; ++i) g.add_edge(0, next++);
  for (int i = 0; i < l - 1; ++i) g.add_edge(1, next++);
  return g;
}

Graph sun_with_pendant() {
  const std::pair<Vertex, Vertex> edges[] = {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1},
                                             {4, 1}, {4, 2}, {5, 2}, {5, 0}, {6, 3}};
  return Graph::from_edges(7, edges);
}

Graph construct_named(const NamedFamily& f) {
  auto arg = [&](std::size_t i) {
    require(f.params.size() > i, "missing family parameter");
    return f.params[i];
  };
  auto arity = [&](std::size_t k) { require(f.params.size() == k, "wrong number of family parameters"); };
  switch (f.kind) {
    case FamilyKind::cycle: arity(1); return cycle(arg(0));
    case FamilyKind::path: arity(1); return path(arg(0));
    case FamilyKind::complete: arity(1); return complete(arg(0));
    case FamilyKind::complete_bipartite: arity(2); return complete_bipartite(arg(0), arg(1));
    case FamilyKind::empty: arity(1); return empty_graph(arg(0));
    case FamilyKind::claw: arity(0); return claw();
    case FamilyKind::double_star: arity(2); return double_star(arg(0), arg(1));
    case FamilyKind::sun_with_pendant: arity(0); return sun_with_pendant();
    case FamilyKind::disjoint_union: {
      Graph g;
      for (const auto& part : f.parts) g = disjoint_union(g, construct_named(part));
      return g;
    }
  }
  throw Error(Errc::parameter_out_of_range, "unknown family kind");
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = term();
    while (accept('+')) g = disjoint_union(g, term());
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parameter_out_of_range,
                "cannot parse graph expression '" + std::string(text_) + "': " + why);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_).starts_with(w)) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int number() {
    skip_space();
    if (!at_digit()) fail("expected a number");
    long long v = 0;
    while (at_digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  Graph term() {
    skip_space();
    int copies = 1;
    if (at_digit()) copies = number();
    require(copies >= 1, "multiplier must be positive");
    const Graph base = atom();
    Graph g;
    for (int i = 0; i < copies; ++i) g = disjoint_union(g, base);
    return g;
  }

  Graph atom() {
    if (accept_word("co-")) return complement(atom());
    if (accept_word("claw")) return claw();
    if (accept_word("sun-pendant")) return sun_with_pendant();
    if (accept('C')) return cycle(number());
    if (accept('P')) return path(number());
    if (accept('E')) return empty_graph(number());
    if (accept('K')) {
      const int a = number();
      if (accept(',')) return complete_bipartite(a, number());
      return complete(a);
    }
    if (accept('S')) {
      const int m = number();
      if (!accept(',')) fail("double star needs two parameters");
      return double_star(m, number());
    }
    fail("unknown graph name");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph named(std::string_view expression) { return ExpressionParser(expression).parse(); }

}  // namespace hng
