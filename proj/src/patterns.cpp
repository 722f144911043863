#include "regsat/patterns.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "regsat/constructions.hpp"

namespace regsat {

PatternGraph clique_pattern(int s) {
    if (s < 1) throw std::invalid_argument("clique_pattern: need s >= 1");
    return {complete_graph(s), "K" + std::to_string(s), PatternKind::clique, {s}};
}

PatternGraph multipartite_pattern(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("multipartite_pattern: no parts");
    std::string name = "K";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        name += (i ? "," : "") + std::to_string(sizes[i]);
    return {complete_multipartite(sizes), name, PatternKind::multipartite, sizes};
}

PatternGraph cycle_pattern(int n) {
    return {cycle_graph(n), "C" + std::to_string(n), PatternKind::cycle, {n}};
}

PatternGraph path_pattern(int n) {
    return {path_graph(n), "P" + std::to_string(n), PatternKind::path, {n}};
}

PatternGraph matching_pattern(int k) {
    return {matching_graph(k), "M" + std::to_string(k), PatternKind::matching, {k}};
}

PatternGraph star_pattern(int leaves) {
    return {star_graph(leaves), "S" + std::to_string(leaves), PatternKind::star, {leaves}};
}

PatternGraph three_sun_pattern() {
    Graph g = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
    return {std::move(g), "F6", PatternKind::three_sun, {}};
}

PatternGraph custom_pattern(Graph g, std::string name) {
    return {std::move(g), std::move(name), PatternKind::custom, {}};
}

Graph petersen() {
    // index the 2-subsets of {0..4} lexicographically
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

PatternGraph f_prime_t(const PatternGraph& base, int t,
                       std::optional<std::pair<int, int>> removed_edge) {
    if (t < 1) throw std::invalid_argument("f_prime_t: need t >= 1");
    const Graph& b = base.graph;
    if (b.edge_count() == 0) throw std::invalid_argument("f_prime_t: base has no edges");
    int ru, rv;
    if (removed_edge) {
        ru = removed_edge->first;
        rv = removed_edge->second;
        if (ru > rv) std::swap(ru, rv);
        if (ru < 0 || rv >= b.order() || !b.has_edge(ru, rv))
            throw std::invalid_argument("f_prime_t: removed_edge is not an edge of the base");
    } else {
        ru = rv = -1;
        for (int i = 0; i < b.order() && ru < 0; ++i)
            for (int j = i + 1; j < b.order(); ++j)
                if (b.has_edge(i, j)) { ru = i; rv = j; break; }
    }
    Graph fprime = b;
    fprime.remove_edge(ru, rv);
    Graph blown = blow_up(fprime, complete_graph(t));
    blown.add_edge(ru * t, rv * t);  // restore between the first copies
    std::string name = base.name + "prime:" + std::to_string(t);
    return {std::move(blown), std::move(name), PatternKind::derived_f_prime, {t}};
}

namespace {

bool parse_int_list(const std::string& s, std::vector<int>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        out.push_back(v);
        if (i < s.size()) {
            if (s[i] != ',') return false;
            ++i;
            if (i == s.size()) return false;
        }
    }
    return !out.empty();
}

}  // namespace

PatternGraph pattern_from_key(const std::string& key) {
    if (key.empty()) throw std::invalid_argument("pattern_from_key: empty key");
    if (key == "F6" || key == "three_sun") return three_sun_pattern();
    if (key == "petersen") return custom_pattern(petersen(), "petersen");
    if (key.rfind("Kprime:", 0) == 0) {
        std::string rest = key.substr(7);
        for (char& c : rest)
            if (c == ':') c = ',';
        std::vector<int> st;
        if (!parse_int_list(rest, st) || st.size() != 2)
            throw std::invalid_argument("pattern_from_key: expected Kprime:s:t, got " + key);
        return f_prime_t(clique_pattern(st[0]), st[1]);
    }
    char head = key[0];
    std::vector<int> nums;
    if (parse_int_list(key.substr(1), nums)) {
        if (head == 'K' && nums.size() == 1) return clique_pattern(nums[0]);
        if (head == 'K' && nums.size() > 1) return multipartite_pattern(nums);
        if (nums.size() == 1) {
            switch (head) {
                case 'C': return cycle_pattern(nums[0]);
                case 'P': return path_pattern(nums[0]);
                case 'M': return matching_pattern(nums[0]);
                case 'S': return star_pattern(nums[0]);
                case 'E': return {empty_graph(nums[0]), "E" + std::to_string(nums[0]),
                                  PatternKind::custom, {nums[0]}};
                default: break;
            }
        }
    }
    throw std::invalid_argument("pattern_from_key: unknown key " + key);
}

namespace {

// expr := term ('+' term)* ; term := atom ('[' expr ']')* ;
// atom := '(' expr ')' | registry key
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    Graph parse() {
        Graph g = expr();
        if (pos_ != s_.size())
            throw std::invalid_argument("graph_from_expression: trailing input at " +
                                        std::to_string(pos_) + " in " + s_);
        return g;
    }

private:
    Graph expr() {
        Graph g = term();
        while (peek() == '+') {
            ++pos_;
            g = join(g, term());
        }
        return g;
    }

    Graph term() {
        Graph g = atom();
        while (peek() == '[') {
            ++pos_;
            Graph h = expr();
            if (peek() != ']')
                throw std::invalid_argument("graph_from_expression: missing ']' in " + s_);
            ++pos_;
            g = blow_up(g, h);
        }
        return g;
    }

    Graph atom() {
        if (peek() == '(') {
            ++pos_;
            Graph g = expr();
            if (peek() != ')')
                throw std::invalid_argument("graph_from_expression: missing ')' in " + s_);
            ++pos_;
            return g;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',' ||
                s_[pos_] == ':' || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            throw std::invalid_argument("graph_from_expression: expected a name at position " +
                                        std::to_string(start) + " in " + s_);
        return pattern_from_key(s_.substr(start, pos_ - start)).graph;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph graph_from_expression(const std::string& expr) { return ExprParser(expr).parse(); }

PatternGraph load_pattern_file(const std::string& text) {
    std::size_t nl = text.find('\n');
    if (nl == std::string::npos)
        throw parse_error("load_pattern_file: missing name header", 0);
    std::string name = text.substr(0, nl);
    while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
    if (name.empty()) throw parse_error("load_pattern_file: empty name header", 0);
    Graph g = decode_edge_list(text.substr(nl + 1));
    return custom_pattern(std::move(g), std::move(name));
}

std::string save_pattern_file(const PatternGraph& p) {
    return p.name + "\n" + encode_edge_list(p.graph);
}

}  // namespace regsat
