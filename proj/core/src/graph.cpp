#include <ovq/graph.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace ovq {

int NodeTable::intern(std::string_view label) {
    auto it = index_.find(label);
    if (it != index_.end())
        return it->second;
    int idx = static_cast<int>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), idx);
    return idx;
}

std::optional<int> NodeTable::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

GraphBuilder::GraphBuilder(DirectedPolicy policy)
    : table_(std::make_shared<NodeTable>()), policy_(policy) {}

namespace {

uint64_t edge_key(int u, int v) {
    if (u > v)
        std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

} // namespace

void GraphBuilder::add_edge(std::string_view u, std::string_view v, double weight) {
    add_edge(intern(u), intern(v), weight);
}

void GraphBuilder::add_edge(int u, int v, double weight) {
    if (u < 0 || u >= table_->size() || v < 0 || v >= table_->size())
        throw DomainError("edge endpoint index out of range");
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw DomainError("edge weight must be positive and finite");
    if (u == v) {
        ++self_loops_dropped_;
        return;
    }
    auto [it, inserted] = weights_.try_emplace(edge_key(u, v), weight);
    if (!inserted) {
        if (policy_ == DirectedPolicy::Reject)
            throw DomainError("duplicate edge {" + table_->label(u) + ", " + table_->label(v)
                              + "} under reject policy");
        it->second += weight;
    }
}

Graph GraphBuilder::build() {
    Graph g;
    int n = table_->size();
    g.table_ = std::move(table_);
    g.self_loops_dropped_ = self_loops_dropped_;

    g.edges_.reserve(weights_.size());
    for (const auto& [key, w] : weights_) {
        int u = static_cast<int>(key >> 32);
        int v = static_cast<int>(key & 0xffffffffu);
        g.edges_.push_back(Edge{u, v, w});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges_) {
        ++counts[static_cast<size_t>(e.u)];
        ++counts[static_cast<size_t>(e.v)];
    }
    g.adj_offsets_.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        g.adj_offsets_[static_cast<size_t>(i) + 1] = g.adj_offsets_[static_cast<size_t>(i)] + counts[static_cast<size_t>(i)];
    g.adj_.resize(static_cast<size_t>(g.adj_offsets_.back()));

    std::vector<int> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<size_t>(cursor[static_cast<size_t>(e.u)]++)] = Neighbor{e.v, e.weight};
        g.adj_[static_cast<size_t>(cursor[static_cast<size_t>(e.v)]++)] = Neighbor{e.u, e.weight};
    }
    for (int i = 0; i < n; ++i) {
        auto begin = g.adj_.begin() + g.adj_offsets_[static_cast<size_t>(i)];
        auto end = g.adj_.begin() + g.adj_offsets_[static_cast<size_t>(i) + 1];
        std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }

    g.degree_.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double k = 0.0;
        for (const Neighbor& nb : g.neighbors(i))
            k += nb.weight;
        g.degree_[static_cast<size_t>(i)] = k;
    }

    double m = 0.0;
    for (const Edge& e : g.edges_)
        m += e.weight;
    g.total_weight_ = m;
    return g;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_weight(std::string_view token, int line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + std::string(token) + "'");
    if (!(w > 0.0) || !std::isfinite(w))
        throw ParseError("line " + std::to_string(line_no) + ": weight must be positive, got '"
                         + std::string(token) + "'");
    return w;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

} // namespace

Graph Graph::load_edge_list(std::istream& in, DirectedPolicy policy) {
    GraphBuilder builder(policy);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip_cr(raw);
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens.front().front() == '#')
            continue;
        if (tokens.size() != 2 && tokens.size() != 3)
            throw ParseError("line " + std::to_string(line_no)
                             + ": expected 'u v [w]', got " + std::to_string(tokens.size()) + " tokens");
        double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
        int u = builder.intern(tokens[0]);
        int v = builder.intern(tokens[1]);
        try {
            builder.add_edge(u, v, w);
        } catch (const DomainError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (in.bad())
        throw IoError("I/O failure while reading edge list");
    return builder.build();
}

double Graph::degree(int node) const {
    if (node < 0 || node >= node_count())
        throw DomainError("unknown node index " + std::to_string(node));
    return degree_[static_cast<size_t>(node)];
}

double Graph::degree(std::string_view label) const {
    auto idx = table_->find(label);
    if (!idx)
        throw DomainError("unknown node '" + std::string(label) + "'");
    return degree_[static_cast<size_t>(*idx)];
}

std::span<const Neighbor> Graph::neighbors(int node) const {
    auto begin = static_cast<size_t>(adj_offsets_[static_cast<size_t>(node)]);
    auto end = static_cast<size_t>(adj_offsets_[static_cast<size_t>(node) + 1]);
    return {adj_.data() + begin, end - begin};
}

void Graph::write_edge_list(std::ostream& out) const {
    bool uniform = std::all_of(edges_.begin(), edges_.end(),
                               [](const Edge& e) { return e.weight == 1.0; });
    char buf[32];
    for (const Edge& e : edges_) {
        out << table_->label(e.u) << ' ' << table_->label(e.v);
        if (!uniform) {
            std::snprintf(buf, sizeof buf, "%.17g", e.weight);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

bool Graph::same_labeled_graph(const Graph& other) const {
    if (node_count() != other.node_count() || edges_.size() != other.edges_.size())
        return false;
    std::set<std::string> mine, theirs;
    for (int i = 0; i < node_count(); ++i)
        mine.insert(table_->label(i));
    for (int i = 0; i < other.node_count(); ++i)
        theirs.insert(other.table_->label(i));
    if (mine != theirs)
        return false;
    auto labeled = [](const Graph& g) {
        std::map<std::pair<std::string, std::string>, double> out;
        for (const Edge& e : g.edges_) {
            std::string a = g.table_->label(e.u);
            std::string b = g.table_->label(e.v);
            if (b < a)
                std::swap(a, b);
            out[{a, b}] = e.weight;
        }
        return out;
    };
    return labeled(*this) == labeled(other);
}

} // namespace ovq
