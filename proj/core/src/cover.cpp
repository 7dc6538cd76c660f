#include <ovq/cover.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace ovq {

Cover::Cover(std::shared_ptr<const NodeTable> table, std::vector<Community> communities,
             CoverKind kind)
    : table_(std::move(table)), communities_(std::move(communities)), kind_(kind) {
    if (!table_)
        throw DomainError("cover requires a node table");
    int n = table_->size();
    std::vector<int> counts(static_cast<size_t>(n), 0);
    for (auto& c : communities_) {
        std::erase_if(c.members, [](const auto& m) { return m.second == 0.0; });
        for (auto& [node, coef] : c.members) {
            if (node < 0 || node >= n)
                throw DomainError("community member index out of range");
            if (!(coef > 0.0) || coef > 1.0 || !std::isfinite(coef))
                throw DomainError("belonging coefficient outside [0,1] for node '"
                                  + table_->label(node) + "'");
            if (kind_ == CoverKind::Crisp && coef != 1.0)
                throw DomainError("crisp cover requires coefficient 1 for node '"
                                  + table_->label(node) + "'");
            ++counts[static_cast<size_t>(node)];
        }
        std::sort(c.members.begin(), c.members.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < c.members.size(); ++i)
            if (c.members[i].first == c.members[i - 1].first)
                throw DomainError("node '" + table_->label(c.members[i].first)
                                  + "' listed twice in community " + std::to_string(c.id));
    }

    member_offsets_.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        member_offsets_[static_cast<size_t>(i) + 1] =
            member_offsets_[static_cast<size_t>(i)] + counts[static_cast<size_t>(i)];
    member_data_.resize(static_cast<size_t>(member_offsets_.back()));
    std::vector<int> cursor(member_offsets_.begin(), member_offsets_.end() - 1);
    for (const auto& c : communities_)
        for (const auto& [node, coef] : c.members)
            member_data_[static_cast<size_t>(cursor[static_cast<size_t>(node)]++)] = {c.id, coef};
    covered_nodes_ = 0;
    for (int i = 0; i < n; ++i)
        if (counts[static_cast<size_t>(i)] > 0)
            ++covered_nodes_;
}

std::span<const std::pair<int, double>> Cover::memberships(int node) const {
    auto begin = static_cast<size_t>(member_offsets_[static_cast<size_t>(node)]);
    auto end = static_cast<size_t>(member_offsets_[static_cast<size_t>(node) + 1]);
    return {member_data_.data() + begin, end - begin};
}

namespace {

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

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

double parse_coefficient(std::string_view token, int line_no) {
    double a = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), a);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad coefficient '"
                         + std::string(token) + "'");
    if (!(a >= 0.0) || a > 1.0)
        throw ParseError("line " + std::to_string(line_no) + ": coefficient outside [0,1]: '"
                         + std::string(token) + "'");
    return a;
}

} // namespace

Cover Cover::load(std::istream& in, CoverKind kind, std::shared_ptr<const NodeTable> table) {
    std::shared_ptr<NodeTable> own;
    if (!table) {
        own = std::make_shared<NodeTable>();
        table = own;
    }
    auto resolve = [&](std::string_view label, int line_no) -> int {
        if (own)
            return own->intern(label);
        auto idx = table->find(label);
        if (!idx)
            throw ParseError("line " + std::to_string(line_no) + ": node '" + std::string(label)
                             + "' is not in the graph");
        return *idx;
    };

    std::vector<Community> communities;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip_cr(raw);
        if (line.empty())
            continue;
        auto tokens = split_ws(line);
        if (tokens.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty community");
        Community c;
        c.id = static_cast<int>(communities.size());
        c.members.reserve(tokens.size());
        for (auto token : tokens) {
            if (kind == CoverKind::Crisp) {
                c.members.emplace_back(resolve(token, line_no), 1.0);
            } else {
                auto colon = token.rfind(':');
                if (colon == std::string_view::npos || colon == 0 || colon + 1 == token.size())
                    throw ParseError("line " + std::to_string(line_no)
                                     + ": expected label:coefficient, got '" + std::string(token)
                                     + "'");
                double a = parse_coefficient(token.substr(colon + 1), line_no);
                int node = resolve(token.substr(0, colon), line_no);
                if (a > 0.0)
                    c.members.emplace_back(node, a);
            }
        }
        communities.push_back(std::move(c));
    }
    if (in.bad())
        throw IoError("I/O failure while reading cover");
    try {
        return Cover(std::move(table), std::move(communities), kind);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

void Cover::write(std::ostream& out) const {
    char buf[32];
    for (const auto& c : communities_) {
        bool first = true;
        for (const auto& [node, coef] : c.members) {
            if (!first)
                out << ' ';
            first = false;
            out << table_->label(node);
            if (kind_ == CoverKind::Fuzzy) {
                std::snprintf(buf, sizeof buf, "%.17g", coef);
                out << ':' << buf;
            }
        }
        out << '\n';
    }
}

void Cover::validate_rows(double tol) const {
    int n = table_->size();
    for (int i = 0; i < n; ++i) {
        auto ms = memberships(i);
        if (ms.empty())
            continue;
        double sum = 0.0;
        for (const auto& [c, a] : ms)
            sum += a;
        if (std::abs(sum - 1.0) > tol)
            throw DomainError("coefficients of node '" + table_->label(i) + "' sum to "
                              + std::to_string(sum) + ", expected 1");
    }
}

Cover Cover::normalized() const {
    int n = table_->size();
    std::vector<double> row_sum(static_cast<size_t>(n), 0.0);
    for (const auto& c : communities_)
        for (const auto& [node, coef] : c.members)
            row_sum[static_cast<size_t>(node)] += coef;
    std::vector<Community> out = communities_;
    for (auto& c : out)
        for (auto& [node, coef] : c.members)
            coef /= row_sum[static_cast<size_t>(node)];
    return Cover(table_, std::move(out), CoverKind::Fuzzy);
}

Cover assign_v1(const Cover& crisp) {
    if (crisp.kind() != CoverKind::Crisp)
        throw DomainError("coefficient assignment expects a crisp cover");
    std::vector<Community> out = crisp.communities();
    for (auto& c : out)
        for (auto& [node, coef] : c.members)
            coef = 1.0 / static_cast<double>(crisp.memberships(node).size());
    return Cover(crisp.table(), std::move(out), CoverKind::Fuzzy);
}

Cover assign_v2(const Graph& g, const Cover& crisp, bool fallback_v1) {
    if (crisp.kind() != CoverKind::Crisp)
        throw DomainError("coefficient assignment expects a crisp cover");
    if (crisp.table() != g.table())
        throw DomainError("cover is not bound to this graph");

    // strength[c] = sum of A_ik over neighbors k that are members of c,
    // computed per node over the communities that node belongs to.
    std::vector<Community> out = crisp.communities();
    std::unordered_map<int, double> strength;
    for (int i = 0; i < g.node_count(); ++i) {
        auto ms = crisp.memberships(i);
        if (ms.empty())
            continue;
        strength.clear();
        for (const auto& [c, coef] : ms)
            strength.emplace(c, 0.0);
        for (const Neighbor& nb : g.neighbors(i))
            for (const auto& [c, coef] : crisp.memberships(nb.node)) {
                auto it = strength.find(c);
                if (it != strength.end())
                    it->second += nb.weight;
            }
        double denom = 0.0;
        for (const auto& [c, s] : strength)
            denom += s;
        if (denom == 0.0 && !fallback_v1)
            throw DomainError("node '" + g.nodes().label(i)
                              + "' has no edges into any of its communities");
        for (const auto& [c, coef] : ms) {
            double a = denom > 0.0 ? strength[c] / denom
                                   : 1.0 / static_cast<double>(ms.size());
            auto& members = out[static_cast<size_t>(c)].members;
            auto it = std::lower_bound(members.begin(), members.end(), i,
                                       [](const auto& m, int node) { return m.first < node; });
            it->second = a;
        }
    }
    return Cover(crisp.table(), std::move(out), CoverKind::Fuzzy);
}

Cover fuzzy_to_crisp(const Cover& cover, double threshold, std::vector<int>* dropped_nodes) {
    std::vector<Community> out;
    for (const auto& c : cover.communities()) {
        Community kept;
        for (const auto& [node, coef] : c.members)
            if (coef > threshold)
                kept.members.emplace_back(node, 1.0);
        if (!kept.members.empty()) {
            kept.id = static_cast<int>(out.size());
            out.push_back(std::move(kept));
        }
    }
    Cover result(cover.table(), std::move(out), CoverKind::Crisp);
    if (dropped_nodes) {
        dropped_nodes->clear();
        for (int i = 0; i < cover.nodes().size(); ++i)
            if (!cover.memberships(i).empty() && result.memberships(i).empty())
                dropped_nodes->push_back(i);
    }
    return result;
}

Cover add_singletons(const Graph& g, const Cover& cover) {
    if (cover.table() != g.table())
        throw DomainError("cover is not bound to this graph");
    std::vector<Community> out = cover.communities();
    for (int i = 0; i < g.node_count(); ++i) {
        if (!cover.memberships(i).empty())
            continue;
        Community c;
        c.id = static_cast<int>(out.size());
        c.members.emplace_back(i, 1.0);
        out.push_back(std::move(c));
    }
    return Cover(cover.table(), std::move(out), cover.kind());
}

double fuzzy_size(const Community& c) {
    double size = 0.0;
    for (const auto& [node, coef] : c.members)
        size += coef;
    return size;
}

Cover resolve_cover(const Graph& g, const Cover& cover, const BelongingConfig& cfg,
                    const ResolveOptions& opts) {
    if (cover.table() != g.table())
        throw DomainError("cover is not bound to this graph");
    switch (cfg.scheme) {
    case Scheme::V1:
        return assign_v1(cover);
    case Scheme::V2:
        return assign_v2(g, cover, opts.v2_fallback);
    case Scheme::Given:
        break;
    }
    Cover fuzzy = cover.kind() == CoverKind::Fuzzy
                      ? cover
                      : Cover(cover.table(), cover.communities(), CoverKind::Fuzzy);
    if (opts.normalize)
        return fuzzy.normalized();
    fuzzy.validate_rows();
    return fuzzy;
}

} // namespace ovq
