#include <ovq/global_metrics.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace ovq {

namespace {

void check_bound(const Graph& g, const Cover& cover) {
    if (cover.table() != g.table())
        throw DomainError("cover is not bound to this graph");
}

double require_m(const Graph& g) {
    double m = g.total_edge_weight();
    if (m <= 0.0)
        throw DomainError("metric undefined on a graph without edges");
    return m;
}

// Per-node membership rows with coefficients pre-mapped for the pair kernel:
// raw for average/product, logistic-squashed for logistic. With the logistic
// function squashed first, f reduces to a plain product.
struct MembershipTable {
    std::vector<int> offsets;
    std::vector<std::pair<int, double>> entries;

    std::span<const std::pair<int, double>> row(int node) const {
        auto begin = static_cast<size_t>(offsets[static_cast<size_t>(node)]);
        auto end = static_cast<size_t>(offsets[static_cast<size_t>(node) + 1]);
        return {entries.data() + begin, end - begin};
    }
};

MembershipTable make_membership_table(const Cover& cover, BelongingFn fn, double p) {
    int n = cover.nodes().size();
    MembershipTable t;
    t.offsets.resize(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& [c, a] : cover.memberships(i))
            t.entries.emplace_back(c, fn == BelongingFn::Logistic ? logistic_g(a, p) : a);
        t.offsets[static_cast<size_t>(i) + 1] = static_cast<int>(t.entries.size());
    }
    return t;
}

// node -> community id; throws unless the cover is a disjoint full partition
std::vector<int> validate_partition(const Graph& g, const Cover& partition) {
    check_bound(g, partition);
    std::vector<int> comm(static_cast<size_t>(g.node_count()), -1);
    for (const auto& c : partition.communities())
        for (const auto& [node, coef] : c.members) {
            if (comm[static_cast<size_t>(node)] != -1)
                throw DomainError("partition overlaps at node '" + g.nodes().label(node) + "'");
            comm[static_cast<size_t>(node)] = c.id;
        }
    for (int i = 0; i < g.node_count(); ++i)
        if (comm[static_cast<size_t>(i)] == -1)
            throw DomainError("partition does not cover node '" + g.nodes().label(i) + "'");
    return comm;
}

} // namespace

std::vector<CommunityAggregates> community_aggregates(const Graph& g, const Cover& cover,
                                                      const BelongingConfig& cfg) {
    check_bound(g, cover);
    const auto& comms = cover.communities();
    size_t nc = comms.size();
    std::vector<CommunityAggregates> aggs(nc);

    MembershipTable table = make_membership_table(cover, cfg.fn, cfg.p);
    const bool average = cfg.fn == BelongingFn::Average;

    std::vector<std::unordered_map<int, double>> between(nc);
    for (const Edge& e : g.edges()) {
        auto mu = table.row(e.u);
        auto mv = table.row(e.v);
        for (const auto& [cu, xu] : mu)
            for (const auto& [cv, xv] : mv) {
                double w = (average ? 0.5 * (xu + xv) : xu * xv) * e.weight;
                if (cu == cv) {
                    aggs[static_cast<size_t>(cu)].e_in += w;
                } else {
                    // both ordered role assignments of this unordered edge
                    between[static_cast<size_t>(cu)][cv] += w;
                    between[static_cast<size_t>(cv)][cu] += w;
                }
            }
    }

    std::vector<double> s1(nc, 0.0);
    std::vector<double> pair_sum(nc, 0.0); // sum over unordered member pairs of x_i * x_j
    std::vector<double> count(nc, 0.0);
    std::vector<double> scratch;
    for (size_t c = 0; c < nc; ++c) {
        scratch.clear();
        for (const auto& [node, a] : comms[c].members) {
            double x = cfg.fn == BelongingFn::Logistic ? logistic_g(a, cfg.p) : a;
            s1[c] += x;
            scratch.push_back(x);
        }
        // suffix-sum form: all terms positive, so tiny logistic values survive
        double suffix = 0.0;
        for (size_t k = scratch.size(); k-- > 0;) {
            pair_sum[c] += scratch[k] * suffix;
            suffix += scratch[k];
        }
        count[c] = static_cast<double>(comms[c].members.size());
    }

    for (size_t c = 0; c < nc; ++c) {
        auto& agg = aggs[c];
        agg.e_between.assign(between[c].begin(), between[c].end());
        std::sort(agg.e_between.begin(), agg.e_between.end());
        agg.e_out = 0.0;
        for (const auto& [other, w] : agg.e_between)
            agg.e_out += w;

        double din_denom = average ? (count[c] - 1.0) * s1[c] : 2.0 * pair_sum[c];
        agg.d_in = din_denom > 0.0 ? 2.0 * agg.e_in / din_denom : 0.0;

        agg.pair_density.reserve(agg.e_between.size());
        for (const auto& [other, w] : agg.e_between) {
            size_t o = static_cast<size_t>(other);
            double denom = average ? 0.5 * (s1[c] * count[o] + count[c] * s1[o])
                                   : s1[c] * s1[o];
            agg.pair_density.emplace_back(other, denom > 0.0 ? w / denom : 0.0);
        }
    }
    return aggs;
}

double q_disjoint(const Graph& g, const Cover& partition) {
    double m = require_m(g);
    std::vector<int> comm = validate_partition(g, partition);
    size_t nc = partition.communities().size();
    std::vector<double> e_in(nc, 0.0), e_out(nc, 0.0);
    for (const Edge& e : g.edges()) {
        size_t cu = static_cast<size_t>(comm[static_cast<size_t>(e.u)]);
        size_t cv = static_cast<size_t>(comm[static_cast<size_t>(e.v)]);
        if (cu == cv) {
            e_in[cu] += e.weight;
        } else {
            e_out[cu] += e.weight;
            e_out[cv] += e.weight;
        }
    }
    double q = 0.0;
    for (size_t c = 0; c < nc; ++c) {
        double frac = (2.0 * e_in[c] + e_out[c]) / (2.0 * m);
        q += e_in[c] / m - frac * frac;
    }
    return q;
}

double q_ov_from(const std::vector<CommunityAggregates>& aggs, double m) {
    double q = 0.0;
    for (const auto& agg : aggs) {
        double frac = (2.0 * agg.e_in + agg.e_out) / (2.0 * m);
        q += agg.e_in / m - frac * frac;
    }
    return q;
}

double q_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg) {
    double m = require_m(g);
    return q_ov_from(community_aggregates(g, cover, cfg), m);
}

double q_ov_prime(const Graph& g, const Cover& cover, const BelongingConfig& cfg) {
    check_bound(g, cover);
    double m = require_m(g);
    MembershipTable table = make_membership_table(cover, cfg.fn, cfg.p);
    const bool average = cfg.fn == BelongingFn::Average;
    const auto& comms = cover.communities();
    size_t nc = comms.size();

    std::vector<double> observed(nc, 0.0);
    for (const Edge& e : g.edges())
        for (const auto& [cu, xu] : table.row(e.u))
            for (const auto& [cv, xv] : table.row(e.v))
                if (cu == cv)
                    observed[static_cast<size_t>(cu)] +=
                        2.0 * (average ? 0.5 * (xu + xv) : xu * xv) * e.weight;

    double q = 0.0;
    for (size_t c = 0; c < nc; ++c) {
        double null_term;
        if (average) {
            // sum_{i,j in c} k_i k_j (a_i + a_j)/2 = (sum k a)(sum k)
            double ka = 0.0, k = 0.0;
            for (const auto& [node, a] : comms[c].members) {
                ka += g.degree(node) * a;
                k += g.degree(node);
            }
            null_term = ka * k;
        } else {
            double kx = 0.0;
            for (const auto& [node, a] : comms[c].members) {
                double x = cfg.fn == BelongingFn::Logistic ? logistic_g(a, cfg.p) : a;
                kx += g.degree(node) * x;
            }
            null_term = kx * kx;
        }
        q += observed[c] - null_term / (2.0 * m);
    }
    return q / (2.0 * m);
}

double q_ov_link(const Graph& g, const Cover& cover, double p) {
    check_bound(g, cover);
    if (!(p > 0.0))
        throw DomainError("logistic steepness p must be > 0");
    double m = require_m(g);
    MembershipTable table = make_membership_table(cover, BelongingFn::Logistic, p);
    const auto& comms = cover.communities();
    size_t nc = comms.size();

    std::vector<double> observed(nc, 0.0);
    for (const Edge& e : g.edges())
        for (const auto& [cu, xu] : table.row(e.u))
            for (const auto& [cv, xv] : table.row(e.v))
                if (cu == cv)
                    observed[static_cast<size_t>(cu)] += 2.0 * xu * xv * e.weight;

    const double node_count = static_cast<double>(g.node_count());
    const double g0 = logistic_g(0.0, p);
    double q = 0.0;
    for (size_t c = 0; c < nc; ++c) {
        double gsum = 0.0, kg = 0.0;
        for (const auto& [node, a] : comms[c].members) {
            double x = logistic_g(a, p);
            gsum += x;
            kg += g.degree(node) * x;
        }
        // expected coefficient sums run over every node; non-members enter at g(0)
        double big_g = gsum + (node_count - static_cast<double>(comms[c].members.size())) * g0;
        double null_term = (big_g * big_g / (node_count * node_count)) * kg * kg;
        q += observed[c] - null_term / (2.0 * m);
    }
    return q / (2.0 * m);
}

double nq_ov_from(const std::vector<CommunityAggregates>& aggs) {
    double total = 0.0;
    std::vector<int> scope;
    for (size_t c = 0; c < aggs.size(); ++c) {
        const auto& agg = aggs[c];
        scope.clear();
        scope.push_back(static_cast<int>(c));
        for (const auto& [other, w] : agg.e_between)
            scope.push_back(other);
        std::sort(scope.begin(), scope.end());

        double n_c = 0.0;
        for (int d : scope)
            n_c += aggs[static_cast<size_t>(d)].e_in;
        double between = 0.0;
        for (int d : scope)
            for (const auto& [d2, w] : aggs[static_cast<size_t>(d)].e_between)
                if (std::binary_search(scope.begin(), scope.end(), d2))
                    between += w;
        n_c += between / 2.0; // each unordered community pair was seen from both sides

        if (n_c <= 0.0)
            continue;
        double frac = (2.0 * agg.e_in + agg.e_out) / (2.0 * n_c);
        total += agg.e_in / n_c - frac * frac;
    }
    return total;
}

double nq_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg) {
    require_m(g);
    return nq_ov_from(community_aggregates(g, cover, cfg));
}

double q_ds_ov_from(const std::vector<CommunityAggregates>& aggs, double m) {
    double total = 0.0;
    for (const auto& agg : aggs) {
        double frac = (2.0 * agg.e_in + agg.e_out) / (2.0 * m) * agg.d_in;
        double split = 0.0;
        for (size_t k = 0; k < agg.e_between.size(); ++k)
            split += agg.e_between[k].second / (2.0 * m) * agg.pair_density[k].second;
        total += agg.e_in / m * agg.d_in - frac * frac - split;
    }
    return total;
}

double q_ds_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg) {
    double m = require_m(g);
    return q_ds_ov_from(community_aggregates(g, cover, cfg), m);
}

double nq_disjoint(const Graph& g, const Cover& partition) {
    require_m(g);
    validate_partition(g, partition);
    Cover ones(partition.table(), partition.communities(), CoverKind::Fuzzy);
    return nq_ov(g, ones, BelongingConfig{Scheme::Given, BelongingFn::Product, 30.0});
}

double q_ds_disjoint(const Graph& g, const Cover& partition) {
    double m = require_m(g);
    validate_partition(g, partition);
    Cover ones(partition.table(), partition.communities(), CoverKind::Fuzzy);
    return q_ds_ov_from(community_aggregates(g, ones, BelongingConfig{Scheme::Given, BelongingFn::Product, 30.0}), m);
}

} // namespace ovq
