#include "spider/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spider/bounds.hpp"
#include "spider/verifier.hpp"

namespace spider {

std::string to_string(Decision d)
{
    switch (d) {
    case Decision::yes:
        return "yes";
    case Decision::no:
        return "no";
    default:
        return "unknown";
    }
}

std::string to_string(SolveStatus s)
{
    return s == SolveStatus::exact ? "exact" : "unknown";
}

std::string to_string(ScanVerdict v)
{
    switch (v) {
    case ScanVerdict::confirmed:
        return "confirmed";
    case ScanVerdict::listed_exception:
        return "listed_exception";
    case ScanVerdict::unexpected:
        return "unexpected";
    default:
        return "unknown";
    }
}

namespace {

struct Step {
    int leg;
    int pos;           // 1-based
    bool pendant;
    bool leg_end;      // last edge of its leg
    int twin_step;     // step of the pendant edge of the previous equal-length leg, or -1
};

struct Plan {
    const SpiderGraph* g;
    int q;
    int c;
    bool q_on_pendant;
    std::vector<Step> steps;
    std::vector<int> leg_order;
};

Plan make_plan(const SpiderGraph& g, int c)
{
    Plan p{&g, g.q, c, c <= g.leg_count() + 1, {}, {}};
    p.leg_order.resize(g.leg_count());
    std::iota(p.leg_order.begin(), p.leg_order.end(), 0);
    std::stable_sort(p.leg_order.begin(), p.leg_order.end(),
                     [&](int a, int b) { return g.legs[a] > g.legs[b]; });
    int prev_leg = -1, prev_pendant_step = -1;
    for (int li : p.leg_order) {
        int y = g.legs[li];
        int twin = (prev_leg >= 0 && g.legs[prev_leg] == y) ? prev_pendant_step : -1;
        prev_pendant_step = static_cast<int>(p.steps.size());
        prev_leg = li;
        for (int j = 1; j <= y; ++j)
            p.steps.push_back({li, j, j == 1, j == y, j == 1 ? twin : -1});
    }
    return p;
}

struct Shared {
    std::atomic<std::int64_t> nodes{0};
    std::int64_t max_nodes = -1;
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_branch{1 << 30};  // smallest first-level branch that found a witness
};

class Search {
public:
    Search(const Plan& plan, Shared& shared)
        : p_(plan), sh_(shared), label_at_(plan.steps.size(), 0), color_at_(plan.steps.size(), 0),
          used_(plan.q + 2, false), cnt_(static_cast<size_t>(plan.q) * (plan.q + 1) / 2 + 2, 0)
    {
        pendants_left_ = p_.g->leg_count();
    }

    // Explores the subtree where the first edge carries `first`; branch orders the subtrees.
    bool run_branch(int first, int branch)
    {
        branch_ = branch;
        if (!place(0, first))
            return false;
        bool found = dfs(1);
        unplace(0, first);
        return found;
    }

    bool run_all() { return dfs(0); }

    EdgeLabeling witness() const { return witness_; }

private:
    const Plan& p_;
    Shared& sh_;
    std::vector<int> label_at_;
    std::vector<int> color_at_;
    std::vector<bool> used_;
    std::vector<int> cnt_;
    int distinct_ = 0;
    int pendants_left_ = 0;
    int branch_ = -1;
    EdgeLabeling witness_;

    bool stop() const
    {
        if (sh_.out_of_budget.load(std::memory_order_relaxed))
            return true;
        return branch_ >= 0 && sh_.best_branch.load(std::memory_order_relaxed) < branch_;
    }

    void add_color(int v)
    {
        if (cnt_[v]++ == 0)
            ++distinct_;
    }

    void remove_color(int v)
    {
        if (--cnt_[v] == 0)
            --distinct_;
    }

    int vertex_color(int t, int label) const
    {
        const Step& s = p_.steps[t];
        return s.pendant ? label : label + label_at_[t - 1];
    }

    // Assign label to step t; false (with nothing changed) if an adjacency clash appears.
    bool place(int t, int label)
    {
        const Step& s = p_.steps[t];
        int col = vertex_color(t, label);
        if (!s.pendant && col == color_at_[t - 1])
            return false;
        label_at_[t] = label;
        color_at_[t] = col;
        used_[label] = true;
        add_color(col);
        if (s.pendant)
            --pendants_left_;
        return true;
    }

    void unplace(int t, int label)
    {
        const Step& s = p_.steps[t];
        remove_color(color_at_[t]);
        used_[label] = false;
        label_at_[t] = 0;
        if (s.pendant)
            ++pendants_left_;
    }

    // Remaining pendant colors are distinct labels; only colors that are still free labels can absorb them.
    bool hopeless() const
    {
        if (distinct_ > p_.c)
            return true;
        int reusable = 0;
        for (int l = 1; l <= p_.q; ++l)
            if (!used_[l] && cnt_[l] > 0)
                ++reusable;
        return distinct_ + std::max(0, pendants_left_ - reusable) > p_.c;
    }

    bool finish()
    {
        int core = 0;
        for (size_t t = 0; t < p_.steps.size(); ++t)
            if (p_.steps[t].leg_end)
                core += label_at_[t];
        for (size_t t = 0; t < p_.steps.size(); ++t)
            if (p_.steps[t].leg_end && color_at_[t] == core)
                return false;
        int total = distinct_ + (core < static_cast<int>(cnt_.size()) && cnt_[core] > 0 ? 0 : 1);
        if (total > p_.c)
            return false;
        witness_.assign(p_.g->leg_count(), {});
        for (int i = 0; i < p_.g->leg_count(); ++i)
            witness_[i].assign(p_.g->legs[i], 0);
        for (size_t t = 0; t < p_.steps.size(); ++t)
            witness_[p_.steps[t].leg][p_.steps[t].pos - 1] = label_at_[t];
        return true;
    }

    bool dfs(int t)
    {
        if (t == static_cast<int>(p_.steps.size()))
            return finish();
        if (stop())
            return false;
        std::int64_t n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (sh_.max_nodes >= 0 && n > sh_.max_nodes) {
            sh_.out_of_budget.store(true);
            return false;
        }
        const Step& s = p_.steps[t];
        int lo = 1;
        if (s.twin_step >= 0)
            lo = label_at_[s.twin_step] + 1;
        // large labels first: q lands on a pendant edge early
        for (int label = p_.q; label >= lo; --label) {
            if (used_[label])
                continue;
            if (label == p_.q && p_.q_on_pendant && !s.pendant)
                continue;
            if (!place(t, label))
                continue;
            bool found = !hopeless() && dfs(t + 1);
            unplace(t, label);
            if (found)
                return true;
            if (stop())
                return false;
        }
        return false;
    }
};

}  // namespace

DecisionResult exists_labeling_with_at_most(const SpiderGraph& g, int c, const SolveBudget& budget)
{
    DecisionResult res;
    if (c < 1)
        throw std::invalid_argument("color bound must be positive");
    Plan plan = make_plan(g, c);
    Shared sh;
    sh.max_nodes = budget.max_nodes;
    int jobs = std::max(1, budget.jobs);

    if (jobs == 1) {
        Search s(plan, sh);
        bool found = s.run_all();
        res.nodes_explored = sh.nodes.load();
        if (found) {
            res.decision = Decision::yes;
            res.witness = s.witness();
        } else {
            res.decision = sh.out_of_budget ? Decision::unknown : Decision::no;
        }
    } else {
        // branch b puts label q - b on the first edge, matching the serial order
        std::atomic<int> next{0};
        std::mutex mu;
        std::optional<EdgeLabeling> best;
        int best_branch = 1 << 30;
        auto worker = [&] {
            for (;;) {
                int b = next.fetch_add(1);
                if (b >= plan.q || b > sh.best_branch.load() || sh.out_of_budget.load())
                    return;
                int label = plan.q - b;
                if (label == plan.q && plan.q_on_pendant && !plan.steps[0].pendant)
                    continue;
                Search s(plan, sh);
                if (s.run_branch(label, b)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (b < best_branch) {
                        best_branch = b;
                        best = s.witness();
                    }
                    int cur = sh.best_branch.load();
                    while (b < cur && !sh.best_branch.compare_exchange_weak(cur, b)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
        res.nodes_explored = sh.nodes.load();
        if (best) {
            res.decision = Decision::yes;
            res.witness = best;
        } else {
            res.decision = sh.out_of_budget ? Decision::unknown : Decision::no;
        }
    }
    if (res.witness) {
        VerificationReport rep = verify(g, *res.witness);
        if (!rep.ok() || rep.color_count > c)
            throw std::logic_error("search produced an invalid witness");
    }
    return res;
}

SolveOutcome chi_la_exact(const SpiderGraph& g, const SolveBudget& budget)
{
    SolveOutcome out;
    int c = pendant_lower_bound(g);
    for (;; ++c) {
        out.lower_bound = c;
        SolveBudget round = budget;
        if (budget.max_nodes >= 0)
            round.max_nodes = std::max<std::int64_t>(0, budget.max_nodes - out.nodes_explored);
        DecisionResult r = exists_labeling_with_at_most(g, c, round);
        out.nodes_explored += r.nodes_explored;
        if (r.decision == Decision::unknown)
            return out;
        if (r.decision == Decision::yes) {
            out.status = SolveStatus::exact;
            out.chi_la = verify(g, *r.witness).color_count;
            out.witness = r.witness;
            return out;
        }
        if (c > g.vertex_count())
            throw std::logic_error("no local antimagic labeling found at any color count");
    }
}

std::optional<int> naive_chi_la(const SpiderGraph& g)
{
    std::vector<int> perm(g.q);
    std::iota(perm.begin(), perm.end(), 1);
    std::optional<int> best;
    EdgeLabeling f(g.leg_count());
    do {
        size_t k = 0;
        for (int i = 0; i < g.leg_count(); ++i)
            f[i].assign(perm.begin() + k, perm.begin() + k + g.legs[i]), k += g.legs[i];
        VerificationReport rep = verify(g, f);
        if (rep.ok() && (!best || rep.color_count < *best))
            best = rep.color_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int ScanReport::count(ScanVerdict v) const
{
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [&](const ScanEntry& e) { return e.verdict == v; }));
}

namespace {

void partitions(int left, int min_part, Signature& cur, std::vector<Signature>& out)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int y = min_part; y <= left; ++y) {
        cur.push_back(y);
        partitions(left - y, y, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Signature> conjecture_domain(int max_q)
{
    std::vector<Signature> out;
    for (int q = 6; q <= max_q; ++q) {
        std::vector<Signature> parts;
        Signature cur;
        partitions(q, 2, cur, parts);
        for (const Signature& s : parts) {
            long d = static_cast<long>(s.size());
            if (d >= 3 && d * (d + 1) <= 2L * (2L * q - 1))
                out.push_back(s);
        }
    }
    return out;
}

ScanReport conjecture_scan(int max_q, const SolveBudget& budget)
{
    ScanReport rep;
    rep.max_q = max_q;
    for (const Signature& s : conjecture_domain(max_q)) {
        ScanEntry e;
        e.signature = s;
        e.q = size_of(s);
        e.outcome = chi_la_exact(build_spider(s), budget);
        int d = static_cast<int>(s.size());
        if (e.outcome.status != SolveStatus::exact) {
            e.verdict = ScanVerdict::unknown;
        } else if (*e.outcome.chi_la == d + 1) {
            e.verdict = ScanVerdict::confirmed;
        } else {
            bool only23 = std::all_of(s.begin(), s.end(), [](int y) { return y == 2 || y == 3; });
            int n = static_cast<int>(std::count(s.begin(), s.end(), 2));
            e.verdict = only23 && conjecture_exceptions().count({n, d - n}) ? ScanVerdict::listed_exception
                                                                             : ScanVerdict::unexpected;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::string format_scan(const ScanReport& r)
{
    std::ostringstream out;
    for (const ScanEntry& e : r.entries) {
        out << "Sp(" << format_signature(e.signature) << ") q=" << e.q << " d=" << e.signature.size() << " chi_la=";
        if (e.outcome.chi_la)
            out << *e.outcome.chi_la;
        else
            out << ">=" << e.outcome.lower_bound;
        out << " " << to_string(e.verdict) << "\n";
    }
    out << "max_q=" << r.max_q << " signatures=" << r.entries.size()
        << " confirmed=" << r.count(ScanVerdict::confirmed)
        << " listed_exception=" << r.count(ScanVerdict::listed_exception)
        << " unexpected=" << r.count(ScanVerdict::unexpected) << " unknown=" << r.count(ScanVerdict::unknown) << "\n";
    return out.str();
}

}  // namespace spider
