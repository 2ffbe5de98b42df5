#include "ansig/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ansig {

namespace {

constexpr int kMaxMaterializedDegree = 10;

bool generates_An(const std::vector<Permutation>& gens)
{
    const GeneratorSet gs(gens);
    if (!is_transitive(gs))
        return false;
    return is_full_alternating(gs).is_alternating;
}

std::vector<Permutation> elements_of_order(const std::vector<Permutation>& all, long long k)
{
    std::vector<Permutation> out;
    for (const auto& x : all)
        if (static_cast<long long>(x.order()) == k)
            out.push_back(x);
    return out;
}

std::vector<Permutation> class_representatives(int n, long long k)
{
    std::vector<Permutation> out;
    for (const auto& t : cycle_types_of_order(n, k))
        out.push_back(element_of_type(t, 1));
    return out;
}

void shuffle(std::vector<int>& v, CounterRng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
}

GeneratingVector assemble(int n, const Signature& s, const std::vector<Permutation>& entries)
{
    GeneratingVector v;
    v.degree = n;
    for (int i = 0; i < s.h; ++i) {
        v.a.push_back(entries[static_cast<std::size_t>(2 * i)]);
        v.b.push_back(entries[static_cast<std::size_t>(2 * i + 1)]);
    }
    for (int j = 0; j < s.r(); ++j)
        v.c.push_back(entries[static_cast<std::size_t>(2 * s.h + j)]);
    return v;
}

}  // namespace

std::vector<Permutation> alternating_elements(int n)
{
    if (n < 1 || n > kMaxMaterializedDegree)
        throw PreconditionError("alternating_elements supports 1 <= n <= " + std::to_string(kMaxMaterializedDegree));
    std::vector<std::uint16_t> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    std::vector<Permutation> out;
    do {
        Permutation p = Permutation::from_raw(img);
        if (p.is_even())
            out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation random_element_of_order(int n, long long k, CounterRng& rng)
{
    const auto types = cycle_types_of_order(n, k);
    if (types.empty())
        throw PreconditionError(std::to_string(k) + " is not an element order of A_" + std::to_string(n));
    const Permutation rep = element_of_type(types[rng.below(types.size())], 1);
    return conjugate(rep, random_permutation(n, rng));
}

std::optional<Permutation> random_conjugator_in_An(const Permutation& a, const Permutation& a2, CounterRng& rng)
{
    const CycleDecomposition da(a);
    const CycleDecomposition db(a2);
    if (da.type() != db.type())
        throw PreconditionError("elements have different cycle types");

    std::map<std::size_t, std::vector<int>> by_length;
    for (std::size_t j = 0; j < db.cycles().size(); ++j)
        by_length[db.cycles()[j].length()].push_back(static_cast<int>(j));
    for (auto& [len, idx] : by_length)
        shuffle(idx, rng);

    std::vector<int> pairing;
    std::vector<int> rotation;
    std::map<std::size_t, std::size_t> taken;
    for (const auto& cyc : da.cycles()) {
        const std::size_t len = cyc.length();
        pairing.push_back(by_length[len][taken[len]++]);
        rotation.push_back(static_cast<int>(rng.below(len)));
    }
    std::vector<int> fixed_perm(da.complement().size());
    std::iota(fixed_perm.begin(), fixed_perm.end(), 0);
    shuffle(fixed_perm, rng);

    const Permutation b = aligned_conjugator(a, a2, pairing, rotation, fixed_perm);
    try {
        return make_even_conjugator(a, b);
    } catch (const ClassSplit&) {
        return std::nullopt;
    }
}

std::optional<std::pair<Permutation, Permutation>> brute_commutator(const Permutation& g, SearchMode mode,
                                                                    std::uint64_t seed, std::uint64_t max_states)
{
    const int n = g.degree();
    if (!g.is_even())
        throw PreconditionError("a commutator in A_n must be even");
    if (mode == SearchMode::exhaustive) {
        if (n > 8)
            throw PreconditionError("exhaustive commutator search supports n <= 8");
        const auto all = alternating_elements(n);
        std::uint64_t states = 0;
        for (const auto& a : all) {
            // [a,b] = g  <=>  b^-1 a b = a g, so b only has to conjugate a onto a*g.
            const Permutation target = a * g;
            if (CycleType::of(target) != CycleType::of(a))
                continue;
            for (const auto& b : all) {
                if (++states > max_states)
                    return std::nullopt;
                if (commutator(a, b) == g)
                    return std::make_pair(a, b);
            }
        }
        throw std::logic_error("no commutator found for " + g.to_string() + ", contradicting Ore's theorem");
    }
    if (n > 16)
        throw PreconditionError("randomized commutator search supports n <= 16");
    for (std::uint64_t t = 0; t < max_states; ++t) {
        CounterRng rng(seed, t);
        const Permutation a = random_even_permutation(n, rng);
        const Permutation target = a * g;
        if (CycleType::of(target) != CycleType::of(a))
            continue;
        if (auto b = random_conjugator_in_An(a, target, rng)) {
            if (commutator(a, *b) != g)
                throw std::logic_error("random conjugator failed its own check");
            return std::make_pair(a, *b);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Permutation, Permutation>> find_generating_pair(int n, long long k1, long long k2,
                                                                        std::uint64_t seed, std::uint64_t max_trials)
{
    for (std::uint64_t t = 0; t < max_trials; ++t) {
        CounterRng rng(seed, t);
        Permutation x = random_element_of_order(n, k1, rng);
        Permutation y = random_element_of_order(n, k2, rng);
        if (generates_An({x, y}))
            return std::make_pair(std::move(x), std::move(y));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Vector search

namespace {

struct SlotPlan {
    /// Candidate lists in nesting order.
    std::vector<const std::vector<Permutation>*> lists;
    /// Entry position (in a1,b1,...,c_r order) filled by each slot.
    std::vector<int> position;
    /// Position computed from the relation, or -1 when r == 0.
    int determined = -1;
    BigInt space = 1;
    std::vector<std::string> reductions;
};

struct Pools {
    std::vector<Permutation> all;
    std::vector<Permutation> reps;
    std::map<long long, std::vector<Permutation>> by_order;
};

SlotPlan plan_slots(int n, const Signature& s, Pools& pools)
{
    SlotPlan plan;
    const int r = s.r();
    if (r >= 2) {
        pools.reps = class_representatives(n, s.periods[0]);
        plan.lists.push_back(&pools.reps);
        plan.position.push_back(2 * s.h);
        plan.reductions.push_back("class-representative: c1 runs over one representative per S_n class of order " +
                                  std::to_string(s.periods[0]) + " (" + std::to_string(pools.reps.size()) + " classes)");
    }
    for (int i = 0; i < 2 * s.h; ++i) {
        plan.lists.push_back(&pools.all);
        plan.position.push_back(i);
    }
    for (int j = 1; j + 1 < r; ++j) {
        auto& pool = pools.by_order[s.periods[static_cast<std::size_t>(j)]];
        if (pool.empty())
            pool = elements_of_order(pools.all, s.periods[static_cast<std::size_t>(j)]);
        plan.lists.push_back(&pool);
        plan.position.push_back(2 * s.h + j);
    }
    if (r >= 1) {
        plan.determined = 2 * s.h + r - 1;
        plan.reductions.push_back("determined-last: c" + std::to_string(r) +
                                  " is the inverse of the product of the other entries");
    }
    for (const auto* l : plan.lists)
        plan.space *= static_cast<unsigned>(l->size());
    return plan;
}

struct SharedState {
    std::atomic<std::uint64_t> states{0};
    std::atomic<std::size_t> best_top{SIZE_MAX};
    std::atomic<bool> out_of_budget{false};
    std::mutex mu;
    std::map<std::size_t, std::vector<Permutation>> hits;
};

class Sweeper {
public:
    Sweeper(int n, const Signature& s, const SlotPlan& plan, SharedState& shared, std::uint64_t max_states)
        : n_(n), s_(s), plan_(plan), shared_(shared), max_states_(max_states),
          entries_(static_cast<std::size_t>(2 * s.h + s.r()), Permutation(n))
    {
    }

    void run_top(std::size_t top)
    {
        top_ = top;
        if (plan_.lists.empty()) {
            leaf();
            return;
        }
        entries_[static_cast<std::size_t>(plan_.position[0])] = (*plan_.lists[0])[top];
        descend(1);
    }

private:
    bool stop() const
    {
        return done_ || shared_.out_of_budget.load(std::memory_order_relaxed) ||
               shared_.best_top.load(std::memory_order_relaxed) < top_;
    }

    void descend(std::size_t depth)
    {
        if (stop())
            return;
        if (depth == plan_.lists.size()) {
            leaf();
            return;
        }
        for (const auto& x : *plan_.lists[depth]) {
            entries_[static_cast<std::size_t>(plan_.position[depth])] = x;
            descend(depth + 1);
            if (stop())
                return;
        }
    }

    void leaf()
    {
        if (shared_.states.fetch_add(1, std::memory_order_relaxed) + 1 > max_states_) {
            shared_.out_of_budget = true;
            return;
        }
        Permutation acc(n_);
        for (int i = 0; i < s_.h; ++i)
            acc = acc * commutator(entries_[static_cast<std::size_t>(2 * i)], entries_[static_cast<std::size_t>(2 * i + 1)]);
        const int r = s_.r();
        for (int j = 0; j + 1 < r; ++j)
            acc = acc * entries_[static_cast<std::size_t>(2 * s_.h + j)];
        if (plan_.determined >= 0) {
            Permutation last = acc.inverse();
            if (static_cast<long long>(last.order()) != s_.periods.back())
                return;
            entries_[static_cast<std::size_t>(plan_.determined)] = std::move(last);
        } else if (!acc.is_identity()) {
            return;
        }
        if (!generates_An(entries_))
            return;
        done_ = true;
        std::lock_guard<std::mutex> lock(shared_.mu);
        shared_.hits.emplace(top_, entries_);
        std::size_t cur = shared_.best_top.load();
        while (top_ < cur && !shared_.best_top.compare_exchange_weak(cur, top_)) {
        }
    }

    int n_;
    const Signature& s_;
    const SlotPlan& plan_;
    SharedState& shared_;
    std::uint64_t max_states_;
    std::vector<Permutation> entries_;
    std::size_t top_ = 0;
    bool done_ = false;
};

SearchResult exhaustive_search(int n, const Signature& s, const SearchBudget& budget)
{
    if (n > kMaxMaterializedDegree)
        throw InfeasibleSearch("exhaustive search materializes A_n and supports n <= " +
                               std::to_string(kMaxMaterializedDegree));
    Pools pools;
    pools.all = alternating_elements(n);
    const SlotPlan plan = plan_slots(n, s, pools);

    SearchResult res;
    res.space_size = plan.space;
    res.reductions = plan.reductions;

    SharedState shared;
    const std::size_t tops = plan.lists.empty() ? 1 : plan.lists[0]->size();
    const unsigned workers = std::max(1U, std::min<unsigned>(budget.workers, static_cast<unsigned>(tops)));
    auto work = [&](unsigned w) {
        for (std::size_t top = w; top < tops; top += workers) {
            if (shared.best_top.load() < top || shared.out_of_budget.load())
                return;
            Sweeper sw(n, s, plan, shared, budget.max_states);
            sw.run_top(top);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    res.states = std::min<std::uint64_t>(shared.states.load(), budget.max_states);
    if (!shared.hits.empty()) {
        // Lowest top-level index wins, which matches a single-worker sweep.
        res.status = SearchStatus::found;
        res.vector = assemble(n, s, shared.hits.begin()->second);
    } else if (shared.out_of_budget) {
        res.status = SearchStatus::budget_exhausted;
    } else {
        res.status = SearchStatus::exhausted;
    }
    return res;
}

SearchResult randomized_search(int n, const Signature& s, const SearchBudget& budget)
{
    if (s.h < 1)
        throw PreconditionError("randomized search needs h >= 1: a1 is solved from the relation");
    if (budget.shards == 0 || budget.shard >= budget.shards)
        throw PreconditionError("shard index out of range");
    const int r = s.r();
    std::vector<std::vector<CycleType>> types;
    for (long long k : s.periods) {
        types.push_back(cycle_types_of_order(n, k));
        if (types.back().empty())
            throw PreconditionError(std::to_string(k) + " is not an element order of A_" + std::to_string(n));
    }

    SearchResult res;
    res.seed = budget.seed;
    res.shard = budget.shard;
    res.space_size = boost::multiprecision::pow(alternating_order(n), static_cast<unsigned>(2 * s.h + std::max(r - 1, 0)));
    res.reductions.push_back("solve-commutator: a1 random, b1 a random conjugator taking a1 to a1*g");
    if (r >= 1)
        res.reductions.push_back("class-representative: c1 is a fixed representative of a random class");

    std::vector<Permutation> entries(static_cast<std::size_t>(2 * s.h + r), Permutation(n));
    for (std::uint64_t t = budget.shard; t < budget.max_states; t += budget.shards) {
        ++res.states;
        CounterRng rng(budget.seed, t);
        for (int j = 0; j < r; ++j) {
            const auto& ts = types[static_cast<std::size_t>(j)];
            const Permutation rep = element_of_type(ts[rng.below(ts.size())], 1);
            entries[static_cast<std::size_t>(2 * s.h + j)] = j == 0 ? rep : conjugate(rep, random_permutation(n, rng));
        }
        Permutation tail(n);
        for (int i = 1; i < s.h; ++i) {
            auto& a = entries[static_cast<std::size_t>(2 * i)];
            auto& b = entries[static_cast<std::size_t>(2 * i + 1)];
            a = random_even_permutation(n, rng);
            b = random_even_permutation(n, rng);
            tail = tail * commutator(a, b);
        }
        for (int j = 0; j < r; ++j)
            tail = tail * entries[static_cast<std::size_t>(2 * s.h + j)];
        // [a1,b1] = g with g = tail^-1, i.e. b1^-1 a1 b1 = a1 g.
        const Permutation g = tail.inverse();
        const Permutation a1 = random_even_permutation(n, rng);
        const Permutation target = a1 * g;
        if (CycleType::of(target) != CycleType::of(a1))
            continue;
        auto b1 = random_conjugator_in_An(a1, target, rng);
        if (!b1)
            continue;
        entries[0] = a1;
        entries[1] = *b1;
        if (!generates_An(entries))
            continue;
        res.status = SearchStatus::found;
        res.vector = assemble(n, s, entries);
        return res;
    }
    res.status = SearchStatus::budget_exhausted;
    return res;
}

}  // namespace

SearchResult search_vector(int n, const Signature& s, const SearchBudget& budget)
{
    if (n < 5)
        throw PreconditionError("search_vector needs n >= 5");
    if (s.h < 0)
        throw PreconditionError("negative quotient genus");
    SearchResult res = budget.mode == SearchMode::exhaustive ? exhaustive_search(n, s, budget)
                                                             : randomized_search(n, s, budget);
    if (res.vector) {
        const auto rep = verify_vector(n, s, *res.vector);
        if (!rep.shape_ok || !rep.orders_match || !rep.product_is_identity || !rep.generates)
            throw std::logic_error("search produced a vector that fails verification");
    }
    return res;
}

NonexistenceProof prove_nonexistence(int n, const Signature& s, unsigned workers, std::uint64_t max_states)
{
    if (n > kMaxExhaustiveDegree)
        throw InfeasibleSearch("nonexistence proofs need n <= " + std::to_string(kMaxExhaustiveDegree));
    if (n > kMaxMaterializedDegree)
        throw InfeasibleSearch("A_" + std::to_string(n) + " is too large to enumerate");
    {
        Pools pools;
        pools.all = alternating_elements(n);
        const SlotPlan plan = plan_slots(n, s, pools);
        if (plan.space > max_states)
            throw InfeasibleSearch("search space of " + plan.space.str() + " states exceeds the budget of " +
                                   std::to_string(max_states));
    }
    const auto start = std::chrono::steady_clock::now();
    SearchBudget budget;
    budget.mode = SearchMode::exhaustive;
    budget.workers = workers;
    budget.max_states = max_states;
    const SearchResult res = exhaustive_search(n, s, budget);
    if (res.status == SearchStatus::found)
        throw NonexistenceRefuted("generating vector exists for " + pretty(s) + " on A_" + std::to_string(n),
                                  *res.vector);
    if (res.status != SearchStatus::exhausted)
        throw InfeasibleSearch("sweep stopped before covering the space");

    NonexistenceProof proof;
    proof.degree = n;
    proof.signature = s;
    proof.space_size = res.space_size;
    proof.reductions = res.reductions;
    proof.hits = 0;
    proof.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return proof;
}

namespace {

bool is_single_cycle_of(const Permutation& p, int len)
{
    const CycleType t = CycleType::of(p);
    return t.lengths.size() == 1 && t.lengths[0] == len;
}

void check_case(const Permutation& c, int l, std::uint64_t trial, FactorizationReport& rep)
{
    const int n = c.degree();
    ++rep.bertram_cases;
    try {
        const auto f = bertram_factorization(c, l);
        // Pointwise product check, independent of compose().
        bool ok = is_single_cycle_of(f.left(), l) && is_single_cycle_of(f.right(), l);
        for (Value x = 1; ok && x <= n; ++x)
            ok = f.right()(f.left()(x)) == c(x);
        if (!ok) {
            ++rep.bertram_failures;
            rep.failures.push_back("bertram n=" + std::to_string(n) + " l=" + std::to_string(l) + " c=" +
                                   c.to_string() + " trial=" + std::to_string(trial));
        }
    } catch (const std::exception& e) {
        ++rep.bertram_failures;
        rep.failures.push_back("bertram n=" + std::to_string(n) + " l=" + std::to_string(l) + " c=" + c.to_string() +
                               " trial=" + std::to_string(trial) + " threw: " + e.what());
    }
}

void check_refusal(const Permutation& c, std::uint64_t trial, FactorizationReport& rep)
{
    const int l = bertram_lower_bound(c) - 1;
    ++rep.refusal_cases;
    try {
        (void)bertram_factorization(c, l);
        ++rep.refusal_failures;
        rep.failures.push_back("refusal n=" + std::to_string(c.degree()) + " l=" + std::to_string(l) + " c=" +
                               c.to_string() + " trial=" + std::to_string(trial) + " was not refused");
    } catch (const PreconditionError&) {
    }
}

bool xu_eligible(const Permutation& c)
{
    if (c.degree() < 6 || c.is_identity() || !c.is_even())
        return false;
    for (int len : CycleType::of(c).lengths)
        if (len < 5)
            return false;
    return true;
}

void check_xu(const Permutation& c, std::uint64_t seed, std::uint64_t trial, FactorizationReport& rep)
{
    const int n = c.degree();
    ++rep.xu_cases;
    try {
        const auto f = xu_factorization(c, seed, 200'000);
        const int big = n % 2 == 0 ? n - 2 : n - 3;
        const CycleType shape{n, {2, big}};
        bool ok = CycleType::of(f.left()) == shape && CycleType::of(f.right()) == shape;
        for (Value x = 1; ok && x <= n; ++x)
            ok = f.right()(f.left()(x)) == c(x);
        if (!ok) {
            ++rep.xu_failures;
            rep.failures.push_back("xu n=" + std::to_string(n) + " c=" + c.to_string() + " trial=" +
                                   std::to_string(trial));
        }
    } catch (const std::exception& e) {
        ++rep.xu_failures;
        rep.failures.push_back("xu n=" + std::to_string(n) + " c=" + c.to_string() + " trial=" +
                               std::to_string(trial) + " threw: " + e.what());
    }
}

}  // namespace

FactorizationReport cross_check_factorizations(const FactorizationSweep& sweep)
{
    if (sweep.min_degree < 2 || sweep.max_degree < sweep.min_degree)
        throw PreconditionError("bad degree range for the factorization sweep");
    FactorizationReport rep;
    if (sweep.exhaustive) {
        if (sweep.max_degree > 8)
            throw PreconditionError("exhaustive factorization sweep supports degree <= 8");
        for (int d = sweep.min_degree; d <= sweep.max_degree; ++d) {
            std::uint64_t idx = 0;
            for (const auto& c : alternating_elements(d)) {
                for (int l = bertram_lower_bound(c); l <= d; ++l)
                    check_case(c, l, idx, rep);
                check_refusal(c, idx, rep);
                if (xu_eligible(c))
                    check_xu(c, hash_combine(sweep.seed, idx), idx, rep);
                ++idx;
            }
        }
    }
    const auto span = static_cast<std::uint64_t>(sweep.max_degree - sweep.min_degree + 1);
    for (std::uint64_t t = 0; t < sweep.trials; ++t) {
        CounterRng rng(sweep.seed, t);
        const int d = sweep.min_degree + static_cast<int>(rng.below(span));
        const Permutation c = random_even_permutation(d, rng);
        const int bound = bertram_lower_bound(c);
        const int l = bound + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - bound + 1)));
        check_case(c, l, t, rep);
        check_refusal(c, t, rep);
        if (xu_eligible(c))
            check_xu(c, hash_combine(sweep.seed, t), t, rep);
    }
    return rep;
}

}  // namespace ansig
