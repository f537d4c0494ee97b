#include <domh/ovgen.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

using std::vector;

namespace domh {

namespace {

constexpr double enumeration_guard = 1e9;

auto mask_is_zero(const uint64_t * m, int w) -> bool
{
    for (int i = 0; i < w; ++i)
        if (m[i])
            return false;
    return true;
}

/// AND over all vectors of sets level..k-1, per level: bits listed here can
/// never be cleared by the remaining choices, so any prefix that still has
/// one is a dead end.
auto suffix_all_masks(const OvInstance & inst, int w) -> vector<vector<uint64_t>>
{
    vector<vector<uint64_t>> suffix(inst.k + 1, vector<uint64_t>(w, ~0ull));
    for (int s = inst.k - 1; s >= 0; --s) {
        suffix[s] = suffix[s + 1];
        for (const auto & vec : inst.sets[s])
            for (int i = 0; i < w; ++i)
                suffix[s][i] &= vec[i];
    }
    return suffix;
}

auto root_mask(const OvInstance & inst, int w) -> vector<uint64_t>
{
    vector<uint64_t> root(w, ~0ull);
    if (inst.d & 63)
        root[w - 1] = ~0ull >> (64 - (inst.d & 63));
    return root;
}

/// Early-exit DFS over one-vector-per-set choices, carrying the running AND.
/// After a successful decide(), path holds a witness tuple.
struct Decider {
    const OvInstance & inst;
    int w;
    vector<vector<uint64_t>> suffix_all;
    vector<vector<uint64_t>> stack;
    vector<uint32_t> path;

    explicit Decider(const OvInstance & inst_) :
        inst(inst_), w(inst_.words()), suffix_all(suffix_all_masks(inst_, w)),
        stack(inst_.k + 1, vector<uint64_t>(size_t(w))), path(size_t(inst_.k), 0)
    {
    }

    auto decide(int level, const uint64_t * prefix) -> bool
    {
        if (mask_is_zero(prefix, w)) {
            for (int s = level; s < inst.k; ++s)
                path[s] = 0;
            return true;
        }
        if (level == inst.k)
            return false;
        for (int i = 0; i < w; ++i)
            if (prefix[i] & suffix_all[level][i])
                return false;
        if (level == inst.k - 1) {
            const auto & set = inst.sets[level];
            for (size_t idx = 0; idx < set.size(); ++idx) {
                bool zero = true;
                for (int i = 0; i < w; ++i) {
                    if (prefix[i] & set[idx][i]) {
                        zero = false;
                        break;
                    }
                }
                if (zero) {
                    path[level] = uint32_t(idx);
                    return true;
                }
            }
            return false;
        }
        auto & child = stack[level + 1];
        const auto & set = inst.sets[level];
        for (size_t idx = 0; idx < set.size(); ++idx) {
            for (int i = 0; i < w; ++i)
                child[i] = prefix[i] & set[idx][i];
            path[level] = uint32_t(idx);
            if (decide(level + 1, child.data()))
                return true;
        }
        return false;
    }
};

/// Full DFS gathering every orthogonal tuple (k indices each) into out.
/// Returns false when more than cap tuples exist; out is then unusable.
struct Collector {
    const OvInstance & inst;
    int w;
    size_t cap;
    vector<vector<uint64_t>> suffix_all;
    vector<vector<uint64_t>> stack;
    vector<uint32_t> current;
    vector<uint32_t> & out;
    bool aborted = false;

    Collector(const OvInstance & inst_, size_t cap_, vector<uint32_t> & out_) :
        inst(inst_), w(inst_.words()), cap(cap_), suffix_all(suffix_all_masks(inst_, w)),
        stack(inst_.k + 1, vector<uint64_t>(size_t(w))), current(size_t(inst_.k), 0), out(out_)
    {
    }

    auto run(int level, const uint64_t * prefix) -> void
    {
        if (aborted)
            return;
        for (int i = 0; i < w; ++i)
            if (prefix[i] & suffix_all[level][i])
                return;
        if (level == inst.k - 1) {
            const auto & set = inst.sets[level];
            for (size_t idx = 0; idx < set.size(); ++idx) {
                bool zero = true;
                for (int i = 0; i < w; ++i) {
                    if (prefix[i] & set[idx][i]) {
                        zero = false;
                        break;
                    }
                }
                if (zero) {
                    if (out.size() >= cap * size_t(inst.k)) {
                        aborted = true;
                        return;
                    }
                    current[level] = uint32_t(idx);
                    out.insert(out.end(), current.begin(), current.end());
                }
            }
            return;
        }
        auto & child = stack[level + 1];
        const auto & set = inst.sets[level];
        for (size_t idx = 0; idx < set.size(); ++idx) {
            for (int i = 0; i < w; ++i)
                child[i] = prefix[i] & set[idx][i];
            current[level] = uint32_t(idx);
            run(level + 1, child.data());
            if (aborted)
                return;
        }
    }
};

auto append_column(OvInstance & inst, SplitMix64 & rng, double p) -> void
{
    int col = inst.d;
    if ((col & 63) == 0)
        for (auto & set : inst.sets)
            for (auto & vec : set)
                vec.push_back(0);
    for (auto & set : inst.sets)
        for (auto & vec : set)
            if (rng.next_bool(p))
                vec[col >> 6] |= 1ull << (col & 63);
    ++inst.d;
}

auto drop_last_column(OvInstance & inst) -> void
{
    int col = --inst.d;
    size_t w = size_t(inst.words());
    for (auto & set : inst.sets) {
        for (auto & vec : set) {
            vec[col >> 6] &= ~(1ull << (col & 63));
            vec.resize(w);
        }
    }
}

/// Drop every tuple whose k vectors all have a 1 in the given column.
auto filter_survivors(const OvInstance & inst, vector<uint32_t> & survivors, int col) -> void
{
    size_t k = size_t(inst.k);
    size_t out = 0;
    for (size_t base = 0; base < survivors.size(); base += k) {
        bool all_ones = true;
        for (size_t s = 0; s < k; ++s) {
            if (! inst.bit(int(s), int(survivors[base + s]), col)) {
                all_ones = false;
                break;
            }
        }
        if (! all_ones) {
            for (size_t s = 0; s < k; ++s)
                survivors[out + s] = survivors[base + s];
            out += k;
        }
    }
    survivors.resize(out);
}

} // namespace

auto ov_has_solution(const OvInstance & inst) -> bool
{
    double product = 1.0;
    for (const auto & set : inst.sets) {
        product *= double(set.size());
        if (product > enumeration_guard)
            throw OvError("enumeration guard exceeded");
    }
    if (inst.k == 0)
        return true;
    for (const auto & set : inst.sets)
        if (set.empty())
            return false;
    Decider dec{inst};
    auto root = root_mask(inst, dec.w);
    return dec.decide(0, root.data());
}

auto gen_ov(int k, int set_size, double p, uint64_t seed, OvTarget target) -> OvInstance
{
    if (k < 2)
        throw OvError("k must be at least 2");
    if (set_size < 1)
        throw OvError("set_size must be at least 1");
    if (! (p > 0.0 && p < 1.0))
        throw OvError("p must be strictly between 0 and 1");
    double product = 1.0;
    for (int i = 0; i < k; ++i) {
        product *= double(set_size);
        if (product > enumeration_guard)
            throw OvError("enumeration guard exceeded");
    }

    const int restart_limit = 64;
    const int column_limit = 1 << 20;
    const size_t survivor_cap = 1200000;
    double miss = 1.0 - std::pow(p, double(k));

    for (int attempt = 0; attempt < restart_limit; ++attempt) {
        OvInstance inst;
        inst.k = k;
        inst.seed = seed;
        inst.sets.assign(size_t(k), vector<vector<uint64_t>>(size_t(set_size)));
        SplitMix64 rng(seed, uint64_t(attempt));

        // Tracking one known solution makes most columns free to check; once
        // few enough solutions remain, the exact list is cheaper still.
        bool collected = false;
        vector<uint32_t> survivors;
        vector<uint32_t> witness(size_t(k), 0); // vacuously orthogonal at d = 0
        bool have_witness = true;
        double trigger = 400000.0;
        bool no_reached = false;

        while (inst.d < column_limit) {
            append_column(inst, rng, p);
            int col = inst.d - 1;
            if (collected) {
                filter_survivors(inst, survivors, col);
                if (survivors.empty()) {
                    no_reached = true;
                    break;
                }
                continue;
            }
            if (product * std::pow(miss, double(inst.d)) <= trigger) {
                survivors.clear();
                Collector coll{inst, survivor_cap, survivors};
                auto root = root_mask(inst, coll.w);
                coll.run(0, root.data());
                if (! coll.aborted) {
                    collected = true;
                    if (survivors.empty()) {
                        no_reached = true;
                        break;
                    }
                    continue;
                }
                trigger /= 2;
            }
            if (have_witness) {
                bool all_ones = true;
                for (int s = 0; s < k; ++s) {
                    if (! inst.bit(s, int(witness[size_t(s)]), col)) {
                        all_ones = false;
                        break;
                    }
                }
                if (! all_ones)
                    continue;
                have_witness = false;
            }
            Decider dec{inst};
            auto root = root_mask(inst, dec.w);
            if (dec.decide(0, root.data())) {
                witness = dec.path;
                have_witness = true;
                continue;
            }
            no_reached = true;
            break;
        }
        if (! no_reached)
            throw OvError("column limit exceeded");

        if (target == OvTarget::No) {
            inst.yes = false;
            if (ov_has_solution(inst))
                throw std::logic_error("generated instance failed label certification");
            return inst;
        }
        if (inst.d <= 1)
            continue; // dropping the only column would leave nothing; fresh stream
        drop_last_column(inst);
        inst.yes = true;
        if (! ov_has_solution(inst))
            throw std::logic_error("generated instance failed label certification");
        return inst;
    }
    throw OvError("restart limit exceeded");
}

auto write_ov(const OvInstance & inst) -> std::string
{
    std::ostringstream out;
    out << inst.k << " " << inst.d << " " << (inst.yes ? "YES" : "NO") << " " << inst.seed << "\n";
    for (const auto & set : inst.sets) {
        out << set.size() << "\n";
        for (const auto & vec : set) {
            std::string row(size_t(inst.d), '0');
            for (int c = 0; c < inst.d; ++c)
                if ((vec[c >> 6] >> (c & 63)) & 1)
                    row[size_t(c)] = '1';
            out << row << "\n";
        }
    }
    return out.str();
}

auto parse_ov(const std::string & text) -> OvInstance
{
    std::istringstream in(text);
    OvInstance inst;
    std::string label;
    if (! (in >> inst.k >> inst.d >> label >> inst.seed) || inst.k < 0 || inst.d < 0)
        throw OvError("bad instance header");
    if (label == "YES")
        inst.yes = true;
    else if (label == "NO")
        inst.yes = false;
    else
        throw OvError("bad instance label: " + label);
    size_t w = size_t(inst.words());
    inst.sets.resize(size_t(inst.k));
    for (auto & set : inst.sets) {
        long long size = -1;
        if (! (in >> size) || size < 0)
            throw OvError("bad set size");
        set.assign(size_t(size), vector<uint64_t>(w, 0));
        for (auto & vec : set) {
            if (inst.d == 0)
                continue; // rows would be empty lines
            std::string row;
            if (! (in >> row) || int(row.size()) != inst.d)
                throw OvError("bad vector row");
            for (int c = 0; c < inst.d; ++c) {
                if (row[size_t(c)] == '1')
                    vec[c >> 6] |= 1ull << (c & 63);
                else if (row[size_t(c)] != '0')
                    throw OvError("bad vector row");
            }
        }
    }
    return inst;
}

} // namespace domh
