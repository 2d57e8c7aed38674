#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ganirl/errors.hpp"

namespace ganirl {

/// Grid actions, row-major states (state = row * width + col).
enum GridAction : int { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

inline constexpr int kNumGridActions = 4;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Deterministic finite-horizon tabular MDP. Moves off the grid clamp to the
/// current cell, so the transition table is total.
struct Mdp {
    int width = 0;
    int height = 0;
    int n_states = 0;
    int n_actions = 0;
    int start_state = 0;
    int horizon = 0;
    std::vector<std::int32_t> next_table;  // [n_states * n_actions]

    int next(int state, int action) const {
        return next_table[static_cast<std::size_t>(state) * n_actions + action];
    }

    /// Flat index of a (state, action) pair; state major, action minor.
    int slot(int state, int action) const { return state * n_actions + action; }

    int n_slots() const { return n_states * n_actions; }
};

struct GridConfig {
    int width = 1;
    int height = 1;
    int start = 0;
    int horizon = 1;
};

inline Mdp build_gridworld(const GridConfig& cfg) {
    if (cfg.width < 1 || cfg.height < 1)
        throw ConfigError("gridworld dimensions must be positive");
    if (cfg.horizon < 1) throw ConfigError("horizon must be positive");
    const int n_states = cfg.width * cfg.height;
    if (cfg.start < 0 || cfg.start >= n_states)
        throw ConfigError("start state out of range");

    Mdp mdp;
    mdp.width = cfg.width;
    mdp.height = cfg.height;
    mdp.n_states = n_states;
    mdp.n_actions = kNumGridActions;
    mdp.start_state = cfg.start;
    mdp.horizon = cfg.horizon;
    mdp.next_table.resize(static_cast<std::size_t>(n_states) * kNumGridActions);

    constexpr int dr[kNumGridActions] = {-1, 1, 0, 0};
    constexpr int dc[kNumGridActions] = {0, 0, -1, 1};
    for (int r = 0; r < cfg.height; ++r) {
        for (int c = 0; c < cfg.width; ++c) {
            const int s = r * cfg.width + c;
            for (int a = 0; a < kNumGridActions; ++a) {
                const int nr = r + dr[a];
                const int nc = c + dc[a];
                const bool off = nr < 0 || nr >= cfg.height || nc < 0 || nc >= cfg.width;
                mdp.next_table[static_cast<std::size_t>(s) * kNumGridActions + a] =
                    off ? s : nr * cfg.width + nc;
            }
        }
    }
    return mdp;
}

/// Length-T state/action sequence. Under deterministic dynamics the action
/// sequence determines the trajectory.
struct Trajectory {
    std::vector<std::int32_t> states;
    std::vector<std::int32_t> actions;

    int horizon() const { return static_cast<int>(actions.size()); }
};

inline Trajectory trajectory_from_actions(const Mdp& mdp,
                                          const std::vector<std::int32_t>& actions) {
    Trajectory tau;
    tau.states.resize(actions.size());
    tau.actions = actions;
    int s = mdp.start_state;
    for (std::size_t t = 0; t < actions.size(); ++t) {
        tau.states[t] = s;
        s = mdp.next(s, actions[t]);
    }
    return tau;
}

inline bool trajectory_is_consistent(const Mdp& mdp, const Trajectory& tau) {
    if (tau.states.size() != tau.actions.size()) return false;
    if (tau.horizon() != mdp.horizon) return false;
    if (tau.states.empty() || tau.states[0] != mdp.start_state) return false;
    for (int t = 0; t + 1 < tau.horizon(); ++t) {
        if (tau.states[t + 1] != mdp.next(tau.states[t], tau.actions[t])) return false;
    }
    return true;
}

inline std::uint64_t trajectory_count(const Mdp& mdp) {
    std::uint64_t n = 1;
    for (int t = 0; t < mdp.horizon; ++t) {
        n *= static_cast<std::uint64_t>(mdp.n_actions);
    }
    return n;
}

/// Visit all n_actions^T dynamics-consistent trajectories in lexicographic
/// action-sequence order.
template <typename Visitor>
void for_each_trajectory(const Mdp& mdp, Visitor&& visit,
                         std::uint64_t cap = kDefaultEnumerationCap) {
    const std::uint64_t total = trajectory_count(mdp);
    if (total > cap) throw EnumerationLimitError(total, cap);

    const int T = mdp.horizon;
    Trajectory tau;
    tau.states.resize(T);
    tau.actions.resize(T);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        for (int t = T - 1; t >= 0; --t) {
            tau.actions[t] = static_cast<std::int32_t>(rem % mdp.n_actions);
            rem /= mdp.n_actions;
        }
        int s = mdp.start_state;
        for (int t = 0; t < T; ++t) {
            tau.states[t] = s;
            s = mdp.next(s, tau.actions[t]);
        }
        visit(static_cast<std::size_t>(idx), tau);
    }
}

inline std::vector<Trajectory> enumerate_trajectories(
    const Mdp& mdp, std::uint64_t cap = kDefaultEnumerationCap) {
    std::vector<Trajectory> all;
    all.reserve(trajectory_count(mdp) > cap ? 0 : trajectory_count(mdp));
    for_each_trajectory(
        mdp, [&](std::size_t, const Trajectory& tau) { all.push_back(tau); }, cap);
    return all;
}

}  // namespace ganirl
