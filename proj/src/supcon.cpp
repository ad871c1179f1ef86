#include <algorithm>

#include "datasup/dfa.hpp"
#include "datasup/error.hpp"

namespace datasup {

// Classical fixpoint on the reachable product: drop every state at which
// an uncontrollable event is enabled in the plant but leads nowhere (or to
// a dropped state) in the product, then drop states that are unreachable
// or cannot reach a marker. Repeat until stable.
Dfa supcon(const Dfa& plant, const Dfa& spec) {
    if (!(plant.alphabet() == spec.alphabet()))
        throw Error(ErrorKind::Input, "supcon: alphabet mismatch");

    // Plant component of each product state, recovered by a lockstep walk.
    Dfa product = sync_product(plant, spec);
    if (product.is_empty()) return product;

    const std::size_t n = product.num_states();
    std::vector<State> plant_state(n, kNoState);
    {
        std::vector<State> stack{product.initial()};
        plant_state[product.initial()] = plant.initial();
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            for (auto [e, t] : product.successors(s)) {
                if (plant_state[t] != kNoState) continue;
                plant_state[t] = *plant.next(plant_state[s], e);
                stack.push_back(t);
            }
        }
    }

    const auto sigma_u = plant.alphabet().uncontrollable();
    StateSet alive;
    for (State s = 0; s < n; ++s) alive.insert(s);

    for (bool changed = true; changed;) {
        changed = false;

        for (State s = 0; s < n; ++s) {
            if (!alive.contains(s)) continue;
            bool bad = std::any_of(sigma_u.begin(), sigma_u.end(), [&](Event e) {
                if (!plant.next(plant_state[s], e)) return false;
                auto t = product.next(s, e);
                return !t || !alive.contains(*t);
            });
            if (bad) {
                alive.erase(s);
                changed = true;
            }
        }

        Dfa restricted = subautomaton(product, alive, product.markers());
        if (restricted.is_empty()) return Dfa::empty(plant.alphabet());
        TrimReport r = analyze(restricted);
        // subautomaton renumbers in increasing order of the original index.
        std::vector<State> original(alive.begin(), alive.end());
        StateSet survivors;
        for (State s = 0; s < restricted.num_states(); ++s)
            if (r.reachable.contains(s) && r.coreachable.contains(s))
                survivors.insert(original[s]);
        if (survivors != alive) {
            alive = std::move(survivors);
            changed = true;
        }
        if (alive.empty() || !alive.contains(product.initial()))
            return Dfa::empty(plant.alphabet());
    }

    return subautomaton(product, alive, product.markers());
}

} // namespace datasup
