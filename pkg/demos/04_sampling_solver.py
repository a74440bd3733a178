"""The whole pipeline: sample uniformly, keep the best, check the guarantee.

The iteration budget is ceil(ln(1/fail_prob) * 2^(n - log2_count)): enough
i.i.d. uniform samples that missing the near-optimal set has probability
at most fail_prob. With the clause-length lower bound on the optimum the
additive guarantee upgrades to best >= (1-eps) * optimum.

Run: python demos/04_sampling_solver.py
"""

from maxcsp import (
    SamplerConfig,
    brute_force_optimum,
    random_ekcnf,
    solve,
    solve_ksat,
)

inst = random_ekcnf(num_vars=12, num_clauses=40, k=3, seed=7)
w_star, _ = brute_force_optimum(inst)
eps = 1 / 8
print(f"instance: n = {inst.num_vars}, m = {inst.num_constraints}, optimum = {w_star}")
print(f"target: weight >= (1 - {eps}) * {w_star} = {(1 - eps) * w_star}")
print()

res = solve_ksat(inst, k=3, epsilon=eps, fail_prob=1e-2, seed=42)
print(f"effective additive slack eps_eff = {res.effective_epsilon}")
print(f"iteration budget = {res.iterations_budget}")
print(f"best sampled weight = {res.best_weight}  at  {res.best_assignment}")
print(f"guarantee kind = {res.target_kind}, fail bound = {res.achieved_fail_prob:.2e}")
print(f"goal met: {res.best_weight >= (1 - eps) * w_star}")
print()

print("determinism: the run is a pure function of (instance, config)")
again = solve_ksat(inst, k=3, epsilon=eps, fail_prob=1e-2, seed=42)
print("identical rerun:", again == res)
parallel = solve_ksat(inst, k=3, epsilon=eps, fail_prob=1e-2, seed=42, parallelism=8)
print("identical with 8 workers:", parallel == res)
print()

print("watching the best weight improve (first 10 improvements):")
events = []
solve(
    inst,
    SamplerConfig(epsilon=eps, w_bar=7 / 8 * inst.num_constraints, fail_prob=1e-2, seed=42),
    trace=lambda i, w: events.append((i, w)),
)
for i, w in events[:10]:
    print(f"  iteration {i:>6}: weight {w}")
print(f"  ({len(events)} improvements total)")
