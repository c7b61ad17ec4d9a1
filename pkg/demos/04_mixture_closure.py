"""Mixtures of unwitnessed states stay unwitnessed.

Both witness expectations are linear in the state, so a convex mixture
of states with nonnegative family minima keeps nonnegative minima.
This samples many random mixtures from the fooling window and re-runs
the mixed-state criterion on each.
"""

from ghzw import criterion, scanner, states

report = scanner.sample_unwitnessed_mixtures(scanner.ScanConfig(seed=42), 200, 4)

print("200 random 4-component mixtures drawn from |a|^2 in [1/3, 1/2]:")
print(f"  smallest GHZ-family minimum: {report.min_ghz_min:+.6f}")
print(f"  smallest W-family minimum:   {report.min_w_min:+.6f}")
print(f"  all unwitnessed: {report.all_unwitnessed}")
print()

print("the precondition matters — one component outside the window breaks it:")
rho = states.mix([(1.0, scanner.family_state(0.9, scanner.ScanConfig()))])
ghz_min, phi = criterion.min_ghz_expectation_mixed(rho)
print(f"  |a|^2 = 0.9 alone: GHZ-family minimum = {ghz_min:+.6f} (detected)")
