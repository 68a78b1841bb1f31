"""Convergence of the brute-force holonomy oracle.

The discretized parallel amplitude chain knows nothing about the ancilla
construction: it only sees the density-matrix path and enforces pairwise
parallelity link by link. As the grid refines, its phase converges to
the engine's total geometric phase, which is what makes it a trustworthy
independent check.
"""

import mixedphase as mp


def main():
    t_end = 1.7
    for spec in (mp.RandomInstanceSpec(2, 2, 123), mp.RandomInstanceSpec(3, 3, 456)):
        problem = mp.random_instance(spec)
        prep = mp.prepare_problem(problem)
        gamma = mp.total_geometric_phase(
            t_end, prep.frame, mp.evolution_operator(prep, t_end),
            prep.spectrum.amps)
        print(f"random dim-{spec.dim} instance (seed {spec.seed}), "
              f"t_end = {t_end}")
        print(f"engine total geometric phase: {gamma:+.10f}\n")
        print(f"{'steps':>6} {'holonomy':>14} {'error':>10}")
        for steps in (64, 128, 256, 512, 1024, 2048, 4096):
            hol = mp.discrete_uhlmann_holonomy(problem,
                                               mp.PathSampling(t_end, steps))
            print(f"{steps:>6} {hol:+14.10f} "
                  f"{mp.circular_distance(hol, gamma):10.2e}")
        print()


if __name__ == "__main__":
    main()
