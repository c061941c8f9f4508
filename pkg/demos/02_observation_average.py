"""Observation-time averaging turns a fluctuating signal into a number.

Measuring at an exponentially distributed random time with rate s and
averaging over that ensemble replaces the oscillating density diagonal by a
stationary one. The averaged entropy is fluctuation-free and still respects
the trace: the averaged probabilities sum to one.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bjjsim import (
    ModelParams,
    averaged_reduced_density,
    build_hamiltonian,
    diagonalize,
    evolve_series,
    renyi_entropy,
)

params = ModelParams(N=60, J=1.0, U=0.05, s=1.0)
spec = diagonalize(build_hamiltonian(params))

times = np.arange(0.0, 300.0001, 0.05)
series = evolve_series(params, times)

avg = averaged_reduced_density(spec, params.s)
flat_entropy = renyi_entropy(avg.p_avg)
print(f"averaged density trace: {avg.p_avg.sum():.12f}")
print(f"averaged entropy: {flat_entropy:.4f} bits")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(times, series.entropy, lw=0.4, label="S(t)")
ax1.axhline(flat_entropy, color="r", lw=1.5, label="S of averaged density")
ax1.set_xlabel("t")
ax1.set_ylabel("S (bits)")
ax1.legend()

ax2.bar(np.arange(params.n_dim), avg.p_avg, width=1.0)
ax2.set_xlabel("left-well boson count n")
ax2.set_ylabel("averaged p[n]")
ax2.set_title(f"N={params.N}, J={params.J}, U={params.U}, s={params.s}")
fig.tight_layout()
fig.savefig("observation_average.png", dpi=150)
print("wrote observation_average.png")
