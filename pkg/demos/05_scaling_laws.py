"""How the entropy grows with system size on either side of the transition.

At constant u the normalized entropy grows logarithmically with N in the
tunneling regime (the whole Fock ladder is explored, and its dimension sets
the entropy) but linearly in the localized regime (a fixed fraction of the
weight leaks to the subdominant element).
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bjjsim import ModelParams, fit_scaling

ns = np.arange(10, 101, 10)
fig, axes = plt.subplots(1, 2, figsize=(10, 4))

for ax, u in zip(axes, (1.0, 40.0)):
    fit = fit_scaling(ModelParams(N=10, U=1.0), u, ns)
    scan = fit.scan
    ax.plot(scan.axis, scan.S, "o", label="normalized S")
    xs = np.linspace(ns[0], ns[-1], 200)
    ax.plot(xs, fit.model_log.a + fit.model_log.b * np.log(xs), "--",
            label=f"log fit (rms {fit.model_log.rms:.1e})")
    ax.plot(xs, fit.model_lin.a + fit.model_lin.b * xs, ":",
            label=f"linear fit (rms {fit.model_lin.rms:.1e})")
    ax.set_xlabel("N")
    ax.set_ylabel("S / S_max")
    ax.set_title(f"u = {u:g}: preferred = {fit.preferred}")
    ax.legend(fontsize=8)
    print(f"u={u:g}: preferred {fit.preferred}")

fig.tight_layout()
fig.savefig("scaling_laws.png", dpi=150)
print("wrote scaling_laws.png")
