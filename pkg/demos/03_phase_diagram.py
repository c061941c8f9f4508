"""Competition of tunneling and interaction on a (J, U) grid.

The averaged entropy is large wherever tunneling wins (the state explores
the whole Fock ladder) and small where interaction localizes it. The ridge
between the regimes follows a straight line through the origin: the
transition depends on J and U only through u = U*N/J.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from bjjsim import ModelParams, scan_2d

N = 20
grid = scan_2d(ModelParams(N=N), "J", (0.25, 15.0, 60), "U", (0.05, 2.0, 60), workers=4)

fig, ax = plt.subplots(figsize=(6, 5))
mesh = ax.pcolormesh(grid.x, grid.y, grid.S.T, shading="nearest", cmap="viridis")
fig.colorbar(mesh, ax=ax, label="S (bits)")
# the u = 3.7 line: U = 3.7 * J / N
ax.plot(grid.x, 3.7 * grid.x / N, "w--", lw=1.5, label="u = 3.7")
ax.set_ylim(grid.y[0], grid.y[-1])
ax.set_xlabel("J")
ax.set_ylabel("U")
ax.set_title(f"averaged entropy, N={N}")
ax.legend(loc="upper left")
fig.tight_layout()
fig.savefig("phase_diagram.png", dpi=150)

print(f"entropy range: {grid.S.min():.3f} .. {grid.S.max():.3f} bits")
print("wrote phase_diagram.png")
