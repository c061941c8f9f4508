"""Locating the localization transition two independent ways.

Argmax: sweep the boson number at fixed (U, J); the averaged entropy peaks
at the transition and a parabola through the top three samples refines it.
Knee: sweep J at fixed (U, N); the entropy rises roughly linearly and then
plateaus, and the segment intersection marks the critical tunneling rate.
Both land near u_c = 3.7, below the mean-field self-trapping value of 4.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from bjjsim import ModelParams, locate_critical

est_a = locate_critical(ModelParams(N=4, J=3.0, U=0.4), mode="argmax", n_min=4, n_max=80)
print(f"argmax mode: u_c = {est_a.u_c:.3f}, bracket {est_a.bracket}")

est_k = locate_critical(ModelParams(N=60, J=1.0, U=1.0), mode="knee")
print(f"knee mode:   u_c = {est_k.u_c:.3f}, J_knee/N = {est_k.details['j_knee'] / 60:.3f}")
print("mean-field self-trapping reference: u_c = 4")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
ax1.plot(est_a.curve.axis, est_a.curve.S, ".-")
ax1.axvline(est_a.u_c, color="r", ls="--", label=f"u_c = {est_a.u_c:.2f}")
ax1.set_xlabel("u = U*N/J")
ax1.set_ylabel("S (bits)")
ax1.set_title("argmax: N sweep at U=0.4, J=3")
ax1.legend()

ax2.plot(est_k.curve.axis, est_k.curve.S, ".-")
ax2.axvline(est_k.details["j_knee"], color="r", ls="--",
            label=f"J_knee = {est_k.details['j_knee']:.1f}")
ax2.set_xlabel("J")
ax2.set_title("knee: J sweep at U=1, N=60")
ax2.legend()
fig.tight_layout()
fig.savefig("critical_point.png", dpi=150)
print("wrote critical_point.png")
