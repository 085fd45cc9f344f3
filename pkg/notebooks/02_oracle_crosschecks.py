# %% [markdown]
# Checking the closed forms numerically
# =====================================
#
# Three independent routes: an SVD of the sampled two-particle x kernel,
# finite-difference ground states of the potential cuts, and Mehler's
# formula for the Gaussian kernel itself.

# %%
import numpy as np

from wigner_spectrum import GaussianRepulsive, InverseLog, InversePower, ScreenedInversePower, TrapGeometry, solve
from wigner_spectrum import oracle, spectrum

families = {
    "inverse power": InversePower(1.0),
    "inverse log": InverseLog(),
    "screened": ScreenedInversePower(1.0, 0.5),
    "gaussian": GaussianRepulsive(10.0),
}

# %% [markdown]
# SVD of the kernel.  Singular values come in near-degenerate parity pairs;
# their average is compared against the geometric closed form.

# %%
for name, pot in families.items():
    ha = solve(pot, 1e4)
    occ = oracle.x_kernel_occupancies(ha)
    r = spectrum.SpectralRatios(spectrum.zeta(ha.omega_x_sq), (), ha.overlap)
    closed = np.array([spectrum.x_occupancy(r, l) for l in range(10)])
    dev = np.max(np.abs(oracle.pair_average(occ, 10) - closed))
    print(f"{name:<14} zeta = {r.zeta:.4e}   max deviation (top 10) = {dev:.2e}")

# %% [markdown]
# At the critical coupling of the Gaussian barrier omega_x^2 = 1/2 and the
# kernel has rank two.

# %%
pot = families["gaussian"]
ha = solve(pot, pot.critical_coupling())
occ = oracle.x_kernel_occupancies(ha)
print("g_c =", pot.critical_coupling(), " leading occupancies:", occ[:4])

# %% [markdown]
# Finite differences: the zero-point offset of the x cut against the
# harmonic prediction, at two couplings.

# %%
for name, pot in families.items():
    errs = [oracle.fd_validation(solve(pot, g)).x_rel_error for g in (1e4, 1e6)]
    print(f"{name:<14} rel. error g=1e4: {errs[0]:.2e}   g=1e6: {errs[1]:.2e}")

# %% [markdown]
# Entropies three ways: closed form, direct sum over the enumerated
# spectrum, and the SVD spectrum combined with the analytic y terms.

# %%
cc = oracle.crosscheck_entropies(solve(families["inverse power"], 1e4), TrapGeometry((3.0,)))
print(cc.to_csv())

# %%
g = np.linspace(-2, 2, 7)
pts = np.stack(np.meshgrid(g, g), axis=-1).reshape(-1, 2)
for y in (0.1, 0.5, 0.9):
    print(f"Mehler y = {y}: max deviation {oracle.mehler_check(y, pts, l_max=200):.2e}")
