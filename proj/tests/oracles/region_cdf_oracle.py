# Independent reference values for the confidence-region and weighted-CDF
# unit tests. Run: python3 tests/oracles/region_cdf_oracle.py
import numpy as np

# --- weighted CDF -----------------------------------------------------------
support = np.array([2.0, 1.0, 3.0, 2.0])  # tie at 2.0 kept as two masses
masses = np.array([0.2, 0.4, 0.1, 0.3])
order = np.argsort(support, kind="stable")
s, m = support[order], masses[order]
cum = np.cumsum(m)
mean = (s * m).sum()
var = (m * s * s).sum() - mean * mean
print("cdf mean var", f"{mean:.12f} {var:.12f}")
for x in (0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0):
    print(f"  F({x}) =", f"{m[s <= x].sum():.12f}")
for u in (0.1, 0.4, 0.400000001, 0.9, 0.95, 1.0):
    print(f"  Q({u}) =", s[np.searchsorted(cum, u, side='left')])

# --- regions ----------------------------------------------------------------
eta, tau = 0.82, 0.74
sigma = np.array([[2.1, 0.6], [0.6, 1.4]])
n = 120
level = 0.95
chi2 = -2 * np.log(1 - level)
print("chi2", f"{chi2:.12f}")

# Wald: analytic area
area = np.pi * chi2 * np.sqrt(np.linalg.det(sigma)) / n
print("wald area", f"{area:.12f}")

# shoelace check of the logit region area with 2048 points
M = np.diag([1 / (eta * (1 - eta)), 1 / (tau * (1 - tau))])
Slog = M @ sigma @ M
w, V = np.linalg.eigh(Slog)
half = V @ np.diag(np.sqrt(w)) @ V.T * np.sqrt(chi2 / n)
z = np.array([np.log(eta / (1 - eta)), np.log(tau / (1 - tau))])
ang = 2 * np.pi * np.arange(2048) / 2048
pts = z[:, None] + half @ np.vstack([np.cos(ang), np.sin(ang)])
exp_pts = 1 / (1 + np.exp(-pts))
x, y = exp_pts
logit_area = 0.5 * abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
print("logit area", f"{logit_area:.12f}")
print("logit bounds", f"{x.min():.12f} {x.max():.12f} {y.min():.12f} {y.max():.12f}")

# containment probes: quadratic form at test points
def wald_qf(p):
    d = np.array([eta, tau]) - p
    return n * d @ np.linalg.solve(sigma, d)

def logit_qf(p):
    lp = np.log(p / (1 - p))
    d = z - lp
    return n * d @ np.linalg.solve(Slog, d)

for p in ([0.82, 0.74], [0.9, 0.8], [0.99, 0.99], [0.7, 0.6], [0.05, 0.05]):
    p = np.array(p)
    print(f"  point {p}: wald qf {wald_qf(p):.10f} logit qf {logit_qf(p):.10f}")
