"""Scratch: benchmark Hausdorff variants and measure invariance floor vs budget."""
import math, time
import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff
import moebius_ifs as m
from scratch_probe import demo_system

def hd_kdtree(a, b):
    pa = np.column_stack((a.real, a.imag)); pb = np.column_stack((b.real, b.imag))
    return max(cKDTree(pb).query(pa)[0].max(), cKDTree(pa).query(pb)[0].max())

def hd_early(a, b):
    pa = np.column_stack((a.real, a.imag)); pb = np.column_stack((b.real, b.imag))
    return max(directed_hausdorff(pa, pb, seed=0)[0], directed_hausdorff(pb, pa, seed=0)[0])

sys1 = demo_system(1)
rng = np.random.Generator(np.random.Philox(0))

# build two successive 1M clouds
budget = 2**20
cloud = m.canonicalize(m.unit_circle_points(64))
t0 = time.time()
for k in range(14):
    nxt = m.hutchinson_step(sys1, cloud)
    if nxt.size > budget:
        keep = rng.choice(nxt.size, size=budget, replace=False); keep.sort()
        nxt = nxt[keep]
    cloud = nxt
print(f"warmup to size {cloud.size} took {time.time()-t0:.1f}s")
nxt = m.hutchinson_step(sys1, cloud)
print("step size", nxt.size)
keep = rng.choice(nxt.size, size=budget, replace=False); keep.sort()
nxt_t = nxt[keep]

t0 = time.time(); d1 = hd_kdtree(cloud, nxt_t); t1 = time.time() - t0
t0 = time.time(); d2 = hd_early(cloud, nxt_t); t2 = time.time() - t0
print(f"kdtree: d={d1:.3e} {t1:.2f}s | early-break: d={d2:.3e} {t2:.2f}s")

# hutchinson_step cost at 1M
t0 = time.time(); _ = m.hutchinson_step(sys1, cloud); print(f"hutch step 1M: {time.time()-t0:.2f}s")

# thinning cost
t0 = time.time(); keep = rng.choice(2*budget, size=budget, replace=False); keep.sort(); print(f"choice 2M->1M: {time.time()-t0:.2f}s")
