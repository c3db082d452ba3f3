"""Scratch: empirical convergence behavior of the three demo systems."""
import math, time
import numpy as np
import moebius_ifs as m

def demo_system(idx):
    if idx == 1:
        params = [(0.7, -0.2+0.2j, 0.2j, complex(1.0523, 0.601)),
                  (0.6, -0.3j, -0.2j, complex(-1.3064, 0))]
    elif idx == 2:
        params = [(0.6, 0.1+0.3j, 0.2-0.2j, complex(-0.0047, 1.3216)),
                  (0.4, 0.3-0.4j, 0.7j, complex(0.9102, 1.4702)),
                  (0.5, -0.4-0.2j, 0.3+0.3j, complex(-1.0108, -1.0762))]
    else:
        params = [(0.6, -0.0116+0.3887j, -0.2033-0.1371j, complex(-1.2886, 0.2577)),
                  (0.5, 0.3991-0.2685j, 0.2348-0.1316j, complex(0.2431, 1.4189)),
                  (0.5, -0.4114-0.2082j, -0.0445+0.3668j, complex(1.2534, -0.752))]
    maps = [m.make_contraction(m.DiscImageSpec(r, mm, c, math.atan2(d.imag, d.real)))
            for r, mm, c, d in params]
    return m.MoebiusIFS(tuple(maps))

for idx in (1, 2, 3):
    sys_ = demo_system(idx)
    print(f"=== demo {idx}: N={len(sys_)} max_lipschitz={sys_.max_lipschitz:.4f}")
    cloud = m.canonicalize(m.unit_circle_points(64))
    rng = np.random.Generator(np.random.Philox(0))
    budget = 2**18
    t0 = time.time()
    prev_d = None
    for k in range(1, 61):
        nxt = m.hutchinson_step(sys_, cloud)
        if nxt.size > budget:
            keep = rng.choice(nxt.size, size=budget, replace=False)
            keep.sort()
            nxt = nxt[keep]
        d = m.hausdorff_distance(cloud, nxt)
        cloud = nxt
        ratio = (d / prev_d) if prev_d else float("nan")
        prev_d = d
        if k <= 6 or k % 5 == 0 or d < 1e-3:
            print(f"  k={k:3d} size={cloud.size:8d} d={d:.2e} ratio={ratio:.3f} t={time.time()-t0:.1f}s")
        if d < 1e-3:
            break
    # invariance of the final cloud
    t1 = time.time()
    inv = m.hausdorff_distance(cloud, m.hutchinson_step(sys_, cloud))
    print(f"  invariance d(A,Phi(A)) = {inv:.2e}  ({time.time()-t1:.1f}s)  total {time.time()-t0:.1f}s")
